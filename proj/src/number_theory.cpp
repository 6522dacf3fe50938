#include "totcol/number_theory.hpp"

#include "totcol/error.hpp"

namespace totcol {

int euler_phi(int n) {
  if (n < 1) throw precondition_error("euler_phi requires n >= 1");
  int result = n;
  int rest = n;
  for (int p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    result -= result / p;
  }
  if (rest > 1) result -= result / rest;
  return result;
}

int smallest_prime_factor(int n) {
  if (n < 2) throw precondition_error("smallest_prime_factor requires n >= 2");
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) return p;
  return n;
}

bool is_prime(int n) { return n >= 2 && smallest_prime_factor(n) == n; }

}  // namespace totcol
