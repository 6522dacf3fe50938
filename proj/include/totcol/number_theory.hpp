#pragma once

namespace totcol {

/// Number of residues in 1..n coprime to n. Requires n >= 1.
int euler_phi(int n);

/// Requires n >= 2.
int smallest_prime_factor(int n);

bool is_prime(int n);

}  // namespace totcol
