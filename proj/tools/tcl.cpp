// tcl: build graph families, construct and verify total colorings, run the oracle.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "totcol/complete_total.hpp"
#include "totcol/constructions.hpp"
#include "totcol/error.hpp"
#include "totcol/families.hpp"
#include "totcol/io.hpp"
#include "totcol/latin.hpp"
#include "totcol/oracle.hpp"
#include "totcol/poc.hpp"
#include "totcol/sweep.hpp"
#include "totcol/verify.hpp"

namespace {

using namespace totcol;
using io::json;

enum Exit { kOk = 0, kParse = 2, kPrecondition = 3, kVerification = 4, kBudget = 5 };

struct verification_failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FamilyArgs {
  std::string family;
  int n = 0;
  int k = 0;
  int m = 0;
  std::vector<int> distances;
  std::string script;
  std::string group;
  std::string table;
  std::vector<int> connection;
};

struct Options {
  FamilyArgs fam;
  std::string method;
  std::string out;
  std::string graph_path;
  std::string coloring_path;
  std::string matrix_path;
  std::string to;
  std::vector<int> extra;
  std::optional<int> involution;
  std::optional<std::uint64_t> budget;
  std::uint64_t seed = 0;
  int jobs = 1;
  int n_min = 5;
  int n_max = 13;
  int latin = 0;
  bool index = false;
  bool verbose = false;
};

void log_event(const Options& opt, json event) {
  if (opt.verbose) std::cerr << event.dump() << '\n';
}

std::uint64_t search_budget(const Options& opt) {
  if (opt.budget) return *opt.budget;
  if (const char* env = std::getenv("TCL_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw parse_error(std::string("TCL_BUDGET is not a number: ") + env);
    }
  }
  return kDefaultNodeBudget;
}

SearchLimits limits_for(const Options& opt) {
  SearchLimits limits;
  limits.node_budget = search_budget(opt);
  if (opt.verbose) limits.progress = [](std::uint64_t nodes) { std::cerr << json{{"event", "progress"}, {"nodes", nodes}}.dump() << '\n'; };
  return limits;
}

// "Z6", "Z2xZ4": direct products of cyclic groups.
GroupTable parse_group(const std::string& text) {
  std::optional<GroupTable> group;
  std::stringstream ss(text);
  std::string factor;
  while (std::getline(ss, factor, 'x')) {
    if (factor.size() < 2 || factor[0] != 'Z') throw parse_error("bad group factor '" + factor + "'");
    int order = 0;
    try {
      order = std::stoi(factor.substr(1));
    } catch (const std::exception&) {
      throw parse_error("bad group factor '" + factor + "'");
    }
    GroupTable z = GroupTable::cyclic(order);
    group = group ? GroupTable::direct_product(*group, z) : z;
  }
  if (!group) throw parse_error("empty group description");
  return *group;
}

GroupTable load_group(const FamilyArgs& fam) {
  if (!fam.table.empty()) {
    try {
      return GroupTable(json::parse(io::read_file(fam.table)).get<std::vector<std::vector<int>>>());
    } catch (const json::exception& ex) {
      throw parse_error(std::string("bad group table: ") + ex.what());
    }
  }
  if (!fam.group.empty()) return parse_group(fam.group);
  throw parse_error("cayley family needs --group or --table");
}

LabeledGraph build_family(const FamilyArgs& fam) {
  const std::string& f = fam.family;
  if (f == "circulant") return {build_circulant(fam.n, fam.distances), {}};
  if (f == "poc") return {build_power_of_cycle(fam.n, fam.k), {}};
  if (f == "unitary") return {build_unitary_cayley(fam.n), {}};
  if (f == "complete") return {complete_graph(fam.n), {}};
  if (f == "kneser") return build_kneser(fam.n, fam.k);
  if (f == "odd") return build_odd_graph(fam.m);
  if (f == "mock") return {build_mock_threshold(parse_script(fam.script)), {}};
  if (f == "cayley") return {build_cayley_from_table(load_group(fam), fam.connection), {}};
  throw parse_error("unknown family '" + f + "'");
}

Graph load_graph(const std::string& path) {
  if (path.ends_with(".col") || path.ends_with(".dimacs")) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    return io::graph_from_dimacs(in);
  }
  try {
    return io::graph_from_json(json::parse(io::read_file(path)));
  } catch (const json::parse_error& ex) {
    throw parse_error(path + ": " + ex.what());
  }
}

TotalColoring load_coloring(const std::string& path) {
  try {
    return io::coloring_from_json(json::parse(io::read_file(path)));
  } catch (const json::parse_error& ex) {
    throw parse_error(path + ": " + ex.what());
  }
}

ColorMatrix load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path);
  return io::matrix_from_csv(in);
}

ConstructionResult from_matrix(const Graph& g, const ColorMatrix& m, std::string method, int budget) {
  ConstructionResult r;
  r.graph = g;
  r.coloring = matrix_to_coloring(g, m);
  r.colors_used = r.coloring.colors_used();
  r.budget = budget;
  r.method = std::move(method);
  return r;
}

ConstructionResult exact_construction(const Graph& g, const Options& opt) {
  const OracleOutcome res = total_chromatic_exact(g, limits_for(opt));
  ConstructionResult r;
  r.graph = g;
  r.coloring = res.witness;
  r.colors_used = r.coloring.colors_used();
  r.budget = res.upper;
  r.method = "exact";
  if (!res.exact()) r.notes.push_back("search budget hit; coloring is the best found, lower bound " + std::to_string(res.lower));
  return r;
}

ConstructionResult run_poc(const Options& opt) {
  const int n = opt.fam.n;
  const int k = opt.fam.k;
  const std::string method = opt.method.empty() ? (n % 2 ? "any-odd" : "block") : opt.method;
  if (method == "base") {
    if (n % 4 != 2 || k != (n - 2) / 4) throw precondition_error("base needs n = 2 mod 4 and k = (n - 2)/4");
    return from_matrix(build_power_of_cycle(n, k), poc_base(n), "base", 2 * k + 1);
  }
  if (method == "augment") {
    ConstructionResult r;
    r.graph = build_power_of_cycle(n, k);
    r.coloring = poc_augment(n, k);
    r.colors_used = r.coloring.colors_used();
    r.budget = 2 * k + 1;
    r.method = "augment";
    return r;
  }
  if (method == "block") return from_matrix(build_power_of_cycle(n, k), poc_block(n, k), "block", 2 * k + 1);
  if (method == "shrink" || method == "grow") {
    const int source = method == "shrink" ? n + 1 : n - 1;
    auto base = poc_base_instance(source, k);
    if (!base) throw precondition_error("C_" + std::to_string(source) + "^" + std::to_string(k) + " has no base construction");
    ModifiedMatrix mod = method == "shrink" ? poc_shrink(base->matrix, k) : poc_grow(base->matrix, k);
    ConstructionResult r = from_matrix(build_power_of_cycle(n, k), mod.matrix, method + "(" + base->method + ")", 2 * k + 2);
    r.notes = mod.notes;
    return r;
  }
  if (method == "any-odd") return poc_any_odd(n, k);
  if (method == "exact") return exact_construction(build_power_of_cycle(n, k), opt);
  throw parse_error("method '" + method + "' is not valid for family poc");
}

ConstructionResult run_color(const Options& opt) {
  const std::string& f = opt.fam.family;
  const std::string& method = opt.method;
  auto require_method = [&](std::initializer_list<const char*> allowed) {
    if (method.empty()) return;
    for (const char* a : allowed)
      if (method == a) return;
    throw parse_error("method '" + method + "' is not valid for family " + f);
  };
  if (f == "poc") return run_poc(opt);
  if (method == "exact") return exact_construction(build_family(opt.fam).graph, opt);
  if (f == "unitary") {
    require_method({"unitary"});
    return unitary_total(opt.fam.n);
  }
  if (f == "odd") {
    require_method({"odd"});
    return odd_graph_total(opt.fam.m);
  }
  if (f == "mock") {
    require_method({"mock"});
    const MockThresholdScript script = parse_script(opt.fam.script);
    return mock_threshold_total(build_mock_threshold(script), script, search_budget(opt));
  }
  if (f == "complete") {
    require_method({"hinz-parisse"});
    ConstructionResult r;
    r.graph = complete_graph(opt.fam.n);
    r.coloring = complete_total(opt.fam.n);
    r.colors_used = r.coloring.colors_used();
    r.budget = opt.fam.n + 1;
    r.method = "hinz-parisse";
    return r;
  }
  if (f == "cayley") {
    require_method({"extend"});
    const GroupTable group = load_group(opt.fam);
    const Graph g = build_cayley_from_table(group, opt.fam.connection);
    TotalColoring base = opt.coloring_path.empty() ? total_chromatic_exact(g, limits_for(opt)).witness
                                                   : load_coloring(opt.coloring_path);
    return cayley_extend(g, base, group, opt.fam.connection, opt.extra, opt.involution);
  }
  if (f == "circulant" || f == "kneser") {
    require_method({});
    return exact_construction(build_family(opt.fam).graph, opt);
  }
  throw parse_error("unknown family '" + f + "'");
}

int cmd_build(const Options& opt) {
  const LabeledGraph lg = build_family(opt.fam);
  const std::string text = opt.to == "dimacs" ? io::graph_to_dimacs(lg.graph) : io::graph_to_json(lg.graph, lg.labels).dump(2) + "\n";
  if (opt.out.empty())
    std::cout << text;
  else
    io::write_file(opt.out, text);
  return kOk;
}

int cmd_color(const Options& opt) {
  const ConstructionResult r = run_color(opt);
  const VerificationReport report = verify(r.graph, r.coloring);
  log_event(opt, {{"event", "constructed"}, {"method", r.method}, {"colors_used", r.colors_used}, {"budget", r.budget}});
  if (!report.is_valid()) {
    std::cerr << io::report_to_json(report).dump(2) << '\n';
    throw verification_failure("construction '" + r.method + "' produced an invalid coloring");
  }
  const std::string prefix = opt.out.empty() ? "out" : opt.out;
  io::write_file(prefix + ".graph.json", io::graph_to_json(r.graph).dump(2) + "\n");
  io::write_file(prefix + ".matrix.csv", io::matrix_to_csv(coloring_to_matrix(r.graph, r.coloring)));
  io::write_file(prefix + ".coloring.json", io::coloring_to_json(r.graph, r.coloring).dump(2) + "\n");
  io::write_file(prefix + ".result.json", io::envelope_to_json(r).dump(2) + "\n");
  std::cout << io::envelope_to_json(r).dump() << '\n';
  if (r.colors_used > r.budget) throw verification_failure("coloring uses more colors than the construction's bound");
  return kOk;
}

Graph graph_for(const Options& opt) {
  if (!opt.graph_path.empty()) return load_graph(opt.graph_path);
  if (!opt.fam.family.empty()) return build_family(opt.fam).graph;
  throw parse_error("need --graph or --family");
}

int cmd_verify(const Options& opt) {
  const Graph g = graph_for(opt);
  TotalColoring c;
  if (!opt.coloring_path.empty())
    c = load_coloring(opt.coloring_path);
  else if (!opt.matrix_path.empty())
    c = matrix_to_coloring(g, load_matrix(opt.matrix_path));
  else
    throw parse_error("verify needs --coloring or --matrix");
  const VerificationReport report = verify(g, c);
  std::cout << io::report_to_json(report).dump(2) << '\n';
  return report.is_valid() ? kOk : kVerification;
}

int cmd_oracle(const Options& opt) {
  const Graph g = graph_for(opt);
  const OracleOutcome res = opt.index ? chromatic_index_exact(g, limits_for(opt)) : total_chromatic_exact(g, limits_for(opt));
  json j = io::oracle_to_json(res);
  j["quantity"] = opt.index ? "chromatic_index" : "total_chromatic_number";
  j["delta"] = g.order() == 0 ? 0 : g.max_degree();
  std::cout << j.dump(2) << '\n';
  return res.exact() ? kOk : kBudget;
}

int cmd_sweep(const Options& opt) {
  SweepOptions so;
  so.n_min = opt.n_min;
  so.n_max = opt.n_max;
  so.budget = search_budget(opt);
  so.jobs = opt.jobs;
  const std::vector<SweepRow> rows = conjecture_sweep(so);
  for (const SweepRow& r : rows)
    log_event(opt, {{"event", "instance"}, {"n", r.n}, {"k", r.k}, {"lower", r.lower}, {"upper", r.upper}, {"nodes", r.nodes}});
  if (opt.out.empty()) {
    std::cout << sweep_csv(rows);
  } else {
    io::write_file(opt.out, sweep_csv(rows));
    const std::string twin = opt.out.ends_with(".csv") ? opt.out.substr(0, opt.out.size() - 4) + ".json" : opt.out + ".json";
    io::write_file(twin, io::sweep_to_json(rows).dump(2) + "\n");
  }
  return kOk;
}

int cmd_export(const Options& opt) {
  std::string text;
  if (opt.latin > 0) {
    text = io::latin_to_csv(anti_circulant_square(opt.latin));
  } else {
    const Graph g = graph_for(opt);
    if (opt.to == "dimacs") {
      text = io::graph_to_dimacs(g);
    } else if (opt.to == "json") {
      text = io::graph_to_json(g).dump(2) + "\n";
    } else if (opt.to == "matrix") {
      if (opt.coloring_path.empty()) throw parse_error("export --to matrix needs --coloring");
      text = io::matrix_to_csv(coloring_to_matrix(g, load_coloring(opt.coloring_path)));
    } else if (opt.to == "coloring") {
      if (opt.matrix_path.empty()) throw parse_error("export --to coloring needs --matrix");
      text = io::coloring_to_json(g, matrix_to_coloring(g, load_matrix(opt.matrix_path))).dump(2) + "\n";
    } else {
      throw parse_error("export --to must be dimacs, json, matrix or coloring");
    }
  }
  if (opt.out.empty())
    std::cout << text;
  else
    io::write_file(opt.out, text);
  return kOk;
}

void add_family_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--family", opt.fam.family, "circulant, poc, unitary, complete, kneser, odd, mock, cayley");
  cmd->add_option("--n", opt.fam.n, "order (or ground-set size for kneser)");
  cmd->add_option("--k", opt.fam.k, "power (poc) or subset size (kneser)");
  cmd->add_option("--m", opt.fam.m, "odd graph parameter");
  cmd->add_option("--distances", opt.fam.distances, "circulant distances")->delimiter(',');
  cmd->add_option("--script", opt.fam.script, "mock threshold script, e.g. I,D,P0,C1");
  cmd->add_option("--group", opt.fam.group, "product of cyclic groups, e.g. Z10 or Z2xZ4");
  cmd->add_option("--table", opt.fam.table, "JSON file holding a group multiplication table");
  cmd->add_option("--S", opt.fam.connection, "Cayley connection set")->delimiter(',');
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Total colorings of circulant, Cayley, Kneser and mock threshold graphs"};
  app.require_subcommand(1);
  Options opt;

  auto* build = app.add_subcommand("build", "write a family's graph as JSON or DIMACS");
  add_family_flags(build, opt);
  build->add_option("--to", opt.to, "json (default) or dimacs");
  build->add_option("--out", opt.out, "output file (stdout when omitted)");

  auto* color = app.add_subcommand("color", "run a construction, verify it, write PREFIX.{matrix.csv,coloring.json,result.json,graph.json}");
  add_family_flags(color, opt);
  color->add_option("--method", opt.method, "base, augment, block, shrink, grow, any-odd, unitary, mock, odd, extend, hinz-parisse, exact");
  color->add_option("--extra", opt.extra, "extra Cayley connection set")->delimiter(',');
  color->add_option("--s", opt.involution, "order-two group element for the extension");
  color->add_option("--coloring", opt.coloring_path, "starting coloring for --method extend");
  color->add_option("--out", opt.out, "output prefix");

  auto* ver = app.add_subcommand("verify", "check a total coloring; exit 0 iff valid");
  add_family_flags(ver, opt);
  ver->add_option("--graph", opt.graph_path, "graph JSON or DIMACS .col");
  ver->add_option("--coloring", opt.coloring_path, "coloring JSON");
  ver->add_option("--matrix", opt.matrix_path, "color matrix CSV");

  auto* oracle = app.add_subcommand("oracle", "exact total chromatic number (or chromatic index)");
  add_family_flags(oracle, opt);
  oracle->add_option("--graph", opt.graph_path, "graph JSON or DIMACS .col");
  oracle->add_flag("--index", opt.index, "chromatic index instead of total chromatic number");

  auto* sweep = app.add_subcommand("sweep", "oracle over C_n^k against the powers-of-cycles prediction");
  sweep->add_option("--nmin", opt.n_min, "smallest n")->default_val(5);
  sweep->add_option("--nmax", opt.n_max, "largest n")->default_val(13);
  sweep->add_option("--jobs", opt.jobs, "worker threads")->default_val(1);
  sweep->add_option("--out", opt.out, "CSV path; a JSON twin is written next to it");

  auto* exp = app.add_subcommand("export", "convert between graph and coloring formats");
  add_family_flags(exp, opt);
  exp->add_option("--graph", opt.graph_path, "graph JSON or DIMACS .col");
  exp->add_option("--coloring", opt.coloring_path, "coloring JSON");
  exp->add_option("--matrix", opt.matrix_path, "color matrix CSV");
  exp->add_option("--to", opt.to, "dimacs, json, matrix or coloring");
  exp->add_option("--latin", opt.latin, "write the anti-circulant latin square of this odd order");
  exp->add_option("--out", opt.out, "output file (stdout when omitted)");

  for (auto* cmd : {build, color, ver, oracle, sweep, exp}) {
    cmd->add_option("--budget", opt.budget, "search node budget (TCL_BUDGET overrides the default)");
    cmd->add_option("--seed", opt.seed, "seed for randomized steps")->default_val(0);
    cmd->add_flag("--verbose", opt.verbose, "JSON-lines statistics on stderr");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (*build) return cmd_build(opt);
    if (*color) return cmd_color(opt);
    if (*ver) return cmd_verify(opt);
    if (*oracle) return cmd_oracle(opt);
    if (*sweep) return cmd_sweep(opt);
    if (*exp) return cmd_export(opt);
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  } catch (const precondition_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const budget_exhausted& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const verification_failure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kVerification;
  } catch (const construction_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kVerification;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kOk;
}
