// Command-line front end: graph families, invariants and verification suites.
#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "isoprof/bounds.hpp"
#include "isoprof/cheeger.hpp"
#include "isoprof/constructions.hpp"
#include "isoprof/cuts.hpp"
#include "isoprof/errors.hpp"
#include "isoprof/graph.hpp"
#include "isoprof/groups.hpp"
#include "isoprof/spectral.hpp"
#include "isoprof/verify.hpp"

namespace {

using namespace isoprof;

constexpr int kExitFailure = 1;
constexpr int kExitValidation = 2;
constexpr int kExitBudget = 3;

bool is_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = s[0] == '-' ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

void emit_graph(const Graph& g, const std::string& out) {
  if (out.empty()) write_edge_list(std::cout, g);
  else save_edge_list(out, g);
  std::cerr << "vertices " << g.vertex_count() << " edges " << g.edge_count() << '\n';
}

// Splits "ints... [path]" into integer parameters and an optional output path.
std::pair<std::vector<int>, std::string> split_params(const std::vector<std::string>& args, std::size_t from) {
  std::vector<int> params;
  std::string out;
  for (std::size_t i = from; i < args.size(); ++i) {
    if (is_integer(args[i])) params.push_back(std::stoi(args[i]));
    else if (i + 1 == args.size()) out = args[i];
    else throw std::invalid_argument("unexpected argument: " + args[i]);
  }
  return {params, out};
}

struct FamilyArgs {
  std::vector<std::string> args;
  int k = 1;
  int r = 0;
  std::string out;
};

void cmd_family(const FamilyArgs& a) {
  if (a.args.empty()) throw std::invalid_argument("family kind required");
  const std::string& kind = a.args[0];
  std::string out = a.out;
  Graph g;
  if (kind == "power") {
    if (a.args.size() < 2) throw std::invalid_argument("power needs a base family");
    auto [params, path] = split_params(a.args, 2);
    g = cartesian_power(build_family(parse_family_kind(a.args[1]), params), a.k);
    if (out.empty()) out = path;
  } else if (kind == "lamp") {
    if (a.args.size() < 2) throw std::invalid_argument("lamp needs a group file");
    g = distorted_lamp_graph(load_group(a.args[1]), a.k, a.r);
    if (out.empty() && a.args.size() > 2) out = a.args[2];
  } else if (kind == "subdivide") {
    if (a.args.size() < 2) throw std::invalid_argument("subdivide needs an edge-list file");
    g = subdivide(load_edge_list(a.args[1]), a.k);
    if (out.empty() && a.args.size() > 2) out = a.args[2];
  } else if (kind == "cayley") {
    if (a.args.size() < 2) throw std::invalid_argument("cayley needs a group file");
    g = group_cayley_graph(load_group(a.args[1]));
    if (out.empty() && a.args.size() > 2) out = a.args[2];
  } else {
    auto [params, path] = split_params(a.args, 1);
    g = build_family(parse_family_kind(kind), params);
    if (out.empty()) out = path;
  }
  emit_graph(g, out);
}

struct InvariantArgs {
  std::string which;
  std::string graph;
  double p = 1.0;
  std::string grad = "sup";
  int dim = 1;
  std::string s = "1/2";
  std::size_t nmax = 8;
  std::uint64_t seed = 0;
  int restarts = 8;
  bool heuristic = false;
  std::string witness;
  std::uint64_t budget = 0;
};

void print_members(const char* key, const std::vector<Vertex>& v) {
  std::cout << key;
  for (Vertex x : v) std::cout << ' ' << x;
  std::cout << '\n';
}

void write_witness_file(const std::string& path, const std::vector<std::vector<double>>& f) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  write_witness_csv(out, f);
  std::cout << "witness_path " << path << '\n';
}

void cmd_invariant(const InvariantArgs& a) {
  Graph g = load_edge_list(a.graph);
  std::cout.precision(12);
  const std::string& w = a.which;
  if (w == "h" || w == "h_maj" || w == "h_edge") {
    CombinatorialOptions co;
    co.allow_heuristic = a.heuristic;
    co.seed = a.seed;
    auto mode = w == "h" ? CombinatorialMode::plain : w == "h_maj" ? CombinatorialMode::majored : CombinatorialMode::edge;
    auto res = cheeger_combinatorial(g, mode, co);
    std::cout << "value " << res.value << "\nexact " << (res.exact ? "true" : "false") << '\n';
    print_members("witness", res.set_witness);
  } else if (w == "lambda2") {
    auto res = lambda2(g);
    std::cout << "value " << res.lambda2 << "\ncertified " << (res.certified ? "true" : "false") << '\n';
    write_witness_file(a.witness, as_rows(res.witness_vector));
  } else if (w == "lambda_inf") {
    auto res = lambda_infinity_upper(g, a.restarts, a.seed);
    std::cout << "value " << res.value << "\nbound upper\n";
    write_witness_file(a.witness, as_rows(res.witness));
  } else if (w == "hp") {
    LpOptions lo;
    lo.p = a.p;
    if (a.grad == "sup") lo.gradient = Gradient::sup_scale;
    else if (a.grad == "modified") lo.gradient = Gradient::modified;
    else throw std::invalid_argument("--grad must be sup or modified");
    lo.target_dim = a.dim;
    lo.restarts = a.restarts;
    lo.seed = a.seed;
    auto res = cheeger_lp(g, lo);
    std::cout << "value " << res.value << "\nexact " << (res.exact ? "true" : "false") << '\n';
    if (res.certified_lower) std::cout << "certified_lower " << *res.certified_lower << '\n';
    write_witness_file(a.witness, res.function_witness);
  } else if (w == "cut") {
    CutOptions co;
    if (a.budget) co.budget = a.budget;
    auto res = cut(g, Rational::parse(a.s), a.heuristic ? CutMode::heuristic : CutMode::exact, co);
    std::cout << "value " << res.size << "\nexact " << (res.exact ? "true" : "false")
              << "\nlargest_component " << res.largest_component << '\n';
    print_members("cut_set", res.cut_set);
  } else if (w == "sep" || w == "profile") {
    ProfileOptions po;
    if (a.budget) po.max_subgraphs = po.cut.budget = a.budget;
    auto table = w == "sep" ? separation_profile_exact(g, a.nmax, po)
                            : poincare_profile(g, a.nmax, a.p, ProfileMode::exact_small, {}, po);
    write_profile_csv(std::cout, table);
  } else {
    throw std::invalid_argument("unknown invariant: " + w);
  }
}

struct VerifyArgs {
  std::string suite;
  VerifyOptions options;
  std::string format = "csv";
  std::string out;
};

int cmd_verify(const VerifyArgs& a) {
  auto report = run_suite(a.suite, a.options);
  std::ostringstream text;
  if (a.format == "csv") write_report_csv(text, report);
  else if (a.format == "json") write_report_json(text, report);
  else throw std::invalid_argument("--format must be csv or json");
  if (a.out.empty()) {
    std::cout << text.str();
  } else {
    std::ofstream out(a.out, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write " + a.out);
    out << text.str();
  }
  auto failures = report.failures();
  std::cerr << report.rows.size() << " checks, " << failures.size() << " hard failures\n";
  for (const auto* f : failures) std::cerr << "FAIL " << f->id << " (" << f->anchor << ")\n";
  return failures.empty() ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"isoperimetric profile toolkit"};
  app.require_subcommand(1);

  FamilyArgs fam;
  auto* family = app.add_subcommand("family", "Write a graph family as an edge list");
  family->add_option("args", fam.args, "kind and parameters, e.g. cycle 8 out.g | power cycle 4 | lamp group.g")
      ->required();
  family->add_option("--k", fam.k, "power exponent, lamp offset, or subdivision count");
  family->add_option("--r", fam.r, "lamp window radius");
  family->add_option("--out", fam.out, "output path (default stdout)");

  InvariantArgs inv;
  auto* invariant = app.add_subcommand("invariant", "Compute an invariant of an edge-list graph");
  invariant->add_option("which", inv.which, "h | h_maj | h_edge | lambda2 | lambda_inf | hp | cut | sep | profile")
      ->required();
  invariant->add_option("graph", inv.graph, "edge-list file")->required();
  invariant->add_option("--p", inv.p, "exponent p >= 1");
  invariant->add_option("--grad", inv.grad, "sup | modified");
  invariant->add_option("--dim", inv.dim, "target dimension for vector-valued hp");
  invariant->add_option("--s", inv.s, "cut level as a fraction");
  invariant->add_option("--nmax", inv.nmax, "largest subgraph size for profiles");
  invariant->add_option("--seed", inv.seed, "random seed");
  invariant->add_option("--restarts", inv.restarts, "random restarts");
  invariant->add_flag("--heuristic", inv.heuristic, "allow heuristic search beyond exact limits");
  invariant->add_option("--witness", inv.witness, "write the witness function as CSV");
  invariant->add_option("--budget", inv.budget, "search budget");

  VerifyArgs ver;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify->add_option("suite", ver.suite, "suite name")->required()->check(CLI::IsMember(suites));
  verify->add_option("--seed", ver.options.seed, "root seed");
  verify->add_option("--tol", ver.options.tol, "numerical tolerance");
  verify->add_option("--budget", ver.options.budget, "search budget");
  verify->add_option("--format", ver.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  verify->add_option("--out", ver.out, "report path (default stdout)");
  verify->add_flag("--timing", ver.options.timing, "fill the ms column");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    if (*family) cmd_family(fam);
    else if (*invariant) cmd_invariant(inv);
    else if (*verify) return cmd_verify(ver);
    return 0;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}
