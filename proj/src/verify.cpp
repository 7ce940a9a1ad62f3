#include "isoprof/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <future>
#include <limits>
#include <map>
#include <ostream>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "isoprof/bounds.hpp"
#include "isoprof/cheeger.hpp"
#include "isoprof/constructions.hpp"
#include "isoprof/cuts.hpp"
#include "isoprof/groups.hpp"
#include "isoprof/spectral.hpp"

namespace isoprof {

namespace {

using Clock = std::chrono::steady_clock;

// Regression bracket for (kappa+1) h~_2(subdivide(K4, kappa)) / h~_2(K4), kappa = 1..5.
constexpr double kSubdivisionRatioLow = 0.97;
constexpr double kSubdivisionRatioHigh = 1.01;

class Checker {
 public:
  Checker(const VerifyOptions& options, int criterion) : options_(options), criterion_(criterion), lap_(Clock::now()) {}

  // lhs <= rhs + tol
  void le(const std::string& id, const std::string& anchor, double lhs, double rhs, double tol, bool hard = true) {
    add(id, anchor, lhs <= rhs + tol, lhs, rhs, tol, hard);
  }
  void near(const std::string& id, const std::string& anchor, double lhs, double rhs, double tol, bool hard = true) {
    add(id, anchor, std::abs(lhs - rhs) <= tol, lhs, rhs, tol, hard);
  }
  void truth(const std::string& id, const std::string& anchor, bool ok, bool hard = true) {
    add(id, anchor, ok, ok ? 1.0 : 0.0, 1.0, 0.0, hard);
  }

  std::vector<CheckRow> rows;

 private:
  void add(const std::string& id, const std::string& anchor, bool ok, double lhs, double rhs, double tol, bool hard) {
    CheckRow r;
    r.id = id;
    r.anchor = anchor;
    r.status = ok ? CheckStatus::pass : CheckStatus::fail;
    r.lhs = lhs;
    r.rhs = rhs;
    r.tol = tol;
    r.criterion = criterion_;
    r.hard = hard;
    auto now = Clock::now();
    if (options_.timing) r.ms = std::chrono::duration<double, std::milli>(now - lap_).count();
    lap_ = now;
    rows.push_back(std::move(r));
  }

  const VerifyOptions& options_;
  int criterion_;
  Clock::time_point lap_;
};

struct Named {
  std::string name;
  Graph g;
};

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::string pad(std::size_t n, int width = 2) {
  std::string s = std::to_string(n);
  while (static_cast<int>(s.size()) < width) s = "0" + s;
  return s;
}

CutOptions cut_options(const VerifyOptions& o) {
  CutOptions c;
  if (o.budget) c.budget = o.budget;
  return c;
}

ProfileOptions profile_options(const VerifyOptions& o) {
  ProfileOptions p;
  if (o.budget) p.max_subgraphs = p.cut.budget = o.budget;
  return p;
}

std::size_t exact_cut(const Graph& g, const VerifyOptions& o) {
  return cut(g, Rational{1, 2}, CutMode::exact, cut_options(o)).size;
}

// ---------------------------------------------------------------- criterion 1

void sec_fiedler(Checker& c, const VerifyOptions& o) {
  std::vector<Named> bases{{"K2", complete_graph(2)}, {"K3", complete_graph(3)}, {"C4", cycle_graph(4)},
                           {"P4", path_graph(4)}};
  for (const auto& [name, g] : bases) {
    double base = lambda2(g).lambda2;
    for (int k = 1; k <= 3; ++k)
      c.near("c01/" + name + "/k" + std::to_string(k), "fiedler-product-identity",
             lambda2(cartesian_power(g, k)).lambda2, base, o.tol);
  }
}

// ---------------------------------------------------------------- criterion 2

std::vector<Named> regular_suite() {
  std::vector<Named> out;
  for (int n = 2; n <= 8; ++n) out.push_back({"K" + std::to_string(n), complete_graph(n)});
  for (int n = 3; n <= 12; ++n) out.push_back({"C" + std::to_string(n), cycle_graph(n)});
  out.push_back({"Q3", hypercube_graph(3)});
  out.push_back({"K3^2", cartesian_power(complete_graph(3), 2)});
  return out;
}

void sec_cheeger_inequalities(Checker& c, const VerifyOptions& o) {
  for (const auto& [name, g] : regular_suite()) {
    auto w = cheeger_combinatorial(g, CombinatorialMode::plain);
    double h = static_cast<double>(w.boundary_size) / static_cast<double>(w.set_size);
    double d = static_cast<double>(g.max_degree());
    double l2 = lambda2(g).lambda2;
    c.le("c02/" + name + "/lower", "cheeger-inequalities", h * h / (2.0 * d), l2, o.tol);
    c.le("c02/" + name + "/upper", "cheeger-inequalities", l2, 2.0 * d * h, o.tol);
  }
}

void sec_cheeger_extras(Checker& c, const VerifyOptions& o) {
  auto graphs = regular_suite();
  graphs.push_back({"P10", path_graph(10)});
  graphs.push_back({"grid3x4", grid_graph(3, 4)});
  graphs.push_back({"K4-sub1", subdivide(complete_graph(4), 1)});
  for (const auto& [name, g] : graphs) {
    double h = cheeger_combinatorial(g, CombinatorialMode::plain).value;
    double hm = cheeger_combinatorial(g, CombinatorialMode::majored).value;
    double d = static_cast<double>(g.max_degree());
    c.le("x-cheeger/" + name + "/plain-le-majored", "combinatorial-cheeger-comparison", h, hm, o.tol);
    c.le("x-cheeger/" + name + "/majored-le-scaled-plain", "combinatorial-cheeger-comparison", hm, (d + 1.0) * h,
         o.tol);
  }
  std::vector<Named> small{{"C8", cycle_graph(8)}, {"P6", path_graph(6)}, {"K4", complete_graph(4)}};
  for (const auto& [name, g] : small) {
    LpOptions lo;
    lo.p = 2.0;
    lo.gradient = Gradient::modified;
    lo.seed = mix_seed(o.seed, 11);
    double mod2 = cheeger_lp(g, lo).value;
    c.near("x-modified/" + name + "/p2-spectral", "modified-poincare-spectral-identity", mod2,
           std::sqrt(2.0 * lambda2(g).lambda2), 1e-6);
    for (double p : {1.0, 2.0}) {
      LpOptions so;
      so.p = p;
      so.seed = mix_seed(o.seed, 12);
      auto sup = cheeger_lp(g, so);
      c.le("x-lp/" + name + "/p" + std::to_string(static_cast<int>(p)) + "/certified-lower", "lp-cheeger-certificate",
           sup.certified_lower.value_or(0.0), sup.value, o.tol);
      LpOptions mo = so;
      mo.gradient = Gradient::modified;
      double modv = cheeger_lp(g, mo).value;
      double d = static_cast<double>(g.max_degree());
      c.le("x-lp/" + name + "/p" + std::to_string(static_cast<int>(p)) + "/modified-lower",
           "modified-gradient-comparison", std::pow(d, -1.0 / p) * modv, sup.value * (1.0 + kEstimatorSlack), o.tol);
      c.le("x-lp/" + name + "/p" + std::to_string(static_cast<int>(p)) + "/modified-upper",
           "modified-gradient-comparison", sup.value, std::pow(2.0, (p - 1.0) / p) * modv * (1.0 + kEstimatorSlack),
           o.tol);
    }
  }
}

// ------------------------------------------------------------ criteria 3 and 4

struct ProductBracket {
  double h_lo = 0, h_hi = 0, he_lo = 0, he_hi = 0;
  bool exact = false;
};

ProductBracket product_bracket(const Graph& g, std::uint64_t seed) {
  ProductBracket b;
  if (g.vertex_count() <= kExhaustiveCheegerLimit) {
    b.h_lo = b.h_hi = cheeger_combinatorial(g, CombinatorialMode::plain).value;
    b.he_lo = b.he_hi = cheeger_combinatorial(g, CombinatorialMode::edge).value;
    b.exact = true;
    return b;
  }
  // |dA| >= |E(A, A^c)| / D >= lambda_2 |A| |A^c| / (n D) >= lambda_2 |A| / (2D)
  double l2 = std::max(0.0, lambda2(g).lambda2 - kSpectralTolerance);
  double d = static_cast<double>(g.max_degree());
  b.h_lo = l2 / (2.0 * d);
  b.he_lo = l2 / 2.0;
  CombinatorialOptions co;
  co.allow_heuristic = true;
  co.seed = seed;
  b.h_hi = cheeger_combinatorial(g, CombinatorialMode::plain, co).value;
  b.he_hi = cheeger_combinatorial(g, CombinatorialMode::edge, co).value;
  return b;
}

struct ProductCase {
  std::string name;
  Graph base;
  int k;
  Graph power;
};

std::vector<ProductCase> product_cases() {
  std::vector<ProductCase> out;
  for (auto& [name, g] : std::vector<Named>{{"K3", complete_graph(3)}, {"C4", cycle_graph(4)}})
    for (int k = 1; k <= 3; ++k) out.push_back({name, g, k, cartesian_power(g, k)});
  return out;
}

void sec_product_sandwich(Checker& c, const VerifyOptions& o) {
  for (const auto& pc : product_cases()) {
    double h = cheeger_combinatorial(pc.base, CombinatorialMode::plain).value;
    double deg = static_cast<double>(pc.base.max_degree());
    double a = std::pow(h / (2.0 * deg), 2.0);
    double b = (2.0 * std::sqrt(2.0) + 2.0) * std::sqrt(deg * h);
    auto br = product_bracket(pc.power, mix_seed(o.seed, 30 + static_cast<std::uint64_t>(pc.k)));
    std::string id = "c03/" + pc.name + "/k" + std::to_string(pc.k);
    c.le(id + "/lower", "product-cheeger-sandwich", a / pc.k, br.h_lo, o.tol);
    c.le(id + "/upper", "product-cheeger-sandwich", br.h_hi, b / std::sqrt(static_cast<double>(pc.k)), o.tol);
  }
}

void sec_product_edge(Checker& c, const VerifyOptions& o) {
  for (const auto& pc : product_cases()) {
    double he = cheeger_combinatorial(pc.base, CombinatorialMode::edge).value;
    double deg = static_cast<double>(pc.base.max_degree());
    auto br = product_bracket(pc.power, mix_seed(o.seed, 40 + static_cast<std::uint64_t>(pc.k)));
    c.le("c04/" + pc.name + "/k" + std::to_string(pc.k) + "/lower", "product-edge-cheeger-lower",
         he * he / (4.0 * deg), br.he_lo, o.tol);
  }
}

void sec_product_extras(Checker& c, const VerifyOptions& o) {
  for (const auto& pc : product_cases()) {
    double h = cheeger_combinatorial(pc.base, CombinatorialMode::plain).value;
    double deg = static_cast<double>(pc.base.max_degree());
    auto br = product_bracket(pc.power, mix_seed(o.seed, 40 + static_cast<std::uint64_t>(pc.k)));
    std::string id = "x-product/" + pc.name + "/k" + std::to_string(pc.k);
    c.le(id + "/edge-upper", "product-edge-cheeger-upper", br.he_hi,
         2.0 * std::sqrt(2.0) * std::sqrt(h * deg) * std::sqrt(static_cast<double>(pc.k)), o.tol);
    if (pc.power.vertex_count() <= 16) {
      double n = static_cast<double>(pc.power.vertex_count());
      c.le(id + "/cut-lower", "product-cut-lower", h * h / (16.0 * deg * deg) * n / pc.k,
           static_cast<double>(exact_cut(pc.power, o)), o.tol);
    }
  }
}

// ------------------------------------------------------------ criteria 5 and 6

void sec_cut_cheeger(Checker& c, const VerifyOptions& o) {
  std::vector<Named> gs{{"P5", path_graph(5)},          {"K4", complete_graph(4)},
                        {"C8", cycle_graph(8)},         {"P10", path_graph(10)},
                        {"C12", cycle_graph(12)},       {"P15", path_graph(15)},
                        {"grid3x4", grid_graph(3, 4)},  {"grid4x4", grid_graph(4, 4)},
                        {"K3^2", cartesian_power(complete_graph(3), 2)},
                        {"C4^2", cartesian_power(cycle_graph(4), 2)},
                        {"Q3", hypercube_graph(3)},     {"Q4", hypercube_graph(4)}};
  for (const auto& [name, g] : gs) {
    double h = cheeger_combinatorial(g, CombinatorialMode::plain).value;
    c.le("c05/" + name, "cut-vs-cheeger", 0.25 * h * static_cast<double>(g.vertex_count()),
         static_cast<double>(exact_cut(g, o)), o.tol);
  }
}

void sec_profiles(Checker& c, const VerifyOptions& o, bool extras) {
  std::vector<Named> hosts{{"C8", cycle_graph(8)}, {"P10", path_graph(10)}, {"grid3x4", grid_graph(3, 4)}};
  for (const auto& [name, g] : hosts) {
    const std::size_t n = g.vertex_count();
    auto sep = separation_profile_exact(g, n, profile_options(o));
    std::map<int, ProfileTable> pi;
    for (int p : {1, 2, 3}) pi[p] = poincare_profile(g, n, p, ProfileMode::exact_small, {}, profile_options(o));
    const double d = static_cast<double>(g.max_degree());
    // n = 1 is excluded: a single vertex has cut 1 and Poincare constant 0 by convention.
    for (std::size_t m = 2; m <= n; ++m) {
      double s = sep.rows[m - 1].lower;
      std::string id = "/" + name + "/n" + pad(m);
      if (!extras) {
        c.le("c06" + id + "/p1/sep-eighth", "separation-poincare-equivalence", s / 8.0, pi[1].rows[m - 1].lower,
             o.tol);
        for (int p : {1, 2, 3}) {
          double k = std::min(1.0 / 96.0, std::pow(4.0, -p) / 24.0);
          c.le("c06" + id + "/p" + std::to_string(p) + "/comparison", "poincare-separation-comparison", k * s,
               pi[p].rows[m - 1].lower, o.tol);
        }
      } else if (name != "grid3x4") {
        c.le("x-profile" + id + "/p1/upper", "separation-poincare-equivalence", pi[1].rows[m - 1].upper,
             4.0 * (d + 1.0) * s, o.tol);
      }
    }
  }
}

// ---------------------------------------------------------------- criterion 7

void sec_lamp(Checker& c, const VerifyOptions& o) {
  const auto group = klein_four_group();
  const int k = 2;
  Graph cay = group_cayley_graph(group);
  Graph lamp = distorted_lamp_graph(group, k, 0);
  LampLayout layout{group.order(), k, 0};
  double dev_2k = 0.0, dev_2k1 = 0.0;
  for (Element x = 0; x < group.order(); ++x) {
    auto dl = bfs_distances(lamp, layout.index({x}, 0));
    auto dg = bfs_distances(cay, x);
    for (Element y = 0; y < group.order(); ++y) {
      double lam = dl[layout.index({y}, 0)], gam = dg[y];
      dev_2k = std::max(dev_2k, std::abs(lam - 2.0 * k * gam));
      dev_2k1 = std::max(dev_2k1, std::abs(lam - (2.0 * k + 1.0) * gam));
    }
  }
  c.near("c07/homothety/factor-2k", "lamp-homothety", dev_2k, 0.0, 0.0);
  c.near("c07/homothety/factor-2k-plus-1", "lamp-homothety", dev_2k1, 0.0, 0.0);
  c.le("c07/cut-monotone", "lamp-cut-monotone", static_cast<double>(exact_cut(cay, o)),
       static_cast<double>(exact_cut(lamp, o)), 0.0);

  DiagonalSpec spec({{klein_four_group(), 0}, {klein_four_group(), 3}});
  auto rep = embed_lamp_graph(spec, 1, 1);
  c.near("c07/embedding/vertices", "lamp-embedding", static_cast<double>(rep.image.size()), 576.0, 0.0);
  c.truth("c07/embedding/injective", "lamp-embedding", rep.injective);
  c.near("c07/embedding/violations", "lamp-embedding", static_cast<double>(rep.violations.size()), 0.0, 0.0);
  c.truth("c07/embedding/edge-classes", "lamp-embedding", rep.z_edges > 0 && rep.a_edges > 0 && rep.b_edges > 0);
  c.truth("c07/embedding/windows-disjoint", "lamp-embedding", rep.windows_disjoint);
}

// ---------------------------------------------------------------- criterion 8

void sec_coarsening(Checker& c, const VerifyOptions& o) {
  Graph g = grid_graph(4, 4);
  ConnectedPartition part;
  part.block_count = 4;
  for (Vertex v = 0; v < 16; ++v) part.block_of.push_back((v / 4) / 2 * 2 + (v % 4) / 2);
  auto co = coarsen(g, part);
  double ratio_min = static_cast<double>(co.min_block) / static_cast<double>(co.max_block);
  double sep_g = separation_profile_exact(g, 16, profile_options(o)).rows.back().lower;
  double cut_c = static_cast<double>(exact_cut(co.graph, o));
  c.le("c08/coarsening/separation-lower", "coarsening-separation-lower", ratio_min / 8.0 * cut_c, sep_g, 0.0);
  double anch = static_cast<double>(*std::max_element(co.anchoring.begin(), co.anchoring.end()));
  double sep_c = separation_profile_exact(co.graph, co.graph.vertex_count(), profile_options(o)).rows.back().lower;
  c.le("c08/coarsening/cut-upper", "coarsening-cut-upper", static_cast<double>(exact_cut(g, o)),
       8.0 / ratio_min * anch * sep_c, 0.0);

  for (auto& [name, h] : std::vector<Named>{{"C12", cycle_graph(12)}, {"P15", path_graph(15)}}) {
    double sep = separation_profile_exact(h, h.vertex_count(), profile_options(o)).rows.back().lower;
    for (Rational s : {Rational{1, 2}, Rational{1, 4}}) {
      auto res = iterated_halving_cut(h, s, cut_options(o));
      std::string id = "c08/halving/" + name + "/s" + std::to_string(s.num) + "-" + std::to_string(s.den);
      c.truth(id + "/valid", "iterated-halving-bound", is_valid_cut(h, res.cut_set, s));
      c.le(id + "/size", "iterated-halving-bound", static_cast<double>(res.size), 4.0 / s.value() * sep, 0.0);
    }
  }
}

// ---------------------------------------------------------------- criterion 9

std::vector<double> flat(const CheegerWitness& w) {
  std::vector<double> f;
  for (const auto& row : w.function_witness) f.push_back(row.empty() ? 0.0 : row[0]);
  return f;
}

CheegerWitness scale_estimate(const WeightedMetricGraph& z, double a, double p, std::uint64_t seed,
                              std::vector<std::vector<double>> starts = {}) {
  ScaleOptions so;
  so.seed = seed;
  so.extra_starts = std::move(starts);
  return scale_poincare_constant(z, a, p, so);
}

void sec_analytic(Checker& c, const VerifyOptions& o) {
  const int b = 3;
  Graph host = path_graph(13);
  auto z = WeightedMetricGraph::from_graph(host);
  auto centers = maximal_b_separated(host, b);
  auto disc = scale_b_partition(host, centers, b);
  auto y = disc.metric(host);
  std::uint64_t salt = 90;
  auto seed = [&] { return mix_seed(o.seed, salt++); };

  // Uniform bound on scale constants.
  std::vector<std::pair<std::string, WeightedMetricGraph>> spaces{
      {"P13", z}, {"C8", WeightedMetricGraph::from_graph(cycle_graph(8))},
      {"grid3x4", WeightedMetricGraph::from_graph(grid_graph(3, 4))}, {"P13-disc", y}};
  for (const auto& [name, space] : spaces)
    for (double a : {1.0, 2.0, 3.0, 6.0})
      for (double p : {1.0, 2.0}) {
        auto w = scale_estimate(space, a, p, seed());
        c.le("c09/uniform/" + name + "/a" + std::to_string(static_cast<int>(a)) + "/p" +
                 std::to_string(static_cast<int>(p)),
             "scale-poincare-uniform-bound", w.value, 6.0, o.tol);
      }

  // Discretization comparison with a = 2b.
  const double a = 2.0 * b;
  for (double p : {1.0, 2.0}) {
    std::string ps = "/p" + std::to_string(static_cast<int>(p));
    auto hy = scale_estimate(y, a, p, seed());
    auto hz2 = scale_estimate(z, 2.0 * a, p, seed());
    c.le("c09/discretization" + ps + "/coarse-upper", "discretization-comparison", hy.value,
         12.0 * hz2.value * (1.0 + kEstimatorSlack), o.tol);
    auto hz = scale_estimate(z, a, p, seed());
    auto hy3 = scale_estimate(y, 3.0 * a, p, seed());
    c.le("c09/discretization" + ps + "/fine-upper", "discretization-comparison", hz.value,
         hy3.value * (1.0 + kEstimatorSlack), o.tol);

    // Scale comparison at a = 3; a closed 3/2-ball of the graph metric is the 1-ball.
    const double as = 3.0;
    auto h_a = scale_estimate(z, as, p, seed());
    auto h_mid = scale_estimate(z, 1.5, p, seed(), {flat(h_a)});
    double nu_min = z.min_ball_measure(0.5), nu_max = z.max_ball_measure(2.0 * as);
    c.le("c09/scales" + ps + "/lower", "scale-comparison", nu_min / nu_max * h_a.value,
         h_mid.value * (1.0 + kEstimatorSlack), o.tol);
    c.le("c09/scales" + ps + "/upper", "scale-comparison", h_mid.value, h_a.value, o.tol);
  }
  c.truth("c09/discretization/outer-within-2b", "discretization-comparison", disc.outer_within_2b);
  c.truth("c09/discretization/inner-b-inclusion", "discretization-comparison", disc.b_inclusion, false);

  double base = std::sqrt(2.0 * lambda2(complete_graph(4)).lambda2);
  for (int kappa = 1; kappa <= 5; ++kappa) {
    double hk = std::sqrt(2.0 * lambda2(subdivide(complete_graph(4), kappa)).lambda2);
    double ratio = (kappa + 1.0) * hk / base;
    std::string id = "c09/subdivision/kappa" + std::to_string(kappa);
    c.le(id + "/low", "subdivision-cheeger-scaling", kSubdivisionRatioLow, ratio, 0.0);
    c.le(id + "/high", "subdivision-cheeger-scaling", ratio, kSubdivisionRatioHigh, 0.0);
  }
}

// --------------------------------------------------------------- criterion 10

void sec_cocycles(Checker& c, const VerifyOptions& o) {
  DiagonalSpec spec({{klein_four_group(), 0}});
  const int j = 1;
  auto u4 = range_ball(spec, 4);
  std::unordered_set<DiagonalElement, DiagonalElementHash> inside(u4.begin(), u4.end());
  auto b = ball(spec, 6);
  CocycleField field(spec, j);

  std::vector<SparseVector> values(b.elements.size());
  for (std::size_t i = 0; i < b.elements.size(); ++i) values[i] = field.value(b.elements[i]);
  auto norm = [](const SparseVector& v) {
    double s = 0.0;
    for (const auto& [h, x] : v) s += x * x;
    return std::sqrt(s);
  };

  DiagonalElement tau5 = identity_element(spec);
  tau5.cursor = 5;
  double min_norm = std::numeric_limits<double>::infinity();
  std::size_t count = 0;
  bool has_tau5 = false;
  for (std::size_t i = 0; i < b.elements.size(); ++i) {
    if (inside.count(b.elements[i])) continue;
    ++count;
    has_tau5 = has_tau5 || b.elements[i] == tau5;
    min_norm = std::min(min_norm, norm(values[i]));
  }
  const double target = std::pow(2.0, j) / 3.0;
  c.le("c10/range-gt-4/min-norm", "cocycle-lower-bound", target, min_norm, o.tol);
  c.le("c10/range-gt-4/count", "cocycle-lower-bound", 20.0, static_cast<double>(count), 0.0);
  c.truth("c10/range-gt-4/includes-tau5", "cocycle-lower-bound", has_tau5);
  c.near("c10/identity", "cocycle-lower-bound", norm(values[0]), 0.0, o.tol);

  std::unordered_map<DiagonalElement, std::size_t, DiagonalElementHash> index;
  for (std::size_t i = 0; i < b.elements.size(); ++i) index.emplace(b.elements[i], i);
  // Right translates make Phi a cocycle for d(g, h) = |g h^-1|: generators act on the left.
  double worst_left = 0.0, worst_right = 0.0;
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < b.elements.size(); ++i) {
    if (b.lengths[i] >= 6) continue;
    for (const auto& gen : generators(spec)) {
      auto s = diagonal_apply(spec, identity_element(spec), gen);
      auto left = index.find(multiply(spec, s, b.elements[i]));
      auto right = index.find(diagonal_apply(spec, b.elements[i], gen));
      worst_left = std::max(worst_left, sparse_distance(values[i], values[left->second]));
      worst_right = std::max(worst_right, sparse_distance(values[i], values[right->second]));
      ++pairs;
    }
  }
  c.le("c10/lipschitz", "cocycle-lipschitz", worst_left, 1.0, o.tol);
  c.le("c10/lipschitz/pairs", "cocycle-lipschitz", 1.0, static_cast<double>(pairs), 0.0);
  c.le("c10/lipschitz/right-multiplication", "cocycle-lipschitz", worst_right, 1.0, o.tol, false);

  // Phi(gh) = Phi(h) + tau_h Phi(g), with (tau_h v)(x h) = v(x).
  double worst_identity = 0.0;
  const std::size_t sample = std::min<std::size_t>(b.elements.size(), 40);
  for (std::size_t gi = 0; gi < sample; ++gi)
    for (std::size_t hi = 0; hi < sample; ++hi) {
      if (b.lengths[gi] + b.lengths[hi] > 6) continue;
      const auto& g = b.elements[gi];
      const auto& h = b.elements[hi];
      SparseVector rhs = values[hi];
      for (const auto& [x, v] : values[gi]) rhs[multiply(spec, x, h)] += v;
      auto it = index.find(multiply(spec, g, h));
      worst_identity = std::max(worst_identity, sparse_distance(values[it->second], rhs));
    }
  c.near("c10/cocycle-identity", "cocycle-lipschitz", worst_identity, 0.0, 1e-9);
}

// --------------------------------------------------------------- criterion 11

void sec_compression(Checker& c, const VerifyOptions& o) {
  struct Host {
    std::string name;
    Graph g;
    std::vector<std::vector<double>> f;
    std::size_t n_max;
  };
  std::vector<Host> hosts;
  {
    Host h{"grid6x6", grid_graph(6, 6), {}, 8};
    for (Vertex v = 0; v < 36; ++v) h.f.push_back({static_cast<double>(v / 6), static_cast<double>(v % 6)});
    hosts.push_back(std::move(h));
  }
  {
    Host h{"Q4", hypercube_graph(4), {}, 16};
    for (Vertex v = 0; v < 16; ++v) {
      std::vector<double> row;
      for (int bit = 0; bit < 4; ++bit) row.push_back(static_cast<double>((v >> bit) & 1u));
      h.f.push_back(row);
    }
    hosts.push_back(std::move(h));
  }
  for (const auto& host : hosts) {
    auto sigma = sphere_table(host.g);
    auto rho = compression_function(host.g, host.f, 1.0);
    auto pi = poincare_profile(host.g, host.n_max, 1.0, ProfileMode::exact_small, {}, profile_options(o));
    for (const auto& row : pi.rows) {
      double bound = poincare_upper_bound(static_cast<double>(row.n), 1.0, sigma, rho, BoundForm::general);
      c.le("c11/" + host.name + "/n" + pad(row.n), "compression-upper-bound", row.upper, bound, o.tol);
    }
  }
  SphereTable sigma{{1, 2, 4, 8, 16, 32}};
  CompressionTable rho;
  rho.rho = {1, 2, 3, 4, 5};
  c.near("c11/evaluation/N16", "compression-bound-evaluation",
         poincare_upper_bound(16.0, 1.0, sigma, rho, BoundForm::general), 30.12, 0.01);
}

// --------------------------------------------------------------- criterion 12

void sec_rearrangement(Checker& c, const VerifyOptions& o) {
  std::vector<long> h{1, 2, 1, 3, 2, 3}, s{1, 2, 3, 4, 5, 6};
  auto trace = rearrange_trace(h, s);
  c.truth("c12/figure/first-step", "rearrangement-figure",
          trace.size() > 1 && trace[1] == std::vector<long>{1, 2, 3, 1, 2, 3});

  std::mt19937_64 rng(mix_seed(o.seed, 120));
  std::size_t bad_ineq = 0, bad_mass = 0, bad_shape = 0, bad_step = 0, checks = 0;
  auto dot = [](const std::vector<long>& x, const std::vector<double>& r) {
    double t = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) t += static_cast<double>(x[i]) * r[i];
    return t;
  };
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t len = 1 + rng() % 12;
    std::vector<long> sv(len), hv(len);
    std::vector<double> rho(len);
    double acc = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    for (std::size_t i = 0; i < len; ++i) {
      sv[i] = static_cast<long>(rng() % 7);
      hv[i] = sv[i] ? static_cast<long>(rng() % static_cast<std::uint64_t>(sv[i] + 1)) : 0;
      acc += (rng() % 3 == 0) ? 0.0 : static_cast<double>(rng() >> 11) * 0x1.0p-53;
      rho[i] = acc;
    }
    long mass = 0;
    for (long x : hv) mass += x;
    double lhs = dot(hv, rho);
    long prefix = 0;
    double rhs = 0.0;
    for (std::size_t k = 0; k < len; ++k) {
      prefix += sv[k];
      rhs += static_cast<double>(sv[k]) * rho[k];
      if (prefix > mass) break;
      ++checks;
      if (lhs < rhs - 1e-9 * std::max(1.0, std::abs(rhs))) ++bad_ineq;
    }
    auto tr = rearrange_trace(hv, sv);
    for (std::size_t i = 1; i < tr.size(); ++i)
      if (dot(tr[i], rho) > dot(tr[i - 1], rho) + 1e-9) ++bad_step;
    const auto& out = tr.back();
    long out_mass = 0;
    for (long x : out) out_mass += x;
    if (out_mass != mass) ++bad_mass;
    std::size_t i0 = 0;
    while (i0 < len && out[i0] == sv[i0]) ++i0;
    for (std::size_t i = i0 + 1; i < len; ++i)
      if (out[i] != 0) {
        ++bad_shape;
        break;
      }
  }
  c.near("c12/random/inequality-failures", "rearrangement-inequality", static_cast<double>(bad_ineq), 0.0, 0.0);
  c.le("c12/random/inequality-checks", "rearrangement-inequality", 500.0, static_cast<double>(checks), 0.0);
  c.near("c12/random/mass-preserved", "rearrangement-inequality", static_cast<double>(bad_mass), 0.0, 0.0);
  c.near("c12/random/output-shape", "rearrangement-inequality", static_cast<double>(bad_shape), 0.0, 0.0);
  c.near("c12/random/step-monotone", "rearrangement-inequality", static_cast<double>(bad_step), 0.0, 0.0);
}

// ------------------------------------------------------------------ conditions

void sec_conditions(Checker& c, const VerifyOptions& o) {
  auto sqrt_rho = MonotoneFunction::from_callable([](double t) { return std::sqrt(t); });
  auto r1 = check_condition(sqrt_rho, ConditionKind::s_alpha_beta, 0.0, 2.0, 1.0, log_grid(1.0, 1e12, 200));
  c.truth("x-conditions/sqrt/s-0-2", "condition-s-alpha-beta", r1.pass);

  // log(1 + e^u), evaluated stably.
  auto log_rho = MonotoneFunction::from_log_callable(
      [](double u) { return u > 30.0 ? u + std::log1p(std::exp(-u)) : std::log1p(std::exp(u)); }, 1e8);
  auto r2 = check_condition(log_rho, ConditionKind::ssl, 0.0, 1.0, 2.0, log_grid(10.0, 1e6, 200));
  c.truth("x-conditions/log/ssl", "condition-ssl", r2.pass);

  auto id_rho = MonotoneFunction::from_callable([](double t) { return t; });
  auto r3 = check_condition(id_rho, ConditionKind::ssl, 0.0, 1.0, 2.0, log_grid(1.0, 1e6, 200));
  c.truth("x-conditions/linear/ssl-rejected", "condition-ssl", !r3.pass);

  ScaleFunction sf{{3, 9}, {2, 6}};
  c.near("x-scale-function/x6", "scale-function-pieces", rho_delta(sf, 6.0), 3.0, o.tol);
  c.near("x-scale-function/x18", "scale-function-pieces", rho_delta(sf, 18.0), 9.0, o.tol);
  bool monotone = true;
  double prev = 0.0, prev_q = 0.0;
  for (double x = sf.lower(); x < sf.upper(); x += 0.25) {
    double r = rho_delta(sf, x);
    if (r < prev - o.tol || x / r < prev_q - o.tol) monotone = false;
    prev = r;
    prev_q = x / r;
  }
  c.truth("x-scale-function/monotone", "scale-function-pieces", monotone);
}

// ----------------------------------------------------------------- dispatch

struct Section {
  const char* suite;
  int criterion;
  std::function<void(Checker&, const VerifyOptions&)> run;
};

const std::vector<Section>& sections() {
  static const std::vector<Section> all{
      {"cartesian_powers", 1, sec_fiedler},
      {"cheeger_sandwiches", 2, sec_cheeger_inequalities},
      {"cheeger_sandwiches", 0, sec_cheeger_extras},
      {"cartesian_powers", 3, sec_product_sandwich},
      {"cartesian_powers", 4, sec_product_edge},
      {"cartesian_powers", 0, sec_product_extras},
      {"cuts_profiles", 5, sec_cut_cheeger},
      {"cuts_profiles", 6, [](Checker& c, const VerifyOptions& o) { sec_profiles(c, o, false); }},
      {"cuts_profiles", 0, [](Checker& c, const VerifyOptions& o) { sec_profiles(c, o, true); }},
      {"lamp_embedding", 7, sec_lamp},
      {"coarsening", 8, sec_coarsening},
      {"rescaling", 9, sec_analytic},
      {"cocycles", 10, sec_cocycles},
      {"compression_bound", 11, sec_compression},
      {"compression_bound", 12, sec_rearrangement},
      {"conditions", 0, sec_conditions},
  };
  return all;
}

SuiteReport run_sections(const std::vector<const Section*>& chosen, const VerifyOptions& options) {
  std::vector<std::future<std::vector<CheckRow>>> jobs;
  for (const Section* s : chosen)
    jobs.push_back(std::async(std::launch::async, [s, &options] {
      Checker c(options, s->criterion);
      s->run(c, options);
      return std::move(c.rows);
    }));
  SuiteReport rep;
  rep.seed = options.seed;
  rep.tol = options.tol;
  for (auto& j : jobs) {
    auto rows = j.get();
    rep.rows.insert(rep.rows.end(), std::make_move_iterator(rows.begin()), std::make_move_iterator(rows.end()));
  }
  std::stable_sort(rep.rows.begin(), rep.rows.end(), [](const CheckRow& a, const CheckRow& b) { return a.id < b.id; });
  return rep;
}

std::string fmt(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace

bool SuiteReport::passed() const { return failures().empty(); }

std::vector<const CheckRow*> SuiteReport::failures() const {
  std::vector<const CheckRow*> out;
  for (const auto& r : rows)
    if (r.hard && r.status == CheckStatus::fail) out.push_back(&r);
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"cheeger_sandwiches", "cartesian_powers", "cuts_profiles",
                                              "coarsening",         "rescaling",        "lamp_embedding",
                                              "compression_bound",  "cocycles",         "conditions"};
  return names;
}

SuiteReport run_suite(const std::string& name, const VerifyOptions& options) {
  if (name != "all" && std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end())
    throw std::invalid_argument("unknown suite: " + name);
  std::vector<const Section*> chosen;
  for (const auto& s : sections())
    if (name == "all" || name == s.suite) chosen.push_back(&s);
  return run_sections(chosen, options);
}

SuiteReport run_criterion(int criterion, const VerifyOptions& options) {
  std::vector<const Section*> chosen;
  for (const auto& s : sections())
    if (s.criterion == criterion) chosen.push_back(&s);
  if (chosen.empty()) throw std::invalid_argument("no checks for criterion " + std::to_string(criterion));
  return run_sections(chosen, options);
}

std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skip: return "skip";
  }
  return "skip";
}

void write_report_csv(std::ostream& out, const SuiteReport& report) {
  out << "# seed=" << report.seed << " tol=" << fmt(report.tol) << " version=" << kVersion << '\n';
  out << "check_id,anchor,status,lhs,rhs,tol,ms\n";
  for (const auto& r : report.rows)
    out << r.id << ',' << r.anchor << ',' << status_name(r.status) << (r.hard ? "" : "-soft") << ',' << fmt(r.lhs)
        << ',' << fmt(r.rhs) << ',' << fmt(r.tol) << ',' << fmt(r.ms) << '\n';
}

void write_report_json(std::ostream& out, const SuiteReport& report) {
  nlohmann::ordered_json j;
  j["seed"] = report.seed;
  j["tol"] = report.tol;
  j["version"] = kVersion;
  auto num = [](double x) -> nlohmann::ordered_json {
    if (std::isfinite(x)) return x;
    return fmt(x);
  };
  auto& rows = j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : report.rows)
    rows.push_back({{"check_id", r.id},
                    {"anchor", r.anchor},
                    {"status", status_name(r.status)},
                    {"hard", r.hard},
                    {"lhs", num(r.lhs)},
                    {"rhs", num(r.rhs)},
                    {"tol", num(r.tol)},
                    {"ms", num(r.ms)}});
  out << j.dump(2) << '\n';
}

}  // namespace isoprof
