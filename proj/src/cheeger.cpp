#include "isoprof/cheeger.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <ostream>
#include <random>
#include <stdexcept>

#include "isoprof/errors.hpp"
#include "isoprof/spectral.hpp"
#include "ratio_descent.hpp"

namespace isoprof {

IsoperimetricScan isoperimetric_scan(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kExhaustiveCheegerLimit)
    throw BudgetExceeded("exhaustive subset scan limited to " + std::to_string(kExhaustiveCheegerLimit) +
                         " vertices");
  IsoperimetricScan scan;
  scan.n = n;
  const std::size_t half = n / 2;
  const std::size_t none = std::numeric_limits<std::size_t>::max();
  scan.min_external.assign(half + 1, none);
  scan.min_majored.assign(half + 1, none);
  scan.min_edge.assign(half + 1, none);
  scan.arg_external.assign(half + 1, 0);
  scan.arg_majored.assign(half + 1, 0);
  scan.arg_edge.assign(half + 1, 0);
  if (n < 2) return scan;

  std::vector<std::uint32_t> adj(n, 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  const std::size_t count = std::size_t{1} << n;
  std::vector<std::uint32_t> nbr(count, 0);
  std::vector<std::uint16_t> cross(count, 0);
  for (std::size_t a = 1; a < count; ++a) {
    auto rest = static_cast<std::uint32_t>(a & (a - 1));
    int x = std::countr_zero(static_cast<std::uint32_t>(a));
    nbr[a] = nbr[rest] | adj[x];
    cross[a] = static_cast<std::uint16_t>(cross[rest] + std::popcount(adj[x]) - 2 * std::popcount(adj[x] & rest));
  }
  for (std::size_t a = 1; a < count; ++a) {
    auto set = static_cast<std::uint32_t>(a);
    auto m = static_cast<std::size_t>(std::popcount(set));
    if (2 * m > n) continue;
    auto ext = static_cast<std::size_t>(std::popcount(nbr[a] & ~set & full));
    auto internal = static_cast<std::size_t>(std::popcount(set & nbr[full ^ set]));
    if (ext < scan.min_external[m]) {
      scan.min_external[m] = ext;
      scan.arg_external[m] = set;
    }
    if (ext + internal < scan.min_majored[m]) {
      scan.min_majored[m] = ext + internal;
      scan.arg_majored[m] = set;
    }
    if (cross[a] < scan.min_edge[m]) {
      scan.min_edge[m] = cross[a];
      scan.arg_edge[m] = set;
    }
  }
  return scan;
}

namespace {

std::vector<Vertex> bits_to_members(std::uint32_t mask) {
  std::vector<Vertex> out;
  for (; mask; mask &= mask - 1) out.push_back(static_cast<Vertex>(std::countr_zero(mask)));
  return out;
}

std::size_t boundary_count(const Graph& g, const std::vector<char>& in, CombinatorialMode mode) {
  if (mode == CombinatorialMode::edge) {
    std::size_t c = 0;
    for (const auto& [u, v] : g.edges()) c += in[u] != in[v];
    return c;
  }
  std::vector<char> mark(g.vertex_count(), 0);
  for (const auto& [u, v] : g.edges()) {
    if (in[u] == in[v]) continue;
    Vertex outside = in[u] ? v : u;
    Vertex inside = in[u] ? u : v;
    mark[outside] = 1;
    if (mode == CombinatorialMode::majored) mark[inside] = 1;
  }
  return static_cast<std::size_t>(std::count(mark.begin(), mark.end(), 1));
}

// Strictly better ratio b1/m1 < b2/m2 in integers.
bool better(std::size_t b1, std::size_t m1, std::size_t b2, std::size_t m2) { return b1 * m2 < b2 * m1; }

CheegerWitness annealed_cheeger(const Graph& g, CombinatorialMode mode, const CombinatorialOptions& opt) {
  const std::size_t n = g.vertex_count();
  const std::size_t half = n / 2;
  CheegerWitness best;
  best.kind = CheegerWitness::Kind::set;
  bool have = false;
  auto consider = [&](const std::vector<char>& in) {
    std::size_t m = static_cast<std::size_t>(std::count(in.begin(), in.end(), 1));
    if (m == 0 || 2 * m > n) return;
    std::size_t b = boundary_count(g, in, mode);
    if (!have || better(b, m, best.boundary_size, best.set_size)) {
      have = true;
      best.boundary_size = b;
      best.set_size = m;
      best.set_witness.clear();
      for (Vertex v = 0; v < n; ++v)
        if (in[v]) best.set_witness.push_back(v);
    }
  };
  // BFS-ball prefixes from every vertex.
  for (Vertex s = 0; s < n; ++s) {
    auto dist = bfs_distances(g, s);
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return dist[a] < dist[b]; });
    std::vector<char> in(n, 0);
    for (std::size_t i = 0; i < half; ++i) {
      in[order[i]] = 1;
      consider(in);
    }
  }
  // Annealing from the best prefix.
  std::mt19937_64 rng(opt.seed);
  std::vector<char> cur(n, 0);
  for (Vertex v : best.set_witness) cur[v] = 1;
  std::size_t cur_m = best.set_size, cur_b = best.boundary_size;
  const int steps = opt.sweeps;
  for (int t = 0; t < steps; ++t) {
    double temp = 0.5 * (1.0 - static_cast<double>(t) / steps) + 1e-3;
    Vertex v = static_cast<Vertex>(rng() % n);
    std::size_t m = cur[v] ? cur_m - 1 : cur_m + 1;
    if (m == 0 || 2 * m > n) continue;
    cur[v] ^= 1;
    std::size_t b = boundary_count(g, cur, mode);
    double delta = static_cast<double>(b) / m - static_cast<double>(cur_b) / cur_m;
    if (delta <= 0 || detail::unit_uniform(rng) < std::exp(-delta / temp)) {
      cur_m = m;
      cur_b = b;
      consider(cur);
    } else {
      cur[v] ^= 1;
    }
  }
  best.value = static_cast<double>(best.boundary_size) / static_cast<double>(best.set_size);
  best.exact = false;
  return best;
}

}  // namespace

CheegerWitness cheeger_combinatorial(const Graph& g, CombinatorialMode mode, const CombinatorialOptions& options) {
  CheegerWitness w;
  w.kind = CheegerWitness::Kind::set;
  const std::size_t n = g.vertex_count();
  if (n <= 1) {
    w.exact = true;
    w.certified_lower = 0.0;
    return w;
  }
  if (n > kExhaustiveCheegerLimit) {
    if (!options.allow_heuristic)
      throw BudgetExceeded("exact search infeasible: " + std::to_string(n) + " vertices exceeds " +
                           std::to_string(kExhaustiveCheegerLimit) + "; enable the heuristic");
    return annealed_cheeger(g, mode, options);
  }
  auto scan = isoperimetric_scan(g);
  const auto& mins = mode == CombinatorialMode::plain     ? scan.min_external
                     : mode == CombinatorialMode::majored ? scan.min_majored
                                                          : scan.min_edge;
  const auto& args = mode == CombinatorialMode::plain     ? scan.arg_external
                     : mode == CombinatorialMode::majored ? scan.arg_majored
                                                          : scan.arg_edge;
  std::size_t best_m = 1;
  for (std::size_t m = 2; m < mins.size(); ++m)
    if (better(mins[m], m, mins[best_m], best_m)) best_m = m;
  w.boundary_size = mins[best_m];
  w.set_size = best_m;
  w.set_witness = bits_to_members(args[best_m]);
  w.value = static_cast<double>(w.boundary_size) / static_cast<double>(w.set_size);
  w.exact = true;
  w.certified_lower = w.value;
  return w;
}

double sup_gradient_lower_from_majored(double majored, double p, std::size_t n) {
  if (n < 2) return 0.0;
  if (n == 2) return majored > 0 ? 2.0 : 0.0;  // every non-constant function has ratio 2
  double h1 = majored / 2.0;
  if (p == 1.0) return h1;
  return std::min(1.0 / 12.0, std::pow(4.0, -p) / 2.0) * h1;
}

namespace {

double signed_pow(double x, double e) { return x == 0.0 ? 0.0 : std::copysign(std::pow(std::abs(x), e), x); }

// Sup-gradient objective on balls with a vertex measure; scalar functions.
struct SupProblem {
  std::vector<std::vector<std::size_t>> balls;
  std::vector<double> nu;
  double p = 1.0;

  double total() const { return std::accumulate(nu.begin(), nu.end(), 0.0); }

  bool normalize(std::vector<double>& f) const {
    double mean = 0.0;
    for (std::size_t x = 0; x < f.size(); ++x) mean += nu[x] * f[x];
    mean /= total();
    double t = 0.0;
    for (std::size_t x = 0; x < f.size(); ++x) {
      f[x] -= mean;
      t += nu[x] * std::pow(std::abs(f[x]), p);
    }
    if (!(t > 1e-300) || !std::isfinite(t)) return false;
    double d = std::pow(t, 1.0 / p);
    for (double& v : f) v /= d;
    return true;
  }

  double eval(const std::vector<double>& f, std::vector<double>* grad) const {
    const std::size_t n = f.size();
    double mean = 0.0;
    for (std::size_t x = 0; x < n; ++x) mean += nu[x] * f[x];
    mean /= total();
    double s = 0.0, t = 0.0;
    std::vector<std::size_t> amax(n), amin(n);
    std::vector<double> gx(n);
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t hi = balls[x].front(), lo = hi;
      for (std::size_t y : balls[x]) {
        if (f[y] > f[hi]) hi = y;
        if (f[y] < f[lo]) lo = y;
      }
      amax[x] = hi;
      amin[x] = lo;
      gx[x] = f[hi] - f[lo];
      s += nu[x] * std::pow(gx[x], p);
      t += nu[x] * std::pow(std::abs(f[x] - mean), p);
    }
    double num = std::pow(s, 1.0 / p), den = std::pow(t, 1.0 / p);
    double ratio = num / den;
    if (grad) {
      grad->assign(n, 0.0);
      std::vector<double> dn(n, 0.0), dd(n, 0.0);
      if (s > 0) {
        double c = std::pow(s, 1.0 / p - 1.0);
        for (std::size_t x = 0; x < n; ++x) {
          if (gx[x] <= 0) continue;
          double w = nu[x] * (p == 1.0 ? 1.0 : std::pow(gx[x], p - 1.0)) * c;
          dn[amax[x]] += w;
          dn[amin[x]] -= w;
        }
      }
      double c = std::pow(t, 1.0 / p - 1.0);
      double acc = 0.0;
      std::vector<double> w(n);
      for (std::size_t x = 0; x < n; ++x) {
        w[x] = nu[x] * signed_pow(f[x] - mean, p - 1.0);
        if (p == 1.0) w[x] = nu[x] * ((f[x] > mean) - (f[x] < mean));
        acc += w[x];
      }
      double tot = total();
      for (std::size_t x = 0; x < n; ++x) dd[x] = c * (w[x] - nu[x] / tot * acc);
      for (std::size_t x = 0; x < n; ++x) (*grad)[x] = (dn[x] - ratio * dd[x]) / den;
    }
    return ratio;
  }
};

// Modified gradient objective with values in R^dim (row-major storage).
struct ModifiedProblem {
  const Graph* g = nullptr;
  std::size_t dim = 1;
  double p = 2.0;

  bool normalize(std::vector<double>& f) const {
    const std::size_t n = g->vertex_count();
    double t = 0.0;
    for (std::size_t c = 0; c < dim; ++c) {
      double mean = 0.0;
      for (std::size_t x = 0; x < n; ++x) mean += f[x * dim + c];
      mean /= static_cast<double>(n);
      for (std::size_t x = 0; x < n; ++x) {
        f[x * dim + c] -= mean;
        t += std::pow(std::abs(f[x * dim + c]), p);
      }
    }
    if (!(t > 1e-300) || !std::isfinite(t)) return false;
    double d = std::pow(t, 1.0 / p);
    for (double& v : f) v /= d;
    return true;
  }

  double eval(const std::vector<double>& f, std::vector<double>* grad) const {
    const std::size_t n = g->vertex_count();
    std::vector<double> mean(dim, 0.0);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t c = 0; c < dim; ++c) mean[c] += f[x * dim + c];
    for (double& m : mean) m /= static_cast<double>(n);
    double s = 0.0, t = 0.0;
    for (const auto& [u, v] : g->edges())
      for (std::size_t c = 0; c < dim; ++c) s += 2.0 * std::pow(std::abs(f[u * dim + c] - f[v * dim + c]), p);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t c = 0; c < dim; ++c) t += std::pow(std::abs(f[x * dim + c] - mean[c]), p);
    double num = std::pow(s, 1.0 / p), den = std::pow(t, 1.0 / p);
    double ratio = num / den;
    if (grad) {
      grad->assign(n * dim, 0.0);
      std::vector<double> dn(n * dim, 0.0), dd(n * dim, 0.0);
      if (s > 0) {
        double cs = std::pow(s, 1.0 / p - 1.0);
        for (const auto& [u, v] : g->edges())
          for (std::size_t c = 0; c < dim; ++c) {
            double delta = f[u * dim + c] - f[v * dim + c];
            double w = 2.0 * cs * (p == 1.0 ? ((delta > 0) - (delta < 0)) : signed_pow(delta, p - 1.0));
            dn[u * dim + c] += w;
            dn[v * dim + c] -= w;
          }
      }
      double ct = std::pow(t, 1.0 / p - 1.0);
      for (std::size_t c = 0; c < dim; ++c) {
        std::vector<double> w(n);
        double acc = 0.0;
        for (std::size_t x = 0; x < n; ++x) {
          double u = f[x * dim + c] - mean[c];
          w[x] = p == 1.0 ? ((u > 0) - (u < 0)) : signed_pow(u, p - 1.0);
          acc += w[x];
        }
        for (std::size_t x = 0; x < n; ++x) dd[x * dim + c] = ct * (w[x] - acc / static_cast<double>(n));
      }
      for (std::size_t i = 0; i < n * dim; ++i) (*grad)[i] = (dn[i] - ratio * dd[i]) / den;
    }
    return ratio;
  }
};

std::vector<std::vector<std::size_t>> graph_balls(const Graph& g, double a) {
  std::vector<std::vector<std::size_t>> balls(g.vertex_count());
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    auto d = bfs_distances(g, x);
    for (Vertex y = 0; y < g.vertex_count(); ++y)
      if (d[y] != kUnreachable && d[y] <= a + 1e-12) balls[x].push_back(y);
  }
  return balls;
}

std::vector<double> flatten(const std::vector<std::vector<double>>& rows, std::size_t dim) {
  std::vector<double> out;
  out.reserve(rows.size() * dim);
  for (const auto& r : rows) {
    if (r.size() != dim) throw std::invalid_argument("witness row has wrong dimension");
    out.insert(out.end(), r.begin(), r.end());
  }
  return out;
}

std::vector<std::vector<double>> unflatten(const std::vector<double>& flat, std::size_t dim) {
  std::vector<std::vector<double>> rows(flat.size() / dim);
  for (std::size_t x = 0; x < rows.size(); ++x) rows[x].assign(flat.begin() + x * dim, flat.begin() + (x + 1) * dim);
  return rows;
}

std::vector<double> indicator(std::size_t n, std::uint32_t mask) {
  std::vector<double> f(n, 0.0);
  for (std::size_t v = 0; v < n; ++v)
    if (mask >> v & 1u) f[v] = 1.0;
  return f;
}

}  // namespace

double lp_ratio(const Graph& g, const std::vector<std::vector<double>>& f, double p, Gradient gradient,
                double scale_a) {
  const std::size_t n = g.vertex_count();
  if (f.size() != n) throw std::invalid_argument("function size does not match graph");
  const std::size_t dim = f.empty() ? 1 : f.front().size();
  if (gradient == Gradient::modified) {
    ModifiedProblem prob{&g, dim, p};
    return prob.eval(flatten(f, dim), nullptr);
  }
  if (dim != 1) throw std::invalid_argument("sup-scale gradient supports scalar functions only");
  SupProblem prob{graph_balls(g, scale_a), std::vector<double>(n, 1.0), p};
  return prob.eval(flatten(f, 1), nullptr);
}

CheegerWitness cheeger_lp(const Graph& g, const LpOptions& opt) {
  if (opt.p < 1.0) throw std::invalid_argument("p must be >= 1");
  if (opt.scale_a <= 0.0) throw std::invalid_argument("scale must be positive");
  if (opt.target_dim < 1) throw std::invalid_argument("target dimension must be >= 1");
  if (opt.gradient == Gradient::sup_scale && opt.target_dim != 1)
    throw std::invalid_argument("vector-valued estimates use the modified gradient");
  if (opt.gradient == Gradient::modified && opt.scale_a != 1.0)
    throw std::invalid_argument("the modified gradient is defined at scale 1 only");

  const std::size_t n = g.vertex_count();
  const auto dim = static_cast<std::size_t>(opt.target_dim);
  CheegerWitness w;
  w.kind = CheegerWitness::Kind::function;
  if (n <= 1) {
    w.exact = true;
    w.certified_lower = 0.0;
    w.function_witness.assign(n, std::vector<double>(dim, 0.0));
    return w;
  }

  std::optional<IsoperimetricScan> scan;
  if (n <= kExhaustiveCheegerLimit) scan = isoperimetric_scan(g);
  bool connected = is_connected(g);

  if (opt.gradient == Gradient::modified && opt.p == 2.0) {
    auto spec = lambda2(g);
    std::vector<std::vector<double>> rows(n, std::vector<double>(dim, 0.0));
    for (std::size_t x = 0; x < n; ++x) rows[x][0] = spec.witness_vector[x];
    w.function_witness = rows;
    w.value = lp_ratio(g, rows, 2.0, Gradient::modified);
    w.exact = true;
    w.certified_lower = std::max(0.0, std::sqrt(2.0 * spec.lambda2) - kSpectralTolerance);
    w.certified_lower = std::min(*w.certified_lower, w.value);
    return w;
  }

  std::vector<std::vector<double>> starts;
  for (const auto& s : opt.extra_starts) starts.push_back(flatten(s, dim));

  auto scalar_starts = [&]() {
    std::vector<std::vector<double>> out;
    if (scan) {
      const auto& args = opt.gradient == Gradient::sup_scale ? scan->arg_majored : scan->arg_edge;
      for (std::size_t m = 1; m < args.size(); ++m) out.push_back(indicator(n, args[m]));
    }
    if (connected) out.push_back(lambda2(g).witness_vector);
    return out;
  };

  detail::DescentOptions dopt{opt.restarts, opt.iterations, opt.seed};
  detail::DescentResult best;
  if (opt.gradient == Gradient::sup_scale) {
    SupProblem prob{graph_balls(g, opt.scale_a), std::vector<double>(n, 1.0), opt.p};
    detail::RatioProblem rp{n, [&](const std::vector<double>& f, std::vector<double>* gr) { return prob.eval(f, gr); },
                            [&](std::vector<double>& f) { return prob.normalize(f); }};
    for (auto& s : scalar_starts()) starts.push_back(std::move(s));
    best = detail::minimize_ratio(rp, starts, dopt);
  } else {
    if (dim > 1) {
      LpOptions scalar = opt;
      scalar.target_dim = 1;
      scalar.extra_starts.clear();
      auto sw = cheeger_lp(g, scalar);
      std::vector<double> lifted(n * dim, 0.0);
      for (std::size_t x = 0; x < n; ++x) lifted[x * dim] = sw.function_witness[x][0];
      starts.push_back(std::move(lifted));
    } else {
      for (auto& s : scalar_starts()) starts.push_back(std::move(s));
    }
    ModifiedProblem prob{&g, dim, opt.p};
    detail::RatioProblem rp{n * dim,
                            [&](const std::vector<double>& f, std::vector<double>* gr) { return prob.eval(f, gr); },
                            [&](std::vector<double>& f) { return prob.normalize(f); }};
    best = detail::minimize_ratio(rp, starts, dopt);
  }

  if (!best.found) {
    // Only reachable for edgeless inputs where every start degenerates.
    std::vector<double> f(n * dim, 0.0);
    f[0] = 1.0;
    best.point = f;
  }
  w.function_witness = unflatten(best.point, dim);
  w.value = lp_ratio(g, w.function_witness, opt.p, opt.gradient, opt.scale_a);

  double lower = 0.0;
  if (scan) {
    double maj = 0.0;
    {
      std::size_t bm = 1;
      for (std::size_t m = 2; m < scan->min_majored.size(); ++m)
        if (better(scan->min_majored[m], m, scan->min_majored[bm], bm)) bm = m;
      maj = static_cast<double>(scan->min_majored[bm]) / static_cast<double>(bm);
    }
    lower = sup_gradient_lower_from_majored(maj, opt.p, n);
  }
  if (opt.p == 2.0 && connected) {
    // h_2 >= D^{-1/2} sqrt(2 lambda_2)
    double l2 = std::max(0.0, lambda2(g).lambda2 - kSpectralTolerance);
    lower = std::max(lower, std::sqrt(2.0 * l2 / static_cast<double>(g.max_degree())));
  }
  if (opt.gradient == Gradient::modified) lower *= std::pow(2.0, -(opt.p - 1.0) / opt.p);
  w.certified_lower = std::min(lower, w.value);
  return w;
}

double WeightedMetricGraph::total_measure() const { return std::accumulate(measure.begin(), measure.end(), 0.0); }

double WeightedMetricGraph::ball_measure(std::size_t x, double radius) const {
  double s = 0.0;
  for (std::size_t y = 0; y < size(); ++y)
    if (distance[x][y] <= radius + 1e-12) s += measure[y];
  return s;
}

double WeightedMetricGraph::min_ball_measure(double radius) const {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t x = 0; x < size(); ++x) best = std::min(best, ball_measure(x, radius));
  return best;
}

double WeightedMetricGraph::max_ball_measure(double radius) const {
  double best = 0.0;
  for (std::size_t x = 0; x < size(); ++x) best = std::max(best, ball_measure(x, radius));
  return best;
}

WeightedMetricGraph WeightedMetricGraph::from_graph(const Graph& g, std::vector<double> measure) {
  const std::size_t n = g.vertex_count();
  if (measure.empty()) measure.assign(n, 1.0);
  if (measure.size() != n) throw std::invalid_argument("measure size does not match graph");
  for (double m : measure)
    if (!(m > 0.0)) throw std::invalid_argument("vertex measure must be positive");
  WeightedMetricGraph z;
  z.measure = std::move(measure);
  for (const auto& row : distance_matrix(g)) {
    std::vector<double> d;
    for (int x : row) d.push_back(x == kUnreachable ? std::numeric_limits<double>::infinity() : x);
    z.distance.push_back(std::move(d));
  }
  return z;
}

namespace {

SupProblem scale_problem(const WeightedMetricGraph& z, double a, double p) {
  SupProblem prob;
  prob.nu = z.measure;
  prob.p = p;
  prob.balls.resize(z.size());
  for (std::size_t x = 0; x < z.size(); ++x)
    for (std::size_t y = 0; y < z.size(); ++y)
      if (z.distance[x][y] <= a + 1e-12) prob.balls[x].push_back(y);
  return prob;
}

}  // namespace

double scale_ratio(const WeightedMetricGraph& z, const std::vector<double>& f, double a, double p) {
  return scale_problem(z, a, p).eval(f, nullptr);
}

CheegerWitness scale_poincare_constant(const WeightedMetricGraph& z, double a, double p, const ScaleOptions& opt) {
  if (p < 1.0) throw std::invalid_argument("p must be >= 1");
  if (a <= 0.0) throw std::invalid_argument("scale must be positive");
  CheegerWitness w;
  w.kind = CheegerWitness::Kind::function;
  const std::size_t n = z.size();
  if (n <= 1 || z.total_measure() <= 0.0) {
    w.exact = true;
    w.certified_lower = 0.0;
    w.function_witness.assign(n, std::vector<double>{0.0});
    return w;
  }
  auto prob = scale_problem(z, a, p);

  // Sweep indicators: prefixes of the distance order from every point.
  std::vector<std::pair<double, std::vector<double>>> sweeps;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t u, std::size_t v) { return z.distance[c][u] < z.distance[c][v]; });
    std::vector<double> f(n, 0.0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      f[order[i]] = 1.0;
      sweeps.emplace_back(prob.eval(f, nullptr), f);
    }
  }
  std::stable_sort(sweeps.begin(), sweeps.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  std::vector<std::vector<double>> starts = opt.extra_starts;
  for (std::size_t i = 0; i < sweeps.size() && i < 4; ++i) starts.push_back(sweeps[i].second);

  detail::RatioProblem rp{n, [&](const std::vector<double>& f, std::vector<double>* gr) { return prob.eval(f, gr); },
                          [&](std::vector<double>& f) { return prob.normalize(f); }};
  auto best = detail::minimize_ratio(rp, starts, {opt.restarts, opt.iterations, opt.seed});
  w.function_witness = as_rows(best.point);
  w.value = scale_ratio(z, best.point, a, p);
  return w;
}

double p_variance(const std::vector<std::vector<double>>& f, double p) {
  const std::size_t n = f.size();
  if (n == 0) return 0.0;
  double s = 0.0;
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h)
      for (std::size_t c = 0; c < f[g].size(); ++c) s += std::pow(std::abs(f[g][c] - f[h][c]), p);
  return std::pow(s / static_cast<double>(n * n), 1.0 / p);
}

double centered_lp_norm(const std::vector<std::vector<double>>& f, double p) {
  const std::size_t n = f.size();
  if (n == 0) return 0.0;
  const std::size_t dim = f.front().size();
  double s = 0.0;
  for (std::size_t c = 0; c < dim; ++c) {
    double mean = 0.0;
    for (const auto& row : f) mean += row[c];
    mean /= static_cast<double>(n);
    for (const auto& row : f) s += std::pow(std::abs(row[c] - mean), p);
  }
  return std::pow(s, 1.0 / p);
}

std::vector<std::vector<double>> as_rows(const std::vector<double>& f) {
  std::vector<std::vector<double>> rows;
  rows.reserve(f.size());
  for (double x : f) rows.push_back({x});
  return rows;
}

void write_witness_csv(std::ostream& out, const std::vector<std::vector<double>>& f) {
  const std::size_t dim = f.empty() ? 1 : f.front().size();
  out << "vertex";
  for (std::size_t c = 0; c < dim; ++c) out << (dim == 1 ? ",value" : ",value" + std::to_string(c));
  out << '\n';
  out.precision(17);
  for (std::size_t v = 0; v < f.size(); ++v) {
    out << v;
    for (double x : f[v]) out << ',' << x;
    out << '\n';
  }
}

}  // namespace isoprof
