#include "isoprof/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace isoprof {

namespace {

double lp_distance(const std::vector<double>& x, const std::vector<double>& y, double p) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += std::pow(std::abs(x[i] - y[i]), p);
  return std::pow(s, 1.0 / p);
}

}  // namespace

double CompressionTable::at(long t) const {
  if (t <= 0) return 0.0;
  if (static_cast<std::size_t>(t) > rho.size()) throw std::out_of_range("compression table too short");
  return rho[static_cast<std::size_t>(t - 1)];
}

CompressionTable compression_function(const Graph& g, const std::vector<std::vector<double>>& f, double p) {
  const std::size_t n = g.vertex_count();
  if (f.size() != n) throw std::invalid_argument("map must be defined on every vertex");
  if (p < 1.0) throw std::invalid_argument("p must be >= 1");
  for (const auto& row : f)
    if (row.size() != f.front().size()) throw std::invalid_argument("map rows differ in dimension");
  CompressionTable out;
  out.p = p;
  for (const auto& [u, v] : g.edges()) out.lipschitz = std::max(out.lipschitz, lp_distance(f[u], f[v], p));
  if (out.lipschitz > 1.0) out.rescale = 1.0 / out.lipschitz;

  auto dist = distance_matrix(g);
  int diam = 0;
  for (const auto& row : dist)
    for (int d : row) {
      if (d == kUnreachable) out.skipped_infinite = true;
      else diam = std::max(diam, d);
    }
  // best[d] = min distance over pairs at graph distance exactly d.
  std::vector<double> best(static_cast<std::size_t>(diam) + 1, std::numeric_limits<double>::infinity());
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      int d = dist[u][v];
      if (d == kUnreachable) continue;
      best[static_cast<std::size_t>(d)] = std::min(best[static_cast<std::size_t>(d)], lp_distance(f[u], f[v], p));
    }
  out.rho.assign(static_cast<std::size_t>(diam), 0.0);
  double suffix = std::numeric_limits<double>::infinity();
  for (int t = diam; t >= 1; --t) {
    suffix = std::min(suffix, best[static_cast<std::size_t>(t)]);
    out.rho[static_cast<std::size_t>(t - 1)] = suffix * out.rescale;
  }
  return out;
}

long SphereTable::k_of(double n) const {
  double sum = 0.0;
  long k = -1;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    sum += sigma[i];
    if (sum > n) return k;
    k = static_cast<long>(i);
  }
  return k;
}

double SphereTable::growth() const {
  double d = 1.0;
  for (std::size_t n = 1; n < sigma.size(); ++n)
    if (sigma[n] > 0) d = std::max(d, std::pow(sigma[n], 1.0 / static_cast<double>(n)));
  return d;
}

SphereTable sphere_table(const Graph& g) {
  SphereTable out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto d = bfs_distances(g, v);
    for (int x : d) {
      if (x == kUnreachable) continue;
      if (out.sigma.size() <= static_cast<std::size_t>(x)) out.sigma.resize(static_cast<std::size_t>(x) + 1, 0.0);
    }
    std::vector<double> count(out.sigma.size(), 0.0);
    for (int x : d)
      if (x != kUnreachable) count[static_cast<std::size_t>(x)] += 1.0;
    for (std::size_t i = 0; i < count.size(); ++i) out.sigma[i] = std::max(out.sigma[i], count[i]);
  }
  return out;
}

double poincare_upper_bound(double n, double p, const SphereTable& sigma, const CompressionTable& rho,
                            BoundForm form, double growth) {
  if (p < 1.0) throw std::invalid_argument("p must be >= 1");
  if (n < 1.0) throw std::invalid_argument("N must be >= 1");
  const double lead = std::pow(2.0, (2.0 * p - 1.0) / p);
  if (form == BoundForm::exponential) {
    double d = growth > 0.0 ? growth : sigma.growth();
    if (d <= 1.0) throw std::invalid_argument("exponential form needs growth D > 1");
    if (n < std::pow(d, 4.0)) return 6.0 * n;
    double c1 = lead * std::pow(d, 3.0 / p);
    double c2 = 1.0 / (2.0 * std::log(d));
    double r = rho.at(static_cast<long>(std::floor(c2 * std::log(n))));
    return r > 0.0 ? c1 * n / r : std::numeric_limits<double>::infinity();
  }
  long k = sigma.k_of(n);
  if (k < 0) throw std::invalid_argument("N is below sigma(0)");
  if (sigma.sigma.size() < 2) throw std::invalid_argument("sphere table must cover radius 1");
  if (static_cast<std::size_t>(k) >= sigma.sigma.size() && sigma.sigma.back() > 0)
    throw std::invalid_argument("sphere table does not cover K(N)");
  if (k > static_cast<long>(rho.size())) throw std::invalid_argument("compression table does not cover K(N)");
  double denom = 0.0;
  for (long i = 1; i <= k; ++i) denom += sigma.sigma[static_cast<std::size_t>(i)] * std::pow(rho.at(i), p);
  if (denom <= 0.0) return std::numeric_limits<double>::infinity();
  return lead * std::pow(sigma.sigma[1], 1.0 / p) * std::pow(std::pow(n, p + 1.0) / denom, 1.0 / p);
}

std::vector<std::vector<long>> rearrange_trace(const std::vector<long>& h0, const std::vector<long>& s) {
  if (h0.size() != s.size()) throw std::invalid_argument("h and s must have equal length");
  for (std::size_t i = 0; i < h0.size(); ++i)
    if (h0[i] < 0 || h0[i] > s[i]) throw std::invalid_argument("requires 0 <= h(n) <= s(n) at n = " + std::to_string(i));
  std::vector<std::vector<long>> trace{h0};
  std::vector<long> h = h0;
  const std::size_t len = h.size();
  while (true) {
    std::size_t i0 = 0;
    while (i0 < len && h[i0] == s[i0]) ++i0;
    if (i0 == len) break;
    bool rest_zero = true;
    for (std::size_t i = i0 + 1; i < len; ++i) rest_zero = rest_zero && h[i] == 0;
    if (rest_zero) break;
    long tail = 0;
    for (std::size_t i = i0; i < len; ++i) tail += h[i];
    if (tail < s[i0]) {
      h[i0] = tail;
      for (std::size_t i = i0 + 1; i < len; ++i) h[i] = 0;
      trace.push_back(h);
      break;
    }
    std::size_t j0 = i0;
    long acc = h[i0];
    while (acc < s[i0]) acc += h[++j0];
    long delta = acc - s[i0];
    h[i0] = s[i0];
    for (std::size_t i = i0 + 1; i < j0; ++i) h[i] = 0;
    h[j0] = delta;
    trace.push_back(h);
  }
  return trace;
}

std::vector<long> rearrange(const std::vector<long>& h, const std::vector<long>& s) {
  return rearrange_trace(h, s).back();
}

void ScaleFunction::validate() const {
  if (k.size() != l.size() || k.size() < 2) throw std::invalid_argument("scale function needs >= 2 pairs (k_s, l_s)");
  for (std::size_t s = 0; s + 1 < k.size(); ++s)
    if (!(k[s + 1] > k[s]) || !(l[s + 1] > l[s])) throw std::invalid_argument("k and l must be strictly increasing");
  if (k[0] * l[0] < 1.0) throw std::invalid_argument("k_0 l_0 must be >= 1");
}

double rho_delta(const ScaleFunction& scale, double x) {
  scale.validate();
  for (std::size_t s = 0; s + 1 < scale.k.size(); ++s) {
    if (x >= scale.k[s] * scale.l[s] && x < scale.k[s + 1] * scale.l[s]) return x / scale.l[s];
    if (x >= scale.k[s + 1] * scale.l[s] && x < scale.k[s + 1] * scale.l[s + 1]) return scale.k[s + 1];
  }
  throw std::out_of_range("x outside the covered range of the scale function");
}

MonotoneFunction MonotoneFunction::from_callable(std::function<double(double)> rho, double t_max) {
  MonotoneFunction m;
  m.rho_log_ = [rho = std::move(rho)](double u) { return rho(std::exp(u)); };
  m.u_max_ = std::log(t_max);
  return m;
}

MonotoneFunction MonotoneFunction::from_log_callable(std::function<double(double)> rho_log, double u_max) {
  MonotoneFunction m;
  m.rho_log_ = std::move(rho_log);
  m.u_max_ = u_max;
  return m;
}

MonotoneFunction MonotoneFunction::from_samples(std::vector<std::pair<double, double>> samples) {
  if (samples.size() < 2) throw std::invalid_argument("need at least two samples");
  std::sort(samples.begin(), samples.end());
  for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
    if (samples[i].first == samples[i + 1].first) throw std::invalid_argument("duplicate sample abscissa");
    if (samples[i + 1].second <= samples[i].second) throw std::invalid_argument("samples are not increasing");
  }
  if (samples.front().first < 1.0) throw std::invalid_argument("samples must lie in [1, inf)");
  MonotoneFunction m;
  m.u_min_ = std::log(samples.front().first);
  m.u_max_ = std::log(samples.back().first);
  m.rho_log_ = [samples = std::move(samples)](double u) {
    double t = std::exp(u);
    auto it = std::lower_bound(samples.begin(), samples.end(), std::make_pair(t, -std::numeric_limits<double>::infinity()));
    if (it == samples.begin()) return samples.front().second;
    if (it == samples.end()) return samples.back().second;
    auto prev = it - 1;
    double w = (t - prev->first) / (it->first - prev->first);
    return prev->second + w * (it->second - prev->second);
  };
  return m;
}

double MonotoneFunction::operator()(double t) const { return rho_log_(std::log(t)); }

double MonotoneFunction::log_inverse(double y) const {
  if (y <= rho_log_(u_min_)) return u_min_;
  if (y > rho_log_(u_max_)) throw std::out_of_range("value beyond the function's range");
  double lo = u_min_, hi = u_max_;
  for (int it = 0; it < 400 && hi - lo > 1e-13 * std::max(1.0, std::abs(hi)); ++it) {
    double mid = 0.5 * (lo + hi);
    if (rho_log_(mid) >= y) hi = mid;
    else lo = mid;
  }
  return hi;
}

ConditionReport check_condition(const MonotoneFunction& rho, ConditionKind kind, double alpha, double beta, double c,
                                const std::vector<double>& grid) {
  if (kind == ConditionKind::ssl) {
    alpha = 0.0;
    beta = 1.0;
  }
  if (!(beta > 0.0) || !(c > 0.0)) throw std::invalid_argument("beta and C must be positive");
  ConditionReport rep;
  for (double x : grid) {
    if (!(x > 0.0)) throw std::invalid_argument("grid points must be positive");
    double lhs = rho.log_inverse(std::pow(x, 1.0 / beta) / c);
    double rhs = rho.log_inverse(x) - (1.0 - alpha) * std::log(x);
    ++rep.checked;
    if (lhs > rhs + kConditionTolerance * std::max(1.0, std::abs(rhs)))
      rep.largest_violation = std::max(rep.largest_violation.value_or(x), x);
  }
  rep.pass = !rep.largest_violation;
  return rep;
}

std::vector<double> log_grid(double lo, double hi, std::size_t points) {
  if (!(lo > 0.0) || !(hi >= lo) || points < 2) throw std::invalid_argument("bad grid");
  std::vector<double> out;
  for (std::size_t i = 0; i < points; ++i)
    out.push_back(std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * static_cast<double>(i) /
                                              static_cast<double>(points - 1)));
  out.back() = hi;
  return out;
}

std::vector<std::pair<double, double>> read_two_column_csv(std::istream& in) {
  std::vector<std::pair<double, double>> rows;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ls(line);
    double a, b;
    if (!(ls >> a >> b)) {
      if (first) {
        first = false;
        continue;
      }
      throw std::invalid_argument("bad CSV row: " + line);
    }
    first = false;
    rows.emplace_back(a, b);
  }
  return rows;
}

void write_two_column_csv(std::ostream& out, const std::string& header,
                          const std::vector<std::pair<double, double>>& rows) {
  out << header << '\n';
  out.precision(17);
  for (const auto& [a, b] : rows) out << a << ',' << b << '\n';
}

}  // namespace isoprof
