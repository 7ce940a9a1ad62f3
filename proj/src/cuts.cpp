#include "isoprof/cuts.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "bitgraph.hpp"
#include "isoprof/cheeger.hpp"
#include "isoprof/errors.hpp"
#include "isoprof/spectral.hpp"

namespace isoprof {

using detail::Mask;

Rational Rational::parse(const std::string& text) {
  Rational r;
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      r.num = std::stoll(text);
      r.den = 1;
    } else {
      r.num = std::stoll(text.substr(0, slash));
      r.den = std::stoll(text.substr(slash + 1));
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("bad fraction: " + text);
  }
  if (r.den <= 0 || r.num <= 0) throw std::invalid_argument("bad fraction: " + text);
  std::int64_t g = std::gcd(r.num, r.den);
  if (g > 1) {
    r.num /= g;
    r.den /= g;
  }
  return r;
}

std::size_t largest_component_after(const Graph& g, const std::vector<Vertex>& removed) {
  std::vector<char> dead(g.vertex_count(), 0), seen(g.vertex_count(), 0);
  for (Vertex v : removed) dead[v] = 1;
  std::size_t best = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (dead[s] || seen[s]) continue;
    std::size_t size = 0;
    stack.assign(1, s);
    seen[s] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      ++size;
      for (Vertex w : g.neighbors(v))
        if (!dead[w] && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    best = std::max(best, size);
  }
  return best;
}

bool is_valid_cut(const Graph& g, const std::vector<Vertex>& removed, const Rational& s) {
  return s.admits(largest_component_after(g, removed), g.vertex_count());
}

namespace {

void check_level(const Rational& s) {
  if (s.num <= 0 || s.num > s.den) throw std::invalid_argument("cut level must lie in (0,1]");
}

// Minimum vertex set whose removal leaves components of size <= limit,
// searched by increasing cardinality in lexicographic order.
Mask min_cut_mask(const std::vector<Mask>& adj, int limit, std::uint64_t budget) {
  const std::size_t n = adj.size();
  const Mask full = detail::full_mask(n);
  if (detail::components_within(adj, full, limit)) return 0;
  if (limit <= 0) return full;

  // Vertices of components that are already small never need removal.
  std::vector<unsigned> pool;
  for (Mask alive = full; alive;) {
    Mask comp = detail::component_of(adj, alive, static_cast<unsigned>(std::countr_zero(alive)));
    if (std::popcount(comp) > limit)
      for (Mask m = comp; m; m &= m - 1) pool.push_back(static_cast<unsigned>(std::countr_zero(m)));
    alive &= ~comp;
  }
  std::sort(pool.begin(), pool.end());
  const std::size_t p = pool.size();
  std::uint64_t examined = 0;
  for (std::size_t c = 1; c <= p; ++c) {
    std::vector<std::size_t> idx(c);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      Mask removed = 0;
      for (std::size_t i : idx) removed |= detail::bit(pool[i]);
      if (++examined > budget)
        throw BudgetExceeded("exact cut search exceeded " + std::to_string(budget) +
                             " candidate sets; use the heuristic mode");
      if (detail::components_within(adj, full & ~removed, limit)) return removed;
      std::size_t i = c;
      while (i > 0 && idx[i - 1] == p - c + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < c; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return full;
}

int component_limit(const Rational& s, std::size_t n) {
  return static_cast<int>((s.num * static_cast<std::int64_t>(n)) / s.den);
}

CutResult finish(const Graph& g, const Rational& s, std::vector<Vertex> removed, bool exact) {
  std::sort(removed.begin(), removed.end());
  CutResult r;
  r.epsilon = s;
  r.cut_set = std::move(removed);
  r.size = r.cut_set.size();
  r.exact = exact;
  r.largest_component = largest_component_after(g, r.cut_set);
  if (!s.admits(r.largest_component, g.vertex_count()))
    throw std::logic_error("internal error: produced an invalid cut");
  return r;
}

CutResult exact_cut(const Graph& g, const Rational& s, const CutOptions& options) {
  if (g.vertex_count() > 64)
    throw BudgetExceeded("exact cut supports at most 64 vertices; use the heuristic mode");
  auto adj = detail::adjacency_masks(g);
  Mask m = min_cut_mask(adj, component_limit(s, g.vertex_count()), options.budget);
  return finish(g, s, detail::mask_members(m), true);
}

CutResult heuristic_cut(const Graph& g, const Rational& s) {
  const std::size_t n = g.vertex_count();
  std::vector<char> removed(n, 0);
  auto removed_list = [&]() {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n; ++v)
      if (removed[v]) out.push_back(v);
    return out;
  };
  while (true) {
    auto rl = removed_list();
    std::vector<Vertex> alive;
    for (Vertex v = 0; v < n; ++v)
      if (!removed[v]) alive.push_back(v);
    Graph rest = induced_subgraph(g, alive);
    auto comps = connected_components(rest);
    const std::vector<Vertex>* big = nullptr;
    for (const auto& c : comps)
      if (!s.admits(c.size(), n) && (!big || c.size() > big->size())) big = &c;
    if (!big) break;

    std::vector<Vertex> host;  // component vertices in host numbering
    for (Vertex v : *big) host.push_back(alive[v]);
    Graph h = induced_subgraph(g, host);
    const std::size_t k = h.vertex_count();
    std::vector<Vertex> separator;
    if (k > 2) {
      auto fiedler = lambda2(h).witness_vector;
      std::vector<Vertex> order(k);
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return fiedler[a] < fiedler[b]; });
      std::vector<char> in_a(k, 0), in_s(k, 0);
      std::vector<int> count_a(k, 0);
      std::size_t s_size = 0;
      double best_score = std::numeric_limits<double>::infinity();
      std::size_t best_prefix = 0;
      for (std::size_t i = 0; i + 1 < k; ++i) {
        Vertex x = order[i];
        in_a[x] = 1;
        if (in_s[x]) {
          in_s[x] = 0;
          --s_size;
        }
        for (Vertex y : h.neighbors(x))
          if (!in_a[y] && count_a[y]++ == 0) {
            in_s[y] = 1;
            ++s_size;
          }
        std::size_t rest_size = k - (i + 1) - s_size;
        if (rest_size == 0 || s_size == 0) continue;
        double score = static_cast<double>(s_size) / static_cast<double>(std::min(i + 1, rest_size));
        if (score < best_score) {
          best_score = score;
          best_prefix = i + 1;
        }
      }
      if (best_prefix > 0) {
        std::vector<char> a(k, 0);
        for (std::size_t i = 0; i < best_prefix; ++i) a[order[i]] = 1;
        for (Vertex v = 0; v < k; ++v) {
          if (a[v]) continue;
          for (Vertex w : h.neighbors(v))
            if (a[w]) {
              separator.push_back(v);
              break;
            }
        }
      }
    }
    if (separator.empty()) {
      Vertex pick = 0;
      for (Vertex v = 0; v < k; ++v)
        if (h.degree(v) > h.degree(pick)) pick = v;
      separator.push_back(pick);
    }
    for (Vertex v : separator) removed[host[v]] = 1;
  }
  // Greedy pruning of redundant separator vertices.
  for (Vertex v = static_cast<Vertex>(n); v-- > 0;) {
    if (!removed[v]) continue;
    removed[v] = 0;
    if (!is_valid_cut(g, removed_list(), s)) removed[v] = 1;
  }
  return finish(g, s, removed_list(), false);
}

}  // namespace

CutResult cut(const Graph& g, const Rational& s, CutMode mode, const CutOptions& options) {
  check_level(s);
  return mode == CutMode::exact ? exact_cut(g, s, options) : heuristic_cut(g, s);
}

CutResult iterated_halving_cut(const Graph& g, const Rational& s, const CutOptions& options) {
  check_level(s);
  if (2 * s.num > s.den) throw std::invalid_argument("iterated halving needs s <= 1/2");
  const std::size_t n = g.vertex_count();
  const Rational half{1, 2};
  std::vector<char> removed(n, 0);
  auto removed_list = [&]() {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n; ++v)
      if (removed[v]) out.push_back(v);
    return out;
  };
  // After round k every component has at most n / 2^k vertices.
  for (int k = 1; !is_valid_cut(g, removed_list(), s); ++k) {
    if (k > 62) throw std::logic_error("iterated halving did not terminate");
    std::vector<Vertex> alive;
    for (Vertex v = 0; v < n; ++v)
      if (!removed[v]) alive.push_back(v);
    auto comps = connected_components(induced_subgraph(g, alive));
    const std::uint64_t target_den = std::uint64_t{1} << k;
    for (const auto& c : comps) {
      if (target_den * c.size() <= n) continue;
      std::vector<Vertex> host;
      for (Vertex v : c) host.push_back(alive[v]);
      auto inner = cut(induced_subgraph(g, host), half, CutMode::exact, options);
      for (Vertex v : inner.cut_set) removed[host[v]] = 1;
    }
  }
  return finish(g, s, removed_list(), false);
}

void for_each_connected_subgraph(const Graph& g, std::size_t n_max, std::uint64_t max_subgraphs,
                                 const std::function<void(std::uint64_t)>& visit) {
  auto adj = detail::adjacency_masks(g);
  const std::size_t n = g.vertex_count();
  std::uint64_t count = 0;
  std::function<void(Mask, Mask, Mask, Mask)> extend = [&](Mask sub, Mask ext, Mask closed, Mask higher) {
    if (++count > max_subgraphs)
      throw BudgetExceeded("connected subgraph enumeration exceeded " + std::to_string(max_subgraphs));
    visit(sub);
    if (static_cast<std::size_t>(std::popcount(sub)) >= n_max) return;
    while (ext) {
      auto w = static_cast<unsigned>(std::countr_zero(ext));
      ext &= ext - 1;
      Mask next_ext = ext | (adj[w] & ~closed & higher);
      extend(sub | detail::bit(w), next_ext, closed | adj[w] | detail::bit(w), higher);
    }
  };
  if (n_max == 0) return;
  for (unsigned v = 0; v < n; ++v) {
    Mask higher = ~((detail::bit(v) << 1) - 1);
    extend(detail::bit(v), adj[v] & higher, adj[v] | detail::bit(v), higher);
  }
}

namespace {

Graph mask_graph(const std::vector<Mask>& adj) {
  std::vector<Edge> e;
  for (std::size_t u = 0; u < adj.size(); ++u)
    for (Mask m = adj[u]; m; m &= m - 1) {
      auto v = static_cast<std::size_t>(std::countr_zero(m));
      if (u < v) e.emplace_back(u, v);
    }
  return Graph(adj.size(), std::move(e));
}

void prefix_max(ProfileTable& t) {
  for (std::size_t i = 1; i < t.rows.size(); ++i) {
    auto& cur = t.rows[i];
    const auto& prev = t.rows[i - 1];
    if (prev.lower > cur.lower) {
      cur.lower = prev.lower;
      cur.witness = prev.witness;
    }
    cur.upper = std::max(cur.upper, prev.upper);
    cur.exact = prev.exact && cur.exact && cur.upper - cur.lower <= 1e-12;
  }
}

}  // namespace

ProfileTable separation_profile_exact(const Graph& g, std::size_t n_max, const ProfileOptions& options) {
  const std::size_t n = g.vertex_count();
  n_max = std::min(n_max, n);
  if (n_max > options.max_subgraph_vertices)
    throw BudgetExceeded("separation profile limited to subgraphs of " +
                         std::to_string(options.max_subgraph_vertices) + " vertices");
  auto adj = detail::adjacency_masks(g);
  const Rational half{1, 2};
  ProfileTable t;
  t.rows.resize(n_max);
  for (std::size_t i = 0; i < n_max; ++i) {
    t.rows[i].n = i + 1;
    t.rows[i].exact = true;
  }
  std::vector<double> best(n_max + 1, -1.0);
  for_each_connected_subgraph(g, n_max, options.max_subgraphs, [&](Mask sub) {
    auto size = static_cast<std::size_t>(std::popcount(sub));
    auto local = detail::induced_masks(adj, sub);
    Mask c = min_cut_mask(local, component_limit(half, size), options.cut.budget);
    double value = std::popcount(c);
    if (value > best[size]) {
      best[size] = value;
      auto& row = t.rows[size - 1];
      row.lower = row.upper = value;
      row.witness = detail::mask_members(sub);
    }
  });
  prefix_max(t);
  return t;
}

LpBracket lp_cheeger_bracket(const Graph& g, double p) {
  const std::size_t n = g.vertex_count();
  LpBracket b;
  if (n <= 1 || !is_connected(g)) return b;
  if (n == 2) return {2.0, 2.0};
  auto scan = isoperimetric_scan(g);
  double maj = std::numeric_limits<double>::infinity();
  double upper = std::numeric_limits<double>::infinity();
  for (std::size_t m = 1; m < scan.min_majored.size(); ++m) {
    double bm = static_cast<double>(scan.min_majored[m]);
    maj = std::min(maj, bm / static_cast<double>(m));
    // Indicator of the best set of size m: ||grad 1_A||_p^p = |majored boundary|.
    double alpha = static_cast<double>(m) / static_cast<double>(n);
    double den = static_cast<double>(m) * std::pow(1.0 - alpha, p) + static_cast<double>(n - m) * std::pow(alpha, p);
    upper = std::min(upper, std::pow(bm, 1.0 / p) / std::pow(den, 1.0 / p));
  }
  b.lower = sup_gradient_lower_from_majored(maj, p, n);
  if (p == 2.0) {
    double l2 = lambda2(g).lambda2;
    b.lower = std::max(b.lower, std::sqrt(2.0 * std::max(0.0, l2 - kSpectralTolerance) / g.max_degree()));
    upper = std::min(upper, 2.0 * std::sqrt(l2 + kSpectralTolerance));
  }
  b.upper = upper;
  return b;
}

ProfileTable poincare_profile(const Graph& g, std::size_t n_max, double p, ProfileMode mode,
                              const std::vector<std::vector<Vertex>>& family, const ProfileOptions& options) {
  if (p < 1.0) throw std::invalid_argument("p must be >= 1");
  const std::size_t n = g.vertex_count();
  n_max = std::min(n_max, n);
  ProfileTable t;
  t.rows.resize(n_max);
  for (std::size_t i = 0; i < n_max; ++i) t.rows[i].n = i + 1;

  if (mode == ProfileMode::witness_lower) {
    for (auto& row : t.rows) row.upper = std::numeric_limits<double>::infinity();
    for (const auto& members : family) {
      Graph h = induced_subgraph(g, members);
      const std::size_t size = h.vertex_count();
      if (size == 0 || size > n_max) continue;
      double lower = 0.0;
      if (size <= kExhaustiveCheegerLimit) {
        lower = lp_cheeger_bracket(h, p).lower;
      } else if (p == 2.0 && is_connected(h)) {
        lower = std::sqrt(2.0 * std::max(0.0, lambda2(h).lambda2 - kSpectralTolerance) / h.max_degree());
      }
      auto& row = t.rows[size - 1];
      if (size * lower > row.lower) {
        row.lower = static_cast<double>(size) * lower;
        row.witness = members;
        std::sort(row.witness.begin(), row.witness.end());
      }
    }
    prefix_max(t);
    return t;
  }

  if (n_max > std::min(options.max_subgraph_vertices, kExhaustiveCheegerLimit))
    throw BudgetExceeded("exact Poincare profile limited to subgraphs of " +
                         std::to_string(std::min(options.max_subgraph_vertices, kExhaustiveCheegerLimit)) +
                         " vertices");
  auto adj = detail::adjacency_masks(g);
  for (auto& row : t.rows) row.exact = true;
  for_each_connected_subgraph(g, n_max, options.max_subgraphs, [&](Mask sub) {
    auto size = static_cast<std::size_t>(std::popcount(sub));
    auto b = lp_cheeger_bracket(mask_graph(detail::induced_masks(adj, sub)), p);
    auto& row = t.rows[size - 1];
    double lo = static_cast<double>(size) * b.lower, hi = static_cast<double>(size) * b.upper;
    if (lo > row.lower || row.witness.empty()) {
      row.lower = std::max(row.lower, lo);
      row.witness = detail::mask_members(sub);
    }
    row.upper = std::max(row.upper, hi);
  });
  for (auto& row : t.rows) row.exact = row.upper - row.lower <= 1e-12;
  prefix_max(t);
  return t;
}

void write_profile_csv(std::ostream& out, const ProfileTable& table) {
  out << "n,lower,upper,exact,witness\n";
  out.precision(12);
  for (const auto& row : table.rows) {
    out << row.n << ',' << row.lower << ',' << row.upper << ',' << (row.exact ? "true" : "false") << ',';
    for (std::size_t i = 0; i < row.witness.size(); ++i) out << (i ? ";" : "") << row.witness[i];
    out << '\n';
  }
}

}  // namespace isoprof
