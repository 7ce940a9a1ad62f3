#include "isoprof/constructions.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace isoprof {

Graph distorted_lamp_graph(const FiniteGroup& group, int k, int r) {
  if (k < 0 || r < 0) throw std::invalid_argument("distorted lamp graph needs k, r >= 0");
  LampLayout layout{group.order(), k, r};
  const std::size_t n = layout.vertex_count();
  if (n > 50'000'000) throw BudgetExceeded("distorted lamp graph too large");
  std::set<Edge> edges;
  auto add = [&edges](Vertex u, Vertex v) { edges.emplace(std::min(u, v), std::max(u, v)); };
  for (Vertex v = 0; v < n; ++v) {
    auto [coords, cursor] = layout.decode(v);
    if (cursor + 1 <= r + k) add(v, layout.index(coords, cursor + 1));
    for (int j = -r; j <= r; ++j) {
      auto& x = coords[static_cast<std::size_t>(j + r)];
      const Element orig = x;
      if (cursor == j + k)
        for (Element a : group.a_list()) {
          if (a == group.identity()) continue;
          x = group.mul(orig, a);
          add(v, layout.index(coords, cursor));
        }
      if (cursor == j - k)
        for (Element b : group.b_list()) {
          if (b == group.identity()) continue;
          x = group.mul(orig, b);
          add(v, layout.index(coords, cursor));
        }
      x = orig;
    }
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (Vertex v = 0; v < n; ++v) {
    auto [coords, cursor] = layout.decode(v);
    std::string s = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) s += (i ? "," : "") + std::to_string(coords[i]);
    labels.push_back(s + ";" + std::to_string(cursor) + ")");
  }
  return Graph(n, {edges.begin(), edges.end()}, std::move(labels));
}

CoarseningResult coarsen(const Graph& g, const ConnectedPartition& partition) {
  partition.validate(g);
  CoarseningResult out;
  std::set<Edge> edges;
  for (const auto& [u, v] : g.edges()) {
    Vertex bu = partition.block_of[u], bv = partition.block_of[v];
    if (bu != bv) edges.emplace(std::min(bu, bv), std::max(bu, bv));
  }
  out.graph = Graph(partition.block_count, {edges.begin(), edges.end()});
  auto blocks = partition.blocks();
  out.min_block = g.vertex_count();
  for (const auto& blk : blocks) {
    auto inner = boundary(g, VertexSubset::from_members(g.vertex_count(), blk), BoundaryMode::internal);
    out.anchoring.push_back(inner.count());
    out.min_block = std::min(out.min_block, blk.size());
    out.max_block = std::max(out.max_block, blk.size());
  }
  return out;
}

VertexSubset maximal_b_separated(const Graph& g, int b, const std::vector<Vertex>& scan_order) {
  if (b < 1) throw std::invalid_argument("separation b must be >= 1");
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> order = scan_order;
  if (order.empty())
    for (Vertex v = 0; v < n; ++v) order.push_back(v);
  if (order.size() != n) throw std::invalid_argument("scan order must be a permutation of the vertices");
  VertexSubset chosen(n);
  std::vector<int> near(n, kUnreachable);  // distance to the chosen set
  for (Vertex v : order) {
    if (near[v] < b) continue;
    chosen.insert(v);
    auto d = bfs_distances(g, v);
    for (Vertex u = 0; u < n; ++u) near[u] = std::min(near[u], d[u]);
  }
  return chosen;
}

bool is_b_separated(const Graph& g, const VertexSubset& s, int b) {
  auto members = s.members();
  for (Vertex y : members) {
    auto d = bfs_distances(g, y);
    for (Vertex z : members)
      if (z != y && d[z] < b) return false;
  }
  return true;
}

Graph b_rescaling(const Graph& g, const VertexSubset& s, int b) {
  if (!is_b_separated(g, s, b)) throw std::invalid_argument("subset is not b-separated");
  auto members = s.members();
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < members.size(); ++i) {
    auto d = bfs_distances(g, members[i]);
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (d[members[j]] < 2 * b) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    labels.push_back(g.label(members[i]));
  }
  return Graph(members.size(), std::move(edges), std::move(labels));
}

WeightedMetricGraph DiscretizationResult::metric(const Graph& host) const {
  WeightedMetricGraph z;
  z.measure = nu;
  for (Vertex y : centers) {
    auto d = bfs_distances(host, y);
    std::vector<double> row;
    for (Vertex c : centers) row.push_back(static_cast<double>(d[c]));
    z.distance.push_back(std::move(row));
  }
  return z;
}

DiscretizationResult scale_b_partition(const Graph& g, const VertexSubset& s, int b) {
  const std::size_t n = g.vertex_count();
  DiscretizationResult out;
  out.centers = s.members();
  if (out.centers.empty()) throw std::invalid_argument("empty center set");
  std::vector<std::vector<int>> dist;
  for (Vertex y : out.centers) dist.push_back(bfs_distances(g, y));
  out.partition.block_of.assign(n, 0);
  out.partition.block_count = out.centers.size();
  for (Vertex v = 0; v < n; ++v) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < out.centers.size(); ++i)
      if (dist[i][v] < dist[best][v]) best = i;
    if (dist[best][v] == kUnreachable) throw std::invalid_argument("vertex unreachable from every center");
    out.partition.block_of[v] = static_cast<std::uint32_t>(best);
  }
  out.nu.assign(out.centers.size(), 0.0);
  out.inner_radius.assign(out.centers.size(), kUnreachable);
  out.outer_radius.assign(out.centers.size(), 0);
  for (Vertex v = 0; v < n; ++v) {
    std::size_t i = out.partition.block_of[v];
    out.nu[i] += 1.0;
    out.outer_radius[i] = std::max(out.outer_radius[i], dist[i][v]);
  }
  for (std::size_t i = 0; i < out.centers.size(); ++i)
    for (Vertex v = 0; v < n; ++v)
      if (out.partition.block_of[v] != i && dist[i][v] != kUnreachable)
        out.inner_radius[i] = std::min(out.inner_radius[i], dist[i][v] - 1);
  out.b_inclusion = std::all_of(out.inner_radius.begin(), out.inner_radius.end(), [b](int x) { return x >= b; });
  out.outer_within_2b =
      std::all_of(out.outer_radius.begin(), out.outer_radius.end(), [b](int x) { return x <= 2 * b; });
  return out;
}

namespace {

// BFS parents with neighbors scanned in increasing order.
std::vector<Vertex> bfs_parents(const Graph& g, Vertex root) {
  std::vector<Vertex> parent(g.vertex_count(), static_cast<Vertex>(-1));
  std::deque<Vertex> queue{root};
  parent[root] = root;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u))
      if (parent[w] == static_cast<Vertex>(-1)) {
        parent[w] = u;
        queue.push_back(w);
      }
  }
  return parent;
}

}  // namespace

TransferResult bilip_cut_transfer(const Graph& source, const Graph& x, const std::vector<Vertex>& f, int kappa,
                                  const Rational& s, CutMode mode, const CutOptions& options) {
  if (f.size() != source.vertex_count()) throw std::invalid_argument("map size differs from the source order");
  if (!is_connected(x)) throw std::invalid_argument("target graph must be connected");
  for (Vertex v : f)
    if (v >= x.vertex_count()) throw std::invalid_argument("map value out of range");

  std::set<Vertex> verts(f.begin(), f.end());
  std::set<Edge> path_edges;
  for (const auto& [u, v] : source.edges()) {
    auto parent = bfs_parents(x, f[u]);
    auto d = bfs_distances(x, f[u]);
    if (d[f[v]] > kappa)
      throw std::invalid_argument("Lipschitz violation on edge " + std::to_string(u) + "-" + std::to_string(v) +
                                  ": distance " + std::to_string(d[f[v]]) + " > " + std::to_string(kappa));
    for (Vertex w = f[v]; w != f[u]; w = parent[w]) {
      verts.insert(w);
      path_edges.emplace(std::min(w, parent[w]), std::max(w, parent[w]));
    }
  }

  TransferResult out;
  out.image_vertices.assign(verts.begin(), verts.end());
  std::vector<Vertex> local(x.vertex_count(), static_cast<Vertex>(-1));
  for (std::size_t i = 0; i < out.image_vertices.size(); ++i) local[out.image_vertices[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (const auto& [a, b] : path_edges) edges.emplace_back(local[a], local[b]);
  out.image = Graph(out.image_vertices.size(), std::move(edges));
  out.image_cut = cut(out.image, s, mode, options);

  // Multi-source BFS from the image cut inside X.
  std::vector<int> near(x.vertex_count(), kUnreachable);
  std::deque<Vertex> queue;
  for (Vertex c : out.image_cut.cut_set) {
    near[out.image_vertices[c]] = 0;
    queue.push_back(out.image_vertices[c]);
  }
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : x.neighbors(u))
      if (near[w] == kUnreachable) {
        near[w] = near[u] + 1;
        queue.push_back(w);
      }
  }
  out.cut.epsilon = s;
  for (Vertex v = 0; v < source.vertex_count(); ++v)
    if (near[f[v]] <= kappa) out.cut.cut_set.push_back(v);
  out.cut.size = out.cut.cut_set.size();
  out.cut.exact = false;
  out.cut.largest_component = largest_component_after(source, out.cut.cut_set);
  out.valid = is_valid_cut(source, out.cut.cut_set, s);
  out.achieved = source.vertex_count() ? static_cast<double>(out.cut.largest_component) /
                                             static_cast<double>(source.vertex_count())
                                       : 0.0;

  std::vector<std::size_t> hits(x.vertex_count(), 0);
  for (Vertex p : f) ++hits[p];
  for (Vertex c = 0; c < x.vertex_count(); ++c) {
    auto d = bfs_distances(x, c);
    std::size_t m = 0;
    for (Vertex w = 0; w < x.vertex_count(); ++w)
      if (d[w] <= kappa) m += hits[w];
    out.ball_multiplicity = std::max(out.ball_multiplicity, m);
  }
  return out;
}

}  // namespace isoprof
