#include "isoprof/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace isoprof {

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges, std::vector<std::string> labels)
    : adj_(vertex_count), labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != vertex_count)
    throw std::invalid_argument("label count does not match vertex count");
  for (auto& e : edges) {
    if (e.first == e.second)
      throw std::invalid_argument("self-loop at vertex " + std::to_string(e.first));
    if (e.first >= vertex_count || e.second >= vertex_count)
      throw std::invalid_argument("edge endpoint out of range");
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("duplicate edge");
  edges_ = std::move(edges);
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

std::size_t Graph::max_degree() const {
  std::size_t d = 0;
  for (const auto& list : adj_) d = std::max(d, list.size());
  return d;
}

std::size_t Graph::min_degree() const {
  if (adj_.empty()) return 0;
  std::size_t d = adj_.front().size();
  for (const auto& list : adj_) d = std::min(d, list.size());
  return d;
}

bool Graph::is_regular() const { return max_degree() == min_degree(); }

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& list = adj_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::string Graph::label(Vertex v) const {
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

VertexSubset VertexSubset::from_members(std::size_t n, const std::vector<Vertex>& members) {
  VertexSubset s(n);
  for (Vertex v : members) {
    if (v >= n) throw std::invalid_argument("subset member out of range");
    s.insert(v);
  }
  return s;
}

std::size_t VertexSubset::count() const {
  return static_cast<std::size_t>(std::count(flags_.begin(), flags_.end(), 1));
}

std::vector<Vertex> VertexSubset::members() const {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < flags_.size(); ++v)
    if (flags_[v]) out.push_back(static_cast<Vertex>(v));
  return out;
}

std::vector<std::vector<Vertex>> ConnectedPartition::blocks() const {
  std::vector<std::vector<Vertex>> out(block_count);
  for (std::size_t v = 0; v < block_of.size(); ++v) out[block_of[v]].push_back(static_cast<Vertex>(v));
  return out;
}

void ConnectedPartition::validate(const Graph& g) const {
  if (block_of.size() != g.vertex_count())
    throw std::invalid_argument("partition does not cover the vertex set");
  for (auto b : block_of)
    if (b >= block_count) throw std::invalid_argument("block index out of range");
  auto bl = blocks();
  for (std::size_t i = 0; i < bl.size(); ++i) {
    if (bl[i].empty()) throw std::invalid_argument("block " + std::to_string(i) + " is empty");
    if (!is_connected(induced_subgraph(g, bl[i])))
      throw std::invalid_argument("block " + std::to_string(i) + " is not connected");
  }
}

FamilyKind parse_family_kind(const std::string& name) {
  if (name == "path") return FamilyKind::path;
  if (name == "cycle") return FamilyKind::cycle;
  if (name == "complete") return FamilyKind::complete;
  if (name == "hypercube") return FamilyKind::hypercube;
  if (name == "grid") return FamilyKind::grid;
  throw std::invalid_argument("unknown family: " + name);
}

Graph build_family(FamilyKind kind, const std::vector<int>& params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count)
      throw std::invalid_argument("family expects " + std::to_string(count) + " parameter(s)");
    for (int p : params)
      if (p < 1) throw std::invalid_argument("family size parameters must be >= 1");
  };
  switch (kind) {
    case FamilyKind::path: need(1); return path_graph(params[0]);
    case FamilyKind::cycle: need(1); return cycle_graph(params[0]);
    case FamilyKind::complete: need(1); return complete_graph(params[0]);
    case FamilyKind::hypercube: need(1); return hypercube_graph(params[0]);
    case FamilyKind::grid: need(2); return grid_graph(params[0], params[1]);
  }
  throw std::invalid_argument("unknown family");
}

Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, std::move(e));
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(e));
}

Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, std::move(e));
}

Graph hypercube_graph(int dim) {
  if (dim < 1 || dim > 20) throw std::invalid_argument("hypercube dimension must be in [1,20]");
  const Vertex n = Vertex{1} << dim;
  std::vector<Edge> e;
  for (Vertex v = 0; v < n; ++v)
    for (int b = 0; b < dim; ++b) {
      Vertex w = v ^ (Vertex{1} << b);
      if (v < w) e.emplace_back(v, w);
    }
  return Graph(n, std::move(e));
}

Graph grid_graph(int rows, int cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("grid needs positive sides");
  std::vector<Edge> e;
  auto id = [cols](int r, int c) { return static_cast<Vertex>(r * cols + c); };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) e.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) e.emplace_back(id(r, c), id(r + 1, c));
    }
  std::vector<std::string> labels;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) labels.push_back("(" + std::to_string(r) + "," + std::to_string(c) + ")");
  return Graph(static_cast<std::size_t>(rows) * cols, std::move(e), std::move(labels));
}

Graph cartesian_power(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("cartesian power needs k >= 1");
  const std::size_t base = g.vertex_count();
  std::size_t n = 1;
  for (int i = 0; i < k; ++i) n *= base;
  std::vector<std::size_t> weight(k);
  for (int c = k - 1, w = 1; c >= 0; --c, w *= static_cast<int>(base)) weight[c] = w;

  std::vector<Edge> e;
  std::vector<std::string> labels(n);
  for (std::size_t v = 0; v < n; ++v) {
    std::string lab = "(";
    for (int c = 0; c < k; ++c) {
      std::size_t coord = (v / weight[c]) % base;
      lab += (c ? "," : "") + g.label(static_cast<Vertex>(coord));
      for (Vertex w : g.neighbors(static_cast<Vertex>(coord)))
        if (w > coord) e.emplace_back(v, v + (w - coord) * weight[c]);
    }
    labels[v] = lab + ")";
  }
  return Graph(n, std::move(e), std::move(labels));
}

Graph subdivide(const Graph& g, int kappa) {
  if (kappa < 0) throw std::invalid_argument("subdivision count must be >= 0");
  std::size_t n = g.vertex_count();
  std::vector<Edge> e;
  std::vector<std::string> labels;
  for (std::size_t v = 0; v < n; ++v) labels.push_back(g.label(static_cast<Vertex>(v)));
  for (const auto& [u, v] : g.edges()) {
    Vertex prev = u;
    for (int i = 1; i <= kappa; ++i) {
      Vertex mid = static_cast<Vertex>(n++);
      labels.push_back(g.label(u) + "-" + g.label(v) + ":" + std::to_string(i));
      e.emplace_back(prev, mid);
      prev = mid;
    }
    e.emplace_back(prev, v);
  }
  return Graph(n, std::move(e), std::move(labels));
}

VertexSubset boundary(const Graph& g, const VertexSubset& a, BoundaryMode mode) {
  VertexSubset out(g.vertex_count());
  for (const auto& [u, v] : g.edges()) {
    if (a.contains(u) == a.contains(v)) continue;
    Vertex in = a.contains(u) ? u : v;
    Vertex outside = a.contains(u) ? v : u;
    if (mode != BoundaryMode::internal) out.insert(outside);
    if (mode != BoundaryMode::external) out.insert(in);
  }
  return out;
}

std::vector<Edge> edge_boundary(const Graph& g, const VertexSubset& a) {
  std::vector<Edge> out;
  for (const auto& e : g.edges())
    if (a.contains(e.first) != a.contains(e.second)) out.push_back(e);
  return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& members) {
  std::vector<Vertex> sorted = members;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::int64_t> index(g.vertex_count(), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] >= g.vertex_count()) throw std::invalid_argument("subset member out of range");
    index[sorted[i]] = static_cast<std::int64_t>(i);
  }
  std::vector<Edge> e;
  for (const auto& [u, v] : g.edges())
    if (index[u] >= 0 && index[v] >= 0) e.emplace_back(index[u], index[v]);
  std::vector<std::string> labels;
  for (Vertex v : sorted) labels.push_back(g.label(v));
  return Graph(sorted.size(), std::move(e), std::move(labels));
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<char> seen(g.vertex_count(), 0);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (Vertex w : g.neighbors(comp[i]))
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(g.vertex_count(), kUnreachable);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v))
      if (dist[w] == kUnreachable) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

std::vector<std::vector<int>> distance_matrix(const Graph& g) {
  std::vector<std::vector<int>> d;
  d.reserve(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) d.push_back(bfs_distances(g, v));
  return d;
}

Graph read_edge_list(std::istream& in) {
  long long n = -1, m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) throw std::invalid_argument("edge list: bad header");
  std::vector<Edge> e;
  for (long long i = 0; i < m; ++i) {
    long long u, v;
    if (!(in >> u >> v)) throw std::invalid_argument("edge list: truncated at edge " + std::to_string(i));
    if (u < 0 || v < 0) throw std::invalid_argument("edge list: negative index");
    e.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return Graph(static_cast<std::size_t>(n), std::move(e));
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return read_edge_list(in);
}

void save_edge_list(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  write_edge_list(out, g);
}

void write_partition_csv(std::ostream& out, const std::vector<std::uint32_t>& block_of) {
  out << "vertex,block\n";
  for (std::size_t v = 0; v < block_of.size(); ++v) out << v << ',' << block_of[v] << '\n';
}

}  // namespace isoprof
