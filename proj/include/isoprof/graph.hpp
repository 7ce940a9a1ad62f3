#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace isoprof {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

// Finite simple undirected graph. Edges are stored with first < second and
// sorted; adjacency lists are sorted.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t vertex_count, std::vector<Edge> edges,
        std::vector<std::string> labels = {});

  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  std::size_t max_degree() const;
  std::size_t min_degree() const;
  bool is_regular() const;
  bool has_edge(Vertex u, Vertex v) const;

  bool has_labels() const { return !labels_.empty(); }
  std::string label(Vertex v) const;
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
};

// Member flags over a host graph's vertices.
class VertexSubset {
 public:
  VertexSubset() = default;
  explicit VertexSubset(std::size_t n) : flags_(n, 0) {}
  static VertexSubset from_members(std::size_t n, const std::vector<Vertex>& members);

  std::size_t universe() const { return flags_.size(); }
  bool contains(Vertex v) const { return flags_[v] != 0; }
  void insert(Vertex v) { flags_[v] = 1; }
  void erase(Vertex v) { flags_[v] = 0; }
  std::size_t count() const;
  std::vector<Vertex> members() const;
  bool operator==(const VertexSubset&) const = default;

 private:
  std::vector<std::uint8_t> flags_;
};

// Block assignment whose blocks each induce a connected subgraph.
struct ConnectedPartition {
  std::vector<std::uint32_t> block_of;
  std::size_t block_count = 0;

  std::vector<std::vector<Vertex>> blocks() const;
  // Throws std::invalid_argument naming the first bad block.
  void validate(const Graph& g) const;
};

enum class FamilyKind { path, cycle, complete, hypercube, grid };

FamilyKind parse_family_kind(const std::string& name);
Graph build_family(FamilyKind kind, const std::vector<int>& params);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph hypercube_graph(int dim);
Graph grid_graph(int rows, int cols);

// Coordinates are mixed radix with the first coordinate most significant.
Graph cartesian_power(const Graph& g, int k);
// Original vertices keep indices 0..n-1; new vertices follow edge by edge.
Graph subdivide(const Graph& g, int kappa);

enum class BoundaryMode { external, internal, majored };

VertexSubset boundary(const Graph& g, const VertexSubset& a, BoundaryMode mode);
std::vector<Edge> edge_boundary(const Graph& g, const VertexSubset& a);

// Vertices of the result follow the increasing order of `members`.
Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& members);
std::vector<std::vector<Vertex>> connected_components(const Graph& g);
bool is_connected(const Graph& g);
std::vector<int> bfs_distances(const Graph& g, Vertex source);
std::vector<std::vector<int>> distance_matrix(const Graph& g);

Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);
Graph load_edge_list(const std::string& path);
void save_edge_list(const std::string& path, const Graph& g);

void write_partition_csv(std::ostream& out, const std::vector<std::uint32_t>& block_of);

}  // namespace isoprof
