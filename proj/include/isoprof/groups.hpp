#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "isoprof/errors.hpp"
#include "isoprof/graph.hpp"

namespace isoprof {

using Element = std::uint32_t;
using GroupTable = std::vector<std::vector<Element>>;

enum class GroupErrorKind {
  bad_table,
  non_associative,
  no_identity,
  no_inverse,
  a_not_subgroup,
  b_not_subgroup,
  not_generating,
  quotient_mismatch,
};

class GroupError : public ValidationError {
 public:
  GroupError(GroupErrorKind kind, const std::string& what) : ValidationError(what), kind_(kind) {}
  GroupErrorKind kind() const { return kind_; }

 private:
  GroupErrorKind kind_;
};

// Multiplication-table group with designated subgroups A and B such that
// A x B is the quotient by the normal closure of [A,B].
class FiniteGroup {
 public:
  std::size_t order() const { return table_.size(); }
  Element identity() const { return identity_; }
  Element mul(Element x, Element y) const { return table_[x][y]; }
  Element inv(Element x) const { return inverse_[x]; }
  const GroupTable& table() const { return table_; }

  // Declared order; position i is the abstract generator a(i) (resp. b(i)).
  const std::vector<Element>& a_list() const { return a_; }
  const std::vector<Element>& b_list() const { return b_; }
  bool in_a(Element x) const { return a_pos_[x] >= 0; }
  bool in_b(Element x) const { return b_pos_[x] >= 0; }
  int a_index(Element x) const { return a_pos_[x]; }
  int b_index(Element x) const { return b_pos_[x]; }

  // The unique (a, b) in A x B with ab in xN.
  Element proj_a(Element x) const { return proj_a_[x]; }
  Element proj_b(Element x) const { return proj_b_[x]; }
  std::size_t quotient_order() const { return quotient_order_; }

  friend FiniteGroup validate_group(const GroupTable&, const std::vector<Element>&, const std::vector<Element>&);

 private:
  GroupTable table_;
  Element identity_ = 0;
  std::vector<Element> inverse_;
  std::vector<Element> a_, b_;
  std::vector<int> a_pos_, b_pos_;
  std::vector<Element> proj_a_, proj_b_;
  std::size_t quotient_order_ = 0;
};

FiniteGroup validate_group(const GroupTable& table, const std::vector<Element>& a, const std::vector<Element>& b);

GroupTable cyclic_table(std::size_t n);
GroupTable direct_product_table(const GroupTable& left, const GroupTable& right);
// Permutations of {0,1,2} in lexicographic order.
GroupTable symmetric3_table();
// Index of the product element (x, y) in direct_product_table.
inline Element product_element(Element x, Element y, std::size_t right_order) {
  return static_cast<Element>(x * right_order + y);
}

// Z2 x Z2 with A = <(1,0)> and B = <(0,1)>.
FiniteGroup klein_four_group();

// Text format:
//   order n
//   table            (n rows of n entries)
//   A i0 i1 ...
//   B j0 j1 ...
FiniteGroup read_group(std::istream& in);
FiniteGroup load_group(const std::string& path);
void write_group(std::ostream& out, const FiniteGroup& g);

// Cayley graph of the group with respect to (A u B) minus the identity.
Graph group_cayley_graph(const FiniteGroup& g);

struct DiagonalLevel {
  FiniteGroup group;
  int k = 0;
};

class DiagonalSpec {
 public:
  explicit DiagonalSpec(std::vector<DiagonalLevel> levels);
  const std::vector<DiagonalLevel>& levels() const { return levels_; }
  std::size_t level_count() const { return levels_.size(); }
  const DiagonalLevel& level(std::size_t s) const { return levels_[s]; }

 private:
  std::vector<DiagonalLevel> levels_;
};

// Each line: "<group file> <k>"; paths are relative to the spec file.
DiagonalSpec load_diagonal_spec(const std::string& path);

struct DiagonalElement {
  int cursor = 0;
  // Per level: (position, value) sorted by position, identity entries omitted.
  std::vector<std::vector<std::pair<int, Element>>> lamps;

  Element lamp(std::size_t level, int position, Element identity) const;
  void set_lamp(std::size_t level, int position, Element value, Element identity);
  bool operator==(const DiagonalElement&) const = default;
};

struct DiagonalElementHash {
  std::size_t operator()(const DiagonalElement& z) const;
};

std::string to_string(const DiagonalElement& z);

struct Generator {
  enum class Kind { a, b, tau, tau_inv };
  Kind kind = Kind::tau;
  std::size_t index = 0;  // position in the A or B list
};

DiagonalElement identity_element(const DiagonalSpec& spec);
// Non-identity A and B generators in list order, then tau, tau^-1.
std::vector<Generator> generators(const DiagonalSpec& spec);
DiagonalElement diagonal_apply(const DiagonalSpec& spec, const DiagonalElement& z, const Generator& gen);
// (f, i)(g, j) = (h, i + j) with h(x) = f(x) g(x - i), levelwise.
DiagonalElement multiply(const DiagonalSpec& spec, const DiagonalElement& x, const DiagonalElement& y);
DiagonalElement inverse(const DiagonalSpec& spec, const DiagonalElement& z);

struct BallResult {
  std::vector<DiagonalElement> elements;  // BFS order
  std::vector<int> lengths;
  Graph cayley;
};

BallResult ball(const DiagonalSpec& spec, int radius, std::size_t budget = 2'000'000);

// Elements reachable from the identity with the cursor kept in [lo, hi].
std::vector<DiagonalElement> reachable_in_interval(const DiagonalSpec& spec, int lo, int hi,
                                                   std::size_t budget = 5'000'000);
int range_of(const DiagonalSpec& spec, const DiagonalElement& z, int window, std::size_t budget = 5'000'000);
// U_r = {z : range(z) <= r}.
std::vector<DiagonalElement> range_ball(const DiagonalSpec& spec, int r, std::size_t budget = 5'000'000);

using SparseVector = std::unordered_map<DiagonalElement, double, DiagonalElementHash>;

// Phi_j(z) = (phi - tau_z phi) / ||grad phi|| with phi = max(0, 1 - |i|/r) 1_{U_r},
// r = 2^j, and tau_z phi(h) = phi(h z^-1).
class CocycleField {
 public:
  CocycleField(const DiagonalSpec& spec, int j, std::size_t budget = 5'000'000);
  double phi(const DiagonalElement& w) const;
  double gradient_norm() const { return grad_norm_; }
  std::size_t support_size() const { return phi_.size(); }
  SparseVector value(const DiagonalElement& z) const;
  double norm(const DiagonalElement& z) const;

 private:
  const DiagonalSpec* spec_;
  int radius_;
  std::unordered_map<DiagonalElement, double, DiagonalElementHash> phi_;
  double grad_norm_ = 0.0;
};

double cocycle_norm(const DiagonalSpec& spec, int j, const DiagonalElement& z, std::size_t budget = 5'000'000);
double sparse_distance(const SparseVector& x, const SparseVector& y);

// Vertex encoding of the distorted lamp graph: coordinates x_{-r..r} in mixed
// radix (x_{-r} most significant), then the cursor in [-(r+k), r+k].
struct LampLayout {
  std::size_t order = 1;
  int k = 0;
  int r = 0;

  std::size_t cursor_count() const { return static_cast<std::size_t>(2 * (k + r) + 1); }
  std::size_t tuple_count() const;
  std::size_t vertex_count() const { return tuple_count() * cursor_count(); }
  Vertex index(const std::vector<Element>& coords, int cursor) const;
  std::pair<std::vector<Element>, int> decode(Vertex v) const;
};

struct EmbeddingReport {
  std::vector<DiagonalElement> image;
  bool injective = false;
  bool windows_disjoint = false;
  std::size_t z_edges = 0, a_edges = 0, b_edges = 0;
  std::vector<std::string> violations;
};

// Maps the level-s distorted lamp graph with parameter r into the diagonal product.
EmbeddingReport embed_lamp_graph(const DiagonalSpec& spec, std::size_t s, int r);

}  // namespace isoprof
