#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "isoprof/graph.hpp"
#include "isoprof/rational.hpp"

namespace isoprof {

struct CutResult {
  Rational epsilon;
  std::vector<Vertex> cut_set;
  std::size_t size = 0;
  bool exact = false;
  std::size_t largest_component = 0;  // after removing cut_set
};

enum class CutMode { exact, heuristic };

struct CutOptions {
  std::uint64_t budget = 200'000'000;  // candidate sets examined by the exact search
};

// Largest component size after deleting `removed`.
std::size_t largest_component_after(const Graph& g, const std::vector<Vertex>& removed);
bool is_valid_cut(const Graph& g, const std::vector<Vertex>& removed, const Rational& s);

CutResult cut(const Graph& g, const Rational& s, CutMode mode, const CutOptions& options = {});

// Cuts every component larger than the next halving target with an exact
// 1/2-cut until all components are at most s|V|.
CutResult iterated_halving_cut(const Graph& g, const Rational& s, const CutOptions& options = {});

struct ProfileRow {
  std::size_t n = 0;
  double lower = 0.0;
  double upper = 0.0;
  bool exact = false;
  std::vector<Vertex> witness;  // host vertices of the subgraph attaining the row
};

struct ProfileTable {
  std::vector<ProfileRow> rows;  // rows[i].n == i + 1
};

struct ProfileOptions {
  std::uint64_t max_subgraphs = 5'000'000;
  std::size_t max_subgraph_vertices = 24;
  CutOptions cut;
};

// Calls `visit(mask)` for every connected induced subgraph with at most
// n_max vertices (hosts of at most 64 vertices).
void for_each_connected_subgraph(const Graph& g, std::size_t n_max, std::uint64_t max_subgraphs,
                                 const std::function<void(std::uint64_t)>& visit);

ProfileTable separation_profile_exact(const Graph& g, std::size_t n_max, const ProfileOptions& options = {});

enum class ProfileMode { exact_small, witness_lower };

// Certified bracket for the sup-gradient constant h_p of a small graph, from
// the exhaustive subset scan (and the spectrum when p = 2).
struct LpBracket {
  double lower = 0.0;
  double upper = 0.0;
};
LpBracket lp_cheeger_bracket(const Graph& g, double p);

ProfileTable poincare_profile(const Graph& g, std::size_t n_max, double p, ProfileMode mode,
                              const std::vector<std::vector<Vertex>>& family = {},
                              const ProfileOptions& options = {});

void write_profile_csv(std::ostream& out, const ProfileTable& table);

}  // namespace isoprof
