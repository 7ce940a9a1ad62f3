#pragma once

// Bitmask helpers for graphs with at most 64 vertices.

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "isoprof/graph.hpp"

namespace isoprof::detail {

using Mask = std::uint64_t;

inline Mask bit(unsigned v) { return Mask{1} << v; }

inline Mask full_mask(std::size_t n) { return n >= 64 ? ~Mask{0} : (bit(static_cast<unsigned>(n)) - 1); }

inline std::vector<Mask> adjacency_masks(const Graph& g) {
  if (g.vertex_count() > 64) throw std::invalid_argument("bitmask search supports at most 64 vertices");
  std::vector<Mask> adj(g.vertex_count(), 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= bit(v);
    adj[v] |= bit(u);
  }
  return adj;
}

inline Mask neighborhood(const std::vector<Mask>& adj, Mask set) {
  Mask out = 0;
  while (set) {
    out |= adj[std::countr_zero(set)];
    set &= set - 1;
  }
  return out;
}

// Component of `start` inside the vertex set `alive`.
inline Mask component_of(const std::vector<Mask>& adj, Mask alive, unsigned start) {
  Mask comp = bit(start), frontier = comp;
  while (frontier) {
    Mask next = neighborhood(adj, frontier) & alive & ~comp;
    comp |= next;
    frontier = next;
  }
  return comp;
}

inline int largest_component(const std::vector<Mask>& adj, Mask alive) {
  int best = 0;
  while (alive) {
    Mask comp = component_of(adj, alive, static_cast<unsigned>(std::countr_zero(alive)));
    best = std::max(best, std::popcount(comp));
    alive &= ~comp;
  }
  return best;
}

// True if every component of `alive` has at most `limit` vertices.
inline bool components_within(const std::vector<Mask>& adj, Mask alive, int limit) {
  if (std::popcount(alive) <= limit) return true;
  while (alive) {
    Mask comp = component_of(adj, alive, static_cast<unsigned>(std::countr_zero(alive)));
    if (std::popcount(comp) > limit) return false;
    alive &= ~comp;
  }
  return true;
}

inline std::vector<Vertex> mask_members(Mask m) {
  std::vector<Vertex> out;
  while (m) {
    out.push_back(static_cast<Vertex>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

// Adjacency masks of the subgraph induced by `set`, reindexed 0..|set|-1.
inline std::vector<Mask> induced_masks(const std::vector<Mask>& adj, Mask set) {
  std::vector<unsigned> members;
  for (Mask m = set; m; m &= m - 1) members.push_back(static_cast<unsigned>(std::countr_zero(m)));
  std::vector<Mask> out(members.size(), 0);
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j < members.size(); ++j)
      if (adj[members[i]] & bit(members[j])) out[i] |= bit(static_cast<unsigned>(j));
  return out;
}

}  // namespace isoprof::detail
