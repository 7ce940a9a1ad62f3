// Randomized invariants across modules. Every case runs from a fixed seed.
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "isoprof/cheeger.hpp"
#include "isoprof/constructions.hpp"
#include "isoprof/cuts.hpp"
#include "isoprof/spectral.hpp"
#include "oracles.hpp"

using namespace isoprof;

TEST_CASE("Cheeger inequalities on random regular-ish graphs") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 15; ++trial) {
    auto g = oracle::random_connected_graph(6 + trial % 9, 0.3, rng);
    double h = cheeger_combinatorial(g, CombinatorialMode::plain).value;
    double he = cheeger_combinatorial(g, CombinatorialMode::edge).value;
    double d = static_cast<double>(g.max_degree());
    double l2 = lambda2(g).lambda2;
    // Edge version holds without regularity.
    CHECK(he * he / (2.0 * d) <= l2 + 1e-9);
    CHECK(l2 <= 2.0 * he + 1e-9);
    CHECK(h <= he + 1e-12);
  }
}

TEST_CASE("spectral gap is positive exactly on connected graphs") {
  std::mt19937_64 rng(102);
  for (int trial = 0; trial < 10; ++trial) {
    auto g = oracle::random_connected_graph(8, 0.1, rng);
    CHECK(lambda2(g).lambda2 > 1e-9);
    std::vector<Edge> kept;
    for (auto e : g.edges())
      if (e.first != 0 && e.second != 0) kept.push_back(e);
    CHECK(std::abs(lambda2(Graph(8, kept)).lambda2) < 1e-9);
  }
}

TEST_CASE("cut sizes are monotone in the level") {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 10; ++trial) {
    auto g = oracle::random_connected_graph(10, 0.2, rng);
    std::size_t prev = g.vertex_count();
    for (auto s : {Rational{1, 5}, Rational{1, 4}, Rational{1, 3}, Rational{1, 2}, Rational{3, 4}}) {
      auto c = cut(g, s, CutMode::exact);
      CHECK(c.size <= prev);
      prev = c.size;
    }
  }
}

TEST_CASE("coarsening anchoring never exceeds block size") {
  std::mt19937_64 rng(104);
  auto g = grid_graph(4, 6);
  for (int trial = 0; trial < 10; ++trial) {
    int b = 1 + trial % 3;
    std::vector<Vertex> order(g.vertex_count());
    std::iota(order.begin(), order.end(), 0u);
    std::shuffle(order.begin(), order.end(), rng);
    auto s = maximal_b_separated(g, b, order);
    CHECK(is_b_separated(g, s, b));
    // Maximality: every vertex is within distance < b of a kept vertex.
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      auto d = bfs_distances(g, v);
      bool close = false;
      for (Vertex c : s.members()) close = close || d[c] < b;
      CHECK(close);
    }
    auto part = scale_b_partition(g, s, b);
    CHECK(part.outer_within_2b);
    auto c = coarsen(g, part.partition);
    for (std::size_t i = 0; i < c.anchoring.size(); ++i) CHECK(c.anchoring[i] <= part.nu[i]);
    CHECK(c.graph.vertex_count() == s.count());
    CHECK(is_connected(c.graph));
  }
}

TEST_CASE("subdivision scales distances between original vertices") {
  std::mt19937_64 rng(105);
  for (int trial = 0; trial < 6; ++trial) {
    auto g = oracle::random_connected_graph(7, 0.3, rng);
    int kappa = 1 + trial % 3;
    auto sub = subdivide(g, kappa);
    auto dg = distance_matrix(g);
    auto ds = distance_matrix(sub);
    for (Vertex u = 0; u < 7; ++u)
      for (Vertex v = 0; v < 7; ++v) CHECK(ds[u][v] == (kappa + 1) * dg[u][v]);
  }
}
