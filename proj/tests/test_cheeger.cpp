#include <doctest.h>

#include <cmath>
#include <random>

#include "isoprof/cheeger.hpp"
#include "isoprof/errors.hpp"
#include "isoprof/spectral.hpp"
#include "oracles.hpp"

using namespace isoprof;

namespace {

double ratio(const CheegerWitness& w) {
  return static_cast<double>(w.boundary_size) / static_cast<double>(w.set_size);
}

}  // namespace

TEST_CASE("combinatorial constants on named graphs") {
  auto k2 = cheeger_combinatorial(complete_graph(2), CombinatorialMode::plain);
  CHECK(k2.value == 1.0);
  CHECK(k2.exact);

  auto c8 = cycle_graph(8);
  CHECK(cheeger_combinatorial(c8, CombinatorialMode::plain).value == 0.5);
  CHECK(cheeger_combinatorial(c8, CombinatorialMode::majored).value == 1.0);
  CHECK(cheeger_combinatorial(c8, CombinatorialMode::edge).value == 0.5);

  CHECK(cheeger_combinatorial(Graph(1, {}), CombinatorialMode::plain).value == 0.0);
}

TEST_CASE("exhaustive constants match a subset oracle") {
  std::mt19937_64 rng(17);
  std::vector<Graph> graphs{grid_graph(3, 4), hypercube_graph(3), subdivide(complete_graph(4), 1), path_graph(11)};
  for (int i = 0; i < 6; ++i) graphs.push_back(oracle::random_connected_graph(9 + i, 0.2, rng));
  for (const auto& g : graphs) {
    auto plain = cheeger_combinatorial(g, CombinatorialMode::plain);
    auto maj = cheeger_combinatorial(g, CombinatorialMode::majored);
    auto edge = cheeger_combinatorial(g, CombinatorialMode::edge);
    CHECK(plain.value == doctest::Approx(oracle::cheeger(g, oracle::Count::external).value()));
    CHECK(maj.value == doctest::Approx(oracle::cheeger(g, oracle::Count::majored).value()));
    CHECK(edge.value == doctest::Approx(oracle::cheeger(g, oracle::Count::edge).value()));
    CHECK(ratio(plain) == plain.value);

    // The witness set attains the value.
    auto a = VertexSubset::from_members(g.vertex_count(), plain.set_witness);
    CHECK(2 * a.count() <= g.vertex_count());
    CHECK(static_cast<double>(boundary(g, a, BoundaryMode::external).count()) / a.count() == plain.value);
  }
}

TEST_CASE("combinatorial sandwich h <= majored <= (D+1) h") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    auto g = oracle::random_connected_graph(6 + i % 10, 0.25, rng);
    double h = cheeger_combinatorial(g, CombinatorialMode::plain).value;
    double hm = cheeger_combinatorial(g, CombinatorialMode::majored).value;
    CHECK(h <= hm + 1e-12);
    CHECK(hm <= (g.max_degree() + 1.0) * h + 1e-12);
  }
}

TEST_CASE("oversize graphs need the heuristic flag") {
  auto g = grid_graph(5, 5);
  CHECK_THROWS(cheeger_combinatorial(g, CombinatorialMode::plain));
  CombinatorialOptions o;
  o.allow_heuristic = true;
  o.seed = 3;
  auto w = cheeger_combinatorial(g, CombinatorialMode::plain, o);
  CHECK_FALSE(w.exact);
  auto a = VertexSubset::from_members(g.vertex_count(), w.set_witness);
  CHECK(static_cast<double>(boundary(g, a, BoundaryMode::external).count()) / a.count() == w.value);
}

TEST_CASE("isoperimetric scan minima") {
  auto scan = isoperimetric_scan(cycle_graph(8));
  for (std::size_t m = 1; m <= 4; ++m) {
    CHECK(scan.min_external[m] == 2);
    CHECK(scan.min_edge[m] == 2);
  }
  CHECK(scan.min_majored[1] == 3);
}

TEST_CASE("modified p = 2 constant is the spectral value") {
  LpOptions o;
  o.p = 2.0;
  o.gradient = Gradient::modified;
  CHECK(cheeger_lp(cycle_graph(4), o).value == doctest::Approx(2.0).epsilon(1e-9));
  auto g = grid_graph(2, 3);
  CHECK(cheeger_lp(g, o).value == doctest::Approx(std::sqrt(2.0 * lambda2(g).lambda2)).epsilon(1e-9));
}

TEST_CASE("Lp constants: witnesses, certificates and comparisons") {
  for (const auto& g : {cycle_graph(6), path_graph(5), complete_graph(4)}) {
    for (double p : {1.0, 2.0}) {
      LpOptions o;
      o.p = p;
      o.seed = 9;
      auto sup = cheeger_lp(g, o);
      REQUIRE(sup.kind == CheegerWitness::Kind::function);
      CHECK(lp_ratio(g, sup.function_witness, p, Gradient::sup_scale) == doctest::Approx(sup.value));
      REQUIRE(sup.certified_lower.has_value());
      CHECK(*sup.certified_lower <= sup.value + 1e-12);

      o.gradient = Gradient::modified;
      double mod = cheeger_lp(g, o).value;
      double d = static_cast<double>(g.max_degree());
      CHECK(std::pow(d, -1.0 / p) * mod <= sup.value * 1.05);
      CHECK(sup.value <= std::pow(2.0, (p - 1.0) / p) * mod * 1.05);
    }
  }
}

TEST_CASE("Lp estimates are deterministic per seed") {
  LpOptions o;
  o.p = 1.5;
  o.seed = 42;
  auto g = grid_graph(3, 3);
  CHECK(cheeger_lp(g, o).value == cheeger_lp(g, o).value);
}

TEST_CASE("vector-valued modified estimate matches the scalar one") {
  auto g = cycle_graph(6);
  LpOptions o;
  o.p = 1.5;
  o.gradient = Gradient::modified;
  o.seed = 2;
  double scalar = cheeger_lp(g, o).value;
  o.target_dim = 3;
  double vec = cheeger_lp(g, o).value;
  CHECK(vec == doctest::Approx(scalar).epsilon(0.05));
}

TEST_CASE("scale constants") {
  auto g = cycle_graph(7);
  auto z = WeightedMetricGraph::from_graph(g);
  std::vector<double> f{0, 1, 2, 3, 2, 1, 0.5};
  CHECK(scale_ratio(z, f, 1.0, 1.0) == doctest::Approx(lp_ratio(g, as_rows(f), 1.0, Gradient::sup_scale)));
  CHECK(scale_ratio(z, f, 1.0, 2.0) == doctest::Approx(lp_ratio(g, as_rows(f), 2.0, Gradient::sup_scale)));

  double previous = 0.0;
  for (double a : {1.0, 2.0, 3.0}) {
    double r = scale_ratio(z, f, a, 1.0);
    CHECK(r >= previous - 1e-12);
    previous = r;
    CHECK(scale_poincare_constant(z, a, 1.0).value <= 6.0);
  }
  CHECK(z.total_measure() == 7.0);
  CHECK(z.ball_measure(0, 2.0) == 5.0);
  CHECK(WeightedMetricGraph::from_graph(Graph(1, {})).size() == 1);
}

TEST_CASE("p-variance") {
  CHECK(p_variance({{1.0}, {1.0}, {1.0}}, 1.0) == 0.0);
  CHECK(p_variance({{0.0}, {2.0}}, 1.0) == doctest::Approx(1.0));
  CHECK(p_variance({{0.0}, {2.0}}, 2.0) == doctest::Approx(std::sqrt(2.0)));
  CHECK(centered_lp_norm({{0.0}, {2.0}}, 1.0) == doctest::Approx(2.0));
}

TEST_CASE("sup-gradient lower bound from the majored constant") {
  CHECK(sup_gradient_lower_from_majored(1.0, 1.0, 8) == doctest::Approx(0.5));
  CHECK(sup_gradient_lower_from_majored(1.0, 2.0, 8) == doctest::Approx(1.0 / 64.0));
}
