#include <doctest.h>

#include <random>
#include <sstream>

#include "isoprof/cheeger.hpp"
#include "isoprof/cuts.hpp"
#include "isoprof/errors.hpp"
#include "oracles.hpp"

using namespace isoprof;

namespace {

const Rational kHalf{1, 2};
const Rational kQuarter{1, 4};

}  // namespace

TEST_CASE("rational parsing and admissibility") {
  CHECK(Rational::parse("1/2") == kHalf);
  CHECK(Rational::parse("3") == Rational{3, 1});
  CHECK_THROWS(Rational::parse("0/2"));
  CHECK_THROWS(Rational::parse("x"));
  CHECK(kHalf.admits(4, 8));
  CHECK_FALSE(kHalf.admits(5, 8));
  CHECK(kQuarter.admits(3, 15));
  CHECK_FALSE(kQuarter.admits(4, 15));
}

TEST_CASE("exact cuts on named graphs") {
  auto p5 = cut(path_graph(5), kHalf, CutMode::exact);
  CHECK(p5.size == 1);
  CHECK(p5.cut_set == std::vector<Vertex>{2});
  CHECK(p5.exact);
  CHECK(cut(complete_graph(4), kHalf, CutMode::exact).size == 2);
  CHECK(cut(cycle_graph(8), kHalf, CutMode::exact).size == 2);
  CHECK(cut(Graph(1, {}), kHalf, CutMode::exact).size == 1);
}

TEST_CASE("exact cuts match the subset oracle") {
  std::mt19937_64 rng(23);
  std::vector<Graph> graphs{grid_graph(3, 4), hypercube_graph(3), subdivide(complete_graph(4), 1)};
  for (int i = 0; i < 6; ++i) graphs.push_back(oracle::random_connected_graph(8 + i, 0.25, rng));
  for (const auto& g : graphs)
    for (auto s : {kHalf, kQuarter, Rational{2, 3}}) {
      auto r = cut(g, s, CutMode::exact);
      CHECK(r.size == oracle::cut(g, s.num, s.den));
      CHECK(r.size == r.cut_set.size());
      CHECK(is_valid_cut(g, r.cut_set, s));
      CHECK(r.largest_component == largest_component_after(g, r.cut_set));
    }
}

TEST_CASE("heuristic cuts are valid and never beat the exact size") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 8; ++i) {
    auto g = oracle::random_connected_graph(10 + i, 0.2, rng);
    auto h = cut(g, kHalf, CutMode::heuristic);
    CHECK_FALSE(h.exact);
    CHECK(is_valid_cut(g, h.cut_set, kHalf));
    CHECK(h.size >= cut(g, kHalf, CutMode::exact).size);
  }
  auto big = grid_graph(8, 8);
  auto h = cut(big, kHalf, CutMode::heuristic);
  CHECK(is_valid_cut(big, h.cut_set, kHalf));
}

TEST_CASE("exact search budget is enforced") {
  CutOptions tight;
  tight.budget = 10;
  CHECK_THROWS_AS(cut(grid_graph(5, 5), kHalf, CutMode::exact, tight), BudgetExceeded);
}

TEST_CASE("iterated halving") {
  auto c8 = cycle_graph(8);
  auto once = iterated_halving_cut(c8, kHalf);
  CHECK(is_valid_cut(c8, once.cut_set, kHalf));
  CHECK(once.size == cut(c8, kHalf, CutMode::exact).size);

  auto p15 = path_graph(15);
  auto quarter = iterated_halving_cut(p15, kQuarter);
  CHECK(is_valid_cut(p15, quarter.cut_set, kQuarter));
  CHECK(quarter.size <= 3);
  CHECK(largest_component_after(p15, quarter.cut_set) <= 3);

  auto c12 = cycle_graph(12);
  auto sep = separation_profile_exact(c12, 12).rows.back().lower;
  auto c = iterated_halving_cut(c12, kQuarter);
  CHECK(is_valid_cut(c12, c.cut_set, kQuarter));
  CHECK(c.size <= 16.0 * sep);
}

TEST_CASE("connected subgraph enumeration") {
  // Connected induced subgraphs of P5 are its 15 intervals.
  std::size_t count = 0;
  for_each_connected_subgraph(path_graph(5), 5, 1000, [&](std::uint64_t) { ++count; });
  CHECK(count == 15);

  std::size_t small = 0;
  for_each_connected_subgraph(cycle_graph(6), 2, 1000, [&](std::uint64_t m) {
    CHECK(__builtin_popcountll(m) <= 2);
    ++small;
  });
  CHECK(small == 12);
  CHECK_THROWS_AS(for_each_connected_subgraph(complete_graph(10), 10, 50, [](std::uint64_t) {}), BudgetExceeded);
}

TEST_CASE("separation profiles") {
  auto p12 = separation_profile_exact(path_graph(12), 12);
  CHECK(p12.rows[0].lower == 1);
  for (std::size_t n = 2; n <= 12; ++n) CHECK(p12.rows[n - 1].lower == 1);

  auto c8 = separation_profile_exact(cycle_graph(8), 8);
  CHECK(c8.rows[7].lower == 2);
  for (std::size_t i = 1; i < c8.rows.size(); ++i) {
    CHECK(c8.rows[i].lower >= c8.rows[i - 1].lower);
    CHECK(c8.rows[i].exact);
    CHECK(c8.rows[i].n == i + 1);
  }
}

TEST_CASE("Poincare profile brackets") {
  auto g = grid_graph(3, 4);
  auto sep = separation_profile_exact(g, 8);
  auto pi = poincare_profile(g, 8, 1.0, ProfileMode::exact_small);
  for (std::size_t i = 1; i < 8; ++i) {
    CHECK(pi.rows[i].lower <= pi.rows[i].upper + 1e-12);
    CHECK(sep.rows[i].lower / 8.0 <= pi.rows[i].upper + 1e-12);
    CHECK(pi.rows[i].upper <= 4.0 * (g.max_degree() + 1.0) * sep.rows[i].lower + 1e-12);
  }

  std::vector<std::vector<Vertex>> family{{0, 1, 2, 3}, {0, 1, 4, 5}, {0, 1, 2, 4, 5, 6}};
  auto lower = poincare_profile(g, 8, 1.0, ProfileMode::witness_lower, family);
  for (std::size_t i = 0; i < 8; ++i) CHECK(lower.rows[i].lower <= pi.rows[i].upper + 1e-12);
  CHECK(lower.rows[5].witness == std::vector<Vertex>{0, 1, 2, 4, 5, 6});
}

TEST_CASE("Lp bracket contains the estimate") {
  for (const auto& g : {cycle_graph(6), path_graph(6), grid_graph(2, 3)})
    for (double p : {1.0, 2.0}) {
      auto b = lp_cheeger_bracket(g, p);
      LpOptions o;
      o.p = p;
      o.seed = 4;
      double est = cheeger_lp(g, o).value;
      CHECK(b.lower <= est + 1e-9);
      CHECK(b.lower <= b.upper);
    }
}

TEST_CASE("cut lower bound from the Cheeger constant") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 10; ++i) {
    auto g = oracle::random_connected_graph(8 + i % 6, 0.3, rng);
    double h = cheeger_combinatorial(g, CombinatorialMode::plain).value;
    CHECK(cut(g, kHalf, CutMode::exact).size >= 0.25 * h * g.vertex_count() - 1e-12);
  }
}

TEST_CASE("profile CSV") {
  std::ostringstream s;
  write_profile_csv(s, separation_profile_exact(path_graph(3), 3));
  CHECK(s.str().rfind("n,lower,upper,exact,witness\n", 0) == 0);
  CHECK(s.str().find("\n3,1,1,true,0;1;2\n") != std::string::npos);
}
