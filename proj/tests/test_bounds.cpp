#include <doctest.h>

#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

#include "isoprof/bounds.hpp"
#include "isoprof/cuts.hpp"

using namespace isoprof;

namespace {

std::vector<std::vector<double>> grid_coordinates(int rows, int cols) {
  std::vector<std::vector<double>> f;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) f.push_back({static_cast<double>(r), static_cast<double>(c)});
  return f;
}

double weighted(const std::vector<long>& h, const std::vector<double>& rho) {
  double s = 0;
  for (std::size_t i = 0; i < h.size(); ++i) s += static_cast<double>(h[i]) * rho[i];
  return s;
}

}  // namespace

TEST_CASE("compression functions") {
  auto p = path_graph(9);
  std::vector<std::vector<double>> id;
  for (int i = 0; i < 9; ++i) id.push_back({static_cast<double>(i)});
  auto t = compression_function(p, id, 1.0);
  REQUIRE(t.size() == 8);
  for (long s = 1; s <= 8; ++s) CHECK(t.at(s) == s);
  CHECK(t.at(0) == 0.0);
  CHECK(t.lipschitz == 1.0);

  auto flat = compression_function(p, std::vector<std::vector<double>>(9, {3.0}), 2.0);
  for (long s = 1; s <= 8; ++s) CHECK(flat.at(s) == 0.0);

  auto grid = compression_function(grid_graph(5, 5), grid_coordinates(5, 5), 1.0);
  for (long s = 1; s <= 8; ++s) CHECK(grid.at(s) == doctest::Approx(s));

  std::vector<std::vector<double>> doubled;
  for (int i = 0; i < 9; ++i) doubled.push_back({2.0 * i});
  auto scaled = compression_function(p, doubled, 1.0);
  CHECK(scaled.lipschitz == 2.0);
  CHECK(scaled.rescale == 0.5);
  CHECK(scaled.at(3) == doctest::Approx(3.0));

  CHECK_THROWS(compression_function(p, id, 0.5));
  CHECK_THROWS(t.at(9));
}

TEST_CASE("compression tables are monotone and bounded by the Lipschitz constant") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> noise(0.0, 1.0);
  auto g = grid_graph(4, 4);
  std::vector<std::vector<double>> f;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) f.push_back({noise(rng), noise(rng)});
  auto t = compression_function(g, f, 2.0);
  for (std::size_t i = 1; i < t.size(); ++i) CHECK(t.rho[i] >= t.rho[i - 1]);
  CHECK(t.at(1) <= 1.0 + 1e-12);
}

TEST_CASE("sphere tables") {
  auto s = sphere_table(path_graph(7));
  CHECK(s.sigma[0] == 1);
  CHECK(s.sigma[1] == 2);
  CHECK(s.sigma[6] == 1);
  auto cube = sphere_table(hypercube_graph(4));
  CHECK(cube.sigma == std::vector<double>{1, 4, 6, 4, 1});
  SphereTable doubling{{1, 2, 4, 8, 16}};
  CHECK(doubling.k_of(16) == 3);
  CHECK(doubling.k_of(15) == 3);
  CHECK(doubling.k_of(14) == 2);
  CHECK(doubling.growth() == doctest::Approx(2.0));
}

TEST_CASE("general bound evaluation") {
  SphereTable sigma{{1, 2, 4, 8, 16, 32}};
  CompressionTable rho;
  rho.rho = {1, 2, 3, 4, 5};
  double b = poincare_upper_bound(16.0, 1.0, sigma, rho, BoundForm::general);
  CHECK(b == doctest::Approx(4.0 * 256.0 / 34.0).epsilon(1e-12));
  CHECK(std::abs(b - 30.12) <= 0.01);

  CompressionTable zero;
  zero.rho = {0, 0, 0, 0, 0};
  CHECK(std::isinf(poincare_upper_bound(16.0, 1.0, sigma, zero, BoundForm::general)));

  CompressionTable short_rho;
  short_rho.rho = {1};
  CHECK_THROWS(poincare_upper_bound(16.0, 1.0, sigma, short_rho, BoundForm::general));
}

TEST_CASE("exponential bound form") {
  SphereTable sigma{{1, 2, 4, 8, 16, 32, 64, 128}};
  CompressionTable rho;
  rho.rho = {1, 2, 3, 4, 5, 6, 7};
  // Below D^4 the 6N branch applies.
  CHECK(poincare_upper_bound(10.0, 1.0, sigma, rho, BoundForm::exponential, 2.0) == 60.0);
  double n = 100.0;
  double expected = 2.0 * 8.0 * n / rho.at(static_cast<long>(std::floor(std::log(n) / (2.0 * std::log(2.0)))));
  CHECK(poincare_upper_bound(n, 1.0, sigma, rho, BoundForm::exponential, 2.0) == doctest::Approx(expected));
  CHECK_THROWS(poincare_upper_bound(n, 1.0, sigma, rho, BoundForm::exponential, 1.0));
}

TEST_CASE("general bound dominates the exact profile on small hosts") {
  auto g = grid_graph(3, 4);
  auto rho = compression_function(g, grid_coordinates(3, 4), 1.0);
  auto sigma = sphere_table(g);
  auto pi = poincare_profile(g, 8, 1.0, ProfileMode::exact_small);
  for (const auto& row : pi.rows)
    CHECK(poincare_upper_bound(static_cast<double>(row.n), 1.0, sigma, rho, BoundForm::general) >= row.upper);
}

TEST_CASE("rearrangement") {
  std::vector<long> h{1, 2, 1, 3, 2, 3}, s{1, 2, 3, 4, 5, 6};
  auto trace = rearrange_trace(h, s);
  REQUIRE(trace.size() >= 2);
  CHECK(trace[1] == std::vector<long>{1, 2, 3, 1, 2, 3});
  auto out = rearrange(h, s);
  CHECK(out == std::vector<long>{1, 2, 3, 4, 2, 0});
  CHECK(std::accumulate(out.begin(), out.end(), 0L) == 12);

  std::vector<long> prefix{1, 2, 3, 0, 0, 0};
  CHECK(rearrange(prefix, s) == prefix);
  CHECK_THROWS(rearrange({2, 0}, {1, 1}));
  CHECK_THROWS(rearrange({1}, {1, 1}));
}

TEST_CASE("rearrangement never increases the weighted sum") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t len = 3 + trial % 8;
    std::vector<long> s(len), h(len);
    std::vector<double> rho(len);
    double r = 0;
    for (std::size_t i = 0; i < len; ++i) {
      s[i] = std::uniform_int_distribution<long>(0, 6)(rng);
      h[i] = std::uniform_int_distribution<long>(0, s[i])(rng);
      r += std::uniform_real_distribution<double>(0.0, 2.0)(rng);
      rho[i] = r;
    }
    auto trace = rearrange_trace(h, s);
    for (std::size_t i = 1; i < trace.size(); ++i)
      CHECK(weighted(trace[i], rho) <= weighted(trace[i - 1], rho) + 1e-9);
    auto out = trace.back();
    CHECK(std::accumulate(out.begin(), out.end(), 0L) == std::accumulate(h.begin(), h.end(), 0L));
    // Full prefix of s, then at most one partial entry, then zeros.
    std::size_t i = 0;
    while (i < len && out[i] == s[i]) ++i;
    for (std::size_t j = i + 1; j < len; ++j) CHECK(out[j] == 0);
  }
}

TEST_CASE("scale functions") {
  ScaleFunction f{{3, 9}, {2, 6}};
  CHECK_NOTHROW(f.validate());
  CHECK(rho_delta(f, 6) == doctest::Approx(3.0));
  CHECK(rho_delta(f, 18) == doctest::Approx(9.0));
  CHECK(rho_delta(f, 12) == doctest::Approx(6.0));
  CHECK_THROWS(rho_delta(f, 5));
  CHECK_THROWS(rho_delta(f, 54));
  CHECK_THROWS((ScaleFunction{{3, 2}, {2, 6}}.validate()));

  ScaleFunction longer{{2, 5, 11, 23}, {1, 3, 7, 15}};
  longer.validate();
  double prev_rho = 0, prev_ratio = 0;
  for (double x = longer.lower(); x < longer.upper(); x += 0.5) {
    double r = rho_delta(longer, x);
    CHECK(r >= prev_rho - 1e-12);
    CHECK(x / r >= prev_ratio - 1e-12);
    prev_rho = r;
    prev_ratio = x / r;
  }
}

TEST_CASE("monotone functions and inverses") {
  auto sq = MonotoneFunction::from_callable([](double t) { return std::sqrt(t); });
  CHECK(sq(16.0) == doctest::Approx(4.0));
  CHECK(std::exp(sq.log_inverse(3.0)) == doctest::Approx(9.0).epsilon(1e-9));

  auto samples = MonotoneFunction::from_samples({{1, 1}, {3, 2}, {5, 4}});
  CHECK(samples(2.0) == doctest::Approx(1.5));
  CHECK(std::exp(samples.log_inverse(3.0)) == doctest::Approx(4.0).epsilon(1e-9));
  CHECK_THROWS(MonotoneFunction::from_samples({{1, 2}, {2, 1}}));
  CHECK_THROWS(MonotoneFunction::from_samples({{0.5, 1}, {2, 2}}));
}

TEST_CASE("growth conditions") {
  auto grid = log_grid(1.0, 1e12, 200);
  CHECK(grid.size() == 200);
  CHECK(grid.front() == doctest::Approx(1.0));
  CHECK(grid.back() == doctest::Approx(1e12));

  auto sq = MonotoneFunction::from_callable([](double t) { return std::sqrt(t); });
  CHECK(check_condition(sq, ConditionKind::s_alpha_beta, 0.0, 2.0, 1.0, grid).pass);

  auto lg = MonotoneFunction::from_log_callable(
      [](double u) { return u > 30.0 ? u + std::log1p(std::exp(-u)) : std::log1p(std::exp(u)); }, 1e8);
  auto ssl = check_condition(lg, ConditionKind::ssl, 0.0, 1.0, 2.0, log_grid(10.0, 1e6, 100));
  CHECK(ssl.pass);
  CHECK(ssl.checked == 100);

  auto linear = MonotoneFunction::from_callable([](double t) { return t; });
  auto bad = check_condition(linear, ConditionKind::ssl, 0.0, 1.0, 2.0, log_grid(10.0, 1e6, 100));
  CHECK_FALSE(bad.pass);
  CHECK(bad.largest_violation.has_value());
}

TEST_CASE("two-column CSV") {
  std::stringstream s;
  write_two_column_csv(s, "t,rho", {{1, 0.5}, {2, 1.25}});
  auto rows = read_two_column_csv(s);
  REQUIRE(rows.size() == 2);
  CHECK(rows[1].first == 2.0);
  CHECK(rows[1].second == 1.25);
}
