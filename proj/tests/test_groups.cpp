#include <doctest.h>

#include <random>
#include <sstream>

#include "isoprof/errors.hpp"
#include "isoprof/groups.hpp"
#include "oracles.hpp"

using namespace isoprof;

namespace {

DiagonalSpec klein_single() { return DiagonalSpec({{klein_four_group(), 0}}); }
DiagonalSpec klein_two_level() { return DiagonalSpec({{klein_four_group(), 0}, {klein_four_group(), 3}}); }

Generator tau() { return {Generator::Kind::tau, 0}; }
Generator gen_a(std::size_t i) { return {Generator::Kind::a, i}; }

DiagonalElement power_of_tau(const DiagonalSpec& spec, int n) {
  auto z = identity_element(spec);
  for (int i = 0; i < n; ++i) z = diagonal_apply(spec, z, tau());
  return z;
}

GroupErrorKind error_kind(const GroupTable& t, const std::vector<Element>& a, const std::vector<Element>& b) {
  try {
    validate_group(t, a, b);
  } catch (const GroupError& e) {
    return e.kind();
  }
  FAIL("expected a group error");
  return GroupErrorKind::bad_table;
}

}  // namespace

TEST_CASE("Klein group splits as A x B") {
  auto g = klein_four_group();
  CHECK(g.order() == 4);
  CHECK(g.quotient_order() == 4);
  for (Element x = 0; x < 4; ++x) {
    CHECK(g.mul(g.proj_a(x), g.proj_b(x)) == x);
    CHECK(g.mul(x, g.inv(x)) == g.identity());
  }
  CHECK(group_cayley_graph(g).edge_count() == 4);
}

TEST_CASE("group validation errors") {
  auto s3 = symmetric3_table();
  // (12) and (123) in lexicographic permutation order.
  try {
    validate_group(s3, {0, 1}, {0, 3, 4});
    FAIL("S3 should fail the quotient check");
  } catch (const GroupError& e) {
    CHECK(e.kind() == GroupErrorKind::quotient_mismatch);
    CHECK(std::string(e.what()).find("order 2") != std::string::npos);
  }

  CHECK(error_kind(cyclic_table(4), {0}, {0, 2}) == GroupErrorKind::not_generating);
  CHECK(error_kind(cyclic_table(4), {0, 1}, {0}) == GroupErrorKind::a_not_subgroup);
  CHECK(error_kind(cyclic_table(4), {0}, {0, 3}) == GroupErrorKind::b_not_subgroup);
  CHECK(error_kind({{0, 1, 2}, {1, 2, 0}, {2, 0, 2}}, {0}, {0}) == GroupErrorKind::non_associative);
  CHECK(error_kind({{0, 1}, {1, 5}}, {0}, {0}) == GroupErrorKind::bad_table);
  CHECK(error_kind({{1, 1}, {1, 1}}, {0}, {0}) == GroupErrorKind::no_identity);
}

TEST_CASE("cyclic groups with one side trivial are valid") {
  auto g = validate_group(cyclic_table(5), {0}, {0, 1, 2, 3, 4});
  CHECK(g.quotient_order() == 5);
  auto p = validate_group(direct_product_table(cyclic_table(2), cyclic_table(3)), {0, product_element(1, 0, 3)},
                          {0, product_element(0, 1, 3), product_element(0, 2, 3)});
  CHECK(p.order() == 6);
}

TEST_CASE("group file round trip") {
  std::stringstream s;
  write_group(s, klein_four_group());
  auto back = read_group(s);
  CHECK(back.table() == klein_four_group().table());
  CHECK(back.a_list() == klein_four_group().a_list());
  CHECK(back.b_list() == klein_four_group().b_list());

  auto file = load_group(ISOPROF_DATA_DIR "/klein4.group");
  CHECK(file.table() == klein_four_group().table());
  CHECK_THROWS_AS(load_group(ISOPROF_DATA_DIR "/s3_bad.group"), GroupError);

  std::istringstream truncated("order 2\ntable\n0 1\n");
  CHECK_THROWS(read_group(truncated));
}

TEST_CASE("diagonal spec validation") {
  auto k = klein_four_group();
  CHECK_THROWS_AS(DiagonalSpec({{k, 1}}), ValidationError);
  CHECK_THROWS_AS(DiagonalSpec({{k, 0}, {k, 2}, {k, 4}}), ValidationError);
  CHECK_NOTHROW(DiagonalSpec({{k, 0}, {k, 1}, {k, 3}}));
  auto z6 = validate_group(direct_product_table(cyclic_table(2), cyclic_table(3)), {0, product_element(1, 0, 3)},
                           {0, product_element(0, 1, 3), product_element(0, 2, 3)});
  CHECK_THROWS_AS(DiagonalSpec({{k, 0}, {z6, 1}}), ValidationError);

  auto spec = load_diagonal_spec(ISOPROF_DATA_DIR "/two_level.diag");
  CHECK(spec.level_count() == 2);
  CHECK(spec.level(1).k == 3);
}

TEST_CASE("generator actions") {
  auto spec = klein_two_level();
  auto id = identity_element(spec);
  auto t = diagonal_apply(spec, id, tau());
  CHECK(t.cursor == 1);
  for (const auto& l : t.lamps) CHECK(l.empty());

  auto aa = diagonal_apply(spec, diagonal_apply(spec, id, gen_a(1)), gen_a(1));
  CHECK(aa == id);

  // a writes at cursor - k_s on every level.
  auto z = diagonal_apply(spec, power_of_tau(spec, 3), gen_a(1));
  Element a = spec.level(0).group.a_list()[1];
  CHECK(z.lamp(0, 3, 0) == a);
  CHECK(z.lamp(1, 0, 0) == a);
  CHECK(z.lamp(1, 3, 0) == 0);

  // b writes at cursor + k_s.
  auto w = diagonal_apply(spec, id, {Generator::Kind::b, 1});
  CHECK(w.lamp(1, 3, 0) == spec.level(1).group.b_list()[1]);
  CHECK(generators(spec).size() == 4);
  CHECK(diagonal_apply(spec, t, {Generator::Kind::tau_inv, 0}) == id);
}

TEST_CASE("multiplication and inverses") {
  auto spec = klein_two_level();
  auto b = ball(spec, 4);
  auto id = identity_element(spec);
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<std::size_t> pick(0, b.elements.size() - 1);
  for (int i = 0; i < 200; ++i) {
    const auto& x = b.elements[pick(rng)];
    const auto& y = b.elements[pick(rng)];
    const auto& z = b.elements[pick(rng)];
    CHECK(multiply(spec, x, inverse(spec, x)) == id);
    CHECK(multiply(spec, multiply(spec, x, y), z) == multiply(spec, x, multiply(spec, y, z)));
    CHECK(multiply(spec, id, x) == x);
  }
  // Right multiplication by a generator element agrees with the action.
  for (std::size_t i = 0; i < b.elements.size(); i += 7)
    for (const auto& g : generators(spec))
      CHECK(multiply(spec, b.elements[i], diagonal_apply(spec, id, g)) == diagonal_apply(spec, b.elements[i], g));
}

TEST_CASE("balls") {
  auto spec = klein_single();
  auto b0 = ball(spec, 0);
  REQUIRE(b0.elements.size() == 1);
  CHECK(b0.elements[0] == identity_element(spec));

  auto oracle_sizes = oracle::klein_lamplighter_ball_sizes(6);
  std::size_t previous = 0;
  for (int r = 0; r <= 6; ++r) {
    auto b = ball(spec, r);
    CHECK(b.elements.size() == oracle_sizes[r]);
    CHECK(b.cayley.vertex_count() == b.elements.size());
    CHECK(b.elements.size() >= previous);
    previous = b.elements.size();
  }
  CHECK_THROWS_AS(ball(spec, 12, 100), BudgetExceeded);
}

TEST_CASE("range") {
  auto spec = klein_single();
  auto id = identity_element(spec);
  CHECK(range_of(spec, id, 4) == 0);
  CHECK(range_of(spec, power_of_tau(spec, 5), 8) == 5);
  CHECK(range_of(spec, diagonal_apply(spec, id, gen_a(1)), 4) == 0);

  // Lamps at 0 and 2 with the cursor back at 0 need the interval [0, 2].
  auto z = diagonal_apply(spec, power_of_tau(spec, 2), gen_a(1));
  z = diagonal_apply(spec, z, {Generator::Kind::tau_inv, 0});
  z = diagonal_apply(spec, z, {Generator::Kind::tau_inv, 0});
  z = diagonal_apply(spec, z, gen_a(1));
  CHECK(range_of(spec, z, 4) == 2);

  CHECK_THROWS(range_of(spec, power_of_tau(spec, 5), 3));
  auto u2 = range_ball(spec, 2);
  for (const auto& w : u2) CHECK(range_of(spec, w, 6) <= 2);
}

TEST_CASE("cocycle norms") {
  auto spec = klein_single();
  CocycleField field(spec, 1);
  CHECK(field.norm(identity_element(spec)) == 0.0);
  CHECK(field.norm(power_of_tau(spec, 5)) >= 2.0 / 3.0);
  CHECK(field.norm(power_of_tau(spec, 1)) == doctest::Approx(1.0));
  CHECK(field.norm(diagonal_apply(spec, identity_element(spec), gen_a(1))) == doctest::Approx(0.0));
  CHECK(cocycle_norm(spec, 1, power_of_tau(spec, 5)) == doctest::Approx(field.norm(power_of_tau(spec, 5))));
  CHECK(field.phi(identity_element(spec)) == 1.0);
  CHECK(field.phi(power_of_tau(spec, 2)) == 0.0);
}

TEST_CASE("cocycle is 1-Lipschitz for left multiplication by generators") {
  auto spec = klein_single();
  CocycleField field(spec, 1);
  auto b = ball(spec, 3);
  for (const auto& z : b.elements)
    for (const auto& g : generators(spec)) {
      auto s = diagonal_apply(spec, identity_element(spec), g);
      CHECK(sparse_distance(field.value(z), field.value(multiply(spec, s, z))) <= 1.0 + 1e-12);
    }
}

TEST_CASE("lamp graph embedding into the two-level product") {
  auto report = embed_lamp_graph(klein_two_level(), 1, 1);
  CHECK(report.image.size() == 576);
  CHECK(report.injective);
  CHECK(report.windows_disjoint);
  CHECK(report.violations.empty());
  CHECK(report.z_edges > 0);
  CHECK(report.a_edges > 0);
  CHECK(report.b_edges > 0);
}
