#include "fixtures.hpp"

#include <doctest.h>

using namespace wonder;
using namespace fixtures;

namespace {

Polynomial var(int n, int i) { return Polynomial::variable(n, i); }
Polynomial one(int n) { return Polynomial::constant(n, 1); }

Polynomial top_class(const DanilovRing& ring) {
  Polynomial p = one(ring.nvars());
  for (int r : ring.fan().max_cones().front()) p = p * var(ring.nvars(), r);
  return ring.normal_form(p);
}

}  // namespace

TEST_CASE("divisor classes: spec examples") {
  CHECK(divisor_class_raw(int_row({1}), p1()) == var(2, 1));
  CHECK(divisor_class_raw(int_row({1, 0}), p1p1()) == var(4, 1));
  CHECK(divisor_class_raw(int_row({0, 0}), p1p1()).is_zero());
  DanilovRing ring(p2());
  // (1,-1) pairs -1 with e2 and 0 with -e1-e2
  CHECK(divisor_class(int_row({1, -1}), ring) == ring.normal_form(var(3, 1)));
}

TEST_CASE("absolute liftings: spec examples") {
  DanilovRing r1(p1());
  auto pt = lift_chern_absolute(layer({{1}}, {0}), r1);
  REQUIRE(pt.degree() == 1);
  CHECK(pt.coefficients[0] == r1.normal_form(var(2, 1)));
  CHECK(pt.coefficients[1] == one(2));

  DanilovRing r2(p1p1());
  auto x = lift_chern_absolute(layer({{1, 0}}, {0}), r2);
  REQUIRE(x.degree() == 1);
  CHECK(x.coefficients[0] == r2.normal_form(var(4, 1)));

  auto p = lift_chern_absolute(layer({{1, 0}, {0, 1}}, {0, 0}), r2);
  REQUIRE(p.degree() == 2);
  CHECK(p.coefficients[0] == r2.normal_form(var(4, 1) * var(4, 3)));
  CHECK(p.coefficients[1] == r2.normal_form(var(4, 1) + var(4, 3)));
  CHECK(p.coefficients[2] == one(4));
}

TEST_CASE("relative liftings: spec examples") {
  DanilovRing ring(p1p1());
  Layer pt = layer({{1, 0}, {0, 1}}, {0, 0});
  Layer x = layer({{1, 0}}, {0});
  auto rel = lift_chern_relative(pt, x, ring);
  CHECK(rel.basis.split_index == 1);
  REQUIRE(rel.degree() == 1);
  CHECK(rel.coefficients[0] == ring.normal_form(var(4, 3)));

  Layer whole = Layer::whole(2);
  auto same = lift_chern_relative(pt, whole, ring);
  CHECK(same.coefficients == lift_chern_absolute(pt, ring).coefficients);

  auto trivial = lift_chern_relative(x, x, ring);
  REQUIRE(trivial.degree() == 0);
  CHECK(trivial.coefficients[0] == one(4));

  CHECK_THROWS_AS(lift_chern_relative(x, pt, ring), Error);
  try {
    lift_chern_relative(x, layer({{0, 1}}, {0}), ring);
    FAIL("expected NotContained");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotContained);
  }
}

TEST_CASE("constant terms are nonzero and pair to the top class") {
  struct Case {
    Fan fan;
    std::vector<Layer> arr;
  };
  for (auto& c : {Case{p1p1(), coordinate_lines()}, Case{eight_ray(), diagonal_lines()}, Case{p1_cubed(), coordinate_planes()}}) {
    DanilovRing ring(c.fan);
    Polynomial top = top_class(ring);
    auto poset = build_layer_poset(c.arr);
    for (auto& g : poset.elements()) {
      auto lift = lift_chern_absolute(g, ring);
      CHECK(lift.degree() == g.codim());
      const Polynomial& constant = lift.coefficients[0];
      CHECK_FALSE(constant.is_zero());
      CHECK(constant.homogeneous());
      CHECK(constant.degree() == g.codim());
      // [G] times the class of a complementary orbit closure inside V_Gamma
      auto induced = induce_fan(c.fan, g.gamma());
      Polynomial orbit = one(ring.nvars());
      for (int r : induced.fan.max_cones().front()) orbit = orbit * var(ring.nvars(), induced.ray_map[std::size_t(r)]);
      Polynomial pairing = ring.normal_form(constant * orbit);
      CHECK((pairing == top || pairing == -top));
    }
  }
}

TEST_CASE("factorization coherence and degree bookkeeping") {
  DanilovRing ring(eight_ray());
  auto poset = build_layer_poset(diagonal_lines());
  for (auto& g : poset.elements())
    for (auto& m : poset.elements()) {
      if (!layer_inclusion(g, m)) continue;
      auto rel = lift_chern_relative(g, m, ring);
      CHECK(rel.degree() == g.codim() - m.codim());
      const auto& b = rel.basis;
      IntMatrix all = b.vectors, head = b.vectors.topRows(b.split_index), tail = b.vectors.bottomRows(b.vectors.rows() - b.split_index);
      PolyInT whole = chern_product(all, ring), first = chern_product(head, ring), rest = chern_product(tail, ring);
      CHECK(rest == rel.coefficients);
      const int n = ring.nvars();
      PolyInT product(first.size() + rest.size() - 1, Polynomial(n));
      for (std::size_t i = 0; i < first.size(); ++i)
        for (std::size_t j = 0; j < rest.size(); ++j) product[i + j] += first[i] * rest[j];
      for (auto& p : product) p = ring.normal_form(p);
      CHECK(product == whole);
      // Every basis used is equal-sign on the fan.
      CHECK(equal_sign_check(ring.fan(), b.vectors).passed);
    }
}

TEST_CASE("NoBasis when the fan is not good") {
  DanilovRing ring(p2());
  try {
    lift_chern_absolute(layer({{1, -1}}, {0}), ring);
    FAIL("expected NoBasis");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoBasis);
  }
}
