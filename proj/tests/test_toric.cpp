#include "fixtures.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace wonder;
using namespace fixtures;

namespace {

Polynomial var(int n, int i) { return Polynomial::variable(n, i); }

std::set<Polynomial, bool (*)(const Polynomial&, const Polynomial&)> as_set(const std::vector<Polynomial>& v) {
  std::set<Polynomial, bool (*)(const Polynomial&, const Polynomial&)> out(
      +[](const Polynomial& a, const Polynomial& b) { return a.terms() < b.terms(); });
  for (auto& p : v) out.insert(p.terms().begin()->second < 0 ? -p : p);
  return out;
}

Polynomial random_poly(std::mt19937& rng, int n, int degree) {
  Polynomial p(n);
  for (int k = 0; k < 3; ++k) {
    Monomial m(std::size_t(n), 0);
    for (int d = 0; d < degree; ++d) ++m[rng() % unsigned(n)];
    p.add_term(m, Integer(int(rng() % 7) - 3));
  }
  return p;
}

}  // namespace

TEST_CASE("Danilov relations: spec examples") {
  DanilovRing r1(p1());
  CHECK(as_set(r1.stanley_reisner()) == as_set({var(2, 0) * var(2, 1)}));
  CHECK(as_set(r1.linear_relations()) == as_set({var(2, 0) - var(2, 1)}));

  DanilovRing r2(p1p1());
  CHECK(as_set(r2.stanley_reisner()) == as_set({var(4, 0) * var(4, 1), var(4, 2) * var(4, 3)}));
  CHECK(as_set(r2.linear_relations()) == as_set({var(4, 0) - var(4, 1), var(4, 2) - var(4, 3)}));

  DanilovRing r3(p2());
  CHECK(as_set(r3.stanley_reisner()) == as_set({var(3, 0) * var(3, 1) * var(3, 2)}));
  CHECK(as_set(r3.linear_relations()) == as_set({var(3, 0) - var(3, 2), var(3, 1) - var(3, 2)}));

  CHECK_THROWS_AS(DanilovRing(Fan(2, {vec({1, 0}), vec({1, 2})}, {{0, 1}})), Error);
}

TEST_CASE("normal_form: spec examples") {
  Fan flipped(1, {vec({-1}), vec({1})}, {{0}, {1}});
  DanilovRing r(flipped);
  CHECK(r.reference_cone() == Cone{0});
  CHECK(r.normal_form(var(2, 1)) == var(2, 1));
  CHECK(r.normal_form(var(2, 0)) == var(2, 1));
  CHECK(r.normal_form(var(2, 1) * var(2, 1)).is_zero());
  CHECK(r.normal_form(Polynomial(2)).is_zero());
}

TEST_CASE("h-vector oracle: spec examples") {
  CHECK(h_vector_oracle(p1p1()) == std::vector<long>{1, 2, 1});
  CHECK(h_vector_oracle(p2()) == std::vector<long>{1, 1, 1});
  CHECK(h_vector_oracle(p1()) == std::vector<long>{1, 1});
}

TEST_CASE("graded ranks match the h-vector on every fan") {
  for (auto& fan : {p1(), p2(), p1p1(), bl_p2(), p1p1_five(), eight_ray(), p1_cubed()}) {
    DanilovRing ring(fan);
    auto h = h_vector_oracle(fan);
    REQUIRE(int(h.size()) == fan.rank() + 1);
    for (int d = 0; d <= fan.rank() + 1; ++d) {
      long expected = d <= fan.rank() ? h[std::size_t(d)] : 0;
      CHECK(ring.graded_rank(d) == expected);
      CHECK(ring.torsion(d).empty());
    }
    for (std::size_t k = 0; k < h.size(); ++k) CHECK(h[k] == h[h.size() - 1 - k]);
    CHECK(h.back() == 1);
  }
}

TEST_CASE("top classes of max cones agree up to sign") {
  for (auto& fan : {p2(), p1p1(), bl_p2(), p1p1_five(), p1_cubed()}) {
    DanilovRing ring(fan);
    const int n = fan.ray_count();
    std::optional<Polynomial> first;
    for (auto& cone : fan.max_cones()) {
      Polynomial prod = Polynomial::constant(n, 1);
      for (int r : cone) prod = prod * var(n, r);
      Polynomial nf = ring.normal_form(prod);
      REQUIRE_FALSE(nf.is_zero());
      if (!first) {
        first = nf;
        continue;
      }
      CHECK((nf == *first || nf == -*first));
    }
  }
}

TEST_CASE("normal form is multiplicative") {
  std::mt19937 rng(8);
  for (auto& fan : {p2(), p1p1(), bl_p2()}) {
    DanilovRing ring(fan);
    const int n = fan.ray_count();
    for (int trial = 0; trial < 20; ++trial) {
      Polynomial x = random_poly(rng, n, 1), y = random_poly(rng, n, 1 + int(rng() % 2));
      CHECK(ring.normal_form(x * y) == ring.normal_form(ring.normal_form(x) * ring.normal_form(y)));
      CHECK(ring.normal_form(ring.normal_form(x)) == ring.normal_form(x));
    }
  }
}

TEST_CASE("restriction map: spec examples") {
  DanilovRing ring(p1p1());
  auto r = restriction_map(ring, Sublattice(2, int_matrix({{1, 0}})));
  CHECK(r.kernel_rays == std::vector<int>{0, 1});
  CHECK(r.target.graded_rank(0) == 1);
  CHECK(r.target.graded_rank(1) == 1);
  CHECK(r.target.graded_rank(2) == 0);
  CHECK(r.apply(var(4, 0)).is_zero());
  CHECK_FALSE(r.apply(var(4, 2)).is_zero());

  auto id = restriction_map(ring, Sublattice::zero(2));
  CHECK(id.kernel_rays.empty());
  CHECK(id.induced.fan == p1p1());

  auto pt = restriction_map(ring, Sublattice::full(2));
  CHECK(pt.target.graded_rank(0) == 1);
  CHECK(pt.target.graded_rank(1) == 0);
  IntMatrix k1 = restriction_kernel_slice(ring, pt, 1);
  CHECK(k1.rows() == ring.ideal().slice(1).quotient_rank() + long(ring.ideal().slice(1).basis.size()));
}

TEST_CASE("restriction kernel equals the ideal of killed rays") {
  struct Case {
    Fan fan;
    std::vector<Layer> arr;
  };
  for (auto& c : {Case{p1p1(), coordinate_lines()}, Case{eight_ray(), diagonal_lines()}, Case{p1_cubed(), coordinate_planes()}}) {
    DanilovRing ring(c.fan);
    auto poset = build_layer_poset(c.arr);
    for (auto& e : poset.elements()) {
      auto r = restriction_map(ring, e.gamma());
      for (int d = 0; d <= int(c.fan.rank()); ++d) CHECK(restriction_kernel_slice(ring, r, d) == killed_ideal_slice(ring, r, d));
    }
  }
}
