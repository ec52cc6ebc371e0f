#include "fixtures.hpp"

#include <doctest.h>

#include <random>

using namespace wonder;
using namespace fixtures;

namespace {

std::vector<Polynomial> group(const ModelPresentation& p, RelationGroup g) {
  std::vector<Polynomial> out;
  for (auto& r : p.relations)
    if (r.group == g) out.push_back(r.poly);
  return out;
}

bool has(const std::vector<Polynomial>& v, const Polynomial& p) { return std::find(v.begin(), v.end(), p) != v.end(); }

struct XyModel {
  Model m;
  int pt, c1, c2;          // member indices
  int c1_id, c2_id;        // poset ids
};

XyModel xy_model() {
  XyModel x{model(p1p1(), coordinate_lines()), 0, 0, 0, 0, 0};
  const auto& poset = *x.m.poset;
  x.c1_id = poset.find(layer({{1, 0}}, {0}));
  x.c2_id = poset.find(layer({{0, 1}}, {0}));
  x.pt = x.m.building.index_of(poset.find(layer({{1, 0}, {0, 1}}, {0, 0})));
  x.c1 = x.m.building.index_of(x.c1_id);
  x.c2 = x.m.building.index_of(x.c2_id);
  return x;
}

Polynomial c(int r) { return Polynomial::variable(4, r); }

// Adds `delta[k]` to coefficient k of the lifting chosen for (member, component).
struct Perturbation {
  int member;
  int component;
  std::vector<Polynomial> delta;
};

PresentationOptions perturbed(std::vector<Perturbation> ps) {
  PresentationOptions o;
  o.lifting = [ps](int member, int component, const PolyInT& standard) {
    PolyInT out = standard;
    for (auto& p : ps)
      if (p.member == member && p.component == component)
        for (std::size_t k = 0; k < p.delta.size(); ++k) out[k] += p.delta[k];
    return out;
  };
  return o;
}

}  // namespace

TEST_CASE("P1 with one point") {
  auto m = model(p1(), points_on_c_star(1));
  auto p = assemble_model_ideal(m.ring, m.building);
  const int nv = p.total_vars();
  REQUIRE(nv == 3);
  Polynomial t1 = Polynomial::variable(nv, 2), cp = Polynomial::variable(nv, 0), cm = Polynomial::variable(nv, 1);
  auto tc = group(p, RelationGroup::TC);
  CHECK(tc.size() == 2);
  CHECK(has(tc, t1 * cp));
  CHECK(has(tc, t1 * cm));
  auto f = group(p, RelationGroup::F);
  REQUIRE(f.size() == 1);
  CHECK(f[0] == cm - t1);
  CHECK(group(p, RelationGroup::F0).empty());
  auto h = hilbert_function(p, 3);
  CHECK(h.ranks == std::vector<long>{1, 1, 0, 0});
  CHECK(h.torsion_free());
}

TEST_CASE("P1 with points at 1 and -1") {
  auto m = model(p1(), points_on_c_star(2));
  auto p = assemble_model_ideal(m.ring, m.building);
  const int nv = p.total_vars();
  auto f0 = group(p, RelationGroup::F0);
  REQUIRE(f0.size() == 1);
  CHECK(f0[0] == Polynomial::variable(nv, 2) * Polynomial::variable(nv, 3));
  CHECK(trim(hilbert_function(p, 2).ranks) == std::vector<long>{1, 1});
}

TEST_CASE("P1xP1 coordinate model") {
  auto x = xy_model();
  auto p = assemble_model_ideal(x.m.ring, x.m.building);
  const int nv = p.total_vars();
  Polynomial t_c1 = Polynomial::variable(nv, p.t_var(x.c1)), t_c2 = Polynomial::variable(nv, p.t_var(x.c2));
  CHECK(x.pt == 0);
  // F(pt, {c1, c2}) with M = pt: the lifting is 1
  bool found = false;
  for (auto& r : p.relations)
    if (r.group == RelationGroup::F && r.provenance.member == x.pt && r.provenance.subset.size() == 2) {
      CHECK(r.provenance.component == x.m.building.members[std::size_t(x.pt)]);
      CHECK(r.poly == t_c1 * t_c2);
      found = true;
    }
  CHECK(found);
  auto h = hilbert_function(p, 4);
  CHECK(h.ranks == std::vector<long>{1, 3, 1, 0, 0});
  CHECK(h.torsion_free());
  CHECK(p.dimension() == 2);
}

TEST_CASE("F(i, A) degrees") {
  for (auto arr : {coordinate_lines(), coordinate_planes()}) {
    Fan fan = arr.front().ambient_rank() == 2 ? p1p1() : p1_cubed();
    auto m = model(fan, arr);
    auto p = assemble_model_ideal(m.ring, m.building);
    for (auto& r : p.relations) {
      if (r.group != RelationGroup::F) continue;
      const Layer& g = m.building.layer(r.provenance.member);
      long mcodim = r.provenance.component < 0 ? 0 : m.poset->element(r.provenance.component).codim();
      CHECK(r.poly.homogeneous());
      CHECK(r.poly.degree() == int(g.codim() - mcodim) + int(r.provenance.subset.size()));
    }
  }
}

TEST_CASE("ideal comparison") {
  auto x = xy_model();
  auto p = assemble_model_ideal(x.m.ring, x.m.building);
  CHECK(ideal_equal_up_to(p, p, 3));
  auto s = assemble_stratum_ideal(x.m.ring, x.m.building, {{x.pt}, {}});
  CHECK_FALSE(ideal_equal_up_to(p, s, 3));
  auto other = model(p1(), points_on_c_star(1));
  auto q = assemble_model_ideal(other.ring, other.building);
  CHECK_THROWS_AS(ideal_equal_up_to(p, q, 2), Error);
}

TEST_CASE("lifting independence under kernel perturbations") {
  auto x = xy_model();
  auto standard = assemble_model_ideal(x.m.ring, x.m.building);
  std::vector<std::vector<Perturbation>> cases{
      {{x.pt, -1, {Polynomial(4), c(0)}}},
      {{x.pt, x.c1_id, {c(0)}}},
      {{x.pt, x.c2_id, {c(3)}}},
      {{x.pt, -1, {Polynomial(4), c(2) - Integer(2) * c(1)}}, {x.pt, x.c1_id, {Integer(3) * c(1)}}},
  };
  for (auto& pc : cases) {
    auto alt = assemble_model_ideal(x.m.ring, x.m.building, perturbed(pc));
    CHECK(ideal_equal_up_to(standard, alt, 3));
  }
  std::mt19937 rng(1234);
  auto coef = [&] { return Integer(int(rng() % 7) - 3); };
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<Perturbation> pc{
        {x.pt, -1, {Polynomial(4), coef() * c(0) + coef() * c(1) + coef() * c(2) + coef() * c(3)}},
        {x.pt, x.c1_id, {coef() * c(0) + coef() * c(1)}},
        {x.pt, x.c2_id, {coef() * c(2) + coef() * c(3)}},
    };
    auto alt = assemble_model_ideal(x.m.ring, x.m.building, perturbed(pc));
    CHECK(ideal_equal_up_to(standard, alt, 3));
  }
  // c_{e2} does not vanish on {x = 1}: not an admissible change
  auto wrong = assemble_model_ideal(x.m.ring, x.m.building, perturbed({{x.pt, x.c1_id, {c(2)}}}));
  CHECK_FALSE(ideal_equal_up_to(standard, wrong, 3));
}

TEST_CASE("bad inputs") {
  auto m = model(p1p1(), diagonal_lines());
  try {
    assemble_model_ideal(m.ring, m.building);
    FAIL("expected NotGood");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotGood);
  }
  auto x = xy_model();
  BuildingSet reversed = x.m.building;
  std::reverse(reversed.members.begin(), reversed.members.end());
  try {
    assemble_model_ideal(x.m.ring, reversed);
    FAIL("expected BadOrder");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BadOrder);
  }
}

TEST_CASE("strata: spec examples") {
  auto x = xy_model();
  auto model_p = assemble_model_ideal(x.m.ring, x.m.building);
  auto pt = assemble_stratum_ideal(x.m.ring, x.m.building, {{x.pt}, {}});
  CHECK(trim(hilbert_function(pt, 3).ranks) == std::vector<long>{1, 1});
  CHECK(group(pt, RelationGroup::StratumC).size() > 0);

  auto empty = assemble_stratum_ideal(x.m.ring, x.m.building, {});
  REQUIRE(empty.relations.size() == model_p.relations.size());
  for (std::size_t i = 0; i < empty.relations.size(); ++i) {
    CHECK(empty.relations[i].group == model_p.relations[i].group);
    CHECK(empty.relations[i].poly == model_p.relations[i].poly);
  }
  for (NestedSet bad : {NestedSet{{}, {0, 1}}, NestedSet{{x.c1, x.c2}, {}}, NestedSet{{x.c1}, {0}}}) {
    try {
      assemble_stratum_ideal(x.m.ring, x.m.building, bad);
      FAIL("expected NotNested");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotNested);
    }
  }
}

TEST_CASE("every stratum matches the Poincare-duality annihilator") {
  struct Case {
    Fan fan;
    std::vector<Layer> arr;
    bool all;
  };
  for (auto& cs : {Case{p1p1(), coordinate_lines(), true}, Case{eight_ray(), diagonal_lines(), true},
                   Case{p1(), points_on_c_star(3), true}, Case{p1_cubed(), coordinate_planes(), false}}) {
    auto m = model(cs.fan, cs.arr);
    auto full = assemble_model_ideal(m.ring, m.building);
    const int n = int(cs.fan.rank());
    auto sets = enumerate_nested_plus(m.building, cs.fan);
    int checked = 0;
    for (auto& s : sets) {
      if (s.members.empty() && s.rays.empty()) continue;
      if (!cs.all && s.members.size() + s.rays.size() > 1 && checked > 12) continue;
      auto st = assemble_stratum_ideal(m.ring, m.building, s);
      auto h = hilbert_function(st, n + 1);
      auto ranks = trim(h.ranks);
      CHECK(h.torsion_free());
      CHECK(int(ranks.size()) - 1 == n - int(s.members.size() + s.rays.size()));
      CHECK(ranks.back() == 1);
      for (int d = 0; d <= n; ++d) CHECK(presentation_slice(st, d) == stratum_annihilator_slice(full, s, d));
      ++checked;
    }
    CHECK(checked > 0);
  }
}
