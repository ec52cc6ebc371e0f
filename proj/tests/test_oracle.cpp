#include "fixtures.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace wonder;
using namespace fixtures;

TEST_CASE("keel_step: spec examples") {
  CHECK(keel_step({1, 2, 1}, {1}, 2) == BettiVector{1, 3, 1});
  CHECK(keel_step({1, 1, 1}, {1}, 2) == BettiVector{1, 2, 1});
  CHECK(keel_step({1, 5, 5, 1}, {1, 1}, 1) == BettiVector{1, 5, 5, 1});
  CHECK(keel_step({1, 3, 3, 1}, {1}, 3) == BettiVector{1, 4, 4, 1});
  CHECK_THROWS(keel_step({1}, {1}, 0));
}

TEST_CASE("keel_step keeps Euler characteristics") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    BettiVector y(1 + rng() % 5), z(1 + rng() % 3);
    for (auto& v : y) v = long(rng() % 6);
    for (auto& v : z) v = long(rng() % 6);
    int d = 1 + int(rng() % 3);
    auto out = keel_step(y, z, d);
    CHECK(std::accumulate(out.begin(), out.end(), 0L) ==
          std::accumulate(y.begin(), y.end(), 0L) + (d - 1) * std::accumulate(z.begin(), z.end(), 0L));
  }
}

TEST_CASE("model_betti: spec examples") {
  for (int k = 1; k <= 3; ++k) {
    auto m = model(p1(), points_on_c_star(k));
    CHECK(model_betti(p1(), m.building) == BettiVector{1, 1});
  }
  auto xy = model(p1p1(), coordinate_lines());
  CHECK(model_betti(p1p1(), xy.building) == BettiVector{1, 3, 1});
  auto diag = model(p1p1(), diagonal_lines());
  CHECK(diag.poset->size() == 4);
  CHECK(model_betti(p1p1(), diag.building) == BettiVector{1, 4, 1});
  auto planes = model(p1_cubed(), coordinate_planes());
  CHECK(model_betti(p1_cubed(), planes.building) == BettiVector{1, 7, 7, 1});
}

TEST_CASE("blowup plan bookkeeping") {
  auto xy = model(p1p1(), coordinate_lines());
  std::vector<Layer> layers;
  for (int i = 0; i < xy.building.size(); ++i) layers.push_back(xy.building.layer(i));
  auto plan = model_betti_plan(p1p1(), layers);
  CHECK(plan.start == BettiVector{1, 2, 1});
  REQUIRE(plan.steps.size() == 3);
  CHECK(plan.steps[0].codim == 2);
  CHECK(plan.steps[0].center == BettiVector{1});
  CHECK(plan.steps[0].after == BettiVector{1, 3, 1});
  CHECK(plan.steps[1].center.empty());
  CHECK(plan.result == BettiVector{1, 3, 1});
}

TEST_CASE("oracle is invariant under valid reorderings") {
  struct Case {
    Fan fan;
    std::vector<Layer> arr;
  };
  for (auto& c : {Case{p1p1(), coordinate_lines()}, Case{p1p1(), diagonal_lines()}, Case{p1_cubed(), coordinate_planes()},
                  Case{p1(), points_on_c_star(3)}}) {
    auto m = model(c.fan, c.arr);
    const auto expected = model_betti(c.fan, m.building);
    std::vector<int> order(std::size_t(m.building.size()));
    std::iota(order.begin(), order.end(), 0);
    int tried = 0;
    do {
      bool refines = true;
      for (std::size_t i = 0; i < order.size() && refines; ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j) {
          int a = m.building.members[std::size_t(order[i])], b = m.building.members[std::size_t(order[j])];
          if (m.poset->below(b, a) && a != b) refines = false;
        }
      if (!refines) continue;
      std::vector<Layer> layers;
      for (int i : order) layers.push_back(m.building.layer(i));
      CHECK(model_betti(c.fan, layers) == expected);
      ++tried;
    } while (std::next_permutation(order.begin(), order.end()) && tried < 40);
    CHECK(tried >= 2);
  }
}

TEST_CASE("verify: spec examples") {
  CHECK(verify({1, 3, 1}, {1, 3, 1}).passed);
  auto bad = verify({1, 3, 1}, {1, 2, 1});
  CHECK_FALSE(bad.passed);
  CHECK(bad.mismatched_degrees == std::vector<int>{2});
  CHECK_FALSE(verify({}, {}).passed);
  CHECK_FALSE(verify({1, 3, 1}, {1, 3, 1}, false).passed);
  CHECK(verify({1, 2, 1, 0}, {1, 2, 1}).passed);
  CHECK_FALSE(verify({1, 2, 3}, {1, 2, 3}).passed);
}

TEST_CASE("oracle agrees with the presentation on the golden examples") {
  struct Case {
    Fan fan;
    std::vector<Layer> arr;
  };
  for (auto& c : {Case{p1(), points_on_c_star(1)}, Case{p1(), points_on_c_star(2)}, Case{p1(), points_on_c_star(3)},
                  Case{p1p1(), coordinate_lines()}, Case{eight_ray(), diagonal_lines()}, Case{p1_cubed(), coordinate_planes()},
                  Case{p2(), {}}}) {
    auto m = model(c.fan, c.arr);
    auto p = assemble_model_ideal(m.ring, m.building);
    auto h = hilbert_function(p, int(c.fan.rank()) + 1);
    CHECK(verify(h.ranks, model_betti(c.fan, m.building), h.torsion_free()).passed);
  }
}
