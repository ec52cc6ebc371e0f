#pragma once

#include "wonder/oracle.hpp"
#include "wonder/presentation.hpp"

#include <memory>
#include <vector>

namespace fixtures {

using namespace wonder;

inline IntVector vec(std::vector<long long> x) { return int_row(x).transpose(); }

inline Fan p1() { return Fan(1, {vec({1}), vec({-1})}, {{0}, {1}}); }

inline Fan p1p1() {
  return Fan(2, {vec({1, 0}), vec({-1, 0}), vec({0, 1}), vec({0, -1})}, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

inline Fan p2() { return Fan(2, {vec({1, 0}), vec({0, 1}), vec({-1, -1})}, {{0, 1}, {1, 2}, {0, 2}}); }

// P^2 blown up at a torus-fixed point.
inline Fan bl_p2() {
  return Fan(2, {vec({1, 0}), vec({0, 1}), vec({-1, -1}), vec({1, 1})}, {{0, 3}, {1, 3}, {1, 2}, {0, 2}});
}

// P^1 x P^1 with cone(e1, e2) subdivided at (1,1).
inline Fan p1p1_five() {
  return Fan(2, {vec({1, 0}), vec({-1, 0}), vec({0, 1}), vec({0, -1}), vec({1, 1})},
             {{0, 4}, {2, 4}, {0, 3}, {1, 2}, {1, 3}});
}

// Every quadrant of P^1 x P^1 subdivided along the diagonals.
inline Fan eight_ray() {
  return Fan(2, {vec({1, 0}), vec({1, 1}), vec({0, 1}), vec({-1, 1}), vec({-1, 0}), vec({-1, -1}), vec({0, -1}), vec({1, -1})},
             {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {0, 7}});
}

inline Fan p1_cubed() {
  return Fan(3, {vec({1, 0, 0}), vec({-1, 0, 0}), vec({0, 1, 0}), vec({0, -1, 0}), vec({0, 0, 1}), vec({0, 0, -1})},
             {{0, 2, 4}, {0, 2, 5}, {0, 3, 4}, {0, 3, 5}, {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5}});
}

inline Layer layer(std::vector<std::vector<long long>> chars, std::vector<Rational> values) {
  return Layer::from_equations(int_matrix(chars), values);
}

inline std::vector<Layer> points_on_c_star(int m) {
  std::vector<Layer> out;
  const Rational at[] = {Rational(0), Rational(1, 2), Rational(1, 3)};
  for (int k = 0; k < m; ++k) out.push_back(layer({{1}}, {at[k]}));
  return out;
}

inline std::vector<Layer> coordinate_lines() { return {layer({{1, 0}}, {0}), layer({{0, 1}}, {0})}; }
inline std::vector<Layer> diagonal_lines() { return {layer({{1, 1}}, {0}), layer({{1, -1}}, {0})}; }
inline std::vector<Layer> coordinate_planes() {
  return {layer({{1, 0, 0}}, {0}), layer({{0, 1, 0}}, {0}), layer({{0, 0, 1}}, {0})};
}

struct Model {
  std::shared_ptr<const LayerPoset> poset;
  BuildingSet building;
  std::shared_ptr<const DanilovRing> ring;
};

inline std::vector<int> all_ids(const LayerPoset& p) {
  std::vector<int> ids;
  for (int i = 0; i < p.size(); ++i) ids.push_back(i);
  return ids;
}

inline Model model(const Fan& fan, const std::vector<Layer>& arrangement) {
  Model m;
  m.poset = std::make_shared<const LayerPoset>(build_layer_poset(arrangement));
  m.building = make_building_set(m.poset, all_ids(*m.poset));
  m.ring = std::make_shared<const DanilovRing>(fan);
  return m;
}

}  // namespace fixtures
