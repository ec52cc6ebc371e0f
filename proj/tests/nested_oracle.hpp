#pragma once

#include "wonder/building.hpp"

#include <algorithm>
#include <vector>

namespace fixtures {

using namespace wonder;

// Independent route to nestedness in G+: elements of the larger poset are
// pairs (torus layer, cone of rays in V_Gamma); the G+-factors of such a pair
// are the minimal members of G containing the layer plus the divisors of the
// cone's rays.  A set is nested iff every antichain of size >= 2 is the factor
// set of some component of its intersection.
inline bool oracle_nested_plus(const std::vector<int>& members, const std::vector<int>& rays, const BuildingSet& b,
                        const Fan& fan) {
  const int m = b.size();
  auto contains = [&](int i, int j) { return i == j || layer_inclusion(b.layer(i), b.layer(j)); };
  std::vector<int> items;  // members then rays offset by m
  for (int i : members) items.push_back(i);
  for (int r : rays) items.push_back(m + r);
  for (unsigned long mask = 1; mask < (1ul << items.size()); ++mask) {
    std::vector<int> tm, tr;
    for (std::size_t k = 0; k < items.size(); ++k)
      if (mask & (1ul << k)) (items[k] < m ? tm : tr).push_back(items[k] < m ? items[k] : items[k] - m);
    if (tm.size() + tr.size() < 2) continue;
    bool antichain = true;
    for (int i : tm)
      for (int j : tm)
        if (i != j && contains(i, j)) antichain = false;
    if (!antichain) continue;
    std::vector<Layer> ls;
    for (int i : tm) ls.push_back(b.layer(i));
    std::vector<Layer> comps = tm.empty() ? std::vector<Layer>{Layer::whole(fan.rank())} : intersect_layers(ls);
    Cone cone = tr;
    std::sort(cone.begin(), cone.end());
    if (!fan.is_cone(cone)) return false;
    bool found = false;
    for (auto& comp : comps) {
      bool in_v = true;
      for (int r : cone) in_v = in_v && comp.gamma().annihilates(fan.ray(r));
      if (!in_v) continue;
      std::vector<int> over;
      for (int j = 0; j < m; ++j)
        if (layer_inclusion(comp, b.layer(j))) over.push_back(j);
      std::vector<int> minimal;
      for (int j : over) {
        bool min = true;
        for (int k : over)
          if (k != j && contains(k, j)) min = false;
        if (min) minimal.push_back(j);
      }
      std::sort(tm.begin(), tm.end());
      if (minimal == tm) found = true;
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace fixtures
