#include "wonder/building.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace wonder {

namespace {

std::vector<int> minimal_containing(int element, const std::vector<int>& candidates, const LayerPoset& poset) {
  std::vector<int> up;
  for (int g : candidates)
    if (poset.below(element, g)) up.push_back(g);
  std::vector<int> out;
  for (int g : up) {
    bool minimal = true;
    for (int h : up)
      if (h != g && poset.below(h, g)) minimal = false;
    if (minimal) out.push_back(g);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_antichain(const std::vector<int>& ids, const LayerPoset& poset) {
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = 0; j < ids.size(); ++j)
      if (i != j && poset.below(ids[i], ids[j])) return false;
  return true;
}

std::vector<std::vector<int>> subsets(const std::vector<int>& items) {
  std::vector<std::vector<int>> out;
  const std::size_t k = items.size();
  for (unsigned long mask = 0; mask < (1ul << k); ++mask) {
    std::vector<int> s;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (1ul << i)) s.push_back(items[i]);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<int> element_ids(const std::vector<int>& member_indices, const BuildingSet& b) {
  std::vector<int> out;
  for (int i : member_indices) out.push_back(b.members[std::size_t(i)]);
  std::sort(out.begin(), out.end());
  return out;
}

// Component of the intersection of an antichain whose factors are exactly
// the antichain, with additive codimension; -1 if there is none.
int factor_component(const std::vector<int>& antichain, const BuildingSet& b) {
  const LayerPoset& poset = *b.poset;
  if (antichain.size() == 1) return antichain.front();
  Eigen::Index total = 0;
  for (int g : antichain) total += poset.codim(g);
  for (int c : poset.meet(antichain))
    if (factors(c, b) == antichain && poset.codim(c) == total) return c;
  return -1;
}

}  // namespace

int BuildingSet::index_of(int element_id) const {
  auto it = std::find(members.begin(), members.end(), element_id);
  return it == members.end() ? -1 : int(it - members.begin());
}

Report validate_building(const std::vector<int>& candidate, const LayerPoset& poset) {
  Report report;
  for (int e = 0; e < poset.size(); ++e) {
    if (std::find(candidate.begin(), candidate.end(), e) != candidate.end()) continue;
    auto f = minimal_containing(e, candidate, poset);
    if (f.empty()) {
      report.fail("element " + std::to_string(e) + " lies in no member");
      continue;
    }
    auto comps = poset.meet(f);
    if (std::find(comps.begin(), comps.end(), e) == comps.end()) {
      report.fail("element " + std::to_string(e) + " is not a component of its factors' intersection");
      continue;
    }
    Eigen::Index total = 0;
    for (int g : f) total += poset.codim(g);
    if (total != poset.codim(e))
      report.fail("factors of element " + std::to_string(e) + " do not meet transversally");
  }
  return report;
}

Report validate_well_connected(const std::vector<int>& candidate, const LayerPoset& poset) {
  Report report;
  std::vector<int> chosen;
  std::function<void(std::size_t)> walk = [&](std::size_t start) {
    for (std::size_t i = start; i < candidate.size(); ++i) {
      chosen.push_back(candidate[i]);
      if (is_antichain(chosen, poset)) {
        auto comps = poset.meet(chosen);
        if (comps.size() > 1)
          for (int c : comps)
            if (std::find(candidate.begin(), candidate.end(), c) == candidate.end()) {
              std::string ids;
              for (int g : chosen) ids += (ids.empty() ? "" : ",") + std::to_string(g);
              report.fail("intersection of {" + ids + "} has component " + std::to_string(c) +
                          " outside the set");
            }
        // Supersets of an empty intersection stay empty.
        if (!comps.empty()) walk(i + 1);
      }
      chosen.pop_back();
    }
  };
  walk(0);
  return report;
}

std::vector<int> order_refining_inclusion(const std::vector<int>& members, const LayerPoset& poset) {
  std::vector<int> pending = members;
  std::sort(pending.begin(), pending.end());
  pending.erase(std::unique(pending.begin(), pending.end()), pending.end());
  std::vector<int> out;
  while (!pending.empty()) {
    auto next = std::find_if(pending.begin(), pending.end(), [&](int g) {
      for (int h : pending)
        if (h != g && poset.below(h, g) && !poset.below(g, h)) return false;
      return true;
    });
    if (next == pending.end()) throw Error(ErrorCode::CycleDetected, "inclusion relation has a cycle");
    out.push_back(*next);
    pending.erase(next);
  }
  return out;
}

BuildingSet make_building_set(std::shared_ptr<const LayerPoset> poset, const std::vector<int>& members) {
  for (int g : members)
    if (g < 0 || g >= poset->size()) throw Error(ErrorCode::NotBuilding, "member is not a poset element");
  auto b = validate_building(members, *poset);
  auto w = validate_well_connected(members, *poset);
  if (!b.passed) throw Error(ErrorCode::NotBuilding, b.messages.front());
  if (!w.passed) throw Error(ErrorCode::NotBuilding, "not well connected: " + w.messages.front());
  BuildingSet out;
  out.members = order_refining_inclusion(members, *poset);
  out.poset = std::move(poset);
  return out;
}

std::vector<int> factors(int element_id, const BuildingSet& building) {
  return minimal_containing(element_id, building.members, *building.poset);
}

std::vector<InducedMember> induced_family(const std::vector<Layer>& ordered) {
  std::vector<InducedMember> out;
  if (ordered.empty()) return out;
  const Layer& z = ordered.back();
  for (std::size_t i = 0; i + 1 < ordered.size(); ++i) {
    auto comps = intersect_layers({ordered[i], z});
    // Disconnected intersections contribute components already in G.
    if (comps.size() != 1) continue;
    bool seen = false;
    for (auto& h : out) seen = seen || h.layer == comps.front();
    if (!seen) out.push_back({comps.front(), int(i)});
  }
  return out;
}

std::vector<InducedMember> induced_building_on(int z_element, const BuildingSet& building) {
  if (building.members.empty() || building.members.back() != z_element)
    throw Error(ErrorCode::NotLast, "induced building needs the last member");
  std::vector<Layer> ordered;
  for (int i = 0; i < building.size(); ++i) ordered.push_back(building.layer(i));
  return induced_family(ordered);
}

bool is_nested(const std::vector<int>& members, const BuildingSet& building) {
  auto ids = element_ids(members, building);
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (auto& a : subsets(ids)) {
    if (a.size() < 2 || !is_antichain(a, *building.poset)) continue;
    if (factor_component(a, building) < 0) return false;
  }
  return true;
}

int nested_component(const std::vector<int>& members, const BuildingSet& building) {
  if (members.empty()) return -1;
  const LayerPoset& poset = *building.poset;
  auto ids = element_ids(members, building);
  std::vector<int> minimal;
  for (int g : ids) {
    bool is_min = true;
    for (int h : ids)
      if (h != g && poset.below(h, g)) is_min = false;
    if (is_min) minimal.push_back(g);
  }
  int c = factor_component(minimal, building);
  if (c < 0) throw Error(ErrorCode::NotNested, "members do not form a nested set");
  return c;
}

bool is_nested_plus(const NestedSet& s, const BuildingSet& building, const Fan& fan) {
  if (!is_nested(s.members, building)) return false;
  for (int r : s.rays)
    if (r < 0 || r >= fan.ray_count()) return false;
  if (!fan.is_cone(s.rays)) return false;
  int c = nested_component(s.members, building);
  if (c < 0) return true;
  const Layer& lambda = building.poset->element(c);
  for (int r : s.rays)
    if (!lambda.gamma().annihilates(fan.ray(r))) return false;
  return true;
}

std::vector<std::vector<int>> enumerate_nested(const BuildingSet& building) {
  std::vector<int> all;
  for (int i = 0; i < building.size(); ++i) all.push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& t : subsets(all))
    if (is_nested(t, building)) out.push_back(t);
  return out;
}

std::vector<NestedSet> enumerate_nested_plus(const BuildingSet& building, const Fan& fan) {
  std::vector<NestedSet> out;
  auto cones = fan.all_cones();
  for (auto& t : enumerate_nested(building))
    for (auto& c : cones) {
      NestedSet s{t, c};
      if (is_nested_plus(s, building, fan)) out.push_back(s);
    }
  return out;
}

}  // namespace wonder
