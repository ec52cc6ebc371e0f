#pragma once

#include "wonder/layers.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace wonder {

struct Report {
  bool passed = true;
  std::vector<std::string> messages;

  void fail(std::string message) {
    passed = false;
    messages.push_back(std::move(message));
  }
};

/// Ordered building set G_1..G_m over a layer poset.  Members are poset
/// element ids; positions in `members` are the 0-based member indices.
struct BuildingSet {
  std::shared_ptr<const LayerPoset> poset;
  std::vector<int> members;

  int size() const { return int(members.size()); }
  const Layer& layer(int index) const { return poset->element(members[std::size_t(index)]); }
  /// Member index of a poset element, or -1.
  int index_of(int element_id) const;
};

/// A subset of G plus boundary-divisor rays (a candidate nested set of G+).
struct NestedSet {
  std::vector<int> members;  // member indices into the building set
  std::vector<int> rays;     // ray indices of the fan
};

Report validate_building(const std::vector<int>& candidate, const LayerPoset& poset);
Report validate_well_connected(const std::vector<int>& candidate, const LayerPoset& poset);

/// Topological order by strict inclusion, smaller first, ties by element id.
std::vector<int> order_refining_inclusion(const std::vector<int>& members, const LayerPoset& poset);

/// Validated, ordered building set; throws NotBuilding.
BuildingSet make_building_set(std::shared_ptr<const LayerPoset> poset, const std::vector<int>& members);

/// Minimal members of G containing the poset element.
std::vector<int> factors(int element_id, const BuildingSet& building);

struct InducedMember {
  Layer layer;     // component of G_s meet Z, as a layer of the ambient torus
  int source = 0;  // smallest member index s producing it
};

/// The family H induced on Z = the last member by G_1..G_{m-1}, ordered by source.
std::vector<InducedMember> induced_building_on(int z_element, const BuildingSet& building);
/// Same computation on bare ordered layers (Z = the last one).
std::vector<InducedMember> induced_family(const std::vector<Layer>& ordered);

bool is_nested(const std::vector<int>& members, const BuildingSet& building);
bool is_nested_plus(const NestedSet& s, const BuildingSet& building, const Fan& fan);

/// For a nested set: the component of the intersection of its members whose
/// factors are the minimal members.  Poset element id, or -1 when empty.
int nested_component(const std::vector<int>& members, const BuildingSet& building);

std::vector<std::vector<int>> enumerate_nested(const BuildingSet& building);
std::vector<NestedSet> enumerate_nested_plus(const BuildingSet& building, const Fan& fan);

}  // namespace wonder
