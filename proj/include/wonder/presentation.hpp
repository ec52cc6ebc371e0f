#pragma once

#include "wonder/building.hpp"
#include "wonder/chern.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace wonder {

enum class RelationGroup { SR, Linear, TC, F, F0, StratumC };

const char* to_string(RelationGroup g);

struct Provenance {
  int member = -1;            // i (0-based member index); -1 for F0 and ring relations
  std::vector<int> subset;    // A, member indices
  std::vector<int> folded;    // S_i for stratum relations
  int component = -2;         // poset id of M; -1 means the whole space
  int ray = -1;               // c_r relations
  std::vector<int> nonface;   // Stanley-Reisner monomial
  int coordinate = -1;        // linear relation index
};

struct Relation {
  RelationGroup group;
  Provenance provenance;
  Polynomial poly;  // variables: c_0..c_{R-1}, t_1..t_m
};

/// Replaces the production lifting for (member index, component id or -1).
using LiftingOverride = std::function<PolyInT(int member, int component, const PolyInT& standard)>;

struct PresentationOptions {
  int basis_bound = 2;
  LiftingOverride lifting;  // empty: use the standard lifting
};

/// B[t_1..t_m] / J with relations grouped as emitted.
struct ModelPresentation {
  std::shared_ptr<const DanilovRing> base;
  BuildingSet building;
  std::vector<Relation> relations;
  std::optional<NestedSet> stratum;  // set for stratum presentations

  int ray_count() const { return base->nvars(); }
  int member_count() const { return building.size(); }
  int total_vars() const { return ray_count() + member_count(); }
  int t_var(int member) const { return ray_count() + member; }

  /// Relation ideal with the reference-cone variables eliminated.
  GradedIdeal ideal() const;
  int dimension() const;  // expected top degree
};

/// Throws NotGood, NotBuilding (via the building set), BadOrder.
ModelPresentation assemble_model_ideal(std::shared_ptr<const DanilovRing> base, const BuildingSet& building,
                                       const PresentationOptions& options = {});

/// Throws NotNested.
ModelPresentation assemble_stratum_ideal(std::shared_ptr<const DanilovRing> base, const BuildingSet& building,
                                         const NestedSet& s, const PresentationOptions& options = {});

struct HilbertResult {
  std::vector<long> ranks;
  std::vector<std::vector<Integer>> torsion;  // per degree, elementary divisors > 1

  bool torsion_free() const {
    for (auto& t : torsion)
      if (!t.empty()) return false;
    return true;
  }
};

HilbertResult hilbert_function(const ModelPresentation& p, int max_degree);

/// Throws DegreeMismatch when the presentations live in different rings.
bool ideal_equal_up_to(const ModelPresentation& a, const ModelPresentation& b, int max_degree);

/// Checks the order refines inclusion and the fan is good for every poset element.
void check_model_inputs(const DanilovRing& base, const BuildingSet& building, int bound);

/// Kernel of restriction to the stratum, from Poincare duality on the model:
/// {x : x * y * [Y_S] integrates to 0 for all y}.  Canonical HNF rows in the
/// columns of model.ideal().slice(d).
IntMatrix stratum_annihilator_slice(const ModelPresentation& model, const NestedSet& s, int d);
/// The stratum presentation's slice in the same columns.
IntMatrix presentation_slice(const ModelPresentation& p, int d);

}  // namespace wonder
