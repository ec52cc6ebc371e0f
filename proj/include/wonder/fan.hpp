#pragma once

#include "wonder/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wonder {

/// Sorted ray-index set.
using Cone = std::vector<int>;

/// A simplicial fan in the cocharacter lattice Z^n.
class Fan {
 public:
  Fan() = default;
  /// Checks the structural invariants; throws MalformedFan.
  Fan(Eigen::Index rank, std::vector<IntVector> rays, std::vector<Cone> max_cones);

  /// The fan of a point: rank 0, a single empty max cone.
  static Fan point();

  Eigen::Index rank() const { return rank_; }
  const std::vector<IntVector>& rays() const { return rays_; }
  const IntVector& ray(int i) const { return rays_[std::size_t(i)]; }
  int ray_count() const { return int(rays_.size()); }
  const std::vector<Cone>& max_cones() const { return max_cones_; }

  /// Every face of every max cone, including the zero cone, sorted by
  /// dimension then lexicographically.
  std::vector<Cone> all_cones() const;
  /// True iff the rays span a cone of the fan.
  bool is_cone(const Cone& rays) const;
  /// Index of the ray equal to v, or -1.
  int find_ray(const IntVector& v) const;

  friend bool operator==(const Fan& a, const Fan& b) {
    return a.rank_ == b.rank_ && a.rays_ == b.rays_ && a.max_cones_ == b.max_cones_;
  }

 private:
  Eigen::Index rank_ = 0;
  std::vector<IntVector> rays_;
  std::vector<Cone> max_cones_;
};

/// Rays sorted lexicographically, cones re-indexed and sorted.
Fan canonicalize(const Fan& fan);

std::string format_ray(const IntVector& ray);
std::string format_cone(const Fan& fan, const Cone& cone);

struct FanReport {
  bool passed = true;
  std::vector<Cone> cones;  // offending cones or walls
  std::vector<std::string> messages;

  void fail(Cone cone, std::string message) {
    passed = false;
    cones.push_back(std::move(cone));
    messages.push_back(std::move(message));
  }
};

FanReport validate_smooth(const Fan& fan);
FanReport validate_complete(const Fan& fan);

/// Every cone meets V_Gamma in a face.
FanReport cone_face_compat(const Fan& fan, const Sublattice& gamma);

struct SignViolation {
  Cone cone;        // the max cone
  int basis_index;  // which basis vector mixes signs
  int positive_ray;
  int negative_ray;
};

struct EqualSignReport {
  bool passed = true;
  std::vector<SignViolation> violations;
};

/// For every max cone and every basis row chi, the pairings <chi, r> over
/// the rays of the cone are all >= 0 or all <= 0.
EqualSignReport equal_sign_check(const Fan& fan, const IntMatrix& basis);

/// True iff chi never pairs strictly positively and strictly negatively
/// with two rays of one cone.
bool sign_coherent(const Fan& fan, const IntRow& chi);

/// Equal-sign basis of `outer` whose first k rows are a basis of `inner`:
/// tries the HNF-adapted basis, then recombinations with coefficients
/// bounded by `bound`.
std::optional<AdaptedBasis> find_equal_sign_adapted_basis(const Fan& fan, const Sublattice& outer,
                                                          const Sublattice& inner, int bound = 2);
std::optional<IntMatrix> find_equal_sign_basis(const Fan& fan, const Sublattice& gamma, int bound = 2);

struct LatticeGoodness {
  Sublattice lattice;
  std::optional<IntMatrix> basis;  // equal-sign basis used, if any
  FanReport compat;
  EqualSignReport sign;            // of `basis`, or of the canonical basis if none was found
};

struct GoodnessReport {
  bool passed = true;
  FanReport smooth;
  FanReport complete;
  std::vector<LatticeGoodness> lattices;
};

/// Smooth, complete, and every lattice compatible with an equal-sign basis.
GoodnessReport validate_good(const Fan& fan, const std::vector<Sublattice>& lattices,
                             const std::vector<IntMatrix>& bases);
/// Same, with bases found by `find_equal_sign_basis`.
GoodnessReport validate_good(const Fan& fan, const std::vector<Sublattice>& lattices, int bound = 2);

struct InducedFan {
  Fan fan;
  std::vector<int> ray_map;  // induced ray index -> ray index in the ambient fan
  QuotientChart chart;
};

/// The fan of cones contained in V_Gamma, rays written in the chart of Gamma.
InducedFan induce_fan(const Fan& fan, const Sublattice& gamma);
Fan induced_fan(const Fan& fan, const Sublattice& gamma);

/// Star subdivision of `cone` at `new_ray` (appended as the last ray).
Fan stellar_subdivide(const Fan& fan, const Cone& cone, const IntVector& new_ray);

struct GoodFanSearch {
  Fan fan;
  bool passed = false;
  int subdivisions = 0;
  std::vector<std::pair<Cone, IntVector>> steps;  // subdivided cone (in the fan of that step), new ray
};

/// Greedy repair: subdivide the face spanned by a mixed-sign ray pair at the
/// sum of its rays until every lattice has an equal-sign basis or the budget
/// runs out.  The returned fan is canonicalized.
GoodFanSearch search_good_fan(const Fan& fan, const std::vector<Sublattice>& lattices, int budget = 64,
                              int bound = 2);

}  // namespace wonder
