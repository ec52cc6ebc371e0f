#pragma once

#include "wonder/fan.hpp"
#include "wonder/graded_slice.hpp"

#include <vector>

namespace wonder {

/// Z[c_r : r ray] modulo Stanley-Reisner and linear relations.  Variable i is
/// c_{ray i}.  The variables of the reference cone are eliminated through the
/// linear relations; the rest are free.
class DanilovRing {
 public:
  /// Throws NotValidated unless the fan is smooth and complete.
  explicit DanilovRing(Fan fan);

  const Fan& fan() const { return fan_; }
  int nvars() const { return fan_.ray_count(); }
  const Cone& reference_cone() const { return reference_; }
  const std::vector<Polynomial>& stanley_reisner() const { return stanley_reisner_; }
  const std::vector<Polynomial>& linear_relations() const { return linear_; }
  /// Minimal non-faces, one per Stanley-Reisner monomial.
  const std::vector<Cone>& minimal_nonfaces() const { return nonfaces_; }
  /// Image of each c_r in the free variables.
  const std::vector<Polynomial>& elimination() const { return elimination_; }
  /// Free-variable mask over `total` variables (extra variables stay free).
  std::vector<bool> free_mask(int total) const;

  /// Substitutes the elimination into the first nvars() variables of p.
  Polynomial eliminate(const Polynomial& p) const;
  /// Stanley-Reisner relations after elimination, as polynomials in `total` variables.
  std::vector<Polynomial> eliminated_relations(int total) const;

  const GradedIdeal& ideal() const { return ideal_; }
  Polynomial normal_form(const Polynomial& p) const;
  long graded_rank(int d) const { return ideal_.slice(d).quotient_rank(); }
  std::vector<Integer> torsion(int d) const { return ideal_.slice(d).torsion; }

 private:
  struct Parts;
  explicit DanilovRing(Parts parts);

  Fan fan_;
  Cone reference_;
  std::vector<Cone> nonfaces_;
  std::vector<Polynomial> stanley_reisner_;
  std::vector<Polynomial> linear_;
  std::vector<Polynomial> elimination_;
  GradedIdeal ideal_;
};

/// h_k = sum_i (-1)^(k-i) C(n-i, k-i) f_{i-1}.
std::vector<long> h_vector_oracle(const Fan& fan);

/// c_r -> c_r for r in V_Gamma, c_r -> 0 otherwise, into the ring of the induced fan.
struct Restriction {
  InducedFan induced;
  DanilovRing target;
  std::vector<int> kernel_rays;  // rays outside V_Gamma

  /// Image of a polynomial in the source variables.
  Polynomial apply(const Polynomial& p) const;
};

Restriction restriction_map(const DanilovRing& ring, const Sublattice& gamma);

/// Degree-d part of the kernel of B -> B_H lifted to the free monomials of B:
/// all x whose image lies in the target's relation slice.  Canonical HNF rows.
IntMatrix restriction_kernel_slice(const DanilovRing& ring, const Restriction& r, int d);

/// Degree-d part of the Danilov ideal plus (c_r : r outside V_Gamma), same columns.
IntMatrix killed_ideal_slice(const DanilovRing& ring, const Restriction& r, int d);

}  // namespace wonder
