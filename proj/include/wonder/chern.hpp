#pragma once

#include "wonder/layers.hpp"
#include "wonder/toric_cohomology.hpp"

namespace wonder {

/// -sum_r min(0, <beta, r>) c_r, not yet reduced.
Polynomial divisor_class_raw(const IntRow& beta, const Fan& fan);
/// Same, in normal form.
Polynomial divisor_class(const IntRow& beta, const DanilovRing& ring);

/// Monic polynomial in t with coefficients in the Danilov ring, constant first.
struct LiftedChernPoly {
  PolyInT coefficients;
  AdaptedBasis basis;  // rows k..s-1 are the factors used

  int degree() const { return int(coefficients.size()) - 1; }
};

/// prod_j (t + D(beta_j)) over the given rows, coefficients in normal form.
PolyInT chern_product(const IntMatrix& rows, const DanilovRing& ring);

/// Lifting of the Chern polynomial of the normal bundle of G in M (G inside M).
/// Throws NotContained and NoBasis.
LiftedChernPoly lift_chern_relative(const Layer& g, const Layer& m, const DanilovRing& ring, int bound = 2);
LiftedChernPoly lift_chern_absolute(const Layer& g, const DanilovRing& ring, int bound = 2);

}  // namespace wonder
