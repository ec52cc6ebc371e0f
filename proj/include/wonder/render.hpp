#pragma once

#include "wonder/presentation.hpp"

#include <string>

namespace wonder {

/// "c(+1,0)", "c(0,-1)".
std::string ray_name(const IntVector& ray);

/// Terms by t-exponents descending, then c-exponents descending; t before c
/// inside a monomial.  t variables print 1-based.
std::string render_polynomial(const Polynomial& p, const Fan& fan);

/// Base ring, variables, relation groups with provenance tags, Hilbert vector.
std::string render_text(const ModelPresentation& p, const HilbertResult& h);

}  // namespace wonder
