#include "wonder/chern.hpp"

namespace wonder {

Polynomial divisor_class_raw(const IntRow& beta, const Fan& fan) {
  const int nv = fan.ray_count();
  Polynomial d(nv);
  for (int r = 0; r < nv; ++r) {
    Integer p = 0;
    for (Eigen::Index j = 0; j < beta.size(); ++j) p += beta(j) * fan.ray(r)(j);
    if (p < 0) d += Polynomial::variable(nv, r) * Integer(-p);
  }
  return d;
}

Polynomial divisor_class(const IntRow& beta, const DanilovRing& ring) {
  return ring.normal_form(divisor_class_raw(beta, ring.fan()));
}

PolyInT chern_product(const IntMatrix& rows, const DanilovRing& ring) {
  const int nv = ring.nvars();
  PolyInT p{Polynomial::constant(nv, 1)};
  for (Eigen::Index j = 0; j < rows.rows(); ++j) {
    Polynomial d = divisor_class_raw(rows.row(j), ring.fan());
    // (sum_k p_k t^k)(t + d)
    PolyInT next(p.size() + 1, Polynomial(nv));
    for (std::size_t k = 0; k < p.size(); ++k) {
      next[k + 1] += p[k];
      next[k] += p[k] * d;
    }
    p = std::move(next);
  }
  for (auto& c : p) c = ring.normal_form(c);
  return p;
}

LiftedChernPoly lift_chern_relative(const Layer& g, const Layer& m, const DanilovRing& ring, int bound) {
  if (!layer_inclusion(g, m)) throw Error(ErrorCode::NotContained, "lifting needs G inside M");
  auto basis = find_equal_sign_adapted_basis(ring.fan(), g.gamma(), m.gamma(), bound);
  if (!basis) throw Error(ErrorCode::NoBasis, "no equal-sign adapted basis within the search bound");
  const Eigen::Index s = basis->vectors.rows(), k = basis->split_index;
  LiftedChernPoly out;
  out.coefficients = chern_product(basis->vectors.bottomRows(s - k), ring);
  out.basis = std::move(*basis);
  return out;
}

LiftedChernPoly lift_chern_absolute(const Layer& g, const DanilovRing& ring, int bound) {
  return lift_chern_relative(g, Layer::whole(g.ambient_rank()), ring, bound);
}

}  // namespace wonder
