#include "wonder/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace wonder {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSaturated: return "NotSaturated";
    case ErrorCode::NotContained: return "NotContained";
    case ErrorCode::MalformedFan: return "MalformedFan";
    case ErrorCode::NotCompatible: return "NotCompatible";
    case ErrorCode::RayNotInterior: return "RayNotInterior";
    case ErrorCode::NotSplit: return "NotSplit";
    case ErrorCode::NotLast: return "NotLast";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::NotValidated: return "NotValidated";
    case ErrorCode::NoBasis: return "NoBasis";
    case ErrorCode::NotGood: return "NotGood";
    case ErrorCode::NotBuilding: return "NotBuilding";
    case ErrorCode::BadOrder: return "BadOrder";
    case ErrorCode::NotNested: return "NotNested";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::Schema: return "Schema";
  }
  return "Unknown";
}

Rational mod_one(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), c.get_num_mpz_t(), c.get_den_mpz_t());
  Rational out = c - Rational(fl);
  out.canonicalize();
  return out;
}

Rational parse_rational(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0) throw Error(ErrorCode::Schema, "bad rational '" + text + "'");
  if (r.get_den() == 0) throw Error(ErrorCode::Schema, "zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
  ExtendedGcd e;
  mpz_gcdext(e.g.get_mpz_t(), e.x.get_mpz_t(), e.y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return e;
}

long long to_long(const Integer& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits: " + v.get_str());
  return v.get_si();
}

IntMatrix int_matrix(const std::vector<std::vector<long long>>& rows, Eigen::Index cols) {
  Eigen::Index n = cols >= 0 ? cols : (rows.empty() ? 0 : Eigen::Index(rows.front().size()));
  IntMatrix m(Eigen::Index(rows.size()), n);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (Eigen::Index(rows[i].size()) != n) throw Error(ErrorCode::Schema, "ragged integer matrix");
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = Integer(static_cast<long>(rows[i][j]));
  }
  return m;
}

IntRow int_row(const std::vector<long long>& entries) {
  IntRow r(Eigen::Index(entries.size()));
  for (Eigen::Index j = 0; j < r.size(); ++j) r(j) = Integer(static_cast<long>(entries[j]));
  return r;
}

bool is_zero(const IntMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) return false;
  return true;
}

bool is_zero_row(const IntRow& r) {
  for (Eigen::Index j = 0; j < r.size(); ++j)
    if (r(j) != 0) return false;
  return true;
}

Integer determinant(const IntMatrix& input) {
  if (input.rows() != input.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const Eigen::Index n = input.rows();
  if (n == 0) return 1;
  IntMatrix a = input;
  Integer sign = 1, prev = 1;
  for (Eigen::Index k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index swap = -1;
      for (Eigen::Index i = k + 1; i < n; ++i)
        if (a(i, k) != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return 0;
      a.row(k).swap(a.row(swap));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Eigen::Index rank(const IntMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return hermite_normal_form<Integer>(m).rank;
}

SmithForm<Integer> smith_normal_form(const IntMatrix& A) { return smith_normal_form<Integer>(A); }
HermiteForm<Integer> hermite_normal_form(const IntMatrix& A) { return hermite_normal_form<Integer>(A); }

IntMatrix unimodular_inverse(const IntMatrix& A) {
  auto h = hermite_normal_form<Integer>(A);
  if (h.rank != A.rows() || h.H != IntMatrix::Identity(A.rows(), A.cols()))
    throw std::invalid_argument("matrix is not unimodular");
  return h.U;
}

// --------------------------------------------------------------------------

Sublattice::Sublattice(Eigen::Index ambient_rank, const IntMatrix& generators) : ambient_(ambient_rank) {
  if (generators.rows() > 0 && generators.cols() != ambient_rank)
    throw std::invalid_argument("sublattice generators have wrong width");
  if (generators.rows() == 0) {
    basis_ = IntMatrix(0, ambient_rank);
    saturated_ = true;
    return;
  }
  auto h = hermite_normal_form<Integer>(generators);
  basis_ = h.basis();
  auto s = smith_normal_form<Integer>(basis_);
  saturated_ = true;
  for (auto& d : s.divisors())
    if (d != 1) saturated_ = false;
}

Sublattice Sublattice::zero(Eigen::Index ambient_rank) { return Sublattice(ambient_rank, IntMatrix(0, ambient_rank)); }

Sublattice Sublattice::full(Eigen::Index ambient_rank) {
  return Sublattice(ambient_rank, IntMatrix::Identity(ambient_rank, ambient_rank));
}

std::optional<IntRow> Sublattice::coordinates(const IntRow& v) const {
  // Back-substitution through the echelon basis.
  IntRow rest = v;
  IntRow coords = IntRow::Zero(rank());
  Eigen::Index col = 0;
  for (Eigen::Index i = 0; i < rank(); ++i) {
    while (col < ambient_ && basis_(i, col) == 0) {
      if (rest(col) != 0) return std::nullopt;
      ++col;
    }
    if (rest(col) % basis_(i, col) != 0) return std::nullopt;
    Integer q = rest(col) / basis_(i, col);
    coords(i) = q;
    rest -= q * basis_.row(i);
    ++col;
  }
  if (!is_zero_row(rest)) return std::nullopt;
  return coords;
}

bool Sublattice::contains(const IntRow& v) const { return coordinates(v).has_value(); }

bool Sublattice::contains(const Sublattice& other) const {
  for (Eigen::Index i = 0; i < other.rank(); ++i)
    if (!contains(IntRow(other.basis().row(i)))) return false;
  return true;
}

bool Sublattice::annihilates(const IntVector& v) const {
  for (Eigen::Index i = 0; i < rank(); ++i) {
    Integer p = 0;
    for (Eigen::Index j = 0; j < ambient_; ++j) p += basis_(i, j) * v(j);
    if (p != 0) return false;
  }
  return true;
}

bool lex_less(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) return a.rows() < b.rows();
  if (a.cols() != b.cols()) return a.cols() < b.cols();
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return a(i, j) < b(i, j);
  return false;
}

Saturation saturate(const Sublattice& L) {
  if (L.rank() == 0) return {L, 1};
  auto s = smith_normal_form<Integer>(L.basis());
  // basis = U^{-1} D V^{-1}: the first rank rows of V^{-1} span the saturation.
  IntMatrix vinv = unimodular_inverse(s.V);
  Integer index = 1;
  for (auto& d : s.divisors()) index *= d;
  return {Sublattice(L.ambient_rank(), vinv.topRows(s.rank)), index};
}

bool is_split_summand(const Sublattice& L) { return L.saturated(); }

IntMatrix integer_kernel(const IntMatrix& A) {
  const Eigen::Index n = A.cols();
  if (A.rows() == 0) return IntMatrix::Identity(n, n);
  auto s = smith_normal_form<Integer>(A);
  IntMatrix k = s.V.rightCols(n - s.rank).transpose();
  if (k.rows() == 0) return IntMatrix(0, n);
  return hermite_normal_form<Integer>(k).basis();
}

Sublattice lattice_sum(const std::vector<Sublattice>& parts) {
  if (parts.empty()) throw std::invalid_argument("lattice_sum of nothing");
  Eigen::Index n = parts.front().ambient_rank();
  Eigen::Index rows = 0;
  for (auto& p : parts) rows += p.rank();
  IntMatrix gens(rows, n);
  Eigen::Index r = 0;
  for (auto& p : parts) {
    if (p.ambient_rank() != n) throw std::invalid_argument("lattice_sum: ambient rank mismatch");
    if (p.rank() > 0) gens.middleRows(r, p.rank()) = p.basis();
    r += p.rank();
  }
  return Sublattice(n, gens);
}

AdaptedBasis adapted_basis(const Sublattice& outer, const Sublattice& inner) {
  if (!outer.saturated() || !inner.saturated())
    throw Error(ErrorCode::NotSaturated, "adapted_basis needs saturated lattices");
  if (!outer.contains(inner)) throw Error(ErrorCode::NotContained, "inner lattice is not contained in outer");
  const Eigen::Index s = outer.rank(), k = inner.rank(), n = outer.ambient_rank();
  AdaptedBasis out;
  out.split_index = k;
  out.vectors = IntMatrix(s, n);
  if (k > 0) out.vectors.topRows(k) = inner.basis();
  if (s == k) return out;

  // Coordinates of the inner basis in the outer basis.
  IntMatrix inner_coords(k, s);
  for (Eigen::Index i = 0; i < k; ++i) inner_coords.row(i) = *outer.coordinates(IntRow(inner.basis().row(i)));

  // Greedy completion by the outer HNF rows keeps the output close to the
  // canonical basis; fall back to the Smith completion otherwise.
  IntMatrix chosen = inner_coords;
  for (Eigen::Index j = 0; j < s && chosen.rows() < s; ++j) {
    IntMatrix trial(chosen.rows() + 1, s);
    trial.topRows(chosen.rows()) = chosen;
    trial.row(chosen.rows()) = IntRow::Unit(s, j);
    auto snf = smith_normal_form<Integer>(trial);
    bool ok = snf.rank == trial.rows();
    for (auto& d : snf.divisors()) ok = ok && d == 1;
    if (ok) chosen = trial;
  }
  if (chosen.rows() < s) {
    chosen = IntMatrix(s, s);
    if (k > 0) {
      chosen.topRows(k) = inner_coords;
      auto snf = smith_normal_form<Integer>(inner_coords);
      IntMatrix vinv = unimodular_inverse(snf.V);
      chosen.bottomRows(s - k) = vinv.bottomRows(s - k);
    } else {
      chosen = IntMatrix::Identity(s, s);
    }
  }
  IntMatrix full = chosen * outer.basis();
  out.vectors.bottomRows(s - k) = full.bottomRows(s - k);
  return out;
}

TorsionSolutions solve_torsion_congruences(const IntMatrix& gens, const std::vector<Rational>& values) {
  if (Eigen::Index(values.size()) != gens.rows())
    throw std::invalid_argument("one value per generator row required");
  const Eigen::Index n = gens.cols();
  Sublattice span(n, gens);
  TorsionSolutions out;
  out.saturation = saturate(span).lattice;
  const Eigen::Index r = out.saturation.rank();
  if (r == 0) {
    for (auto& v : values)
      if (mod_one(v) != 0) return out;
    out.values.push_back({});
    return out;
  }
  const Eigen::Index k = gens.rows();
  IntMatrix coords(k, r);
  for (Eigen::Index i = 0; i < k; ++i) coords.row(i) = *out.saturation.coordinates(IntRow(gens.row(i)));

  // U C V = D; with psi = V y the system reads D y = U values (mod 1).
  auto snf = smith_normal_form<Integer>(coords);
  std::vector<Rational> rhs(k);
  for (Eigen::Index i = 0; i < k; ++i) {
    Rational acc = 0;
    for (Eigen::Index j = 0; j < k; ++j) acc += Rational(snf.U(i, j)) * values[j];
    rhs[i] = mod_one(acc);
  }
  for (Eigen::Index i = snf.rank; i < k; ++i)
    if (rhs[i] != 0) return out;

  std::vector<std::vector<Rational>> ys{{}};
  for (Eigen::Index i = 0; i < r; ++i) {
    const Integer& d = snf.D(i, i);
    std::vector<std::vector<Rational>> next;
    for (auto& y : ys)
      for (Integer t = 0; t < d; ++t) {
        auto e = y;
        e.push_back(mod_one((rhs[i] + Rational(t)) / Rational(d)));
        next.push_back(std::move(e));
      }
    ys = std::move(next);
  }
  for (auto& y : ys) {
    std::vector<Rational> psi(r);
    for (Eigen::Index i = 0; i < r; ++i) {
      Rational acc = 0;
      for (Eigen::Index j = 0; j < r; ++j) acc += Rational(snf.V(i, j)) * y[j];
      psi[i] = mod_one(acc);
    }
    out.values.push_back(std::move(psi));
  }
  std::sort(out.values.begin(), out.values.end());
  out.values.erase(std::unique(out.values.begin(), out.values.end()), out.values.end());
  return out;
}

QuotientChart::QuotientChart(const Sublattice& gamma) {
  if (!gamma.saturated()) throw Error(ErrorCode::NotSaturated, "quotient chart needs a saturated lattice");
  s_ = gamma.rank();
  basis_ = adapted_basis(Sublattice::full(gamma.ambient_rank()), gamma).vectors;
  inverse_ = unimodular_inverse(basis_);
}

IntVector QuotientChart::project_ray(const IntVector& v) const {
  IntVector full = basis_ * v;
  return full.tail(quotient_rank());
}

IntRow QuotientChart::character_coordinates(const IntRow& chi) const { return chi * inverse_; }

IntRow QuotientChart::project_character(const IntRow& chi) const {
  IntRow a = character_coordinates(chi);
  return a.tail(quotient_rank());
}

}  // namespace wonder
