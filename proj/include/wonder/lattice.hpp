#pragma once

#include "wonder/integer.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace wonder {

// ---------------------------------------------------------------------------
// Normal forms, templated on the integer scalar.
// ---------------------------------------------------------------------------

template <typename Scalar>
struct SmithForm {
  Matrix<Scalar> U;  // m x m, unimodular
  Matrix<Scalar> D;  // m x n, diagonal, d_1 | d_2 | ...
  Matrix<Scalar> V;  // n x n, unimodular
  Eigen::Index rank = 0;

  std::vector<Scalar> divisors() const {
    std::vector<Scalar> out;
    for (Eigen::Index i = 0; i < rank; ++i) out.push_back(D(i, i));
    return out;
  }
};

/// U * A * V = D.  Pivot is the entry of smallest absolute value in the
/// remaining block, ties broken by (row, col); the output is a function of A.
template <typename Scalar>
SmithForm<Scalar> smith_normal_form(const Matrix<Scalar>& A) {
  const Eigen::Index m = A.rows(), n = A.cols();
  SmithForm<Scalar> s;
  s.D = A;
  s.U = Matrix<Scalar>::Identity(m, m);
  s.V = Matrix<Scalar>::Identity(n, n);
  Matrix<Scalar>& D = s.D;

  Eigen::Index t = 0;
  bool exhausted = false;
  for (; t < std::min(m, n) && !exhausted; ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block.
      Eigen::Index pr = -1, pc = -1;
      for (Eigen::Index i = t; i < m; ++i)
        for (Eigen::Index j = t; j < n; ++j)
          if (D(i, j) != 0 &&
              (pr < 0 || abs_value<Scalar>(D(i, j)) < abs_value<Scalar>(D(pr, pc)))) {
            pr = i;
            pc = j;
          }
      if (pr < 0) {
        exhausted = true;
        break;
      }
      if (pr != t) {
        D.row(t).swap(D.row(pr));
        s.U.row(t).swap(s.U.row(pr));
      }
      if (pc != t) {
        D.col(t).swap(D.col(pc));
        s.V.col(t).swap(s.V.col(pc));
      }
      bool clean = true;
      for (Eigen::Index i = t + 1; i < m; ++i) {
        if (D(i, t) == 0) continue;
        Scalar q = D(i, t) / D(t, t);
        D.row(i) -= q * D.row(t);
        s.U.row(i) -= q * s.U.row(t);
        if (D(i, t) != 0) clean = false;
      }
      for (Eigen::Index j = t + 1; j < n; ++j) {
        if (D(t, j) == 0) continue;
        Scalar q = D(t, j) / D(t, t);
        D.col(j) -= q * D.col(t);
        s.V.col(j) -= q * s.V.col(t);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility of the trailing block by the pivot.
      Eigen::Index bad = -1;
      for (Eigen::Index i = t + 1; i < m && bad < 0; ++i)
        for (Eigen::Index j = t + 1; j < n; ++j)
          if (D(i, j) % D(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      D.row(t) += D.row(bad);
      s.U.row(t) += s.U.row(bad);
    }
    if (exhausted) break;
    if (D(t, t) < 0) {
      D.row(t) *= Scalar(-1);
      s.U.row(t) *= Scalar(-1);
    }
  }
  s.rank = t;
  return s;
}

template <typename Scalar>
struct HermiteForm {
  Matrix<Scalar> H;  // all rows of U*A; the first `rank` rows are nonzero
  Matrix<Scalar> U;  // unimodular transform
  Eigen::Index rank = 0;
  std::vector<Eigen::Index> pivots;

  Matrix<Scalar> basis() const { return H.topRows(rank); }
};

/// Row-style Hermite normal form: U * A = H with H in echelon form, positive
/// pivots, entries above each pivot reduced into [0, pivot).
template <typename Scalar>
HermiteForm<Scalar> hermite_normal_form(const Matrix<Scalar>& A) {
  const Eigen::Index m = A.rows(), n = A.cols();
  HermiteForm<Scalar> h;
  h.H = A;
  h.U = Matrix<Scalar>::Identity(m, m);
  Matrix<Scalar>& H = h.H;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < n && r < m; ++c) {
    while (true) {
      Eigen::Index best = -1;
      for (Eigen::Index i = r; i < m; ++i)
        if (H(i, c) != 0 && (best < 0 || abs_value<Scalar>(H(i, c)) < abs_value<Scalar>(H(best, c))))
          best = i;
      if (best < 0) break;
      if (best != r) {
        H.row(r).swap(H.row(best));
        h.U.row(r).swap(h.U.row(best));
      }
      bool done = true;
      for (Eigen::Index i = r + 1; i < m; ++i) {
        if (H(i, c) == 0) continue;
        Scalar q = H(i, c) / H(r, c);
        H.row(i) -= q * H.row(r);
        h.U.row(i) -= q * h.U.row(r);
        if (H(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (r < m && H(r, c) != 0) {
      if (H(r, c) < 0) {
        H.row(r) *= Scalar(-1);
        h.U.row(r) *= Scalar(-1);
      }
      for (Eigen::Index i = 0; i < r; ++i) {
        Scalar q = floor_div<Scalar>(H(i, c), H(r, c));
        if (q != 0) {
          H.row(i) -= q * H.row(r);
          h.U.row(i) -= q * h.U.row(r);
        }
      }
      h.pivots.push_back(c);
      ++r;
    }
  }
  h.rank = r;
  return h;
}

// ---------------------------------------------------------------------------
// Sublattices of Z^n.
// ---------------------------------------------------------------------------

/// A subgroup of the character lattice Z^n given by basis rows.
class Sublattice {
 public:
  Sublattice() = default;
  /// Rows may be dependent; they are reduced to a canonical HNF basis.
  Sublattice(Eigen::Index ambient_rank, const IntMatrix& generators);

  static Sublattice zero(Eigen::Index ambient_rank);
  static Sublattice full(Eigen::Index ambient_rank);

  Eigen::Index ambient_rank() const { return ambient_; }
  Eigen::Index rank() const { return basis_.rows(); }
  const IntMatrix& basis() const { return basis_; }
  bool saturated() const { return saturated_; }

  /// True iff v lies in the lattice (integrally).
  bool contains(const IntRow& v) const;
  bool contains(const Sublattice& other) const;
  /// Integer coordinates of v in the stored basis; nullopt if v is not in the lattice.
  std::optional<IntRow> coordinates(const IntRow& v) const;

  /// True iff every basis vector pairs to zero with v (v in V_Gamma).
  bool annihilates(const IntVector& v) const;

  friend bool operator==(const Sublattice& a, const Sublattice& b) {
    return a.ambient_ == b.ambient_ && a.basis_.rows() == b.basis_.rows() && a.basis_ == b.basis_;
  }

 private:
  Eigen::Index ambient_ = 0;
  IntMatrix basis_;  // canonical row HNF, full row rank
  bool saturated_ = true;
};

bool lex_less(const IntMatrix& a, const IntMatrix& b);

SmithForm<Integer> smith_normal_form(const IntMatrix& A);
HermiteForm<Integer> hermite_normal_form(const IntMatrix& A);

/// Inverse of a unimodular integer matrix.
IntMatrix unimodular_inverse(const IntMatrix& A);

/// Saturation and the index of the input in it.
struct Saturation {
  Sublattice lattice;
  Integer index;
};
Saturation saturate(const Sublattice& L);

bool is_split_summand(const Sublattice& L);

/// Basis of the integer right kernel {v : A v = 0} as rows (saturated).
IntMatrix integer_kernel(const IntMatrix& A);

/// Sum of sublattices (not saturated).
Sublattice lattice_sum(const std::vector<Sublattice>& parts);

struct AdaptedBasis {
  IntMatrix vectors;  // s x n; rows beta_1..beta_s
  Eigen::Index split_index = 0;  // k: first k rows are a basis of the smaller lattice
};

/// Basis of `outer` whose first k rows are a basis of `inner`.
AdaptedBasis adapted_basis(const Sublattice& outer, const Sublattice& inner);

/// Extensions of a torsion character from span(gens) to its saturation.
/// Each solution lists values on the canonical basis of the saturation.
/// An empty result means the system is inconsistent.
struct TorsionSolutions {
  Sublattice saturation;
  std::vector<std::vector<Rational>> values;
};
TorsionSolutions solve_torsion_congruences(const IntMatrix& gens,
                                           const std::vector<Rational>& values);

/// Coordinates adapted to a saturated Gamma: rows 0..s-1 of `basis` span
/// Gamma, the rest complete it to a basis of Z^n.
class QuotientChart {
 public:
  explicit QuotientChart(const Sublattice& gamma);

  Eigen::Index ambient_rank() const { return basis_.rows(); }
  Eigen::Index gamma_rank() const { return s_; }
  Eigen::Index quotient_rank() const { return basis_.rows() - s_; }
  const IntMatrix& basis() const { return basis_; }

  /// Coordinates of a cocharacter v in V_Gamma: (<beta_j, v>)_{j >= s}.
  IntVector project_ray(const IntVector& v) const;
  /// Full coordinates a of a character chi = sum a_i beta_i.
  IntRow character_coordinates(const IntRow& chi) const;
  /// Image of chi in X*(T)/Gamma (coordinates a_j, j >= s).
  IntRow project_character(const IntRow& chi) const;

 private:
  Eigen::Index s_ = 0;
  IntMatrix basis_;
  IntMatrix inverse_;
};

}  // namespace wonder
