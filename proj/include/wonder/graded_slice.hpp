#pragma once

#include "wonder/polynomial.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

namespace wonder {

/// (column, value) pairs with strictly increasing columns and nonzero values.
using SparseRow = std::vector<std::pair<int, Integer>>;

/// Incremental echelon basis of a row lattice in Z^columns.  Row operations
/// are unimodular, so the rows always form a Z-basis of the span.
class LatticeEchelon {
 public:
  explicit LatticeEchelon(int columns) : columns_(columns) {}

  void insert(SparseRow row);
  /// Positive pivots and entries above each pivot reduced into [0, pivot).
  void canonicalize();

  int columns() const { return columns_; }
  int rank() const { return int(rows_.size()); }
  /// Rows in increasing pivot order.
  std::vector<SparseRow> rows() const;
  /// Elementary divisors > 1 of Z^columns / span.
  std::vector<Integer> torsion() const;
  /// Canonical coset representative (requires canonicalize()).
  SparseRow reduce(SparseRow row) const;

 private:
  int columns_;
  std::map<int, SparseRow> rows_;  // keyed by pivot column
};

/// Degree-d piece of a homogeneous ideal.
struct Slice {
  int degree = 0;
  std::vector<Monomial> monomials;  // column order
  std::map<Monomial, int> column;
  std::vector<SparseRow> basis;     // canonical HNF rows of the ideal's degree-d part
  std::vector<Integer> torsion;     // elementary divisors > 1 of the quotient slice

  long quotient_rank() const { return long(monomials.size()) - long(basis.size()); }
};

/// Monomials of total degree d in the active variables, in column order
/// (exponent vectors in decreasing lexicographic order).
std::vector<Monomial> monomials_of_degree(const std::vector<bool>& active, int d);

/// A homogeneous ideal in Z[x_i : active_i], queried one degree at a time.
/// Slices are memoized; copies share the cache.
class GradedIdeal {
 public:
  GradedIdeal(int nvars, std::vector<bool> active, std::vector<Polynomial> generators);

  int nvars() const { return nvars_; }
  const std::vector<bool>& active() const { return active_; }
  const std::vector<Polynomial>& generators() const { return generators_; }

  const Slice& slice(int d) const;
  /// Quotient ranks in degrees 0..max_degree.
  std::vector<long> hilbert(int max_degree) const;
  /// Canonical representative of p modulo the ideal, degree by degree.
  Polynomial reduce(const Polynomial& p) const;
  bool contains(const Polynomial& p) const { return reduce(p).is_zero(); }

 private:
  struct Cache {
    std::mutex mutex;
    std::vector<std::unique_ptr<Slice>> slices;
  };

  Slice build(int d, const Slice* previous) const;

  int nvars_;
  std::vector<bool> active_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_;
};

/// Same degree-d pieces for all d <= max_degree.
bool same_slices_up_to(const GradedIdeal& a, const GradedIdeal& b, int max_degree);

}  // namespace wonder
