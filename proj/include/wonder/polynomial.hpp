#pragma once

#include "wonder/integer.hpp"

#include <map>
#include <vector>

namespace wonder {

using Monomial = std::vector<int>;

int total_degree(const Monomial& m);

/// Sparse integer polynomial in a fixed number of variables.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(int nvars) : nvars_(nvars) {}

  static Polynomial constant(int nvars, const Integer& c);
  static Polynomial variable(int nvars, int index);
  static Polynomial monomial(const Monomial& m, const Integer& c = 1);

  int nvars() const { return nvars_; }
  const std::map<Monomial, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Largest total degree; -1 for the zero polynomial.
  int degree() const;
  bool homogeneous() const;
  Polynomial homogeneous_part(int d) const;
  Integer coefficient(const Monomial& m) const;
  /// True iff every term avoids the variables flagged false.
  bool supported_on(const std::vector<bool>& active) const;

  void add_term(const Monomial& m, const Integer& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Integer& c);
  Polynomial operator-() const;
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Integer& c) { return a *= c; }
  friend Polynomial operator*(const Integer& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Replaces variable i by images[i].
  Polynomial substitute(const std::vector<Polynomial>& images) const;
  /// Same polynomial in a ring with more variables appended at the end.
  Polynomial extended(int nvars) const;

 private:
  int nvars_ = 0;
  std::map<Monomial, Integer> terms_;
};

Polynomial pow(const Polynomial& p, int e);

/// Polynomial in one variable t with polynomial coefficients, constant first.
using PolyInT = std::vector<Polynomial>;

/// Evaluates sum_k coeffs[k] * value^k.
Polynomial evaluate(const PolyInT& coeffs, const Polynomial& value);

}  // namespace wonder
