#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

// Eigen needs to know that mpz_class is an exact, signed integer type.
namespace Eigen {
template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpq_class;
  using Nested = mpz_class;
  using Literal = mpz_class;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen

namespace wonder {

using Integer = mpz_class;
using Rational = mpq_class;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using RowVector = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

using IntMatrix = Matrix<Integer>;
using IntVector = Vector<Integer>;
using IntRow = RowVector<Integer>;

enum class ErrorCode {
  NotSaturated,
  NotContained,
  MalformedFan,
  NotCompatible,
  RayNotInterior,
  NotSplit,
  NotLast,
  CycleDetected,
  NotValidated,
  NoBasis,
  NotGood,
  NotBuilding,
  BadOrder,
  NotNested,
  DegreeMismatch,
  Schema,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Floor division for any signed integer scalar (mpz_class or builtin).
template <typename Scalar>
Scalar floor_div(const Scalar& a, const Scalar& b) {
  Scalar q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

template <typename Scalar>
Scalar abs_value(const Scalar& a) {
  return a < 0 ? Scalar(-a) : a;
}

/// Representative of r in Q/Z lying in [0, 1).
Rational mod_one(const Rational& r);

/// Parses "a/b", "a" or "-a/b".
Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& r);

Integer gcd(const Integer& a, const Integer& b);

/// (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0.
struct ExtendedGcd {
  Integer g, x, y;
};
ExtendedGcd extended_gcd(const Integer& a, const Integer& b);

long long to_long(const Integer& v);

IntMatrix int_matrix(const std::vector<std::vector<long long>>& rows, Eigen::Index cols = -1);
IntRow int_row(const std::vector<long long>& entries);

bool is_zero(const IntMatrix& m);
bool is_zero_row(const IntRow& r);

/// Exact determinant of a square integer matrix (Bareiss elimination).
Integer determinant(const IntMatrix& m);

/// Matrix rank over Q.
Eigen::Index rank(const IntMatrix& m);

}  // namespace wonder
