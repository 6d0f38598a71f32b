#pragma once

#include <array>
#include <map>
#include <utility>

#include "psf/exact.hpp"

namespace psf {

/// Sparse polynomial in (u, v) with exact rational coefficients.
class BivariatePoly {
 public:
  /// (degree in u, degree in v).
  using Exponent = std::pair<unsigned, unsigned>;
  using Terms = std::map<Exponent, Rational>;

  BivariatePoly() = default;

  static BivariatePoly monomial(unsigned du, unsigned dv, const Rational& c = Rational(1));

  const Terms& terms() const { return terms_; }
  Rational coefficient(unsigned du, unsigned dv) const;
  bool is_zero() const { return terms_.empty(); }

  Rational eval(const Rational& u, const Rational& v) const;

  BivariatePoly& operator+=(const BivariatePoly& rhs);
  BivariatePoly& operator-=(const BivariatePoly& rhs);
  BivariatePoly& operator*=(const Rational& scalar);

  friend BivariatePoly operator+(BivariatePoly lhs, const BivariatePoly& rhs) { return lhs += rhs; }
  friend BivariatePoly operator-(BivariatePoly lhs, const BivariatePoly& rhs) { return lhs -= rhs; }
  friend BivariatePoly operator*(const BivariatePoly& lhs, const BivariatePoly& rhs);
  friend BivariatePoly operator*(BivariatePoly lhs, const Rational& rhs) { return lhs *= rhs; }
  friend BivariatePoly operator*(const Rational& lhs, BivariatePoly rhs) { return rhs *= lhs; }

  BivariatePoly pow(unsigned exponent) const;

  friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;

 private:
  void add_term(Exponent e, const Rational& c);

  Terms terms_;
};

/// alpha*u^2 + beta*u*v + gamma*v^2 with integer coefficients.
struct BinaryQuadraticForm {
  Integer alpha;
  Integer beta;
  Integer gamma;

  Integer evaluate(const Integer& u, const Integer& v) const {
    return alpha * u * u + beta * u * v + gamma * v * v;
  }
  BivariatePoly to_bivariate() const;

  friend bool operator==(const BinaryQuadraticForm&, const BinaryQuadraticForm&) = default;
};

/// Rational 2x2 matrix acting on (u, v) as column vector: row-major entries.
using SubstitutionMatrix = std::array<Rational, 4>;

/// Form composed with (u, v) -> M * (u, v), coefficients left rational.
std::array<Rational, 3> substitute_coefficients(const BinaryQuadraticForm& form,
                                                const SubstitutionMatrix& m);

}  // namespace psf
