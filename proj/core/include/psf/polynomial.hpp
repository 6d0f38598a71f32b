#pragma once

#include <limits>
#include <map>
#include <utility>

#include "psf/exact.hpp"

namespace psf {

/// Sparse univariate polynomial with exact rational coefficients.
///
/// Zero coefficients are never stored, so structural equality coincides with
/// equality as polynomials.
class Polynomial {
 public:
  using Terms = std::map<unsigned, Rational>;

  /// Degree reported for the zero polynomial.
  static constexpr long kZeroDegree = std::numeric_limits<long>::min();

  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
  explicit Polynomial(Terms terms);

  /// c * x^degree.
  static Polynomial monomial(unsigned degree, const Rational& c = Rational(1));

  const Terms& terms() const { return terms_; }
  Rational coefficient(unsigned degree) const;
  long degree() const;
  bool is_zero() const { return terms_.empty(); }

  Rational eval(const Rational& x) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(Polynomial lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Polynomial operator*(const Rational& lhs, Polynomial rhs) { return rhs *= lhs; }
  Polynomial operator-() const;

  Polynomial pow(unsigned exponent) const;

  /// Euclidean division; throws std::domain_error for a zero divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

  /// Multiplicity of x = root as a root; 0 for the zero polynomial.
  unsigned root_multiplicity(const Rational& root) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void add_term(unsigned degree, const Rational& c);

  Terms terms_;
};

}  // namespace psf
