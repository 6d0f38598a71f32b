#pragma once

// Power sums S_k(n) = 1^k + 2^k + ... + n^k and formal linear combinations
// of them.

#include <map>
#include <span>

#include "psf/exact.hpp"
#include "psf/polynomial.hpp"

namespace psf {

/// Formal combination sum_j c_j * S_j with exact coefficients.
///
/// Exponents are nonnegative except for kConstantSlot, which stands for the
/// constant function 1 and is only used by the affine expressions of the
/// quadratic identities. Zero coefficients are never stored; the empty map
/// is the zero combination.
class PowerSumCombo {
 public:
  using Terms = std::map<int, Rational>;

  static constexpr int kConstantSlot = -1;

  PowerSumCombo() = default;
  explicit PowerSumCombo(Terms terms);

  /// c * S_exponent.
  static PowerSumCombo single(int exponent, const Rational& c = Rational(1));
  static PowerSumCombo constant(const Rational& c);

  const Terms& terms() const { return terms_; }
  Rational coefficient(int exponent) const;
  bool is_zero() const { return terms_.empty(); }
  bool has_constant() const { return terms_.count(kConstantSlot) != 0; }

  PowerSumCombo& operator+=(const PowerSumCombo& rhs);
  PowerSumCombo& operator-=(const PowerSumCombo& rhs);
  PowerSumCombo& operator*=(const Rational& scalar);

  friend PowerSumCombo operator+(PowerSumCombo lhs, const PowerSumCombo& rhs) { return lhs += rhs; }
  friend PowerSumCombo operator-(PowerSumCombo lhs, const PowerSumCombo& rhs) { return lhs -= rhs; }
  friend PowerSumCombo operator*(PowerSumCombo lhs, const Rational& rhs) { return lhs *= rhs; }
  friend PowerSumCombo operator*(const Rational& lhs, PowerSumCombo rhs) { return rhs *= lhs; }
  PowerSumCombo operator-() const { return *this * Rational(-1); }

  friend bool operator==(const PowerSumCombo&, const PowerSumCombo&) = default;

 private:
  void add_term(int exponent, const Rational& c);

  Terms terms_;
};

inline PowerSumCombo add(const PowerSumCombo& a, const PowerSumCombo& b) { return a + b; }
inline PowerSumCombo scale(const Rational& c, const PowerSumCombo& a) { return c * a; }

/// S_k as a polynomial in n of degree k + 1 with zero constant term.
Polynomial faulhaber(unsigned k);

/// S_k * S_m.
///
/// Uses the Bernoulli-weighted product formula with upper limits floor(k/2)
/// and floor(m/2). That formula is exact only for k, m >= 1; when an index
/// is zero a term B_1 * S_{k+m} is added per zero index.
PowerSumCombo product(unsigned k, unsigned m);

/// S_k^2; only odd exponents appear for k >= 1.
PowerSumCombo square(unsigned k);

/// S_1^k for k >= 1. Throws std::invalid_argument for k == 0.
PowerSumCombo s1_power(unsigned k);

/// S_2 * S_1^k.
PowerSumCombo s2_s1_power(unsigned k);

/// sum_j c_j * faulhaber(j), with the constant slot mapped to a constant.
Polynomial combo_to_polynomial(const PowerSumCombo& combo);

/// Inverse of combo_to_polynomial on polynomials without constant term
/// (the S_j form a triangular basis of that space). A nonzero constant term
/// goes to the constant slot.
PowerSumCombo polynomial_to_combo(const Polynomial& p);

/// S_k(n) as polynomial evaluation, so negative n is allowed; for n >= 1
/// this equals the direct sum.
Rational eval_powersum(unsigned k, const Integer& n);

/// Value of the combination at n.
Rational eval_combo(const PowerSumCombo& combo, const Integer& n);

/// Positive f such that every c / f has integer coefficients and the
/// coefficients of all of them together have gcd 1. Returns 1 when all
/// combinations are zero.
Rational primitive_factor(std::span<const PowerSumCombo> combos);

/// Same normalization over polynomial coefficients.
Rational primitive_factor(std::span<const Polynomial> polys);

}  // namespace psf
