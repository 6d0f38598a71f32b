#pragma once

// Cubic relations among power sums, obtained by substituting power sums into
// a verified quadratic-form family, and their expansion into univariate
// polynomial identities.

#include <array>
#include <string>
#include <string_view>

#include "psf/cubic_forms.hpp"
#include "psf/polynomial.hpp"
#include "psf/powersum.hpp"

namespace psf {

/// Which power sums replace (u, v) in the forms.
///   Q(k, m): u = S_k, v = S_m
///   F(k):    u = S_2, v = S_1^k
struct RelationMode {
  enum class Kind { Q, F };

  Kind kind = Kind::Q;
  unsigned k = 1;
  unsigned m = 1;

  static RelationMode q(unsigned k, unsigned m) { return {Kind::Q, k, m}; }
  static RelationMode f(unsigned k) { return {Kind::F, k, 0}; }

  /// "Q:k,m" or "F:k"; throws std::invalid_argument otherwise.
  static RelationMode parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const RelationMode&, const RelationMode&) = default;
};

/// alpha S_k^2 + beta S_k S_m + gamma S_m^2. Requires k, m >= 1.
PowerSumCombo build_Q(const BinaryQuadraticForm& form, unsigned k, unsigned m);

/// alpha S_2^2 + beta S_2 S_1^k + gamma S_1^{2k}. Requires k >= 1.
PowerSumCombo build_F(const BinaryQuadraticForm& form, unsigned k);

/// c1^3 + c2^3 + c3^3 = c4^3 among power-sum combinations.
///
/// The combinations are stored with integer coefficients of joint content 1;
/// common_factor times c_i recovers the form evaluated at the power sums.
struct ComboQuadruple {
  std::array<PowerSumCombo, 4> c;
  Rational common_factor{1};
  FormQuadruple forms;
  RelationMode mode;
};

/// Throws InvalidSeed when fq does not satisfy the cubic identity.
ComboQuadruple build_relation(const FormQuadruple& fq, const RelationMode& mode);

/// p1^3 + p2^3 + p3^3 = p4^3 in one variable, labelled "u".
struct PolyIdentity {
  std::array<Polynomial, 4> p;
  /// p_i = scale * (polynomial of the source combination).
  Rational scale{1};
};

/// p1^3 + p2^3 + p3^3 - p4^3.
Polynomial identity_residual(const PolyIdentity& pi);
bool verify_poly_identity(const PolyIdentity& pi);

/// Raised when an identity that must hold by construction fails to verify.
class VerificationFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Pushes each combination through its power-sum polynomials and rescales to
/// integer coefficients of joint content 1. Throws VerificationFailure if the
/// expanded identity does not hold.
PolyIdentity expand_relation(const ComboQuadruple& cq);

struct RootFactorization {
  PolyIdentity quotient;
  /// u^zero_order (u + 1)^minus_one_order.
  Polynomial divisor;
  unsigned zero_order = 0;
  unsigned minus_one_order = 0;
};

/// Largest u^s (u + 1)^t dividing all four polynomials, and the quotients.
/// The quotient identity is re-verified.
RootFactorization factor_common_root(const PolyIdentity& pi);

}  // namespace psf
