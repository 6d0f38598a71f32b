#pragma once

// Two-parameter quadratic-form families for a^3 + b^3 + c^3 = d^3.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

#include "psf/bivariate.hpp"
#include "psf/exact.hpp"

namespace psf {

/// Raised when a seed or form set fails a required algebraic condition.
class InvalidSeed : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A nontrivial integer solution of a^3 + b^3 + c^3 = d^3.
///
/// Construction validates the cube identity, abcd != 0 and d not in {a, b, c};
/// the error message names the violated clause.
class CubicQuadruple {
 public:
  CubicQuadruple(Integer a, Integer b, Integer c, Integer d);

  const Integer& a() const { return v_[0]; }
  const Integer& b() const { return v_[1]; }
  const Integer& c() const { return v_[2]; }
  const Integer& d() const { return v_[3]; }
  const std::array<Integer, 4>& values() const { return v_; }

  friend bool operator==(const CubicQuadruple&, const CubicQuadruple&) = default;

 private:
  std::array<Integer, 4> v_;
};

/// Positions of (a, b, c) after permutation: the new i-th entry is
/// old[perm[i]]. Must be a permutation of {0, 1, 2}.
using SeedPermutation = std::array<int, 3>;

CubicQuadruple permute_seed(const CubicQuadruple& seed, const SeedPermutation& perm);

/// Four binary quadratic forms intended to satisfy q1^3 + q2^3 + q3^3 = q4^3.
struct FormQuadruple {
  std::array<BinaryQuadraticForm, 4> q;
  std::optional<CubicQuadruple> seed;

  friend bool operator==(const FormQuadruple&, const FormQuadruple&) = default;
};

/// The family
///   q1 = a(a+c) u^2 + (d-b)(d+b) uv - c(d-b) v^2
///   q2 = b(a+c) u^2 - (c-a)(c+a) uv + d(d-b) v^2
///   q3 = c(a+c) u^2 - (d-b)(d+b) uv - a(d-b) v^2
///   q4 = d(a+c) u^2 - (c-a)(c+a) uv + b(d-b) v^2
/// obtained from Nicholson's parametrisation of the seed.
FormQuadruple sandor_generate(const CubicQuadruple& seed);

/// q1^3 + q2^3 + q3^3 - q4^3 expanded in (u, v).
BivariatePoly cubic_residual(const FormQuadruple& fq);

/// True iff the residual sextic is identically zero.
bool verify_cubic_identity(const FormQuadruple& fq);

/// Divides all twelve coefficients by their gcd g and returns g.
/// An all-zero quadruple is returned unchanged with g = 0.
std::pair<FormQuadruple, Integer> content_reduce(const FormQuadruple& fq);

/// Composes every form with (u, v) -> M (u, v). Throws std::domain_error
/// naming the offending coefficient when a result is not integral.
FormQuadruple substitute(const FormQuadruple& fq, const SubstitutionMatrix& m);

std::array<Integer, 4> evaluate_forms(const FormQuadruple& fq, const Integer& u, const Integer& v);

/// (a + c) / (d - b).
Rational fraction_ratio(const CubicQuadruple& seed);

/// True iff (d - b)(q1 + q3) == (a + c)(q4 - q2) as polynomials in (u, v).
bool check_characterization(const CubicQuadruple& seed, const FormQuadruple& fq);

/// x1^3 + x2^3 + x3^3 == x4^3.
bool is_cubic_solution(const std::array<Integer, 4>& x);

}  // namespace psf
