#pragma once

// Quadratic counterparts: a^2 + b^2 + c^2 = d^2, a^2 + b^2 = c^2 and
// a^2 + b^2 = c^2 + d^2.

#include <array>
#include <utility>

#include "psf/bivariate.hpp"
#include "psf/cubic_forms.hpp"
#include "psf/powersum.hpp"

namespace psf {

/// Integers with a^2 + b^2 + c^2 = d^2, all nonzero. Validated on construction.
class PythagoreanQuadruple {
 public:
  PythagoreanQuadruple(Integer a, Integer b, Integer c, Integer d);

  const Integer& a() const { return v_[0]; }
  const Integer& b() const { return v_[1]; }
  const Integer& c() const { return v_[2]; }
  const Integer& d() const { return v_[3]; }
  const std::array<Integer, 4>& values() const { return v_; }

 private:
  std::array<Integer, 4> v_;
};

/// Forms with q1^2 + q2^2 + q3^2 = q4^2.
struct SquareFormQuadruple {
  std::array<BinaryQuadraticForm, 4> q;
};

/// Forms with r^2 + s^2 = t^2.
using SquareFormTriple = std::array<BinaryQuadraticForm, 3>;

bool verify_square_identity(const SquareFormQuadruple& fq);
bool verify_square_identity(const SquareFormTriple& ft);

/// (a u^2 - 2d uv + a v^2, b u^2 - b v^2, c u^2 - c v^2, d u^2 - 2a uv + d v^2).
SquareFormQuadruple piezas_generate(const PythagoreanQuadruple& pq);

/// The case b^2 + c^2 = e^2 (e > 0), which collapses to a Pythagorean triple
/// family. Throws InvalidSeed when e does not fit.
SquareFormTriple piezas_degenerate_triple(const PythagoreanQuadruple& pq, const Integer& e);

/// (S_k, 1 + S_k, S_k + S_k^2, 1 + S_k + S_k^2), with S_k^2 written through
/// the square formula. Uses the constant slot of PowerSumCombo. Requires k >= 1.
std::array<PowerSumCombo, 4> powersum_quadruple(unsigned k);

/// Legs (S_k^2 - S_m^2, 2 S_k S_m) and hypotenuse S_k^2 + S_m^2 as combos.
///
/// The first leg is oriented so its highest power sum has a positive
/// coefficient, i.e. it is |S_k^2 - S_m^2| for large n. Throws
/// std::invalid_argument for k == m or a zero index.
std::array<PowerSumCombo, 3> powersum_triple(unsigned k, unsigned m);

/// (2 S_5 + 2 S_7 - S_3, S_3 + 3 S_5, S_3 + 2 S_5 + 2 S_7), obtained from
/// (y^4 - y^2)^2/4 + (2y^3)^2/4 = (y^4 + y^2)^2/4 with y = 2 S_1.
std::array<PowerSumCombo, 3> piza_comparison_triple();

/// sum of squares of the first n-1 combos minus square of the last, as a
/// polynomial in n.
Polynomial square_residual(std::span<const PowerSumCombo> combos);

/// ((2u - 2, 4u + 1), (2u + 2, 4u - 1)): equal sums of two squares.
std::pair<std::pair<Integer, Integer>, std::pair<Integer, Integer>> equal_sums_family(const Integer& u);

}  // namespace psf
