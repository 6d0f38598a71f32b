#include "psf/quadratic.hpp"

#include <algorithm>

namespace psf {

PythagoreanQuadruple::PythagoreanQuadruple(Integer a, Integer b, Integer c, Integer d)
    : v_{std::move(a), std::move(b), std::move(c), std::move(d)} {
  const auto text = [this] {
    return "(" + to_string(v_[0]) + "," + to_string(v_[1]) + "," + to_string(v_[2]) + "," +
           to_string(v_[3]) + ")";
  };
  if (v_[0] * v_[0] + v_[1] * v_[1] + v_[2] * v_[2] != v_[3] * v_[3]) {
    throw InvalidSeed("quadruple " + text() + " violates a^2 + b^2 + c^2 = d^2");
  }
  if (std::any_of(v_.begin(), v_.end(), [](const Integer& x) { return x == 0; })) {
    throw InvalidSeed("quadruple " + text() + " has a zero entry");
  }
}

bool verify_square_identity(const SquareFormQuadruple& fq) {
  BivariatePoly r;
  for (int i = 0; i < 3; ++i) r += fq.q[i].to_bivariate().pow(2);
  r -= fq.q[3].to_bivariate().pow(2);
  return r.is_zero();
}

bool verify_square_identity(const SquareFormTriple& ft) {
  return (ft[0].to_bivariate().pow(2) + ft[1].to_bivariate().pow(2) - ft[2].to_bivariate().pow(2))
      .is_zero();
}

SquareFormQuadruple piezas_generate(const PythagoreanQuadruple& pq) {
  const Integer &a = pq.a(), &b = pq.b(), &c = pq.c(), &d = pq.d();
  return {{{
      {a, -2 * d, a},
      {b, 0, -b},
      {c, 0, -c},
      {d, -2 * a, d},
  }}};
}

SquareFormTriple piezas_degenerate_triple(const PythagoreanQuadruple& pq, const Integer& e) {
  if (e <= 0 || pq.b() * pq.b() + pq.c() * pq.c() != e * e) {
    throw InvalidSeed("b^2 + c^2 = " + to_string(pq.b() * pq.b() + pq.c() * pq.c()) +
                      " is not the square of e = " + to_string(e));
  }
  const Integer &a = pq.a(), &d = pq.d();
  return {{
      {a, -2 * d, a},
      {e, 0, -e},
      {d, -2 * a, d},
  }};
}

std::array<PowerSumCombo, 4> powersum_quadruple(unsigned k) {
  if (k == 0) throw std::invalid_argument("powersum_quadruple requires k >= 1");
  const PowerSumCombo sk = PowerSumCombo::single(static_cast<int>(k));
  const PowerSumCombo one = PowerSumCombo::constant(Rational(1));
  const PowerSumCombo sq = square(k);
  return {sk, one + sk, sk + sq, one + sk + sq};
}

std::array<PowerSumCombo, 3> powersum_triple(unsigned k, unsigned m) {
  if (k == m) throw std::invalid_argument("powersum_triple requires k != m");
  if (k == 0 || m == 0) throw std::invalid_argument("powersum_triple requires k, m >= 1");
  PowerSumCombo leg = square(k) - square(m);
  if (!leg.is_zero() && leg.terms().rbegin()->second.sign() < 0) leg = -leg;
  return {leg, Rational(2) * product(k, m), square(k) + square(m)};
}

std::array<PowerSumCombo, 3> piza_comparison_triple() {
  return {
      PowerSumCombo({{3, Rational(-1)}, {5, Rational(2)}, {7, Rational(2)}}),
      PowerSumCombo({{3, Rational(1)}, {5, Rational(3)}}),
      PowerSumCombo({{3, Rational(1)}, {5, Rational(2)}, {7, Rational(2)}}),
  };
}

Polynomial square_residual(std::span<const PowerSumCombo> combos) {
  Polynomial r;
  if (combos.empty()) return r;
  for (std::size_t i = 0; i + 1 < combos.size(); ++i) r += combo_to_polynomial(combos[i]).pow(2);
  r -= combo_to_polynomial(combos.back()).pow(2);
  return r;
}

std::pair<std::pair<Integer, Integer>, std::pair<Integer, Integer>> equal_sums_family(const Integer& u) {
  return {{2 * u - 2, 4 * u + 1}, {2 * u + 2, 4 * u - 1}};
}

}  // namespace psf
