#pragma once

#include <array>
#include <initializer_list>
#include <ostream>
#include <string>

#include "psf/cubic_forms.hpp"
#include "psf/latex.hpp"
#include "psf/polynomial.hpp"
#include "psf/powersum.hpp"

namespace psf {

// Readable gtest failure output.
inline void PrintTo(const Polynomial& p, std::ostream* os) { *os << latex::polynomial(p); }
inline void PrintTo(const PowerSumCombo& c, std::ostream* os) { *os << latex::combo(c); }
inline void PrintTo(const BinaryQuadraticForm& f, std::ostream* os) { *os << latex::form(f); }
inline void PrintTo(const FormQuadruple& fq, std::ostream* os) { *os << latex::form_quadruple(fq); }

}  // namespace psf

namespace psf::test {

inline FormQuadruple forms(std::array<std::array<long, 3>, 4> coeffs) {
  FormQuadruple fq;
  for (std::size_t i = 0; i < 4; ++i) {
    fq.q[i] = {Integer(coeffs[i][0]), Integer(coeffs[i][1]), Integer(coeffs[i][2])};
  }
  return fq;
}

inline CubicQuadruple seed(long a, long b, long c, long d) {
  return CubicQuadruple(Integer(a), Integer(b), Integer(c), Integer(d));
}

/// Combination from (exponent, "p/q") pairs.
inline PowerSumCombo combo(std::initializer_list<std::pair<int, const char*>> terms) {
  PowerSumCombo out;
  for (const auto& [e, c] : terms) out += PowerSumCombo::single(e, Rational::parse(c));
  return out;
}

/// Polynomial from (degree, "p/q") pairs.
inline Polynomial poly(std::initializer_list<std::pair<unsigned, const char*>> terms) {
  Polynomial out;
  for (const auto& [d, c] : terms) out += Polynomial::monomial(d, Rational::parse(c));
  return out;
}

/// Polynomial with integer coefficients listed from degree `low` upward.
inline Polynomial ascending(unsigned low, std::initializer_list<long> coeffs) {
  Polynomial out;
  unsigned d = low;
  for (long c : coeffs) out += Polynomial::monomial(d++, Rational(c));
  return out;
}

inline std::array<Integer, 4> quad(long a, long b, long c, long d) {
  return {Integer(a), Integer(b), Integer(c), Integer(d)};
}

// Reference coefficient sets.
inline FormQuadruple ramanujan_forms() {
  return forms({{{3, 5, -5}, {4, -4, 6}, {5, -5, -3}, {6, -4, 4}}});
}
inline FormQuadruple forms_1689() {
  return forms({{{3, 15, -8}, {18, -21, 9}, {24, -15, -1}, {27, -21, 6}}});
}
inline FormQuadruple forms_7141720() {
  return forms({{{28, 34, -17}, {56, -40, 20}, {68, -34, -7}, {80, -40, 14}}});
}
inline FormQuadruple forms_1869() {
  return forms({{{7, 17, -6}, {56, -35, 9}, {42, -17, -1}, {63, -35, 8}}});
}

}  // namespace psf::test
