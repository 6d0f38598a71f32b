#include "psf/bivariate.hpp"

namespace psf {

BivariatePoly BivariatePoly::monomial(unsigned du, unsigned dv, const Rational& c) {
  BivariatePoly p;
  p.add_term({du, dv}, c);
  return p;
}

void BivariatePoly::add_term(Exponent e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Rational BivariatePoly::coefficient(unsigned du, unsigned dv) const {
  auto it = terms_.find({du, dv});
  return it == terms_.end() ? Rational() : it->second;
}

Rational BivariatePoly::eval(const Rational& u, const Rational& v) const {
  Rational sum;
  for (const auto& [e, c] : terms_) sum += c * u.pow(e.first) * v.pow(e.second);
  return sum;
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

BivariatePoly& BivariatePoly::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

BivariatePoly operator*(const BivariatePoly& lhs, const BivariatePoly& rhs) {
  BivariatePoly out;
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      out.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
    }
  }
  return out;
}

BivariatePoly BivariatePoly::pow(unsigned exponent) const {
  BivariatePoly result = monomial(0, 0);
  for (unsigned i = 0; i < exponent; ++i) result = result * *this;
  return result;
}

BivariatePoly BinaryQuadraticForm::to_bivariate() const {
  return BivariatePoly::monomial(2, 0, Rational(alpha)) +
         BivariatePoly::monomial(1, 1, Rational(beta)) +
         BivariatePoly::monomial(0, 2, Rational(gamma));
}

std::array<Rational, 3> substitute_coefficients(const BinaryQuadraticForm& form,
                                                const SubstitutionMatrix& m) {
  // u' = m0 u + m1 v, v' = m2 u + m3 v.
  const Rational a(form.alpha), b(form.beta), g(form.gamma);
  const auto& [m0, m1, m2, m3] = m;
  return {
      a * m0 * m0 + b * m0 * m2 + g * m2 * m2,
      Rational(2) * a * m0 * m1 + b * (m0 * m3 + m1 * m2) + Rational(2) * g * m2 * m3,
      a * m1 * m1 + b * m1 * m3 + g * m3 * m3,
  };
}

}  // namespace psf
