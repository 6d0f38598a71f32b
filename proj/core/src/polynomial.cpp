#include "psf/polynomial.hpp"

#include <stdexcept>

namespace psf {

Polynomial::Polynomial(const Rational& constant) { add_term(0, constant); }

Polynomial::Polynomial(Terms terms) {
  for (const auto& [degree, c] : terms) add_term(degree, c);
}

Polynomial Polynomial::monomial(unsigned degree, const Rational& c) {
  Polynomial p;
  p.add_term(degree, c);
  return p;
}

void Polynomial::add_term(unsigned degree, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(degree, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Rational Polynomial::coefficient(unsigned degree) const {
  auto it = terms_.find(degree);
  return it == terms_.end() ? Rational() : it->second;
}

long Polynomial::degree() const {
  return terms_.empty() ? kZeroDegree : static_cast<long>(terms_.rbegin()->first);
}

Rational Polynomial::eval(const Rational& x) const {
  if (terms_.empty()) return Rational();
  // Horner over the sparse terms, from the top degree down.
  Rational acc;
  unsigned current = terms_.rbegin()->first;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    acc *= x.pow(current - it->first);
    acc += it->second;
    current = it->first;
  }
  return acc * x.pow(current);
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  for (const auto& [degree, c] : rhs.terms_) add_term(degree, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  for (const auto& [degree, c] : rhs.terms_) add_term(degree, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [degree, c] : terms_) c *= scalar;
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  Polynomial out;
  for (const auto& [da, ca] : lhs.terms_) {
    for (const auto& [db, cb] : rhs.terms_) out.add_term(da + db, ca * cb);
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [degree, c] : out.terms_) c = -c;
  return out;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result(Rational(1));
  for (unsigned i = 0; i < exponent; ++i) result *= *this;
  return result;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  Polynomial quotient;
  Polynomial remainder = *this;
  const unsigned dd = divisor.terms_.rbegin()->first;
  const Rational lead = divisor.terms_.rbegin()->second;
  while (!remainder.is_zero() && remainder.degree() >= static_cast<long>(dd)) {
    const auto& [rd, rc] = *remainder.terms_.rbegin();
    Polynomial step = monomial(rd - dd, rc / lead);
    quotient += step;
    remainder -= step * divisor;
  }
  return {quotient, remainder};
}

unsigned Polynomial::root_multiplicity(const Rational& root) const {
  if (is_zero()) return 0;
  const Polynomial linear = monomial(1) - Polynomial(root);
  unsigned count = 0;
  Polynomial p = *this;
  for (;;) {
    auto [q, r] = p.divmod(linear);
    if (!r.is_zero()) return count;
    ++count;
    p = std::move(q);
  }
}

}  // namespace psf
