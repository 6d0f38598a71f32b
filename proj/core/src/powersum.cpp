#include "psf/powersum.hpp"

#include <stdexcept>
#include <vector>

#include "psf/bernoulli.hpp"

namespace psf {

namespace {

Rational binom(unsigned n, unsigned k) { return Rational(binomial(n, k)); }

Rational pow2(unsigned e) {
  Integer v = 1;
  v <<= e;
  return Rational(v);
}

// (1/(k+1)) sum_{j=0}^{floor(k/2)} B_{2j} C(k+1, 2j) S_{total+1-2j}
void add_half_product(PowerSumCombo& out, unsigned k, unsigned total) {
  const Rational weight = Rational(1) / Rational(static_cast<long>(k + 1));
  for (unsigned j = 0; j <= k / 2; ++j) {
    out += PowerSumCombo::single(static_cast<int>(total + 1 - 2 * j),
                                 weight * bernoulli(2 * j) * binom(k + 1, 2 * j));
  }
}

}  // namespace

PowerSumCombo::PowerSumCombo(Terms terms) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

PowerSumCombo PowerSumCombo::single(int exponent, const Rational& c) {
  PowerSumCombo out;
  out.add_term(exponent, c);
  return out;
}

PowerSumCombo PowerSumCombo::constant(const Rational& c) { return single(kConstantSlot, c); }

void PowerSumCombo::add_term(int exponent, const Rational& c) {
  if (exponent < kConstantSlot) {
    throw std::invalid_argument("negative power-sum exponent " + std::to_string(exponent));
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Rational PowerSumCombo::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational() : it->second;
}

PowerSumCombo& PowerSumCombo::operator+=(const PowerSumCombo& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

PowerSumCombo& PowerSumCombo::operator-=(const PowerSumCombo& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

PowerSumCombo& PowerSumCombo::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

Polynomial faulhaber(unsigned k) {
  // S_k = 1/(k+1) sum_{j=1}^{k+1} C(k+1, j) (-1)^{k+1-j} B_{k+1-j} n^j
  Polynomial::Terms terms;
  const Rational weight = Rational(1) / Rational(static_cast<long>(k + 1));
  for (unsigned j = 1; j <= k + 1; ++j) {
    Rational c = weight * binom(k + 1, j) * bernoulli(k + 1 - j);
    if ((k + 1 - j) % 2 == 1) c = -c;
    terms.emplace(j, c);
  }
  return Polynomial(std::move(terms));
}

PowerSumCombo product(unsigned k, unsigned m) {
  PowerSumCombo out;
  add_half_product(out, k, k + m);
  add_half_product(out, m, k + m);
  // Boundary correction for S_0 = n.
  const int zero_indices = (k == 0 ? 1 : 0) + (m == 0 ? 1 : 0);
  if (zero_indices != 0) {
    out += PowerSumCombo::single(static_cast<int>(k + m),
                                 Rational(zero_indices) * bernoulli(1));
  }
  return out;
}

PowerSumCombo square(unsigned k) {
  if (k == 0) return product(0, 0);
  // 2/(k+1) sum_{j=0}^{floor(k/2)} B_{2j} C(k+1, 2j) S_{2k+1-2j}
  PowerSumCombo out;
  add_half_product(out, k, 2 * k);
  return out * Rational(2);
}

PowerSumCombo s1_power(unsigned k) {
  if (k == 0) throw std::invalid_argument("s1_power requires k >= 1");
  // 2^{1-k} sum_{j=0}^{floor((k-1)/2)} C(k, 2j+1) S_{2k-1-2j}
  PowerSumCombo out;
  for (unsigned j = 0; j <= (k - 1) / 2; ++j) {
    out += PowerSumCombo::single(static_cast<int>(2 * k - 1 - 2 * j), binom(k, 2 * j + 1));
  }
  return out * (Rational(1) / pow2(k - 1));
}

PowerSumCombo s2_s1_power(unsigned k) {
  // 1/(3 2^k) sum_{j=0}^{floor((k+1)/2)} (2k+3-2j)/(2j+1) C(k+1, 2j) S_{2k+2-2j}
  PowerSumCombo out;
  for (unsigned j = 0; j <= (k + 1) / 2; ++j) {
    const Rational ratio(Integer(2 * k + 3 - 2 * j), Integer(2 * j + 1));
    out += PowerSumCombo::single(static_cast<int>(2 * k + 2 - 2 * j), ratio * binom(k + 1, 2 * j));
  }
  return out * (Rational(1) / (Rational(3) * pow2(k)));
}

Polynomial combo_to_polynomial(const PowerSumCombo& combo) {
  Polynomial out;
  for (const auto& [e, c] : combo.terms()) {
    if (e == PowerSumCombo::kConstantSlot) {
      out += Polynomial(c);
    } else {
      out += faulhaber(static_cast<unsigned>(e)) * c;
    }
  }
  return out;
}

PowerSumCombo polynomial_to_combo(const Polynomial& p) {
  PowerSumCombo out = PowerSumCombo::constant(p.coefficient(0));
  Polynomial rest = p - Polynomial(p.coefficient(0));
  // faulhaber(j) has degree j + 1 and leading coefficient 1/(j + 1).
  while (!rest.is_zero()) {
    const auto& [degree, lead] = *rest.terms().rbegin();
    const unsigned j = degree - 1;
    const Rational c = lead * Rational(static_cast<long>(j + 1));
    out += PowerSumCombo::single(static_cast<int>(j), c);
    rest -= faulhaber(j) * c;
  }
  return out;
}

namespace {

template <typename Range>
Rational primitive_factor_of(const Range& coefficient_lists) {
  Integer den_lcm = 1;
  for (const auto& terms : coefficient_lists) {
    for (const auto& [key, c] : terms) {
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
    }
  }
  Integer content = 0;
  for (const auto& terms : coefficient_lists) {
    for (const auto& [key, c] : terms) content = gcd(content, (c * Rational(den_lcm)).to_integer());
  }
  if (content == 0) return Rational(1);
  return Rational(content, den_lcm);
}

}  // namespace

Rational primitive_factor(std::span<const PowerSumCombo> combos) {
  std::vector<PowerSumCombo::Terms> lists;
  for (const auto& c : combos) lists.push_back(c.terms());
  return primitive_factor_of(lists);
}

Rational primitive_factor(std::span<const Polynomial> polys) {
  std::vector<Polynomial::Terms> lists;
  for (const auto& p : polys) lists.push_back(p.terms());
  return primitive_factor_of(lists);
}

Rational eval_powersum(unsigned k, const Integer& n) { return faulhaber(k).eval(Rational(n)); }

Rational eval_combo(const PowerSumCombo& combo, const Integer& n) {
  Rational sum;
  for (const auto& [e, c] : combo.terms()) {
    sum += e == PowerSumCombo::kConstantSlot ? c : c * eval_powersum(static_cast<unsigned>(e), n);
  }
  return sum;
}

}  // namespace psf
