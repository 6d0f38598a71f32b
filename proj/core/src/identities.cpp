#include "psf/identities.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <stdexcept>

namespace psf {

namespace {

unsigned parse_index(std::string_view text, std::string_view whole) {
  unsigned value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) {
    throw std::invalid_argument("bad relation mode '" + std::string(whole) +
                                "': indices must be positive integers");
  }
  return value;
}

}  // namespace

RelationMode RelationMode::parse(std::string_view text) {
  if (text.size() < 3 || text[1] != ':') {
    throw std::invalid_argument("bad relation mode '" + std::string(text) + "', expected Q:k,m or F:k");
  }
  const std::string_view args = text.substr(2);
  if (text[0] == 'Q') {
    auto comma = args.find(',');
    if (comma == std::string_view::npos) {
      throw std::invalid_argument("bad relation mode '" + std::string(text) + "', expected Q:k,m");
    }
    return q(parse_index(args.substr(0, comma), text), parse_index(args.substr(comma + 1), text));
  }
  if (text[0] == 'F') return f(parse_index(args, text));
  throw std::invalid_argument("bad relation mode '" + std::string(text) + "', expected Q:k,m or F:k");
}

std::string RelationMode::to_string() const {
  if (kind == Kind::F) return "F:" + std::to_string(k);
  return "Q:" + std::to_string(k) + "," + std::to_string(m);
}

PowerSumCombo build_Q(const BinaryQuadraticForm& form, unsigned k, unsigned m) {
  if (k == 0 || m == 0) throw std::invalid_argument("build_Q requires k, m >= 1");
  return Rational(form.alpha) * square(k) + Rational(form.beta) * product(k, m) +
         Rational(form.gamma) * square(m);
}

PowerSumCombo build_F(const BinaryQuadraticForm& form, unsigned k) {
  if (k == 0) throw std::invalid_argument("build_F requires k >= 1");
  return Rational(form.alpha) * square(2) + Rational(form.beta) * s2_s1_power(k) +
         Rational(form.gamma) * s1_power(2 * k);
}

ComboQuadruple build_relation(const FormQuadruple& fq, const RelationMode& mode) {
  if (!verify_cubic_identity(fq)) {
    throw InvalidSeed("form quadruple does not satisfy q1^3 + q2^3 + q3^3 = q4^3");
  }
  ComboQuadruple cq;
  cq.forms = fq;
  cq.mode = mode;
  for (std::size_t i = 0; i < 4; ++i) {
    cq.c[i] = mode.kind == RelationMode::Kind::Q ? build_Q(fq.q[i], mode.k, mode.m)
                                                 : build_F(fq.q[i], mode.k);
  }
  cq.common_factor = primitive_factor(cq.c);
  const Rational inverse = Rational(1) / cq.common_factor;
  for (auto& c : cq.c) c *= inverse;
  return cq;
}

Polynomial identity_residual(const PolyIdentity& pi) {
  return pi.p[0].pow(3) + pi.p[1].pow(3) + pi.p[2].pow(3) - pi.p[3].pow(3);
}

bool verify_poly_identity(const PolyIdentity& pi) { return identity_residual(pi).is_zero(); }

PolyIdentity expand_relation(const ComboQuadruple& cq) {
  PolyIdentity pi;
  for (std::size_t i = 0; i < 4; ++i) pi.p[i] = combo_to_polynomial(cq.c[i]);
  const Rational factor = primitive_factor(pi.p);
  pi.scale = Rational(1) / factor;
  for (auto& p : pi.p) p *= pi.scale;
  if (!verify_poly_identity(pi)) {
    throw VerificationFailure("expanded relation " + cq.mode.to_string() +
                              " does not satisfy p1^3 + p2^3 + p3^3 = p4^3");
  }
  return pi;
}

RootFactorization factor_common_root(const PolyIdentity& pi) {
  constexpr unsigned kUnbounded = std::numeric_limits<unsigned>::max();
  unsigned s = kUnbounded;
  unsigned t = kUnbounded;
  for (const auto& p : pi.p) {
    if (p.is_zero()) continue;
    s = std::min(s, p.root_multiplicity(Rational(0)));
    t = std::min(t, p.root_multiplicity(Rational(-1)));
  }
  if (s == kUnbounded) s = 0;
  if (t == kUnbounded) t = 0;

  RootFactorization out;
  out.zero_order = s;
  out.minus_one_order = t;
  out.divisor = Polynomial::monomial(s) *
                (Polynomial::monomial(1) + Polynomial(Rational(1))).pow(t);
  out.quotient.scale = pi.scale;
  for (std::size_t i = 0; i < 4; ++i) {
    auto [q, r] = pi.p[i].divmod(out.divisor);
    if (!r.is_zero()) throw VerificationFailure("common root divisor left a remainder");
    out.quotient.p[i] = std::move(q);
  }
  if (!verify_poly_identity(out.quotient)) {
    throw VerificationFailure("quotient identity does not verify");
  }
  return out;
}

}  // namespace psf
