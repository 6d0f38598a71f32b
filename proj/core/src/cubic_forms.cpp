#include "psf/cubic_forms.hpp"

#include <algorithm>

namespace psf {

namespace {

Integer cube(const Integer& x) { return x * x * x; }

}  // namespace

bool is_cubic_solution(const std::array<Integer, 4>& x) {
  return cube(x[0]) + cube(x[1]) + cube(x[2]) == cube(x[3]);
}

CubicQuadruple::CubicQuadruple(Integer a, Integer b, Integer c, Integer d)
    : v_{std::move(a), std::move(b), std::move(c), std::move(d)} {
  const auto text = [this] {
    return "(" + to_string(v_[0]) + "," + to_string(v_[1]) + "," + to_string(v_[2]) + "," +
           to_string(v_[3]) + ")";
  };
  if (!is_cubic_solution(v_)) {
    throw InvalidSeed("seed " + text() + " violates a^3 + b^3 + c^3 = d^3");
  }
  if (std::any_of(v_.begin(), v_.end(), [](const Integer& x) { return x == 0; })) {
    throw InvalidSeed("seed " + text() + " violates abcd != 0");
  }
  if (v_[3] == v_[0] || v_[3] == v_[1] || v_[3] == v_[2]) {
    throw InvalidSeed("seed " + text() + " is trivial: d equals one of a, b, c");
  }
}

CubicQuadruple permute_seed(const CubicQuadruple& seed, const SeedPermutation& perm) {
  auto sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != SeedPermutation{0, 1, 2}) {
    throw std::invalid_argument("not a permutation of {0, 1, 2}");
  }
  const auto& v = seed.values();
  return CubicQuadruple(v[perm[0]], v[perm[1]], v[perm[2]], v[3]);
}

FormQuadruple sandor_generate(const CubicQuadruple& seed) {
  const Integer &a = seed.a(), &b = seed.b(), &c = seed.c(), &d = seed.d();
  const Integer ac = a + c;
  const Integer db = d - b;
  const Integer cross1 = (d - b) * (d + b);
  const Integer cross2 = (c - a) * (c + a);
  FormQuadruple fq;
  fq.q[0] = {a * ac, cross1, -c * db};
  fq.q[1] = {b * ac, -cross2, d * db};
  fq.q[2] = {c * ac, -cross1, -a * db};
  fq.q[3] = {d * ac, -cross2, b * db};
  fq.seed = seed;
  return fq;
}

BivariatePoly cubic_residual(const FormQuadruple& fq) {
  BivariatePoly residual;
  for (int i = 0; i < 3; ++i) residual += fq.q[i].to_bivariate().pow(3);
  residual -= fq.q[3].to_bivariate().pow(3);
  return residual;
}

bool verify_cubic_identity(const FormQuadruple& fq) { return cubic_residual(fq).is_zero(); }

std::pair<FormQuadruple, Integer> content_reduce(const FormQuadruple& fq) {
  Integer g = 0;
  for (const auto& f : fq.q) g = gcd(gcd(gcd(g, f.alpha), f.beta), f.gamma);
  if (g == 0 || g == 1) return {fq, g};
  FormQuadruple out = fq;
  for (auto& f : out.q) {
    f.alpha /= g;
    f.beta /= g;
    f.gamma /= g;
  }
  return {out, g};
}

FormQuadruple substitute(const FormQuadruple& fq, const SubstitutionMatrix& m) {
  static constexpr const char* kNames[] = {"alpha", "beta", "gamma"};
  FormQuadruple out = fq;
  for (std::size_t i = 0; i < 4; ++i) {
    const auto coeffs = substitute_coefficients(fq.q[i], m);
    for (std::size_t j = 0; j < 3; ++j) {
      if (!coeffs[j].is_integer()) {
        throw std::domain_error("substitution leaves non-integral " + std::string(kNames[j]) +
                                " = " + coeffs[j].to_string() + " in q" + std::to_string(i + 1));
      }
    }
    out.q[i] = {coeffs[0].to_integer(), coeffs[1].to_integer(), coeffs[2].to_integer()};
  }
  return out;
}

std::array<Integer, 4> evaluate_forms(const FormQuadruple& fq, const Integer& u, const Integer& v) {
  return {fq.q[0].evaluate(u, v), fq.q[1].evaluate(u, v), fq.q[2].evaluate(u, v),
          fq.q[3].evaluate(u, v)};
}

Rational fraction_ratio(const CubicQuadruple& seed) {
  return Rational(seed.a() + seed.c(), seed.d() - seed.b());
}

bool check_characterization(const CubicQuadruple& seed, const FormQuadruple& fq) {
  const Rational lhs_scale(seed.d() - seed.b());
  const Rational rhs_scale(seed.a() + seed.c());
  const BivariatePoly lhs = (fq.q[0].to_bivariate() + fq.q[2].to_bivariate()) * lhs_scale;
  const BivariatePoly rhs = (fq.q[3].to_bivariate() - fq.q[1].to_bivariate()) * rhs_scale;
  return (lhs - rhs).is_zero();
}

}  // namespace psf
