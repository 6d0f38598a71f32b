#pragma once

// Test-only reference computations. Nothing here may call into the code paths
// it is used to check (Bernoulli recurrence, Faulhaber polynomials, product
// formulas).

#include <array>
#include <random>
#include <vector>

#include "psf/cubic_forms.hpp"
#include "psf/exact.hpp"

namespace psf::oracle {

/// 1^k + 2^k + ... + n^k by direct summation (n >= 0).
inline Integer direct_power_sum(unsigned k, long n) {
  Integer sum = 0;
  for (long i = 1; i <= n; ++i) {
    Integer term = 1;
    for (unsigned e = 0; e < k; ++e) term *= i;
    sum += term;
  }
  return sum;
}

/// S_k extended to negative n by subtracting 0^k, (-1)^k, ...: S(n-1) = S(n) - n^k.
inline Integer extended_power_sum(unsigned k, long n) {
  if (n >= 0) return direct_power_sum(k, n);
  Integer s = 0;  // S(0)
  for (long i = 0; i > n; --i) {
    Integer term = 1;
    for (unsigned e = 0; e < k; ++e) term *= i;
    s -= (k == 0 ? Integer(1) : term);
  }
  return s;
}

/// Bernoulli numbers via the Akiyama-Tanigawa algorithm (B_1 = +1/2 there),
/// converted to the B_1 = -1/2 convention.
inline std::vector<Rational> akiyama_tanigawa(unsigned count) {
  std::vector<Rational> out;
  std::vector<Rational> a;
  for (unsigned m = 0; m < count; ++m) {
    a.push_back(Rational(Integer(1), Integer(m + 1)));
    for (unsigned j = m; j >= 1; --j) {
      a[j - 1] = Rational(static_cast<long>(j)) * (a[j - 1] - a[j]);
    }
    out.push_back(a[0]);
  }
  if (count > 1) out[1] = -out[1];
  return out;
}

/// B_k = -1/(k+1) * sum_{j<k} C(k+1, j) B_j with binomials from Pascal's triangle.
inline std::vector<Rational> bernoulli_recurrence(unsigned count) {
  std::vector<std::vector<Integer>> pascal{{Integer(1)}};
  for (unsigned r = 1; r <= count; ++r) {
    std::vector<Integer> row(r + 1, Integer(1));
    for (unsigned j = 1; j < r; ++j) row[j] = pascal[r - 1][j - 1] + pascal[r - 1][j];
    pascal.push_back(std::move(row));
  }
  std::vector<Rational> b;
  for (unsigned k = 0; k < count; ++k) {
    if (k == 0) {
      b.push_back(Rational(1));
      continue;
    }
    Rational sum;
    for (unsigned j = 0; j < k; ++j) sum += Rational(pascal[k + 1][j]) * b[j];
    b.push_back(-sum / Rational(static_cast<long>(k + 1)));
  }
  return b;
}

/// Nontrivial solutions of a^3 + b^3 + c^3 = d^3 used as bases for random seeds.
inline const std::vector<std::array<long, 4>>& base_solutions() {
  static const std::vector<std::array<long, 4>> kBases = {
      {3, 4, 5, 6},     {1, 6, 8, 9},     {7, 14, 17, 20},  {3, 10, 18, 19},
      {11, 15, 27, 29}, {2, 17, 40, 41},  {6, 32, 33, 41},  {16, 23, 41, 44},
      {3, 36, 37, 46},  {27, 30, 37, 46}, {1, 12, -10, 9},  {9, 10, -1, 12},
  };
  return kBases;
}

/// Random valid seed: a base solution, permuted in (a, b, c), scaled by t in 1..20.
inline CubicQuadruple random_seed(std::mt19937_64& rng) {
  const auto& bases = base_solutions();
  std::array<long, 4> s = bases[std::uniform_int_distribution<std::size_t>(0, bases.size() - 1)(rng)];
  std::array<int, 3> perm{0, 1, 2};
  std::shuffle(perm.begin(), perm.end(), rng);
  const long t = std::uniform_int_distribution<long>(1, 20)(rng);
  return CubicQuadruple(Integer(s[perm[0]] * t), Integer(s[perm[1]] * t), Integer(s[perm[2]] * t),
                        Integer(s[3] * t));
}

}  // namespace psf::oracle
