#pragma once

#include <cstddef>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "psf/exact.hpp"

namespace psf {

/// Bernoulli numbers with the sign convention B_1 = -1/2.
///
/// Values come from the recurrence
///     B_k = -1/(k+1) * sum_{j=0}^{k-1} C(k+1, j) B_j,   k >= 1,
/// and are kept in a table that only grows. Readers take a shared lock and
/// see only entries whose computation has finished; extension happens under
/// an exclusive lock, so filling 0..K costs O(K^2) rational operations once.
///
/// The B_1 = +1/2 convention is NOT interchangeable here: the power-sum
/// polynomials and product formulas built on top of this table assume -1/2.
class BernoulliTable {
 public:
  BernoulliTable();

  Rational operator()(std::size_t k);

  /// Number of entries computed so far.
  std::size_t size() const;

 private:
  mutable std::shared_mutex mutex_;
  std::vector<Rational> values_;
};

/// B_k from the process-wide table.
Rational bernoulli(std::size_t k);

}  // namespace psf
