#include "psf/bernoulli.hpp"

namespace psf {

BernoulliTable::BernoulliTable() : values_{Rational(1)} {}

Rational BernoulliTable::operator()(std::size_t k) {
  {
    std::shared_lock lock(mutex_);
    if (k < values_.size()) return values_[k];
  }
  std::unique_lock lock(mutex_);
  for (std::size_t n = values_.size(); n <= k; ++n) {
    Rational sum;
    for (std::size_t j = 0; j < n; ++j) {
      if (values_[j].is_zero()) continue;
      sum += Rational(binomial(n + 1, j)) * values_[j];
    }
    values_.push_back(-sum / Rational(static_cast<long>(n + 1)));
  }
  return values_[k];
}

std::size_t BernoulliTable::size() const {
  std::shared_lock lock(mutex_);
  return values_.size();
}

Rational bernoulli(std::size_t k) {
  static BernoulliTable table;
  return table(k);
}

}  // namespace psf
