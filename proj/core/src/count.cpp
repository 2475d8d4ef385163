#include "signdec/count.hpp"

#include <stdexcept>

namespace signdec {

const BigCount& Count::value() const {
  if (infinite_) throw std::logic_error("Count::value() called on an infinite count");
  return value_;
}

Count& Count::operator+=(const Count& other) {
  if (other.infinite_) infinite_ = true;
  if (!infinite_) value_ += other.value_;
  return *this;
}

Count& Count::operator*=(const Count& other) {
  if (other.infinite_) infinite_ = true;
  if (!infinite_) value_ *= other.value_;
  return *this;
}

BigCount binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigCount result = 1;
  // result stays integral: after step i it equals binom(n - k + i, i).
  for (unsigned i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

}  // namespace signdec
