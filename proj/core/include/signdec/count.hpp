#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace signdec {

using BigCount = boost::multiprecision::cpp_int;

/// Exact nonnegative count that may also be "infinite".
///
/// Infinity absorbs under both addition and multiplication; callers never
/// multiply by a zero count, so inf * 0 is left as inf.
class Count {
 public:
  Count() = default;
  Count(BigCount value) : value_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  Count(long long value) : value_(value) {}            // NOLINT(google-explicit-constructor)

  static Count infinite() {
    Count c;
    c.infinite_ = true;
    return c;
  }

  bool is_finite() const { return !infinite_; }
  bool is_infinite() const { return infinite_; }

  // Throws std::logic_error when infinite.
  const BigCount& value() const;

  std::string to_string() const { return infinite_ ? "infinite" : value_.str(); }

  Count& operator+=(const Count& other);
  Count& operator*=(const Count& other);
  friend Count operator+(Count a, const Count& b) { return a += b; }
  friend Count operator*(Count a, const Count& b) { return a *= b; }

  friend bool operator==(const Count& a, const Count& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }

 private:
  BigCount value_ = 0;
  bool infinite_ = false;
};

BigCount binomial(unsigned n, unsigned k);

}  // namespace signdec
