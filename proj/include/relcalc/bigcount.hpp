/*
 * Copyright 2026 The relcalc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef RELCALC_BIGCOUNT_HPP
#define RELCALC_BIGCOUNT_HPP

#include <compare>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace relcalc {

using BigInt = boost::multiprecision::cpp_int;

/// Exact non-negative integer used for every cardinality.
class BigCount {
 public:
  BigCount() = default;
  BigCount(std::uint64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)

  /// Throws Error(domain) if `v` is negative.
  explicit BigCount(BigInt v);

  /// Parses a decimal string; Error(invalid_argument) on anything else.
  static BigCount from_string(const std::string& decimal);

  static BigCount pow(std::uint64_t base, std::uint64_t exponent);
  static BigCount factorial(std::uint64_t n);

  [[nodiscard]] const BigInt& value() const noexcept { return value_; }
  [[nodiscard]] std::string str() const { return value_.str(); }
  [[nodiscard]] bool is_zero() const noexcept { return value_.is_zero(); }

  BigCount& operator+=(const BigCount& rhs) {
    value_ += rhs.value_;
    return *this;
  }
  BigCount& operator*=(const BigCount& rhs) {
    value_ *= rhs.value_;
    return *this;
  }

  friend BigCount operator+(BigCount lhs, const BigCount& rhs) { return lhs += rhs; }
  friend BigCount operator*(BigCount lhs, const BigCount& rhs) { return lhs *= rhs; }

  friend bool operator==(const BigCount& a, const BigCount& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const BigCount& a, const BigCount& b) {
    const int c = a.value_.compare(b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  BigInt value_;
};

}  // namespace relcalc

#endif  // RELCALC_BIGCOUNT_HPP
