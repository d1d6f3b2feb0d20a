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

#include "relcalc/bigcount.hpp"

#include "relcalc/error.hpp"

namespace relcalc {

BigCount::BigCount(BigInt v) : value_(std::move(v)) {
  if (value_.sign() < 0) {
    throw Error(ErrorCode::domain, "negative count " + value_.str());
  }
}

BigCount BigCount::from_string(const std::string& decimal) {
  if (decimal.empty() || decimal.find_first_not_of("0123456789") != std::string::npos) {
    throw Error(ErrorCode::invalid_argument, "not a decimal natural number: '" + decimal + "'");
  }
  return BigCount(BigInt(decimal));
}

BigCount BigCount::pow(std::uint64_t base, std::uint64_t exponent) {
  BigInt result = 1;
  BigInt b = base;
  for (auto e = exponent; e != 0; e >>= 1) {
    if (e & 1U) result *= b;
    if (e > 1) b *= b;
  }
  return BigCount(std::move(result));
}

BigCount BigCount::factorial(std::uint64_t n) {
  BigInt result = 1;
  for (std::uint64_t i = 2; i <= n; ++i) result *= i;
  return BigCount(std::move(result));
}

}  // namespace relcalc
