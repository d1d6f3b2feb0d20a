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

#include "relcalc/counting.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include "relcalc/error.hpp"

namespace relcalc {

namespace {

void require_nonempty_sets(std::uint64_t n, std::uint64_t k, std::string_view what) {
  if (n == 0 || k == 0) {
    throw Error(ErrorCode::domain, std::string(what) + " needs n >= 1 and k >= 1, got n=" +
                                       std::to_string(n) + " k=" + std::to_string(k));
  }
}

BigCount power(const BigCount& base, std::uint64_t exponent) {
  BigInt result = 1;
  BigInt b = base.value();
  for (auto e = exponent; e != 0; e >>= 1) {
    if (e & 1U) result *= b;
    if (e > 1) b *= b;
  }
  return BigCount(std::move(result));
}

}  // namespace

std::string_view class_name(RelationClass cls) noexcept {
  switch (cls) {
    case RelationClass::all: return "ALL";
    case RelationClass::ru: return "RU";
    case RelationClass::lu: return "LU";
    case RelationClass::rt: return "RT";
    case RelationClass::lt: return "LT";
    case RelationClass::function: return "FUNCTION";
    case RelationClass::injection: return "INJECTION";
    case RelationClass::surjection: return "SURJECTION";
    case RelationClass::bijection: return "BIJECTION";
    case RelationClass::ru_and_lu: return "RU_AND_LU";
    case RelationClass::ru_and_rt: return "RU_AND_RT";
    case RelationClass::lu_and_lt: return "LU_AND_LT";
    case RelationClass::rt_and_lt: return "RT_AND_LT";
  }
  return "?";
}

std::optional<RelationClass> parse_class(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  for (auto cls : kAllClasses) {
    if (class_name(cls) == upper) return cls;
  }
  return std::nullopt;
}

bool has_closed_form(RelationClass cls) noexcept { return cls != RelationClass::rt_and_lt; }

bool excludes_empty(RelationClass cls) noexcept {
  return cls == RelationClass::ru || cls == RelationClass::lu || cls == RelationClass::ru_and_lu;
}

bool is_member(RelationClass cls, const PropertySet& p, bool is_empty) noexcept {
  if (is_empty && excludes_empty(cls)) return false;
  switch (cls) {
    case RelationClass::all: return true;
    case RelationClass::ru: return p.ru;
    case RelationClass::lu: return p.lu;
    case RelationClass::rt: return p.rt;
    case RelationClass::lt: return p.lt;
    case RelationClass::function: return p.function();
    case RelationClass::injection: return p.injection();
    case RelationClass::surjection: return p.surjection();
    case RelationClass::bijection: return p.bijection();
    case RelationClass::ru_and_lu: return p.ru && p.lu;
    case RelationClass::ru_and_rt: return p.ru && p.rt;
    case RelationClass::lu_and_lt: return p.lu && p.lt;
    case RelationClass::rt_and_lt: return p.rt && p.lt;
  }
  return false;
}

BigCount binomial(std::uint64_t n, std::uint64_t j) {
  if (j > n) return BigCount{0};
  j = std::min(j, n - j);
  BigInt result = 1;
  for (std::uint64_t i = 1; i <= j; ++i) {
    result *= n - j + i;
    result /= i;  // exact: result is C(n - j + i, i) here
  }
  return BigCount(std::move(result));
}

BigCount surjection_count(std::uint64_t n, std::uint64_t k) {
  require_nonempty_sets(n, k, "surjection count");
  // k^n + sum_{j=1}^{k-1} C(k,j) (k-j)^n (-1)^j, in signed arithmetic. For
  // n < k the alternating sum cancels to zero.
  BigInt total = BigCount::pow(k, n).value();
  for (std::uint64_t j = 1; j < k; ++j) {
    BigInt term = binomial(k, j).value() * BigCount::pow(k - j, n).value();
    if (j % 2 == 1) {
      total -= term;
    } else {
      total += term;
    }
  }
  return BigCount(std::move(total));
}

BigCount injection_count(std::uint64_t n, std::uint64_t k) {
  require_nonempty_sets(n, k, "injection count");
  if (n > k) return BigCount{0};
  BigInt result = 1;
  for (std::uint64_t i = 0; i < n; ++i) result *= k - i;
  return BigCount(std::move(result));
}

BigCount stirling2(std::uint64_t n, std::uint64_t k) {
  require_nonempty_sets(n, k, "Stirling number");
  if (k > n) return BigCount{0};
  // row[j] holds S(m, j) for the current m, starting from S(0, 0) = 1.
  std::vector<BigInt> row(k + 1, 0);
  row[0] = 1;
  for (std::uint64_t m = 1; m <= n; ++m) {
    for (std::uint64_t j = std::min(m, k); j >= 1; --j) {
      row[j] = row[j] * j + row[j - 1];
    }
    row[0] = 0;
  }
  return BigCount(std::move(row[k]));
}

BigCount count(RelationClass cls, std::uint64_t n, std::uint64_t k) {
  require_nonempty_sets(n, k, std::string("count of ") + std::string(class_name(cls)));
  auto minus_one = [](BigCount c) { return BigCount(c.value() - 1); };
  switch (cls) {
    case RelationClass::all: return BigCount::pow(2, n * k);
    case RelationClass::ru: return minus_one(BigCount::pow(k + 1, n));
    case RelationClass::lu: return minus_one(BigCount::pow(n + 1, k));
    case RelationClass::lt: return power(minus_one(BigCount::pow(2, k)), n);
    case RelationClass::rt: return power(minus_one(BigCount::pow(2, n)), k);
    case RelationClass::function: return BigCount::pow(k, n);
    case RelationClass::injection: return injection_count(n, k);
    case RelationClass::surjection: return surjection_count(n, k);
    case RelationClass::bijection: return n == k ? BigCount::factorial(n) : BigCount{0};
    case RelationClass::ru_and_lu: {
      BigCount total{0};
      for (std::uint64_t j = 1; j <= std::min(n, k); ++j) total += binomial(n, j) * injection_count(j, k);
      return total;
    }
    case RelationClass::ru_and_rt: {
      BigCount total{0};
      for (std::uint64_t j = k; j <= n; ++j) total += binomial(n, j) * surjection_count(j, k);
      return total;
    }
    case RelationClass::lu_and_lt: {
      BigCount total{0};
      for (std::uint64_t j = n; j <= k; ++j) total += binomial(k, j) * surjection_count(j, n);
      return total;
    }
    case RelationClass::rt_and_lt:
      break;
  }
  throw Error(ErrorCode::domain, std::string(class_name(cls)) +
                                     " has no closed-form count; use an enumeration census");
}

CountBounds bounds_ru_rt(std::uint64_t n, std::uint64_t k) {
  require_nonempty_sets(n, k, "RU/RT bounds");
  if (n < k) {
    throw Error(ErrorCode::domain, "RU/RT bounds need n >= k, got n=" + std::to_string(n) +
                                       " k=" + std::to_string(k));
  }
  return {surjection_count(n, k), count(RelationClass::ru, n, k)};
}

}  // namespace relcalc
