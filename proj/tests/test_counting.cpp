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

#include <doctest.h>

#include <functional>

#include "oracle.hpp"
#include "relcalc/counting.hpp"
#include "relcalc/error.hpp"

using namespace relcalc;

namespace {

BigCount big(std::uint64_t v) { return BigCount{v}; }

/// Oracle membership for every class with a closed form, written against
/// the bit masks alone.
bool oracle_member(RelationClass cls, const oracle::Mask& m) {
  const bool ru = oracle::right_unique(m), rt = oracle::right_total(m);
  const bool lu = oracle::left_unique(m), lt = oracle::left_total(m);
  const bool fn = ru && lt;
  switch (cls) {
    case RelationClass::all: return true;
    case RelationClass::ru: return ru;
    case RelationClass::lu: return lu;
    case RelationClass::rt: return rt;
    case RelationClass::lt: return lt;
    case RelationClass::function: return fn;
    case RelationClass::injection: return fn && lu;
    case RelationClass::surjection: return fn && rt;
    case RelationClass::bijection: return fn && lu && rt;
    case RelationClass::ru_and_lu: return ru && lu;
    case RelationClass::ru_and_rt: return ru && rt;
    case RelationClass::lu_and_lt: return lu && lt;
    case RelationClass::rt_and_lt: return rt && lt;
  }
  return false;
}

template <typename F>
void check_domain_error(F f) {
  try {
    f();
    FAIL("expected a domain error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::domain);
  }
}

}  // namespace

TEST_CASE("binomial") {
  CHECK(binomial(4, 2) == big(6));
  CHECK(binomial(3, 5) == big(0));
  for (std::uint64_t n = 0; n <= 10; ++n) CHECK(binomial(n, 0) == big(1));
  CHECK(binomial(0, 0) == big(1));
  CHECK(binomial(100, 50).str() == "100891344545564193334812497256");
  for (std::uint64_t n = 1; n <= 20; ++n)
    for (std::uint64_t j = 1; j <= n; ++j) REQUIRE(binomial(n, j) == binomial(n - 1, j - 1) + binomial(n - 1, j));
}

TEST_CASE("surjection_count") {
  CHECK(surjection_count(3, 3) == big(6));
  CHECK(surjection_count(2, 3) == big(0));
  CHECK(surjection_count(3, 2) == big(oracle::surjections(3, 2)));
  CHECK(surjection_count(3, 2) == big(6));
  for (std::uint64_t n = 1; n <= 7; ++n)
    for (std::uint64_t k = 1; k <= 7; ++k) REQUIRE(surjection_count(n, k) == big(oracle::surjections(n, k)));
  for (std::uint64_t n = 1; n <= 12; ++n) {
    CHECK(surjection_count(n, 1) == big(1));
    CHECK(surjection_count(n, n) == BigCount::factorial(n));
    CHECK(surjection_count(n, n + 1) == big(0));
  }
  // Large arguments stay exact: σ(30, 29) = C(30, 2)·29!.
  CHECK(surjection_count(30, 29) == binomial(30, 2) * BigCount::factorial(29));
  check_domain_error([] { (void)surjection_count(0, 1); });
  check_domain_error([] { (void)surjection_count(1, 0); });
}

TEST_CASE("injection_count") {
  CHECK(injection_count(2, 4) == big(12));
  CHECK(injection_count(3, 2) == big(0));
  CHECK(injection_count(3, 3) == big(oracle::injections(3, 3)));
  for (std::uint64_t n = 1; n <= 6; ++n)
    for (std::uint64_t k = 1; k <= 7; ++k) REQUIRE(injection_count(n, k) == big(oracle::injections(n, k)));
  check_domain_error([] { (void)injection_count(0, 3); });
}

TEST_CASE("stirling2") {
  CHECK(stirling2(3, 2) == big(oracle::partitions(3, 2)));
  CHECK(stirling2(3, 2) == big(3));
  CHECK(stirling2(4, 2) == big(7));
  for (std::uint64_t n = 1; n <= 6; ++n) CHECK(stirling2(n, n) == big(1));
  for (std::uint64_t n = 1; n <= 9; ++n)
    for (std::uint64_t k = 1; k <= 9; ++k) REQUIRE(stirling2(n, k) == big(oracle::partitions(n, k)));
  check_domain_error([] { (void)stirling2(0, 0); });
}

TEST_CASE("count examples") {
  CHECK(count(RelationClass::ru, 3, 2) == big(26));
  CHECK(count(RelationClass::ru_and_lu, 3, 2) == big(12));
  CHECK(count(RelationClass::ru_and_rt, 4, 2) == big(50));
  CHECK(count(RelationClass::lt, 3, 2) == big(27));
  CHECK(count(RelationClass::rt, 3, 2) == big(49));
  CHECK(count(RelationClass::ru_and_rt, 2, 3) == big(0));
  CHECK(count(RelationClass::all, 3, 2) == big(64));
  CHECK(count(RelationClass::function, 3, 2) == big(8));
  CHECK(count(RelationClass::bijection, 4, 4) == big(24));
  CHECK(count(RelationClass::bijection, 4, 3) == big(0));
  CHECK(count(RelationClass::all, 10, 10) == BigCount::pow(2, 100));
  CHECK(count(RelationClass::lt, 3, 70) == BigCount(BigCount::pow(2, 70).value() - 1) *
                                              BigCount(BigCount::pow(2, 70).value() - 1) *
                                              BigCount(BigCount::pow(2, 70).value() - 1));
}

TEST_CASE("count errors") {
  check_domain_error([] { (void)count(RelationClass::ru, 0, 2); });
  check_domain_error([] { (void)count(RelationClass::all, 2, 0); });
  check_domain_error([] { (void)count(RelationClass::rt_and_lt, 3, 2); });
  CHECK_FALSE(has_closed_form(RelationClass::rt_and_lt));
  for (auto cls : kAllClasses)
    if (cls != RelationClass::rt_and_lt) CHECK(has_closed_form(cls));
}

TEST_CASE("class names round-trip case-insensitively") {
  for (auto cls : kAllClasses) {
    CHECK(parse_class(class_name(cls)) == cls);
    std::string lower(class_name(cls));
    for (auto& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    CHECK(parse_class(lower) == cls);
  }
  CHECK(class_name(RelationClass::ru_and_rt) == "RU_AND_RT");
  CHECK_FALSE(parse_class("NOPE").has_value());
  CHECK_FALSE(parse_class("").has_value());
}

TEST_CASE("closed forms equal brute force for n*k <= 16") {
  for (std::size_t n = 1; n <= 16; ++n)
    for (std::size_t k = 1; n * k <= 16; ++k)
      for (auto cls : kAllClasses) {
        if (!has_closed_form(cls)) continue;
        CAPTURE(class_name(cls));
        CAPTURE(n);
        CAPTURE(k);
        const auto expected = oracle::count_relations(
            n, k, !excludes_empty(cls), [cls](const oracle::Mask& m) { return oracle_member(cls, m); });
        REQUIRE(count(cls, n, k) == big(expected));
      }
}

TEST_CASE("identities") {
  for (std::uint64_t n = 1; n <= 8; ++n)
    for (std::uint64_t k = 1; k <= 8; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      // Binomial theorem behind the RU formula.
      BigCount sum;
      for (std::uint64_t j = 1; j <= n; ++j) sum += binomial(n, j) * BigCount::pow(k, j);
      REQUIRE(sum == count(RelationClass::ru, n, k));

      REQUIRE(count(RelationClass::lu, n, k) == count(RelationClass::ru, k, n));
      REQUIRE(count(RelationClass::rt, n, k) == count(RelationClass::lt, k, n));
      REQUIRE(count(RelationClass::lu_and_lt, n, k) == count(RelationClass::ru_and_rt, k, n));
      REQUIRE(count(RelationClass::ru_and_lu, n, k) == count(RelationClass::ru_and_lu, k, n));

      REQUIRE(surjection_count(n, k) == BigCount::factorial(k) * stirling2(n, k));
      REQUIRE(count(RelationClass::surjection, n, k) <= count(RelationClass::function, n, k));
      REQUIRE(count(RelationClass::injection, n, k) <= count(RelationClass::function, n, k));

      // Both readings of the RU ∩ LU upper limit give the same sum because
      // η(j, k) vanishes for j > k.
      BigCount up_to_n, up_to_k;
      for (std::uint64_t j = 1; j <= n; ++j) up_to_n += binomial(n, j) * injection_count(j, k);
      for (std::uint64_t j = 1; j <= k; ++j) up_to_k += binomial(n, j) * injection_count(j, k);
      REQUIRE(up_to_n == up_to_k);
      REQUIRE(up_to_n == count(RelationClass::ru_and_lu, n, k));
    }
}

TEST_CASE("bounds_ru_rt") {
  auto b = bounds_ru_rt(3, 2);
  CHECK(b.lower == big(6));
  CHECK(b.upper == big(26));
  CHECK(count(RelationClass::ru_and_rt, 3, 2) == big(12));
  b = bounds_ru_rt(2, 2);
  CHECK(b.lower == big(2));
  CHECK(b.upper == big(8));
  CHECK(count(RelationClass::ru_and_rt, 2, 2) == b.lower);
  b = bounds_ru_rt(1, 1);
  CHECK(b.lower == big(1));
  CHECK(b.upper == big(1));
  check_domain_error([] { (void)bounds_ru_rt(2, 3); });

  for (std::uint64_t n = 1; n <= 8; ++n)
    for (std::uint64_t k = 1; k <= n; ++k) {
      const auto bk = bounds_ru_rt(n, k);
      const auto mid = count(RelationClass::ru_and_rt, n, k);
      REQUIRE(bk.lower <= mid);
      REQUIRE(mid <= bk.upper);
    }
}

TEST_CASE("BigCount") {
  CHECK(BigCount::from_string("123456789012345678901234567890").str() == "123456789012345678901234567890");
  CHECK_THROWS_AS((void)BigCount::from_string("12a"), Error);
  CHECK_THROWS_AS((void)BigCount::from_string("-3"), Error);
  CHECK_THROWS_AS((void)BigCount(BigInt(-1)), Error);
  CHECK(BigCount::factorial(0) == big(1));
  CHECK(BigCount::factorial(20) == big(2432902008176640000ULL));
  CHECK(BigCount::pow(3, 0) == big(1));
  CHECK(big(2) < big(3));
  CHECK(BigCount().is_zero());
}
