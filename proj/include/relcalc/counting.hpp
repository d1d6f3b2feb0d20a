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

#ifndef RELCALC_COUNTING_HPP
#define RELCALC_COUNTING_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "relcalc/bigcount.hpp"
#include "relcalc/properties.hpp"

namespace relcalc {

/// Sets of relations A -> B that can be counted or sampled.
enum class RelationClass {
  all,
  ru,
  lu,
  rt,
  lt,
  function,
  injection,
  surjection,
  bijection,
  ru_and_lu,
  ru_and_rt,
  lu_and_lt,
  rt_and_lt,  // no closed form; enumeration only
};

inline constexpr std::array<RelationClass, 13> kAllClasses = {
    RelationClass::all,        RelationClass::ru,        RelationClass::lu,
    RelationClass::rt,         RelationClass::lt,        RelationClass::function,
    RelationClass::injection,  RelationClass::surjection, RelationClass::bijection,
    RelationClass::ru_and_lu,  RelationClass::ru_and_rt, RelationClass::lu_and_lt,
    RelationClass::rt_and_lt};

/// Canonical upper-case names: ALL, RU, ..., RU_AND_RT, RT_AND_LT.
[[nodiscard]] std::string_view class_name(RelationClass cls) noexcept;
/// Case-insensitive inverse of class_name.
[[nodiscard]] std::optional<RelationClass> parse_class(std::string_view name);

[[nodiscard]] bool has_closed_form(RelationClass cls) noexcept;

/**
 * Whether the counting formulas leave the empty relation out of `cls`.
 *
 * The RU and LU formulas, (k+1)^n - 1 and (n+1)^k - 1, and the RU ∩ LU
 * sum all start at one pair, although the empty relation satisfies both
 * uniqueness predicates. ALL counts it. For every other class the question
 * is moot on nonempty sets because the empty relation is never total.
 */
[[nodiscard]] bool excludes_empty(RelationClass cls) noexcept;

/// Membership under the counting convention above.
[[nodiscard]] bool is_member(RelationClass cls, const PropertySet& props, bool is_empty) noexcept;

/// C(n, j); zero when j > n.
[[nodiscard]] BigCount binomial(std::uint64_t n, std::uint64_t j);

// The functions below require n, k >= 1 and throw Error(domain) otherwise.

/// σ(n, k): surjections from an n-set onto a k-set, by inclusion–exclusion.
[[nodiscard]] BigCount surjection_count(std::uint64_t n, std::uint64_t k);

/// η(n, k): injections, the falling factorial k (k-1) ... (k-n+1); 0 if n > k.
[[nodiscard]] BigCount injection_count(std::uint64_t n, std::uint64_t k);

/// Stirling numbers of the second kind from S(n,k) = k S(n-1,k) + S(n-1,k-1).
[[nodiscard]] BigCount stirling2(std::uint64_t n, std::uint64_t k);

/// Closed-form cardinality of `cls`. RT_AND_LT raises Error(domain).
[[nodiscard]] BigCount count(RelationClass cls, std::uint64_t n, std::uint64_t k);

struct CountBounds {
  BigCount lower;
  BigCount upper;
};

/// σ(n,k) <= |RU ∩ RT| <= (k+1)^n - 1, defined for n >= k >= 1.
[[nodiscard]] CountBounds bounds_ru_rt(std::uint64_t n, std::uint64_t k);

}  // namespace relcalc

#endif  // RELCALC_COUNTING_HPP
