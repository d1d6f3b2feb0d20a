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

#ifndef RELCALC_PROPERTIES_HPP
#define RELCALC_PROPERTIES_HPP

#include <array>
#include <string_view>

#include "relcalc/relation.hpp"

namespace relcalc {

/// The four intrinsic properties. Each has a dual under opposite():
/// left unique is right unique of R°, left total is right total of R°.
enum class IntrinsicProperty { right_unique, right_total, left_unique, left_total };

inline constexpr std::array<IntrinsicProperty, 4> kAllProperties = {
    IntrinsicProperty::right_unique, IntrinsicProperty::right_total,
    IntrinsicProperty::left_unique, IntrinsicProperty::left_total};

[[nodiscard]] IntrinsicProperty dual(IntrinsicProperty p) noexcept;
[[nodiscard]] std::string_view short_name(IntrinsicProperty p) noexcept;  // "RU", "RT", ...

/**
 * How a property is decided.
 *
 * pointwise scans rows and columns of the grid directly. pointfree evaluates
 * the containments R∘R° ⊆ 1_B (RU), R∘R° ⊇ 1_B (RT), R°∘R ⊆ 1_A (LU) and
 * R°∘R ⊇ 1_A (LT) with compose/opposite/identity. The two share no code, so
 * each is an oracle for the other.
 */
enum class Method { pointwise, pointfree };

struct PropertySet {
  bool ru = false;
  bool rt = false;
  bool lu = false;
  bool lt = false;

  [[nodiscard]] bool function() const noexcept { return ru && lt; }
  [[nodiscard]] bool injection() const noexcept { return function() && lu; }
  [[nodiscard]] bool surjection() const noexcept { return function() && rt; }
  [[nodiscard]] bool bijection() const noexcept { return injection() && surjection(); }

  [[nodiscard]] bool has(IntrinsicProperty p) const noexcept;

  friend bool operator==(const PropertySet&, const PropertySet&) = default;
};

/// Empty relations are vacuously RU and LU here; counting owns the exclusion.
[[nodiscard]] bool has_property(const Relation& rel, IntrinsicProperty p,
                                Method method = Method::pointwise);

[[nodiscard]] PropertySet classify(const Relation& rel, Method method = Method::pointwise);

enum class InverseSide { right, left };

/**
 * right: R∘S = 1_B, i.e. compose(r, s) == identity(k).
 * left:  S∘R = 1_A, i.e. compose(s, r) == identity(n).
 * R must be n x k and S k x n, otherwise Error(shape).
 */
[[nodiscard]] bool verify_inverse(const Relation& r, const Relation& s, InverseSide side);

}  // namespace relcalc

#endif  // RELCALC_PROPERTIES_HPP
