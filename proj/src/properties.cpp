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

#include "relcalc/properties.hpp"

#include <bit>
#include <vector>

#include "relcalc/error.hpp"

namespace relcalc {

namespace {

bool rows_at_most_one(const Relation& rel) {
  for (std::size_t i = 0; i < rel.inputs(); ++i) {
    std::size_t bits = 0;
    for (auto w : rel.row(i)) bits += static_cast<std::size_t>(std::popcount(w));
    if (bits > 1) return false;
  }
  return true;
}

bool rows_nonempty(const Relation& rel) {
  for (std::size_t i = 0; i < rel.inputs(); ++i) {
    bool any = false;
    for (auto w : rel.row(i)) any = any || w != 0;
    if (!any) return false;
  }
  return true;
}

bool columns_covered(const Relation& rel) {
  std::vector<std::uint64_t> seen(rel.stride(), 0);
  for (std::size_t i = 0; i < rel.inputs(); ++i) {
    const auto row = rel.row(i);
    for (std::size_t w = 0; w < row.size(); ++w) seen[w] |= row[w];
  }
  std::size_t covered = 0;
  for (auto w : seen) covered += static_cast<std::size_t>(std::popcount(w));
  return covered == rel.outputs();
}

bool columns_at_most_one(const Relation& rel) {
  std::vector<std::uint64_t> seen(rel.stride(), 0);
  for (std::size_t i = 0; i < rel.inputs(); ++i) {
    const auto row = rel.row(i);
    for (std::size_t w = 0; w < row.size(); ++w) {
      if ((seen[w] & row[w]) != 0) return false;
      seen[w] |= row[w];
    }
  }
  return true;
}

bool pointwise(const Relation& rel, IntrinsicProperty p) {
  switch (p) {
    case IntrinsicProperty::right_unique: return rows_at_most_one(rel);
    case IntrinsicProperty::right_total: return columns_covered(rel);
    case IntrinsicProperty::left_unique: return columns_at_most_one(rel);
    case IntrinsicProperty::left_total: return rows_nonempty(rel);
  }
  return false;
}

bool pointfree(const Relation& rel, IntrinsicProperty p) {
  switch (p) {
    case IntrinsicProperty::right_unique:
      return is_subset(compose(rel, opposite(rel)), identity(rel.outputs()));
    case IntrinsicProperty::right_total:
      return is_subset(identity(rel.outputs()), compose(rel, opposite(rel)));
    case IntrinsicProperty::left_unique:
      return is_subset(compose(opposite(rel), rel), identity(rel.inputs()));
    case IntrinsicProperty::left_total:
      return is_subset(identity(rel.inputs()), compose(opposite(rel), rel));
  }
  return false;
}

}  // namespace

IntrinsicProperty dual(IntrinsicProperty p) noexcept {
  switch (p) {
    case IntrinsicProperty::right_unique: return IntrinsicProperty::left_unique;
    case IntrinsicProperty::right_total: return IntrinsicProperty::left_total;
    case IntrinsicProperty::left_unique: return IntrinsicProperty::right_unique;
    case IntrinsicProperty::left_total: return IntrinsicProperty::right_total;
  }
  return p;
}

std::string_view short_name(IntrinsicProperty p) noexcept {
  switch (p) {
    case IntrinsicProperty::right_unique: return "RU";
    case IntrinsicProperty::right_total: return "RT";
    case IntrinsicProperty::left_unique: return "LU";
    case IntrinsicProperty::left_total: return "LT";
  }
  return "?";
}

bool PropertySet::has(IntrinsicProperty p) const noexcept {
  switch (p) {
    case IntrinsicProperty::right_unique: return ru;
    case IntrinsicProperty::right_total: return rt;
    case IntrinsicProperty::left_unique: return lu;
    case IntrinsicProperty::left_total: return lt;
  }
  return false;
}

bool has_property(const Relation& rel, IntrinsicProperty p, Method method) {
  return method == Method::pointwise ? pointwise(rel, p) : pointfree(rel, p);
}

PropertySet classify(const Relation& rel, Method method) {
  return PropertySet{
      .ru = has_property(rel, IntrinsicProperty::right_unique, method),
      .rt = has_property(rel, IntrinsicProperty::right_total, method),
      .lu = has_property(rel, IntrinsicProperty::left_unique, method),
      .lt = has_property(rel, IntrinsicProperty::left_total, method),
  };
}

bool verify_inverse(const Relation& r, const Relation& s, InverseSide side) {
  if (s.inputs() != r.outputs() || s.outputs() != r.inputs()) {
    throw Error(ErrorCode::shape, "inverse candidate must be " + std::to_string(r.outputs()) + "x" +
                                      std::to_string(r.inputs()) + ", got " + std::to_string(s.inputs()) +
                                      "x" + std::to_string(s.outputs()));
  }
  if (side == InverseSide::right) return compose(r, s) == identity(r.outputs());
  return compose(s, r) == identity(r.inputs());
}

}  // namespace relcalc
