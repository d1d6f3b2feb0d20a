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

#ifndef RELCALC_ENUMERATION_HPP
#define RELCALC_ENUMERATION_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <ranges>
#include <vector>

#include "relcalc/bigcount.hpp"
#include "relcalc/counting.hpp"
#include "relcalc/properties.hpp"
#include "relcalc/relation.hpp"

namespace relcalc {

/// Largest n*k enumerated without an explicit override (2^24 relations).
inline constexpr std::size_t kDefaultEnumerationCap = 24;
/// Largest n*k enumerated at all; indices must fit in 64 bits.
inline constexpr std::size_t kEnumerationHardLimit = 63;
/// Largest n*k for a human-readable appendix listing.
inline constexpr std::size_t kAppendixCellCap = 12;

/// Throws Error(cap) if an n x k enumeration is refused.
void check_enumerable(std::size_t n, std::size_t k, bool allow_large);

/**
 * Every n x k relation in ascending RelationIndex order, as a lazy view.
 * The empty relation (index 0) is skipped unless `include_empty`.
 */
[[nodiscard]] inline auto enumerate(std::size_t n, std::size_t k, bool include_empty,
                                    bool allow_large = false) {
  check_enumerable(n, k, allow_large);
  const std::uint64_t first = include_empty ? 0 : 1;
  const std::uint64_t end = std::uint64_t{1} << (n * k);
  return std::views::iota(first, end) |
         std::views::transform([n, k](std::uint64_t v) { return decode(n, k, RelationIndex{v}); });
}

/// Bucket of a property combination: rt<<3 | lt<<2 | ru<<1 | lu.
[[nodiscard]] constexpr std::size_t bucket_index(const PropertySet& p) noexcept {
  return (static_cast<std::size_t>(p.rt) << 3) | (static_cast<std::size_t>(p.lt) << 2) |
         (static_cast<std::size_t>(p.ru) << 1) | static_cast<std::size_t>(p.lu);
}

[[nodiscard]] constexpr PropertySet bucket_properties(std::size_t index) noexcept {
  return PropertySet{.ru = ((index >> 1) & 1U) != 0,
                     .rt = ((index >> 3) & 1U) != 0,
                     .lu = (index & 1U) != 0,
                     .lt = ((index >> 2) & 1U) != 0};
}

struct Marginals {
  BigCount rt;
  BigCount lt;
  BigCount ru;
  BigCount lu;

  friend bool operator==(const Marginals&, const Marginals&) = default;
};

/// Exhaustive classification of all n x k relations into the 16 property
/// combinations.
struct Census {
  std::size_t n = 0;
  std::size_t k = 0;
  bool include_empty = false;
  std::array<BigCount, 16> buckets{};
  Marginals marginals;

  [[nodiscard]] BigCount total() const;
  [[nodiscard]] const BigCount& bucket(const PropertySet& p) const { return buckets[bucket_index(p)]; }

  /// Sum of the buckets whose combination belongs to `cls`. Whether the
  /// empty relation is included was fixed when the census was taken.
  [[nodiscard]] BigCount count_matching(RelationClass cls) const;
};

struct CensusOptions {
  bool allow_large = false;
  unsigned workers = 0;  // 0: one per hardware thread
};

/// Splits the index space into contiguous chunks, one per worker; the merged
/// buckets are identical for any worker count.
[[nodiscard]] Census census(std::size_t n, std::size_t k, bool include_empty,
                            const CensusOptions& options = {});

/// |cls| by enumeration, under the same empty-relation convention as count().
[[nodiscard]] BigCount count_by_census(RelationClass cls, std::size_t n, std::size_t k,
                                       const CensusOptions& options = {});

struct AppendixRow {
  std::size_t index = 0;  // 1-based position in the listing
  Relation relation;
  PropertySet properties;
};

struct AppendixTable {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<AppendixRow> rows;
  Marginals totals;
};

/// All nonempty n x k relations ordered by pair count, then by their sorted
/// pair lists lexicographically. Refused above kAppendixCellCap cells.
[[nodiscard]] AppendixTable appendix_table(std::size_t n, std::size_t k);

}  // namespace relcalc

#endif  // RELCALC_ENUMERATION_HPP
