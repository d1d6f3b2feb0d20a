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

#ifndef RELCALC_RELATION_HPP
#define RELCALC_RELATION_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace relcalc {

/// A pair (a_i, b_j) of a relation, using 1-based labels as they appear in
/// the text format and in listings.
struct Pair {
  std::size_t input = 0;
  std::size_t output = 0;

  friend bool operator==(const Pair&, const Pair&) = default;
  friend auto operator<=>(const Pair&, const Pair&) = default;
};

/**
 * A binary relation R between an input set A = {a_1..a_n} and an output set
 * B = {b_1..b_k}, stored as an n x k bit grid.
 *
 * Bit (i, j) (0-based) is set iff (a_{i+1}, b_{j+1}) is in R. Each input row
 * occupies `stride()` 64-bit words; bits past column k are always zero.
 * Relations are immutable values; use RelationBuilder to create one.
 */
class Relation {
 public:
  /// The empty relation between two empty sets.
  Relation() = default;

  /// The empty relation on n inputs and k outputs.
  Relation(std::size_t n, std::size_t k);

  [[nodiscard]] std::size_t inputs() const noexcept { return n_; }
  [[nodiscard]] std::size_t outputs() const noexcept { return k_; }
  [[nodiscard]] std::size_t cells() const noexcept { return n_ * k_; }
  [[nodiscard]] std::size_t stride() const noexcept { return stride_; }

  /// 0-based membership test. Out-of-range indices are never members.
  [[nodiscard]] bool contains(std::size_t i, std::size_t j) const noexcept;

  [[nodiscard]] std::size_t pair_count() const noexcept;
  [[nodiscard]] bool empty() const noexcept { return pair_count() == 0; }

  /// All pairs as 1-based labels, sorted by (input, output).
  [[nodiscard]] std::vector<Pair> pairs() const;

  /// Words of input row i (0-based).
  [[nodiscard]] std::span<const std::uint64_t> row(std::size_t i) const noexcept {
    return {words_.data() + i * stride_, stride_};
  }

  /// "{(a1, b1), (a2, b2)}" style rendering; used in diagnostics.
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  friend class RelationBuilder;

  std::size_t n_ = 0;
  std::size_t k_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Mutable staging area for a Relation. `build()` hands over the bits.
class RelationBuilder {
 public:
  RelationBuilder(std::size_t n, std::size_t k) : rel_(n, k) {}

  /// 0-based. Throws Error(shape) when (i, j) lies outside the grid.
  RelationBuilder& set(std::size_t i, std::size_t j);

  /// ORs `words` into row i. Bits beyond column k are discarded.
  RelationBuilder& set_row(std::size_t i, std::span<const std::uint64_t> words);

  [[nodiscard]] Relation build() && { return std::move(rel_); }

 private:
  Relation rel_;
};

/// Index of a relation in the canonical enumeration order: bit (i, j) of
/// the grid is bit i*k + j of the value. Defined for n*k <= 64.
struct RelationIndex {
  std::uint64_t value = 0;

  friend bool operator==(const RelationIndex&, const RelationIndex&) = default;
  friend auto operator<=>(const RelationIndex&, const RelationIndex&) = default;
};

inline constexpr std::size_t kMaxIndexedCells = 64;

[[nodiscard]] RelationIndex encode(const Relation& rel);
[[nodiscard]] Relation decode(std::size_t n, std::size_t k, RelationIndex index);

/// Builds the n x k relation holding `pairs` (1-based labels). Duplicates
/// collapse. An out-of-range label throws Error(invalid_argument) naming the
/// pair.
[[nodiscard]] Relation make_relation(std::size_t n, std::size_t k,
                                     std::span<const Pair> pairs);

/// 1_A on a set of size n.
[[nodiscard]] Relation identity(std::size_t n);

/// R°: every pair reversed; the result is k x n.
[[nodiscard]] Relation opposite(const Relation& rel);

/**
 * S ∘ R: first apply R, then apply S. R is n x k and S is k x m; the result
 * is n x m with (a, c) set iff some b has (a, b) in R and (b, c) in S.
 *
 * Note the argument order: `compose(s, r)` is the boolean matrix product
 * r * s, not s * r. Throws Error(shape) if R's output size differs from
 * S's input size.
 */
[[nodiscard]] Relation compose(const Relation& s, const Relation& r);

/// R ⊆ S. Throws Error(shape) unless both have the same (n, k).
[[nodiscard]] bool is_subset(const Relation& r, const Relation& s);

}  // namespace relcalc

#endif  // RELCALC_RELATION_HPP
