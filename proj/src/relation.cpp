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

#include "relcalc/relation.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "relcalc/error.hpp"

namespace relcalc {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

// Mask of the valid bits in word w of a row holding k columns.
std::uint64_t column_mask(std::size_t k, std::size_t w) {
  const std::size_t first = w * kWordBits;
  if (first >= k) return 0;
  const std::size_t live = k - first;
  return live >= kWordBits ? ~std::uint64_t{0} : ((std::uint64_t{1} << live) - 1);
}

std::string shape_of(const Relation& r) {
  return std::to_string(r.inputs()) + "x" + std::to_string(r.outputs());
}

}  // namespace

Relation::Relation(std::size_t n, std::size_t k)
    : n_(n), k_(k), stride_(words_for(k)), words_(n * words_for(k), 0) {}

bool Relation::contains(std::size_t i, std::size_t j) const noexcept {
  if (i >= n_ || j >= k_) return false;
  return (words_[i * stride_ + j / kWordBits] >> (j % kWordBits)) & 1U;
}

std::size_t Relation::pair_count() const noexcept {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::vector<Pair> Relation::pairs() const {
  std::vector<Pair> out;
  out.reserve(pair_count());
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t w = 0; w < stride_; ++w) {
      for (auto bits = words_[i * stride_ + w]; bits != 0; bits &= bits - 1) {
        const auto j = w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
        out.push_back({i + 1, j + 1});
      }
    }
  }
  return out;
}

std::string Relation::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& p : pairs()) {
    if (!first) os << ", ";
    first = false;
    os << "(a" << p.input << ", b" << p.output << ')';
  }
  os << "} over " << shape_of(*this);
  return os.str();
}

RelationBuilder& RelationBuilder::set(std::size_t i, std::size_t j) {
  if (i >= rel_.n_ || j >= rel_.k_) {
    throw Error(ErrorCode::shape, "cell (" + std::to_string(i) + ", " + std::to_string(j) +
                                      ") outside a " + shape_of(rel_) + " grid");
  }
  rel_.words_[i * rel_.stride_ + j / kWordBits] |= std::uint64_t{1} << (j % kWordBits);
  return *this;
}

RelationBuilder& RelationBuilder::set_row(std::size_t i, std::span<const std::uint64_t> words) {
  if (i >= rel_.n_) {
    throw Error(ErrorCode::shape, "row " + std::to_string(i) + " outside a " + shape_of(rel_) + " grid");
  }
  const std::size_t count = std::min(words.size(), rel_.stride_);
  for (std::size_t w = 0; w < count; ++w) {
    rel_.words_[i * rel_.stride_ + w] |= words[w] & column_mask(rel_.k_, w);
  }
  return *this;
}

RelationIndex encode(const Relation& rel) {
  if (rel.cells() > kMaxIndexedCells) {
    throw Error(ErrorCode::cap, "relation " + shape_of(rel) + " has more than 64 cells; no index");
  }
  std::uint64_t value = 0;
  const std::size_t k = rel.outputs();
  for (std::size_t i = 0; i < rel.inputs(); ++i) {
    if (k == 0) break;
    // k <= 64 here, so every row is a single word.
    value |= rel.row(i)[0] << (i * k);
  }
  return {value};
}

Relation decode(std::size_t n, std::size_t k, RelationIndex index) {
  if (n * k > kMaxIndexedCells) {
    throw Error(ErrorCode::cap, "a " + std::to_string(n) + "x" + std::to_string(k) +
                                    " relation has more than 64 cells; no index");
  }
  if (n * k < kMaxIndexedCells && (index.value >> (n * k)) != 0) {
    throw Error(ErrorCode::invalid_argument,
                "index " + std::to_string(index.value) + " out of range for " + std::to_string(n) +
                    "x" + std::to_string(k));
  }
  RelationBuilder b(n, k);
  if (k == 0) return std::move(b).build();
  const std::uint64_t row_mask = column_mask(k, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t word = (index.value >> (i * k)) & row_mask;
    b.set_row(i, std::span<const std::uint64_t>(&word, 1));
  }
  return std::move(b).build();
}

Relation make_relation(std::size_t n, std::size_t k, std::span<const Pair> pairs) {
  RelationBuilder b(n, k);
  for (const auto& p : pairs) {
    if (p.input < 1 || p.input > n || p.output < 1 || p.output > k) {
      throw Error(ErrorCode::invalid_argument,
                  "pair (" + std::to_string(p.input) + ", " + std::to_string(p.output) +
                      ") out of range for a relation " + std::to_string(n) + "x" + std::to_string(k));
    }
    b.set(p.input - 1, p.output - 1);
  }
  return std::move(b).build();
}

Relation identity(std::size_t n) {
  RelationBuilder b(n, n);
  for (std::size_t i = 0; i < n; ++i) b.set(i, i);
  return std::move(b).build();
}

Relation opposite(const Relation& rel) {
  RelationBuilder b(rel.outputs(), rel.inputs());
  for (std::size_t i = 0; i < rel.inputs(); ++i) {
    const auto row = rel.row(i);
    for (std::size_t w = 0; w < row.size(); ++w) {
      for (auto bits = row[w]; bits != 0; bits &= bits - 1) {
        b.set(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)), i);
      }
    }
  }
  return std::move(b).build();
}

Relation compose(const Relation& s, const Relation& r) {
  if (r.outputs() != s.inputs()) {
    throw Error(ErrorCode::shape, "cannot compose S " + shape_of(s) + " after R " + shape_of(r) +
                                      ": R's output size differs from S's input size");
  }
  RelationBuilder b(r.inputs(), s.outputs());
  for (std::size_t a = 0; a < r.inputs(); ++a) {
    const auto row = r.row(a);
    for (std::size_t w = 0; w < row.size(); ++w) {
      for (auto bits = row[w]; bits != 0; bits &= bits - 1) {
        b.set_row(a, s.row(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits))));
      }
    }
  }
  return std::move(b).build();
}

bool is_subset(const Relation& r, const Relation& s) {
  if (r.inputs() != s.inputs() || r.outputs() != s.outputs()) {
    throw Error(ErrorCode::shape, "containment needs equal shapes, got " + shape_of(r) + " and " + shape_of(s));
  }
  for (std::size_t i = 0; i < r.inputs(); ++i) {
    const auto lhs = r.row(i);
    const auto rhs = s.row(i);
    for (std::size_t w = 0; w < lhs.size(); ++w) {
      if ((lhs[w] & ~rhs[w]) != 0) return false;
    }
  }
  return true;
}

}  // namespace relcalc
