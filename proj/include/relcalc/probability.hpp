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

#ifndef RELCALC_PROBABILITY_HPP
#define RELCALC_PROBABILITY_HPP

#include <cstdint>
#include <string>
#include <variant>

#include "relcalc/bigcount.hpp"
#include "relcalc/counting.hpp"
#include "relcalc/enumeration.hpp"
#include "relcalc/properties.hpp"

namespace relcalc {

/// Tie-breaking rule for decimal rendering. half_up rounds ties away from
/// zero and reproduces the published four-place tables exactly.
enum class Rounding { half_up, half_even };

/// numerator / denominator, kept exactly as given and in lowest terms.
class ExactProbability {
 public:
  /// Requires 0 <= numerator <= denominator and denominator > 0.
  ExactProbability(BigCount numerator, BigCount denominator);

  [[nodiscard]] const BigCount& numerator() const noexcept { return numerator_; }
  [[nodiscard]] const BigCount& denominator() const noexcept { return denominator_; }
  [[nodiscard]] const BigCount& reduced_numerator() const noexcept { return reduced_numerator_; }
  [[nodiscard]] const BigCount& reduced_denominator() const noexcept { return reduced_denominator_; }

  /// "26/64"
  [[nodiscard]] std::string fraction() const;
  /// Fixed-point rendering: 26/64 = 0.40625 gives "0.4063" (half_up) or
  /// "0.4062" (half_even).
  [[nodiscard]] std::string decimal(unsigned places = 4, Rounding mode = Rounding::half_up) const;
  [[nodiscard]] double to_double() const;

  friend bool operator==(const ExactProbability& a, const ExactProbability& b) {
    return a.numerator_ == b.numerator_ && a.denominator_ == b.denominator_;
  }

 private:
  BigCount numerator_;
  BigCount denominator_;
  BigCount reduced_numerator_;
  BigCount reduced_denominator_;
};

/// Pr[R ∈ cls] = count(cls, n, k) / 2^(n*k) over equally likely relations.
/// Classes without a closed form raise Error(domain) pointing at
/// probability_by_census.
[[nodiscard]] ExactProbability probability_exact(RelationClass cls, std::uint64_t n, std::uint64_t k);

/// Same quantity from an exhaustive census; works for every class.
[[nodiscard]] ExactProbability probability_by_census(RelationClass cls, std::size_t n, std::size_t k,
                                                     const CensusOptions& options = {});

/**
 * Large-set approximations:
 *   RU ≈ ((k+1) / 2^k)^n      LU ≈ ((n+1) / 2^n)^k
 *   RT ≈ (1 - 2^-n)^k         LT ≈ (1 - 2^-k)^n
 * Other classes raise Error(invalid_argument).
 */
[[nodiscard]] double probability_approx(RelationClass cls, std::uint64_t n, std::uint64_t k);

/// e^-r, the limit of Pr[RT] when k = r * 2^n. Requires r > 0.
[[nodiscard]] double rt_exponential_limit(double r);

/// What a Monte Carlo run counts: a class (with the counting convention on
/// the empty relation) or one exact combination of the four flags.
using McTarget = std::variant<RelationClass, PropertySet>;

struct McEstimate {
  double estimate = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  double standard_error = 0;  // sqrt(p (1 - p) / samples)
  std::uint64_t hits = 0;
};

/// Samples are drawn in shards of this size; shard s has its own generator
/// seeded from (seed, s), so results do not depend on the worker count.
inline constexpr std::uint64_t kMcShardSize = 4096;

/// Draws `samples` relations with every cell an independent fair coin.
[[nodiscard]] McEstimate estimate_mc(const McTarget& target, std::size_t n, std::size_t k,
                                     std::uint64_t samples, std::uint64_t seed, unsigned workers = 0);

}  // namespace relcalc

#endif  // RELCALC_PROBABILITY_HPP
