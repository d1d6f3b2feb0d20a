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

#ifndef RELCALC_VERIFICATION_HPP
#define RELCALC_VERIFICATION_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "relcalc/error.hpp"
#include "relcalc/relation.hpp"

namespace relcalc {

enum class Theorem {
  thm1_1,          // R∘S = 1_B  =>  R ∈ RT, S ∈ LT
  thm1_2,          // f∘S = 1_B  =>  f surjection, S ∈ LU ∩ LT
  thm1_corollary,  // f∘S = 1_B, S ∈ RU  =>  S injection
  thm2,            // RU, RT, LU, LT closed under composition
  thm3,            // R ⊆ S: uniqueness passes down, totality passes up
  lemma_r1,        // (R∘S)° = S°∘R°
  lemma_r2,        // R ⊆ R∘R°∘R
  lemma_r3,        // shunting: f∘U ⊆ V <=> U ⊆ f°∘V, U∘g° ⊆ V <=> U ⊆ V∘g
  inverse_unique,  // R∘S = 1_B and T∘R = 1_A  =>  S = T
};

inline constexpr Theorem kAllTheorems[] = {
    Theorem::thm1_1,   Theorem::thm1_2,   Theorem::thm1_corollary,
    Theorem::thm2,     Theorem::thm3,     Theorem::lemma_r1,
    Theorem::lemma_r2, Theorem::lemma_r3, Theorem::inverse_unique};

[[nodiscard]] std::string_view theorem_id(Theorem t) noexcept;  // "THM1_1", ...
[[nodiscard]] std::string_view theorem_statement(Theorem t) noexcept;
[[nodiscard]] std::optional<Theorem> parse_theorem(std::string_view id);

/// Every set involved ranges over sizes 1..max_set_size, and every relation
/// instantiated has at most max_cells cells. `budget` bounds the estimated
/// number of relation evaluations.
struct VerifyLimits {
  std::size_t max_set_size = 2;
  std::size_t max_cells = 4;
  double budget = 1e8;
};

[[nodiscard]] VerifyLimits default_limits(Theorem t) noexcept;

struct Counterexample {
  std::string description;
  std::vector<Relation> witnesses;
};

struct VerificationReport {
  Theorem theorem = Theorem::thm1_1;
  VerifyLimits limits;
  std::uint64_t checked = 0;          // instances covered
  std::uint64_t hypothesis_held = 0;  // instances where the premise was true
  std::uint64_t counterexample_count = 0;
  std::vector<Counterexample> counterexamples;  // first few only
  std::vector<std::string> coverage;            // one entry per set-size configuration
  bool complete = true;
  std::chrono::duration<double> elapsed{};

  [[nodiscard]] bool passed() const noexcept {
    return complete && counterexample_count == 0 && checked > 0;
  }
  /// `theorem=<id> checked=<N> counterexamples=<M>`
  [[nodiscard]] std::string summary_line() const;
  /// Human-readable report ending with summary_line().
  [[nodiscard]] std::string to_text() const;
};

inline constexpr std::size_t kMaxRecordedCounterexamples = 16;

/// Raised when the next configuration would overrun the budget; carries the
/// configurations finished so far.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, VerificationReport partial)
      : Error(ErrorCode::budget, what), partial_(std::move(partial)) {}

  [[nodiscard]] const VerificationReport& partial() const noexcept { return partial_; }

 private:
  VerificationReport partial_;
};

/// Exhaustively instantiates the statement of `t` over all relations (and
/// functions, where the statement calls for one) within `limits`.
[[nodiscard]] VerificationReport verify_theorem(Theorem t, const VerifyLimits& limits);
[[nodiscard]] inline VerificationReport verify_theorem(Theorem t) {
  return verify_theorem(t, default_limits(t));
}

/// The pair refuting the converse of THM1_1: R* is right total, S* is left
/// total, yet R*∘S* is not the identity.
struct ConverseWitness {
  Relation r;
  Relation s;
};

[[nodiscard]] ConverseWitness converse_witness();

}  // namespace relcalc

#endif  // RELCALC_VERIFICATION_HPP
