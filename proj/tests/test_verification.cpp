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

#include "relcalc/properties.hpp"
#include "relcalc/verification.hpp"

using namespace relcalc;

TEST_CASE("every theorem holds at its default limits") {
  for (auto t : kAllTheorems) {
    CAPTURE(theorem_id(t));
    const auto rep = verify_theorem(t);
    CHECK(rep.complete);
    CHECK(rep.checked > 0);
    CHECK(rep.counterexample_count == 0);
    CHECK(rep.counterexamples.empty());
    CHECK(rep.passed());
    CHECK_FALSE(rep.coverage.empty());
  }
}

TEST_CASE("default limits") {
  const auto t1 = default_limits(Theorem::thm1_1);
  CHECK(t1.max_set_size == 3);
  CHECK(t1.max_cells == 9);
  CHECK(default_limits(Theorem::lemma_r2).max_cells == 9);
  CHECK(default_limits(Theorem::thm2).max_set_size == 2);
  for (auto t : kAllTheorems) CHECK(default_limits(t).budget == doctest::Approx(1e8));
}

TEST_CASE("hypotheses are actually exercised") {
  // A suite whose premise never holds would pass vacuously.
  for (auto t : {Theorem::thm1_1, Theorem::thm1_2, Theorem::thm1_corollary, Theorem::inverse_unique}) {
    CAPTURE(theorem_id(t));
    CHECK(verify_theorem(t).hypothesis_held > 0);
  }
  // Tighter limits than the defaults are accepted as well.
  const auto small = verify_theorem(Theorem::thm1_1, {.max_set_size = 2, .max_cells = 4});
  CHECK(small.checked > 0);
  CHECK(small.counterexample_count == 0);
}

TEST_CASE("larger limits than the defaults still pass") {
  CHECK(verify_theorem(Theorem::thm3, {.max_set_size = 12, .max_cells = 12}).passed());
  CHECK(verify_theorem(Theorem::lemma_r1, {.max_set_size = 2, .max_cells = 6}).passed());
}

TEST_CASE("budget exhaustion yields a partial report") {
  try {
    (void)verify_theorem(Theorem::thm1_1, {.max_set_size = 4, .max_cells = 16, .budget = 1e6});
    FAIL("expected the budget to run out");
  } catch (const BudgetExceeded& e) {
    CHECK(e.code() == ErrorCode::budget);
    const auto& partial = e.partial();
    CHECK_FALSE(partial.complete);
    CHECK_FALSE(partial.passed());
    CHECK(partial.counterexample_count == 0);
    CHECK(std::string(e.what()).find("covered") != std::string::npos);
  }
}

TEST_CASE("report text") {
  const auto rep = verify_theorem(Theorem::thm2);
  const auto line = rep.summary_line();
  CHECK(line.rfind("theorem=THM2 checked=", 0) == 0);
  CHECK(line.find(" counterexamples=0") != std::string::npos);
  CHECK(line == "theorem=THM2 checked=" + std::to_string(rep.checked) + " counterexamples=0");
  const auto text = rep.to_text();
  CHECK(text.find(line) != std::string::npos);
  CHECK(text.find("counterexamples: 0") != std::string::npos);
}

TEST_CASE("theorem ids") {
  for (auto t : kAllTheorems) {
    CHECK(parse_theorem(theorem_id(t)) == t);
    CHECK_FALSE(theorem_statement(t).empty());
  }
  CHECK(parse_theorem("lemma_r3") == Theorem::lemma_r3);
  CHECK(theorem_id(Theorem::thm1_corollary) == "THM1_COROLLARY");
  CHECK_FALSE(parse_theorem("THM4").has_value());
}

TEST_CASE("the converse of the right inverse theorem fails") {
  const auto w = converse_witness();
  CHECK(w.r.pairs() == std::vector<Pair>{{1, 1}, {1, 2}, {2, 1}});
  CHECK(w.s.pairs() == std::vector<Pair>{{1, 1}, {2, 2}});
  CHECK(classify(w.r).rt);
  CHECK(classify(w.s).lt);
  CHECK_FALSE(verify_inverse(w.r, w.s, InverseSide::right));
  const auto product = compose(w.r, w.s);
  CHECK(product.pairs() == std::vector<Pair>{{1, 1}, {1, 2}, {2, 1}});
  CHECK(product != identity(2));
}
