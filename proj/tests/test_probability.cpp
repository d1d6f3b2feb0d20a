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

#include <cmath>

#include "relcalc/counting.hpp"
#include "relcalc/error.hpp"
#include "relcalc/probability.hpp"

using namespace relcalc;

TEST_CASE("exact probabilities") {
  const auto ru = probability_exact(RelationClass::ru, 3, 2);
  CHECK(ru.numerator() == BigCount(26));
  CHECK(ru.denominator() == BigCount(64));
  CHECK(ru.reduced_numerator() == BigCount(13));
  CHECK(ru.reduced_denominator() == BigCount(32));
  CHECK(ru.fraction() == "26/64");
  CHECK(ru.decimal() == "0.4063");
  CHECK(ru.to_double() == doctest::Approx(0.40625));

  CHECK(probability_exact(RelationClass::rt, 3, 2).decimal() == "0.7656");
  const auto rurt = probability_exact(RelationClass::ru_and_rt, 4, 2);
  CHECK(rurt.fraction() == "50/256");
  CHECK(rurt.decimal() == "0.1953");
  CHECK(probability_exact(RelationClass::ru, 2, 2).decimal() == "0.5000");
  CHECK(probability_exact(RelationClass::all, 5, 5).decimal() == "1.0000");
  CHECK(probability_exact(RelationClass::ru_and_rt, 2, 3).decimal() == "0.0000");
}

TEST_CASE("rounding modes") {
  const ExactProbability tie(BigCount(5), BigCount(32));  // 0.15625
  CHECK(tie.decimal(4, Rounding::half_up) == "0.1563");
  CHECK(tie.decimal(4, Rounding::half_even) == "0.1562");
  const ExactProbability odd_tie(BigCount(3), BigCount(32));  // 0.09375
  CHECK(odd_tie.decimal(4, Rounding::half_up) == "0.0938");
  CHECK(odd_tie.decimal(4, Rounding::half_even) == "0.0938");
  CHECK(tie.decimal(2) == "0.16");
  CHECK(tie.decimal(0) == "0");
  CHECK(ExactProbability(BigCount(1), BigCount(2)).decimal(0) == "1");
  CHECK(ExactProbability(BigCount(1), BigCount(2)).decimal(0, Rounding::half_even) == "0");
  CHECK(ExactProbability(BigCount(1), BigCount(3)).decimal(6) == "0.333333");
  CHECK(ExactProbability(BigCount(2), BigCount(3)).decimal(6) == "0.666667");
  CHECK(ExactProbability(BigCount(9999), BigCount(10000)).decimal(2) == "1.00");
}

TEST_CASE("exact probability errors") {
  CHECK_THROWS_AS(ExactProbability(BigCount(1), BigCount(0)), Error);
  CHECK_THROWS_AS(ExactProbability(BigCount(3), BigCount(2)), Error);
  try {
    (void)probability_exact(RelationClass::rt_and_lt, 3, 2);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::domain);
    CHECK(std::string(e.what()).find("census") != std::string::npos);
  }
  const auto by_census = probability_by_census(RelationClass::rt_and_lt, 3, 2);
  CHECK(by_census.fraction() == "25/64");
  CHECK(probability_by_census(RelationClass::ru, 3, 2) == probability_exact(RelationClass::ru, 3, 2));
}

TEST_CASE("approximations") {
  CHECK(probability_approx(RelationClass::rt, 6, 6) == doctest::Approx(std::pow(1.0 - 1.0 / 64, 6)));
  CHECK(ExactProbability(BigCount(9098), BigCount(10000)).decimal() ==
        probability_exact(RelationClass::rt, 6, 6).decimal());
  CHECK(std::abs(probability_approx(RelationClass::rt, 6, 6) - 0.9098) < 5e-5);
  CHECK(probability_approx(RelationClass::ru, 1, 1) == doctest::Approx(1.0));
  CHECK(probability_exact(RelationClass::ru, 1, 1).to_double() == doctest::Approx(0.5));
  for (std::uint64_t n = 1; n <= 6; ++n)
    for (std::uint64_t k = 1; k <= 6; ++k) {
      CHECK(probability_approx(RelationClass::lt, n, k) == doctest::Approx(probability_approx(RelationClass::rt, k, n)));
      CHECK(probability_approx(RelationClass::lu, n, k) == doctest::Approx(probability_approx(RelationClass::ru, k, n)));
      // The totality approximations are exact up to floating point.
      CHECK(probability_approx(RelationClass::lt, n, k) ==
            doctest::Approx(probability_exact(RelationClass::lt, n, k).to_double()));
    }
  CHECK_THROWS_AS((void)probability_approx(RelationClass::function, 3, 3), Error);
}

TEST_CASE("exponential limit for right totality") {
  CHECK(rt_exponential_limit(1) == doctest::Approx(0.36788).epsilon(1e-4));
  CHECK(std::abs(probability_exact(RelationClass::rt, 4, 16).to_double() - rt_exponential_limit(1)) < 0.02);
  CHECK(probability_exact(RelationClass::rt, 4, 16).to_double() == doctest::Approx(std::pow(15.0 / 16, 16)));
  CHECK(probability_exact(RelationClass::rt, 3, 64).to_double() < 0.001);
  CHECK(rt_exponential_limit(8) == doctest::Approx(0.000335).epsilon(1e-2));
  CHECK_THROWS_AS((void)rt_exponential_limit(0), Error);
  CHECK_THROWS_AS((void)rt_exponential_limit(-1), Error);
}

TEST_CASE("exact probability invariants") {
  for (std::uint64_t k = 2; k <= 8; ++k)
    for (std::uint64_t n = 2; n <= 8; ++n) {
      const auto prev = probability_exact(RelationClass::ru, n - 1, k);
      const auto cur = probability_exact(RelationClass::ru, n, k);
      // Compare a/b >= c/d as a*d >= c*b.
      REQUIRE(prev.numerator() * cur.denominator() >= cur.numerator() * prev.denominator());
    }
  for (std::uint64_t n = 1; n <= 6; ++n)
    for (std::uint64_t k = 1; k <= 6; ++k)
      REQUIRE(probability_exact(RelationClass::ru_and_rt, n, k).numerator() <=
              probability_exact(RelationClass::ru, n, k).numerator());
}

TEST_CASE("Monte Carlo") {
  SUBCASE("deterministic and independent of worker count") {
    const auto a = estimate_mc(RelationClass::ru, 3, 2, 50000, 42, 1);
    const auto b = estimate_mc(RelationClass::ru, 3, 2, 50000, 42, 1);
    const auto c = estimate_mc(RelationClass::ru, 3, 2, 50000, 42, 5);
    CHECK(a.hits == b.hits);
    CHECK(a.hits == c.hits);
    CHECK(a.estimate == c.estimate);
    CHECK(a.seed == 42);
    CHECK(a.samples == 50000);
    CHECK(estimate_mc(RelationClass::ru, 3, 2, 50000, 43).hits != a.hits);
  }
  SUBCASE("within four standard errors") {
    const auto ru = estimate_mc(RelationClass::ru, 3, 2, 100000, 7);
    CHECK(std::abs(ru.estimate - 0.40625) <= 4 * ru.standard_error);
    const auto rt = estimate_mc(RelationClass::rt, 6, 3, 100000, 7);
    CHECK(std::abs(rt.estimate - probability_exact(RelationClass::rt, 6, 3).to_double()) <= 4 * rt.standard_error);
    CHECK(std::abs(rt.estimate - 0.9539) <= 4 * rt.standard_error + 1e-4);
    CHECK(ru.standard_error == doctest::Approx(std::sqrt(ru.estimate * (1 - ru.estimate) / 100000)));
  }
  SUBCASE("trivial classes") {
    const auto all = estimate_mc(RelationClass::all, 2, 2, 10, 1);
    CHECK(all.estimate == 1.0);
    CHECK(all.standard_error == 0.0);
    CHECK(estimate_mc(RelationClass::bijection, 2, 3, 1000, 1).hits == 0);
    CHECK_THROWS_AS((void)estimate_mc(RelationClass::ru, 2, 2, 0, 1), Error);
  }
  SUBCASE("a raw property pattern") {
    // RT and LT but neither unique: the 25 total relations on 3 x 2 minus the
    // 6 surjections. None of them is LU because 3 inputs cannot share 2 outputs.
    const PropertySet pattern{.ru = false, .rt = true, .lu = false, .lt = true};
    const auto est = estimate_mc(pattern, 3, 2, 100000, 11);
    CHECK(std::abs(est.estimate - 19.0 / 64) <= 4 * est.standard_error);
  }
  SUBCASE("wide rows") {
    // Pr[RT] for 2 x 100 is (3/4)^100, effectively zero; LT is (1 - 2^-100)^2.
    CHECK(estimate_mc(RelationClass::rt, 2, 100, 2000, 3).hits == 0);
    CHECK(estimate_mc(RelationClass::lt, 2, 100, 2000, 3).hits == 2000);
  }
}
