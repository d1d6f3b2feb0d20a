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

#include <fstream>
#include <iterator>
#include <sstream>
#include <vector>

#include "relcalc/counting.hpp"
#include "relcalc/error.hpp"
#include "relcalc/probability.hpp"
#include "relcalc/tables.hpp"

using namespace relcalc;

namespace {

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(RELCALC_GOLDEN_DIR) + "/" + name);
  REQUIRE(in.good());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<std::vector<std::string>> cells(const std::string& tsv) {
  std::vector<std::vector<std::string>> out;
  std::istringstream lines(tsv);
  for (std::string line; std::getline(lines, line);) {
    std::vector<std::string> row;
    std::istringstream fields(line);
    for (std::string f; std::getline(fields, f, '\t');) row.push_back(f);
    out.push_back(row);
  }
  return out;
}

}  // namespace

TEST_CASE("count figures match the golden files") {
  CHECK(figure_table("figure1", 6, 6) == read_golden("figure1.tsv"));
  CHECK(figure_table("figure2", 6, 6) == read_golden("figure2.tsv"));
  CHECK(figure_table("figure3", 6, 6) == read_golden("figure3.tsv"));
  CHECK(figure_table("figure4", 6, 5) == read_golden("figure4.tsv"));
}

TEST_CASE("probability figures match the golden files") {
  CHECK(figure_table("figure5", 6, 6) == read_golden("figure5.tsv"));
  CHECK(figure_table("figure6", 6, 6) == read_golden("figure6.tsv"));
  CHECK(figure_table("figure7", 6, 6) == read_golden("figure7.tsv"));
}

TEST_CASE("table cells parse back to the module values") {
  const auto grid = cells(count_table(RelationClass::ru_and_lu, "RULU", 7, 8));
  REQUIRE(grid.size() == 8);
  CHECK(grid[0][0] == "RULU");
  CHECK(grid[0][8] == "k=8");
  for (std::size_t n = 1; n <= 7; ++n) {
    REQUIRE(grid[n].size() == 9);
    CHECK(grid[n][0] == "n=" + std::to_string(n));
    for (std::size_t k = 1; k <= 8; ++k)
      CHECK(BigCount::from_string(grid[n][k]) == count(RelationClass::ru_and_lu, n, k));
  }

  const auto exact = cells(probability_table(RelationClass::rt, "Pr[RT]", 3, 3, true));
  REQUIRE(exact.size() == 10);
  CHECK(exact[0] == std::vector<std::string>{"n", "k", "Pr[RT]", "numerator", "denominator"});
  for (std::size_t row = 1; row < exact.size(); ++row) {
    const auto n = std::stoull(exact[row][0]);
    const auto k = std::stoull(exact[row][1]);
    const auto p = probability_exact(RelationClass::rt, n, k);
    CHECK(exact[row][2] == p.decimal());
    CHECK(exact[row][3] == p.numerator().str());
    CHECK(exact[row][4] == p.denominator().str());
  }
}

TEST_CASE("census grid") {
  const auto grid = cells(census_grid(6, 6));
  REQUIRE(grid.size() == 7);
  CHECK(grid[0][0] == "RTLT");
  CHECK(grid[2][2] == "7");
  CHECK(grid[3][2] == "25");
  CHECK(grid[2][3] == "25");
  CHECK(grid[5][5] == "-");  // 25 cells exceeds the enumeration cap
  CHECK(grid[4][6] == grid[6][4]);
  CHECK(figure_table("census", 4, 4) == census_grid(4, 4));
}

TEST_CASE("unknown figure") {
  try {
    (void)figure_table("figure8", 6, 6);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::invalid_argument);
  }
}

TEST_CASE("census_tsv") {
  const auto rows = cells(census_tsv(census(3, 2, false)));
  REQUIRE(rows.size() == 19);
  CHECK(rows[0][0].rfind("# census n=3 k=2", 0) == 0);
  CHECK(rows[1] == std::vector<std::string>{"RT", "LT", "RU", "LU", "count"});
  CHECK(rows[18] == std::vector<std::string>{"Totals:", "49", "27", "26", "15", "63"});
  // Bucket 0b1110: RT, LT, RU, not LU are the 6 surjections.
  CHECK(rows[2 + 14] == std::vector<std::string>{"1", "1", "1", "0", "6"});
}

TEST_CASE("listings") {
  const auto rows = cells(listing_tsv(1, 2, true, false));
  REQUIRE(rows.size() == 5);
  CHECK(rows[0] == std::vector<std::string>{"index", "pairs", "RT", "LT", "RU", "LU"});
  CHECK(rows[4] == std::vector<std::string>{"3", "(a1, b1), (a1, b2)", "RT", "LT", "", "LU"});
  CHECK(cells(listing_tsv(1, 2, false, false)).size() == 4);
  CHECK_THROWS_AS((void)listing_tsv(5, 5, false, false), Error);

  const Pair pairs[] = {{2, 1}, {1, 2}};
  CHECK(format_pairs(make_relation(2, 2, pairs)) == "(a1, b2), (a2, b1)");
  CHECK(format_pairs(Relation(2, 2)).empty());

  const auto cls = classification_tsv(PropertySet{.ru = true, .rt = true, .lu = true, .lt = true});
  CHECK(cls == "RT\t1\nLT\t1\nRU\t1\nLU\t1\nfunction\t1\ninjection\t1\nsurjection\t1\nbijection\t1\n");
}
