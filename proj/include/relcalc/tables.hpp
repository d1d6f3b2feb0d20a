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

#ifndef RELCALC_TABLES_HPP
#define RELCALC_TABLES_HPP

#include <cstddef>
#include <string>
#include <string_view>

#include "relcalc/counting.hpp"
#include "relcalc/enumeration.hpp"
#include "relcalc/probability.hpp"
#include "relcalc/properties.hpp"
#include "relcalc/relation.hpp"

// TSV renderings shared by the C API and the CLI. Every output ends in a
// newline and is byte-stable.

namespace relcalc {

/// Grid of count(cls, n, k): header "<label>\tk=1\t...", rows "n=<n>\t...".
[[nodiscard]] std::string count_table(RelationClass cls, std::string_view label, std::size_t max_n,
                                      std::size_t max_k);

/// Grid of 4-place probabilities with the same layout. With `exact`, one row
/// per cell instead: "n\tk\t<label>\tnumerator\tdenominator".
[[nodiscard]] std::string probability_table(RelationClass cls, std::string_view label, std::size_t max_n,
                                            std::size_t max_k, bool exact,
                                            Rounding mode = Rounding::half_up);

/// Grid of |RT ∩ LT| from exhaustive censuses; "-" where n*k exceeds the
/// default enumeration cap.
[[nodiscard]] std::string census_grid(std::size_t max_n, std::size_t max_k);

/// Dispatches figure1..figure7 and "census". Unknown names raise
/// Error(invalid_argument).
[[nodiscard]] std::string figure_table(std::string_view name, std::size_t max_n, std::size_t max_k,
                                       bool exact = false, Rounding mode = Rounding::half_up);

/// "(a1, b1), (a2, b2)"
[[nodiscard]] std::string format_pairs(const Relation& rel);

[[nodiscard]] std::string census_tsv(const Census& c);
[[nodiscard]] std::string appendix_tsv(const AppendixTable& table);

/// Every relation in index order: "index\tpairs\tRT\tLT\tRU\tLU".
[[nodiscard]] std::string listing_tsv(std::size_t n, std::size_t k, bool include_empty, bool allow_large);

/// One "<flag>\t0|1" line per intrinsic property and derived class.
[[nodiscard]] std::string classification_tsv(const PropertySet& p);

}  // namespace relcalc

#endif  // RELCALC_TABLES_HPP
