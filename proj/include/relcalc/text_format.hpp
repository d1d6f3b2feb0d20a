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

#ifndef RELCALC_TEXT_FORMAT_HPP
#define RELCALC_TEXT_FORMAT_HPP

#include <string>
#include <string_view>

#include "relcalc/relation.hpp"

namespace relcalc {

/**
 * Reads the relation text format:
 *
 *     relation <n> <k>
 *     <i> <j>
 *     ...
 *
 * Blank lines and lines starting with '#' are skipped everywhere. Labels are
 * 1-based; duplicate pairs are allowed. Failures throw Error(parse) with a
 * "line N: " prefix.
 */
[[nodiscard]] Relation parse_relation(std::string_view text);

/// Inverse of parse_relation; pairs are written sorted by (i, j).
[[nodiscard]] std::string format_relation(const Relation& rel);

}  // namespace relcalc

#endif  // RELCALC_TEXT_FORMAT_HPP
