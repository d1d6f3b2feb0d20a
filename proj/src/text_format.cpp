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

#include "relcalc/text_format.hpp"

#include <charconv>
#include <optional>
#include <vector>

#include "relcalc/error.hpp"

namespace relcalc {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r') ++end;
    if (end > pos) words.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return words;
}

std::optional<std::size_t> to_count(std::string_view word) {
  std::size_t value = 0;
  const auto* last = word.data() + word.size();
  auto [ptr, ec] = std::from_chars(word.data(), last, value);
  if (ec != std::errc{} || ptr != last) return std::nullopt;
  return value;
}

[[noreturn]] void fail(std::size_t line, const std::string& message) {
  throw Error(ErrorCode::parse, "line " + std::to_string(line) + ": " + message);
}

}  // namespace

Relation parse_relation(std::string_view text) {
  std::optional<std::pair<std::size_t, std::size_t>> shape;
  std::vector<Pair> pairs;
  std::size_t line_no = 0;
  std::size_t pos = 0;

  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    const auto words = split_words(line);
    if (words.empty() || words.front().front() == '#') continue;

    if (!shape) {
      if (words.size() != 3 || words[0] != "relation") {
        fail(line_no, "expected header 'relation <n> <k>'");
      }
      const auto n = to_count(words[1]);
      const auto k = to_count(words[2]);
      if (!n || !k) fail(line_no, "header sizes must be non-negative integers");
      shape.emplace(*n, *k);
      continue;
    }

    if (words.size() != 2) fail(line_no, "expected a pair '<i> <j>'");
    const auto i = to_count(words[0]);
    const auto j = to_count(words[1]);
    if (!i || !j) fail(line_no, "pair labels must be positive integers");
    if (*i < 1 || *i > shape->first || *j < 1 || *j > shape->second) {
      fail(line_no, "pair (" + std::to_string(*i) + ", " + std::to_string(*j) +
                        ") out of range for a relation " + std::to_string(shape->first) + "x" +
                        std::to_string(shape->second));
    }
    pairs.push_back({*i, *j});
  }

  if (!shape) fail(line_no, "missing header 'relation <n> <k>'");
  return make_relation(shape->first, shape->second, pairs);
}

std::string format_relation(const Relation& rel) {
  std::string out = "relation " + std::to_string(rel.inputs()) + " " + std::to_string(rel.outputs()) + "\n";
  for (const auto& p : rel.pairs()) {
    out += std::to_string(p.input) + " " + std::to_string(p.output) + "\n";
  }
  return out;
}

}  // namespace relcalc
