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

#include "relcalc/tables.hpp"

#include <sstream>

#include "relcalc/error.hpp"

namespace relcalc {

namespace {

void require_grid(std::size_t max_n, std::size_t max_k) {
  if (max_n == 0 || max_k == 0) {
    throw Error(ErrorCode::domain, "table needs max-n >= 1 and max-k >= 1");
  }
}

std::string grid_header(std::string_view label, std::size_t max_k) {
  std::string out(label);
  for (std::size_t k = 1; k <= max_k; ++k) out += "\tk=" + std::to_string(k);
  return out + "\n";
}

template <typename Cell>
std::string grid(std::string_view label, std::size_t max_n, std::size_t max_k, Cell cell) {
  require_grid(max_n, max_k);
  std::string out = grid_header(label, max_k);
  for (std::size_t n = 1; n <= max_n; ++n) {
    out += "n=" + std::to_string(n);
    for (std::size_t k = 1; k <= max_k; ++k) out += "\t" + cell(n, k);
    out += "\n";
  }
  return out;
}

std::string flag(bool set, std::string_view name) { return set ? std::string(name) : std::string(); }

std::string flag_columns(const PropertySet& p) {
  return flag(p.rt, "RT") + "\t" + flag(p.lt, "LT") + "\t" + flag(p.ru, "RU") + "\t" + flag(p.lu, "LU");
}

}  // namespace

std::string count_table(RelationClass cls, std::string_view label, std::size_t max_n, std::size_t max_k) {
  return grid(label, max_n, max_k, [cls](std::size_t n, std::size_t k) { return count(cls, n, k).str(); });
}

std::string probability_table(RelationClass cls, std::string_view label, std::size_t max_n, std::size_t max_k,
                              bool exact, Rounding mode) {
  if (!exact) {
    return grid(label, max_n, max_k, [cls, mode](std::size_t n, std::size_t k) {
      return probability_exact(cls, n, k).decimal(4, mode);
    });
  }
  require_grid(max_n, max_k);
  std::string out = "n\tk\t" + std::string(label) + "\tnumerator\tdenominator\n";
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (std::size_t k = 1; k <= max_k; ++k) {
      const auto p = probability_exact(cls, n, k);
      out += std::to_string(n) + "\t" + std::to_string(k) + "\t" + p.decimal(4, mode) + "\t" +
             p.numerator().str() + "\t" + p.denominator().str() + "\n";
    }
  }
  return out;
}

std::string census_grid(std::size_t max_n, std::size_t max_k) {
  return grid("RTLT", max_n, max_k, [](std::size_t n, std::size_t k) -> std::string {
    if (n * k > kDefaultEnumerationCap) return "-";
    return count_by_census(RelationClass::rt_and_lt, n, k).str();
  });
}

std::string figure_table(std::string_view name, std::size_t max_n, std::size_t max_k, bool exact,
                         Rounding mode) {
  if (name == "figure1") return count_table(RelationClass::ru, "RU", max_n, max_k);
  if (name == "figure2") return count_table(RelationClass::ru_and_lu, "RULU", max_n, max_k);
  if (name == "figure3") return count_table(RelationClass::ru_and_rt, "RURT", max_n, max_k);
  if (name == "figure4") return count_table(RelationClass::lt, "LT", max_n, max_k);
  if (name == "figure5") return probability_table(RelationClass::ru, "Pr[RU]", max_n, max_k, exact, mode);
  if (name == "figure6") return probability_table(RelationClass::rt, "Pr[RT]", max_n, max_k, exact, mode);
  if (name == "figure7") return probability_table(RelationClass::ru_and_rt, "Pr[RURT]", max_n, max_k, exact, mode);
  if (name == "census") return census_grid(max_n, max_k);
  throw Error(ErrorCode::invalid_argument,
              "unknown table '" + std::string(name) + "'; expected figure1..figure7 or census");
}

std::string format_pairs(const Relation& rel) {
  std::string out;
  for (const auto& p : rel.pairs()) {
    if (!out.empty()) out += ", ";
    out += "(a" + std::to_string(p.input) + ", b" + std::to_string(p.output) + ")";
  }
  return out;
}

std::string census_tsv(const Census& c) {
  std::ostringstream os;
  os << "# census n=" << c.n << " k=" << c.k << " include_empty=" << (c.include_empty ? 1 : 0) << '\n';
  os << "RT\tLT\tRU\tLU\tcount\n";
  for (std::size_t b = 0; b < c.buckets.size(); ++b) {
    const auto p = bucket_properties(b);
    os << p.rt << '\t' << p.lt << '\t' << p.ru << '\t' << p.lu << '\t' << c.buckets[b].str() << '\n';
  }
  os << "Totals:\t" << c.marginals.rt.str() << '\t' << c.marginals.lt.str() << '\t' << c.marginals.ru.str()
     << '\t' << c.marginals.lu.str() << '\t' << c.total().str() << '\n';
  return os.str();
}

std::string appendix_tsv(const AppendixTable& table) {
  std::ostringstream os;
  os << "Relation\tn=" << table.n << "; k=" << table.k << "\tRT\tLT\tRU\tLU\n";
  for (const auto& row : table.rows) {
    os << row.index << '\t' << format_pairs(row.relation) << '\t' << flag_columns(row.properties) << '\n';
  }
  os << "Totals:\t\t" << table.totals.rt.str() << '\t' << table.totals.lt.str() << '\t' << table.totals.ru.str()
     << '\t' << table.totals.lu.str() << '\n';
  return os.str();
}

std::string listing_tsv(std::size_t n, std::size_t k, bool include_empty, bool allow_large) {
  std::string out = "index\tpairs\tRT\tLT\tRU\tLU\n";
  for (const auto& rel : enumerate(n, k, include_empty, allow_large)) {
    out += std::to_string(encode(rel).value) + "\t" + format_pairs(rel) + "\t" + flag_columns(classify(rel)) + "\n";
  }
  return out;
}

std::string classification_tsv(const PropertySet& p) {
  std::ostringstream os;
  os << "RT\t" << p.rt << "\nLT\t" << p.lt << "\nRU\t" << p.ru << "\nLU\t" << p.lu << '\n'
     << "function\t" << p.function() << "\ninjection\t" << p.injection() << '\n'
     << "surjection\t" << p.surjection() << "\nbijection\t" << p.bijection() << '\n';
  return os.str();
}

}  // namespace relcalc
