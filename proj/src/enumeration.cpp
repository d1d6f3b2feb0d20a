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

#include "relcalc/enumeration.hpp"

#include <algorithm>
#include <thread>

#include "relcalc/error.hpp"

namespace relcalc {

void check_enumerable(std::size_t n, std::size_t k, bool allow_large) {
  const std::size_t cells = n * k;
  if (cells > kEnumerationHardLimit) {
    throw Error(ErrorCode::cap, "cannot enumerate " + std::to_string(n) + "x" + std::to_string(k) +
                                    " relations: n*k=" + std::to_string(cells) + " exceeds the hard limit " +
                                    std::to_string(kEnumerationHardLimit));
  }
  if (cells > kDefaultEnumerationCap && !allow_large) {
    throw Error(ErrorCode::cap, "refusing to enumerate " + std::to_string(n) + "x" + std::to_string(k) +
                                    " relations: n*k=" + std::to_string(cells) + " exceeds the cap " +
                                    std::to_string(kDefaultEnumerationCap) + " (override required)");
  }
}

BigCount Census::total() const {
  BigCount sum{0};
  for (const auto& b : buckets) sum += b;
  return sum;
}

BigCount Census::count_matching(RelationClass cls) const {
  BigCount sum{0};
  for (std::size_t i = 0; i < buckets.size(); ++i) {
    if (is_member(cls, bucket_properties(i), false)) sum += buckets[i];
  }
  return sum;
}

Census census(std::size_t n, std::size_t k, bool include_empty, const CensusOptions& options) {
  check_enumerable(n, k, options.allow_large);
  const std::uint64_t first = include_empty ? 0 : 1;
  const std::uint64_t end = std::uint64_t{1} << (n * k);
  const std::uint64_t span = end - first;

  unsigned workers = options.workers != 0 ? options.workers : std::max(1U, std::thread::hardware_concurrency());
  // Small spaces are not worth a thread each.
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(1, span / 4096)));

  std::vector<std::array<std::uint64_t, 16>> partial(workers);
  auto run_chunk = [&](unsigned w) {
    auto& local = partial[w];
    local.fill(0);
    const std::uint64_t lo = first + span * w / workers;
    const std::uint64_t hi = first + span * (w + 1) / workers;
    for (std::uint64_t v = lo; v < hi; ++v) {
      ++local[bucket_index(classify(decode(n, k, RelationIndex{v})))];
    }
  };

  if (workers == 1) {
    run_chunk(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run_chunk, w);
  }

  Census result;
  result.n = n;
  result.k = k;
  result.include_empty = include_empty;
  for (const auto& local : partial) {
    for (std::size_t b = 0; b < 16; ++b) result.buckets[b] += BigCount{local[b]};
  }
  for (std::size_t b = 0; b < 16; ++b) {
    const auto p = bucket_properties(b);
    if (p.rt) result.marginals.rt += result.buckets[b];
    if (p.lt) result.marginals.lt += result.buckets[b];
    if (p.ru) result.marginals.ru += result.buckets[b];
    if (p.lu) result.marginals.lu += result.buckets[b];
  }
  return result;
}

BigCount count_by_census(RelationClass cls, std::size_t n, std::size_t k, const CensusOptions& options) {
  if (n == 0 || k == 0) {
    throw Error(ErrorCode::domain, "census count needs n >= 1 and k >= 1");
  }
  return census(n, k, !excludes_empty(cls), options).count_matching(cls);
}

AppendixTable appendix_table(std::size_t n, std::size_t k) {
  if (n * k > kAppendixCellCap) {
    throw Error(ErrorCode::cap, "appendix listing limited to n*k <= " + std::to_string(kAppendixCellCap) +
                                    ", got " + std::to_string(n) + "x" + std::to_string(k));
  }
  struct Entry {
    std::vector<Pair> pairs;
    Relation relation;
  };
  std::vector<Entry> entries;
  for (auto rel : enumerate(n, k, false)) {
    auto pairs = rel.pairs();
    entries.push_back({std::move(pairs), std::move(rel)});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.pairs.size() != b.pairs.size()) return a.pairs.size() < b.pairs.size();
    return a.pairs < b.pairs;
  });

  AppendixTable table;
  table.n = n;
  table.k = k;
  table.rows.reserve(entries.size());
  for (auto& e : entries) {
    const auto props = classify(e.relation);
    if (props.rt) table.totals.rt += BigCount{1};
    if (props.lt) table.totals.lt += BigCount{1};
    if (props.ru) table.totals.ru += BigCount{1};
    if (props.lu) table.totals.lu += BigCount{1};
    table.rows.push_back({table.rows.size() + 1, std::move(e.relation), props});
  }
  return table;
}

}  // namespace relcalc
