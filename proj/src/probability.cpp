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

#include "relcalc/probability.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <thread>
#include <vector>

#include "relcalc/error.hpp"

namespace relcalc {

ExactProbability::ExactProbability(BigCount numerator, BigCount denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  if (denominator_.is_zero()) throw Error(ErrorCode::domain, "probability with zero denominator");
  if (numerator_ > denominator_) {
    throw Error(ErrorCode::domain, "probability " + fraction() + " exceeds one");
  }
  const BigInt g = boost::multiprecision::gcd(numerator_.value(), denominator_.value());
  reduced_numerator_ = BigCount(BigInt(numerator_.value() / g));
  reduced_denominator_ = BigCount(BigInt(denominator_.value() / g));
}

std::string ExactProbability::fraction() const { return numerator_.str() + "/" + denominator_.str(); }

std::string ExactProbability::decimal(unsigned places, Rounding mode) const {
  BigInt scale = 1;
  for (unsigned i = 0; i < places; ++i) scale *= 10;
  const BigInt scaled = numerator_.value() * scale;
  BigInt quotient = scaled / denominator_.value();
  const BigInt twice_rem = 2 * (scaled % denominator_.value());
  const int cmp = twice_rem.compare(denominator_.value());
  const bool tie_up = mode == Rounding::half_up || (quotient & 1) != 0;
  if (cmp > 0 || (cmp == 0 && tie_up)) quotient += 1;

  const BigInt whole = quotient / scale;
  std::string frac = BigInt(quotient % scale).str();
  if (places == 0) return whole.str();
  frac.insert(0, places - frac.size(), '0');
  return whole.str() + "." + frac;
}

double ExactProbability::to_double() const {
  using boost::multiprecision::cpp_rational;
  return cpp_rational(numerator_.value(), denominator_.value()).convert_to<double>();
}

ExactProbability probability_exact(RelationClass cls, std::uint64_t n, std::uint64_t k) {
  if (!has_closed_form(cls)) {
    throw Error(ErrorCode::domain, std::string(class_name(cls)) +
                                       " has no closed form; use a census-based probability");
  }
  return {count(cls, n, k), BigCount::pow(2, n * k)};
}

ExactProbability probability_by_census(RelationClass cls, std::size_t n, std::size_t k,
                                       const CensusOptions& options) {
  return {count_by_census(cls, n, k, options), BigCount::pow(2, n * k)};
}

double probability_approx(RelationClass cls, std::uint64_t n, std::uint64_t k) {
  const double nd = static_cast<double>(n);
  const double kd = static_cast<double>(k);
  switch (cls) {
    case RelationClass::ru: return std::pow((kd + 1) / std::ldexp(1.0, static_cast<int>(k)), nd);
    case RelationClass::lu: return std::pow((nd + 1) / std::ldexp(1.0, static_cast<int>(n)), kd);
    case RelationClass::rt: return std::pow(1 - std::ldexp(1.0, -static_cast<int>(n)), kd);
    case RelationClass::lt: return std::pow(1 - std::ldexp(1.0, -static_cast<int>(k)), nd);
    default: break;
  }
  throw Error(ErrorCode::invalid_argument,
              "no approximation for " + std::string(class_name(cls)) + "; expected RU, LU, RT or LT");
}

double rt_exponential_limit(double r) {
  if (!(r > 0)) throw Error(ErrorCode::domain, "exponential limit needs r > 0");
  return std::exp(-r);
}

McEstimate estimate_mc(const McTarget& target, std::size_t n, std::size_t k, std::uint64_t samples,
                       std::uint64_t seed, unsigned workers) {
  if (samples == 0) throw Error(ErrorCode::invalid_argument, "Monte Carlo needs at least one sample");

  auto hit = [&target](const Relation& rel) {
    const auto props = classify(rel);
    if (const auto* cls = std::get_if<RelationClass>(&target)) return is_member(*cls, props, rel.empty());
    return props == std::get<PropertySet>(target);
  };

  const std::uint64_t shards = (samples + kMcShardSize - 1) / kMcShardSize;
  std::vector<std::uint64_t> shard_hits(shards, 0);

  auto run_shard = [&](std::uint64_t s) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(s >> 32)};
    std::mt19937_64 rng(seq);
    const std::uint64_t begin = s * kMcShardSize;
    const std::uint64_t end = std::min(samples, begin + kMcShardSize);
    const std::size_t stride = (k + 63) / 64;
    std::vector<std::uint64_t> words(stride);
    std::uint64_t local = 0;
    for (std::uint64_t i = begin; i < end; ++i) {
      RelationBuilder b(n, k);
      for (std::size_t row = 0; row < n; ++row) {
        for (auto& w : words) w = rng();
        b.set_row(row, words);
      }
      if (hit(std::move(b).build())) ++local;
    }
    shard_hits[s] = local;
  };

  unsigned pool_size = workers != 0 ? workers : std::max(1U, std::thread::hardware_concurrency());
  pool_size = static_cast<unsigned>(std::min<std::uint64_t>(pool_size, shards));
  if (pool_size <= 1) {
    for (std::uint64_t s = 0; s < shards; ++s) run_shard(s);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(pool_size);
    for (unsigned w = 0; w < pool_size; ++w) {
      pool.emplace_back([&] {
        for (auto s = next.fetch_add(1); s < shards; s = next.fetch_add(1)) run_shard(s);
      });
    }
  }

  McEstimate out;
  out.samples = samples;
  out.seed = seed;
  for (auto h : shard_hits) out.hits += h;
  out.estimate = static_cast<double>(out.hits) / static_cast<double>(samples);
  out.standard_error = std::sqrt(out.estimate * (1 - out.estimate) / static_cast<double>(samples));
  return out;
}

}  // namespace relcalc
