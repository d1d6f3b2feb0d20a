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

#include "relcalc/relcalc.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "relcalc/counting.hpp"
#include "relcalc/enumeration.hpp"
#include "relcalc/error.hpp"
#include "relcalc/probability.hpp"
#include "relcalc/properties.hpp"
#include "relcalc/tables.hpp"
#include "relcalc/text_format.hpp"
#include "relcalc/verification.hpp"

struct relcalc_relation {
  relcalc::Relation value;
};

struct relcalc_report {
  relcalc::VerificationReport value;
};

namespace {

using relcalc::ErrorCode;

thread_local std::string last_error;

static_assert(static_cast<int>(relcalc::RelationClass::rt_and_lt) == RELCALC_RT_AND_LT);
static_assert(static_cast<int>(relcalc::RelationClass::ru_and_rt) == RELCALC_RU_AND_RT);

relcalc_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return RELCALC_E_INVALID_ARGUMENT;
    case ErrorCode::parse: return RELCALC_E_PARSE;
    case ErrorCode::domain: return RELCALC_E_DOMAIN;
    case ErrorCode::shape: return RELCALC_E_SHAPE;
    case ErrorCode::cap: return RELCALC_E_CAP;
    case ErrorCode::budget: return RELCALC_E_BUDGET;
  }
  return RELCALC_E_INTERNAL;
}

relcalc_status fail(relcalc_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <typename Body>
relcalc_status guarded(Body&& body) {
  try {
    body();
    last_error.clear();
    return RELCALC_OK;
  } catch (const relcalc::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(RELCALC_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(RELCALC_E_INTERNAL, e.what());
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw relcalc::Error(ErrorCode::invalid_argument, std::string("null argument: ") + what);
}

char* dup_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

relcalc_relation* wrap(relcalc::Relation rel) { return new relcalc_relation{std::move(rel)}; }

relcalc::RelationClass to_class(relcalc_class cls) {
  if (cls < RELCALC_ALL || cls > RELCALC_RT_AND_LT) {
    throw relcalc::Error(ErrorCode::invalid_argument, "unknown relation class " + std::to_string(cls));
  }
  return static_cast<relcalc::RelationClass>(cls);
}

relcalc::Theorem to_theorem(const char* id) {
  require(id != nullptr, "theorem_id");
  const auto t = relcalc::parse_theorem(id);
  if (!t) throw relcalc::Error(ErrorCode::invalid_argument, std::string("unknown theorem id '") + id + "'");
  return *t;
}

relcalc_property_set to_c(const relcalc::PropertySet& p) {
  return {p.ru, p.rt, p.lu, p.lt, p.function(), p.injection(), p.surjection(), p.bijection()};
}

void fill_probability(const relcalc::ExactProbability& p, unsigned places, int half_even,
                      relcalc_probability* out) {
  const auto mode = half_even != 0 ? relcalc::Rounding::half_even : relcalc::Rounding::half_up;
  relcalc_probability tmp{};
  try {
    tmp.numerator = dup_string(p.numerator().str());
    tmp.denominator = dup_string(p.denominator().str());
    tmp.reduced_numerator = dup_string(p.reduced_numerator().str());
    tmp.reduced_denominator = dup_string(p.reduced_denominator().str());
    tmp.decimal = dup_string(p.decimal(places, mode));
  } catch (...) {
    relcalc_probability_clear(&tmp);
    throw;
  }
  tmp.value = p.to_double();
  *out = tmp;
}

}  // namespace

extern "C" {

const char* relcalc_version(void) { return "0.1.0"; }

const char* relcalc_last_error(void) { return last_error.c_str(); }

void relcalc_string_free(char* s) { std::free(s); }

relcalc_status relcalc_relation_create(size_t n, size_t k, const size_t* pairs, size_t pair_count,
                                       relcalc_relation** out) {
  return guarded([&] {
    require(out != nullptr, "out");
    require(pairs != nullptr || pair_count == 0, "pairs");
    std::vector<relcalc::Pair> list(pair_count);
    for (size_t p = 0; p < pair_count; ++p) list[p] = {pairs[2 * p], pairs[2 * p + 1]};
    *out = wrap(relcalc::make_relation(n, k, list));
  });
}

relcalc_status relcalc_relation_parse(const char* text, relcalc_relation** out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, "text/out");
    *out = wrap(relcalc::parse_relation(text));
  });
}

relcalc_status relcalc_relation_format(const relcalc_relation* rel, char** out) {
  return guarded([&] {
    require(rel != nullptr && out != nullptr, "rel/out");
    *out = dup_string(relcalc::format_relation(rel->value));
  });
}

relcalc_status relcalc_relation_identity(size_t n, relcalc_relation** out) {
  return guarded([&] {
    require(out != nullptr, "out");
    *out = wrap(relcalc::identity(n));
  });
}

relcalc_status relcalc_relation_opposite(const relcalc_relation* rel, relcalc_relation** out) {
  return guarded([&] {
    require(rel != nullptr && out != nullptr, "rel/out");
    *out = wrap(relcalc::opposite(rel->value));
  });
}

relcalc_status relcalc_relation_compose(const relcalc_relation* s, const relcalc_relation* r,
                                        relcalc_relation** out) {
  return guarded([&] {
    require(s != nullptr && r != nullptr && out != nullptr, "s/r/out");
    *out = wrap(relcalc::compose(s->value, r->value));
  });
}

relcalc_status relcalc_relation_is_subset(const relcalc_relation* r, const relcalc_relation* s, int* out) {
  return guarded([&] {
    require(r != nullptr && s != nullptr && out != nullptr, "r/s/out");
    *out = relcalc::is_subset(r->value, s->value) ? 1 : 0;
  });
}

relcalc_status relcalc_relation_encode(const relcalc_relation* rel, uint64_t* out) {
  return guarded([&] {
    require(rel != nullptr && out != nullptr, "rel/out");
    *out = relcalc::encode(rel->value).value;
  });
}

relcalc_status relcalc_relation_decode(size_t n, size_t k, uint64_t index, relcalc_relation** out) {
  return guarded([&] {
    require(out != nullptr, "out");
    *out = wrap(relcalc::decode(n, k, relcalc::RelationIndex{index}));
  });
}

int relcalc_relation_equal(const relcalc_relation* a, const relcalc_relation* b) {
  if (a == nullptr || b == nullptr) return a == b;
  return a->value == b->value ? 1 : 0;
}

size_t relcalc_relation_inputs(const relcalc_relation* rel) { return rel != nullptr ? rel->value.inputs() : 0; }

size_t relcalc_relation_outputs(const relcalc_relation* rel) { return rel != nullptr ? rel->value.outputs() : 0; }

size_t relcalc_relation_pair_count(const relcalc_relation* rel) {
  return rel != nullptr ? rel->value.pair_count() : 0;
}

int relcalc_relation_contains(const relcalc_relation* rel, size_t i, size_t j) {
  if (rel == nullptr || i == 0 || j == 0) return 0;
  return rel->value.contains(i - 1, j - 1) ? 1 : 0;
}

void relcalc_relation_destroy(relcalc_relation* rel) { delete rel; }

relcalc_status relcalc_has_property(const relcalc_relation* rel, relcalc_property p, relcalc_method method,
                                    int* out) {
  return guarded([&] {
    require(rel != nullptr && out != nullptr, "rel/out");
    relcalc::IntrinsicProperty prop{};
    switch (p) {
      case RELCALC_RIGHT_UNIQUE: prop = relcalc::IntrinsicProperty::right_unique; break;
      case RELCALC_RIGHT_TOTAL: prop = relcalc::IntrinsicProperty::right_total; break;
      case RELCALC_LEFT_UNIQUE: prop = relcalc::IntrinsicProperty::left_unique; break;
      case RELCALC_LEFT_TOTAL: prop = relcalc::IntrinsicProperty::left_total; break;
      default: throw relcalc::Error(ErrorCode::invalid_argument, "unknown property");
    }
    const auto m = method == RELCALC_POINTFREE ? relcalc::Method::pointfree : relcalc::Method::pointwise;
    *out = relcalc::has_property(rel->value, prop, m) ? 1 : 0;
  });
}

relcalc_status relcalc_classify(const relcalc_relation* rel, relcalc_method method, relcalc_property_set* out) {
  return guarded([&] {
    require(rel != nullptr && out != nullptr, "rel/out");
    const auto m = method == RELCALC_POINTFREE ? relcalc::Method::pointfree : relcalc::Method::pointwise;
    *out = to_c(relcalc::classify(rel->value, m));
  });
}

relcalc_status relcalc_verify_inverse(const relcalc_relation* r, const relcalc_relation* s, relcalc_side side,
                                      int* out) {
  return guarded([&] {
    require(r != nullptr && s != nullptr && out != nullptr, "r/s/out");
    const auto sd = side == RELCALC_LEFT_INVERSE ? relcalc::InverseSide::left : relcalc::InverseSide::right;
    *out = relcalc::verify_inverse(r->value, s->value, sd) ? 1 : 0;
  });
}

relcalc_status relcalc_class_from_name(const char* name, relcalc_class* out) {
  return guarded([&] {
    require(name != nullptr && out != nullptr, "name/out");
    const auto cls = relcalc::parse_class(name);
    if (!cls) throw relcalc::Error(ErrorCode::invalid_argument, std::string("unknown relation class '") + name + "'");
    *out = static_cast<relcalc_class>(*cls);
  });
}

const char* relcalc_class_name(relcalc_class cls) {
  if (cls < RELCALC_ALL || cls > RELCALC_RT_AND_LT) return "?";
  return relcalc::class_name(static_cast<relcalc::RelationClass>(cls)).data();
}

relcalc_status relcalc_count(relcalc_class cls, uint64_t n, uint64_t k, char** out) {
  return guarded([&] {
    require(out != nullptr, "out");
    *out = dup_string(relcalc::count(to_class(cls), n, k).str());
  });
}

relcalc_status relcalc_binomial(uint64_t n, uint64_t j, char** out) {
  return guarded([&] {
    require(out != nullptr, "out");
    *out = dup_string(relcalc::binomial(n, j).str());
  });
}

relcalc_status relcalc_surjection_count(uint64_t n, uint64_t k, char** out) {
  return guarded([&] {
    require(out != nullptr, "out");
    *out = dup_string(relcalc::surjection_count(n, k).str());
  });
}

relcalc_status relcalc_injection_count(uint64_t n, uint64_t k, char** out) {
  return guarded([&] {
    require(out != nullptr, "out");
    *out = dup_string(relcalc::injection_count(n, k).str());
  });
}

relcalc_status relcalc_stirling2(uint64_t n, uint64_t k, char** out) {
  return guarded([&] {
    require(out != nullptr, "out");
    *out = dup_string(relcalc::stirling2(n, k).str());
  });
}

relcalc_status relcalc_bounds_ru_rt(uint64_t n, uint64_t k, char** lower, char** upper) {
  return guarded([&] {
    require(lower != nullptr && upper != nullptr, "lower/upper");
    const auto b = relcalc::bounds_ru_rt(n, k);
    char* lo = dup_string(b.lower.str());
    try {
      *upper = dup_string(b.upper.str());
    } catch (...) {
      std::free(lo);
      throw;
    }
    *lower = lo;
  });
}

relcalc_status relcalc_table(const char* name, size_t max_n, size_t max_k, int exact, int half_even, char** out) {
  return guarded([&] {
    require(name != nullptr && out != nullptr, "name/out");
    const auto mode = half_even != 0 ? relcalc::Rounding::half_even : relcalc::Rounding::half_up;
    *out = dup_string(relcalc::figure_table(name, max_n, max_k, exact != 0, mode));
  });
}

relcalc_status relcalc_census(size_t n, size_t k, int include_empty, int allow_large, unsigned workers,
                              char** out) {
  return guarded([&] {
    require(out != nullptr, "out");
    const relcalc::CensusOptions options{.allow_large = allow_large != 0, .workers = workers};
    *out = dup_string(relcalc::census_tsv(relcalc::census(n, k, include_empty != 0, options)));
  });
}

relcalc_status relcalc_count_by_census(relcalc_class cls, size_t n, size_t k, int allow_large, char** out) {
  return guarded([&] {
    require(out != nullptr, "out");
    const relcalc::CensusOptions options{.allow_large = allow_large != 0};
    *out = dup_string(relcalc::count_by_census(to_class(cls), n, k, options).str());
  });
}

relcalc_status relcalc_enumerate(size_t n, size_t k, int include_empty, int allow_large, char** out) {
  return guarded([&] {
    require(out != nullptr, "out");
    *out = dup_string(relcalc::listing_tsv(n, k, include_empty != 0, allow_large != 0));
  });
}

relcalc_status relcalc_appendix(size_t n, size_t k, char** out) {
  return guarded([&] {
    require(out != nullptr, "out");
    *out = dup_string(relcalc::appendix_tsv(relcalc::appendix_table(n, k)));
  });
}

relcalc_status relcalc_default_limits(const char* theorem_id, relcalc_verify_limits* out) {
  return guarded([&] {
    require(out != nullptr, "out");
    const auto l = relcalc::default_limits(to_theorem(theorem_id));
    *out = {l.max_set_size, l.max_cells, l.budget};
  });
}

relcalc_status relcalc_verify(const char* theorem_id, const relcalc_verify_limits* limits, relcalc_report** out) {
  relcalc_report* partial = nullptr;
  const auto status = guarded([&] {
    require(out != nullptr, "out");
    *out = nullptr;
    const auto t = to_theorem(theorem_id);
    auto l = relcalc::default_limits(t);
    if (limits != nullptr) l = {limits->max_set_size, limits->max_cells, limits->budget};
    try {
      *out = new relcalc_report{relcalc::verify_theorem(t, l)};
    } catch (const relcalc::BudgetExceeded& e) {
      partial = new relcalc_report{e.partial()};
      throw;
    }
  });
  if (status == RELCALC_E_BUDGET && out != nullptr) *out = partial;
  return status;
}

uint64_t relcalc_report_checked(const relcalc_report* rep) { return rep != nullptr ? rep->value.checked : 0; }

uint64_t relcalc_report_counterexamples(const relcalc_report* rep) {
  return rep != nullptr ? rep->value.counterexample_count : 0;
}

int relcalc_report_passed(const relcalc_report* rep) { return rep != nullptr && rep->value.passed() ? 1 : 0; }

relcalc_status relcalc_report_summary(const relcalc_report* rep, char** out) {
  return guarded([&] {
    require(rep != nullptr && out != nullptr, "rep/out");
    *out = dup_string(rep->value.summary_line());
  });
}

relcalc_status relcalc_report_text(const relcalc_report* rep, char** out) {
  return guarded([&] {
    require(rep != nullptr && out != nullptr, "rep/out");
    *out = dup_string(rep->value.to_text());
  });
}

void relcalc_report_destroy(relcalc_report* rep) { delete rep; }

relcalc_status relcalc_converse_witness(relcalc_relation** r, relcalc_relation** s) {
  return guarded([&] {
    require(r != nullptr && s != nullptr, "r/s");
    auto w = relcalc::converse_witness();
    auto* rr = wrap(std::move(w.r));
    try {
      *s = wrap(std::move(w.s));
    } catch (...) {
      delete rr;
      throw;
    }
    *r = rr;
  });
}

relcalc_status relcalc_probability_exact(relcalc_class cls, uint64_t n, uint64_t k, unsigned places,
                                         int half_even, relcalc_probability* out) {
  return guarded([&] {
    require(out != nullptr, "out");
    fill_probability(relcalc::probability_exact(to_class(cls), n, k), places, half_even, out);
  });
}

relcalc_status relcalc_probability_census(relcalc_class cls, size_t n, size_t k, unsigned places, int half_even,
                                          relcalc_probability* out) {
  return guarded([&] {
    require(out != nullptr, "out");
    fill_probability(relcalc::probability_by_census(to_class(cls), n, k), places, half_even, out);
  });
}

void relcalc_probability_clear(relcalc_probability* p) {
  if (p == nullptr) return;
  std::free(p->numerator);
  std::free(p->denominator);
  std::free(p->reduced_numerator);
  std::free(p->reduced_denominator);
  std::free(p->decimal);
  *p = relcalc_probability{};
}

relcalc_status relcalc_probability_approx(relcalc_class cls, uint64_t n, uint64_t k, double* out) {
  return guarded([&] {
    require(out != nullptr, "out");
    *out = relcalc::probability_approx(to_class(cls), n, k);
  });
}

relcalc_status relcalc_rt_exponential_limit(double r, double* out) {
  return guarded([&] {
    require(out != nullptr, "out");
    *out = relcalc::rt_exponential_limit(r);
  });
}

relcalc_status relcalc_estimate_mc(const relcalc_mc_target* target, size_t n, size_t k, uint64_t samples,
                                   uint64_t seed, unsigned workers, relcalc_mc_estimate* out) {
  return guarded([&] {
    require(target != nullptr && out != nullptr, "target/out");
    relcalc::McTarget t;
    if (target->is_pattern != 0) {
      t = relcalc::PropertySet{.ru = target->ru != 0, .rt = target->rt != 0, .lu = target->lu != 0,
                               .lt = target->lt != 0};
    } else {
      t = to_class(target->cls);
    }
    const auto est = relcalc::estimate_mc(t, n, k, samples, seed, workers);
    *out = {est.estimate, est.samples, est.seed, est.standard_error, est.hits};
  });
}

}  // extern "C"
