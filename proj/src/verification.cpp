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

#include "relcalc/verification.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <sstream>

#include "relcalc/enumeration.hpp"
#include "relcalc/properties.hpp"

namespace relcalc {

namespace {

using Clock = std::chrono::steady_clock;

struct Classified {
  Relation rel;
  PropertySet props;
};

std::vector<Classified> all_relations(std::size_t n, std::size_t k) {
  std::vector<Classified> out;
  out.reserve(std::size_t{1} << (n * k));
  for (auto rel : enumerate(n, k, true, true)) {
    auto props = classify(rel);
    out.push_back({std::move(rel), props});
  }
  return out;
}

std::vector<Classified> all_functions(std::size_t n, std::size_t k) {
  auto rels = all_relations(n, k);
  std::erase_if(rels, [](const Classified& c) { return !c.props.function(); });
  return rels;
}

double relations_of(std::size_t n, std::size_t k) { return std::ldexp(1.0, static_cast<int>(n * k)); }
double functions_of(std::size_t n, std::size_t k) {
  return std::pow(static_cast<double>(k), static_cast<double>(n));
}

std::string sizes_label(std::initializer_list<std::pair<const char*, std::size_t>> sets) {
  std::string out;
  for (const auto& [name, size] : sets) {
    if (!out.empty()) out += ' ';
    out += std::string("|") + name + "|=" + std::to_string(size);
  }
  return out;
}

// Drives one theorem and keeps the budget and counterexample bookkeeping.
class Runner {
 public:
  Runner(Theorem t, const VerifyLimits& limits) : start_(Clock::now()) {
    report_.theorem = t;
    report_.limits = limits;
  }

  [[nodiscard]] bool fits(std::size_t cells) const { return cells <= report_.limits.max_cells; }
  [[nodiscard]] std::size_t max_size() const { return report_.limits.max_set_size; }

  // Runs `body` for one configuration unless its estimated cost would
  // overrun the budget.
  void configuration(const std::string& label, double work, const std::function<void()>& body) {
    if (spent_ + work > report_.limits.budget) {
      report_.complete = false;
      report_.elapsed = Clock::now() - start_;
      std::ostringstream os;
      os << "verification budget of " << report_.limits.budget << " evaluations exhausted at " << label
         << " (needs " << work << " more, " << spent_ << " spent); covered " << report_.coverage.size()
         << " configuration(s), " << report_.checked << " instance(s)";
      throw BudgetExceeded(os.str(), report_);
    }
    spent_ += work;
    body();
    report_.coverage.push_back(label);
  }

  void checked(std::uint64_t instances = 1) { report_.checked += instances; }
  void held(std::uint64_t instances = 1) { report_.hypothesis_held += instances; }

  void counterexample(std::string description, std::vector<Relation> witnesses) {
    ++report_.counterexample_count;
    if (report_.counterexamples.size() < kMaxRecordedCounterexamples) {
      report_.counterexamples.push_back({std::move(description), std::move(witnesses)});
    }
  }

  VerificationReport finish() {
    report_.elapsed = Clock::now() - start_;
    return std::move(report_);
  }

 private:
  VerificationReport report_;
  double spent_ = 0;
  Clock::time_point start_;
};

void verify_right_inverse(Runner& run, Theorem t) {
  for (std::size_t a = 1; a <= run.max_size(); ++a) {
    for (std::size_t b = 1; b <= run.max_size(); ++b) {
      if (!run.fits(a * b)) continue;
      const double lhs = t == Theorem::thm1_1 ? relations_of(a, b) : functions_of(a, b);
      run.configuration(sizes_label({{"A", a}, {"B", b}}), lhs * relations_of(b, a), [&] {
        const auto rs = t == Theorem::thm1_1 ? all_relations(a, b) : all_functions(a, b);
        const auto ss = all_relations(b, a);
        const auto id_b = identity(b);
        for (const auto& r : rs) {
          for (const auto& s : ss) {
            run.checked();
            if (t == Theorem::thm1_corollary && !s.props.ru) continue;
            if (compose(r.rel, s.rel) != id_b) continue;
            run.held();
            bool ok = false;
            switch (t) {
              case Theorem::thm1_1: ok = r.props.rt && s.props.lt; break;
              case Theorem::thm1_2: ok = r.props.surjection() && s.props.lu && s.props.lt; break;
              default: ok = s.props.injection(); break;
            }
            if (!ok) run.counterexample("right inverse without the stated properties", {r.rel, s.rel});
          }
        }
      });
    }
  }
}

void verify_closure(Runner& run) {
  // R: A -> B after S: C -> A; the composite R∘S is C -> B.
  const std::size_t m = run.max_size();
  for (std::size_t a = 1; a <= m; ++a) {
    for (std::size_t b = 1; b <= m; ++b) {
      for (std::size_t c = 1; c <= m; ++c) {
        if (!run.fits(a * b) || !run.fits(c * a)) continue;
        run.configuration(sizes_label({{"A", a}, {"B", b}, {"C", c}}),
                          relations_of(a, b) * relations_of(c, a), [&] {
          const auto rs = all_relations(a, b);
          const auto ss = all_relations(c, a);
          for (const auto& r : rs) {
            for (const auto& s : ss) {
              const auto composite = classify(compose(r.rel, s.rel));
              for (auto p : kAllProperties) {
                run.checked();
                if (!r.props.has(p) || !s.props.has(p)) continue;
                run.held();
                if (!composite.has(p)) {
                  run.counterexample(std::string(short_name(p)) + " not closed under composition",
                                     {r.rel, s.rel});
                }
              }
            }
          }
        });
      }
    }
  }
}

void verify_monotone(Runner& run) {
  for (std::size_t n = 1; n <= run.max_size(); ++n) {
    for (std::size_t k = 1; k <= run.max_size(); ++k) {
      if (!run.fits(n * k)) continue;
      run.configuration(sizes_label({{"A", n}, {"B", k}}), std::pow(3.0, static_cast<double>(n * k)), [&] {
        const std::uint64_t end = std::uint64_t{1} << (n * k);
        for (std::uint64_t super = 0; super < end; ++super) {
          const auto big_rel = decode(n, k, RelationIndex{super});
          const auto big = classify(big_rel);
          // Walk every submask of `super`, including 0.
          for (std::uint64_t sub = super;; sub = (sub - 1) & super) {
            const auto small_rel = decode(n, k, RelationIndex{sub});
            const auto small = classify(small_rel);
            run.checked();
            run.held();
            const bool ok = (!big.ru || small.ru) && (!small.rt || big.rt) && (!big.lu || small.lu) &&
                            (!small.lt || big.lt);
            if (!ok) run.counterexample("property not inherited along R ⊆ S", {small_rel, big_rel});
            if (sub == 0) break;
          }
        }
      });
    }
  }
}

void verify_opposite_of_composite(Runner& run) {
  // S: A -> B, R: B -> C; (R∘S)° against S°∘R°.
  const std::size_t m = run.max_size();
  for (std::size_t a = 1; a <= m; ++a) {
    for (std::size_t b = 1; b <= m; ++b) {
      for (std::size_t c = 1; c <= m; ++c) {
        if (!run.fits(a * b) || !run.fits(b * c)) continue;
        run.configuration(sizes_label({{"A", a}, {"B", b}, {"C", c}}),
                          relations_of(a, b) * relations_of(b, c), [&] {
          const auto ss = all_relations(a, b);
          const auto rs = all_relations(b, c);
          for (const auto& s : ss) {
            for (const auto& r : rs) {
              run.checked();
              run.held();
              if (opposite(compose(r.rel, s.rel)) != compose(opposite(s.rel), opposite(r.rel))) {
                run.counterexample("(R∘S)° differs from S°∘R°", {r.rel, s.rel});
              }
            }
          }
        });
      }
    }
  }
}

void verify_r2(Runner& run) {
  for (std::size_t n = 1; n <= run.max_size(); ++n) {
    for (std::size_t k = 1; k <= run.max_size(); ++k) {
      if (!run.fits(n * k)) continue;
      run.configuration(sizes_label({{"A", n}, {"B", k}}), relations_of(n, k), [&] {
        const std::uint64_t end = std::uint64_t{1} << (n * k);
        for (std::uint64_t v = 0; v < end; ++v) {
          const auto r = decode(n, k, RelationIndex{v});
          run.checked();
          run.held();
          if (!is_subset(r, compose(r, compose(opposite(r), r)))) {
            run.counterexample("R not contained in R∘R°∘R", {r});
          }
        }
      });
    }
  }
}

void verify_shunting(Runner& run) {
  const std::size_t m = run.max_size();
  for (std::size_t a = 1; a <= m; ++a) {
    for (std::size_t b = 1; b <= m; ++b) {
      for (std::size_t c = 1; c <= m; ++c) {
        if (!run.fits(a * b) || !run.fits(c * a) || !run.fits(c * b)) continue;
        const double work = 2 * functions_of(a, b) * relations_of(c, a) * relations_of(c, b);
        run.configuration(sizes_label({{"A", a}, {"B", b}, {"C", c}}), work, [&] {
          const auto fs = all_functions(a, b);
          // f∘U ⊆ V <=> U ⊆ f°∘V with U: C -> A, V: C -> B.
          {
            const auto us = all_relations(c, a);
            const auto vs = all_relations(c, b);
            for (const auto& f : fs) {
              const auto f_op = opposite(f.rel);
              for (const auto& u : us) {
                const auto fu = compose(f.rel, u.rel);
                for (const auto& v : vs) {
                  run.checked();
                  run.held();
                  if (is_subset(fu, v.rel) != is_subset(u.rel, compose(f_op, v.rel))) {
                    run.counterexample("f∘U ⊆ V and U ⊆ f°∘V disagree", {f.rel, u.rel, v.rel});
                  }
                }
              }
            }
          }
          // U∘g° ⊆ V <=> U ⊆ V∘g with U: A -> C, V: B -> C.
          {
            const auto us = all_relations(a, c);
            const auto vs = all_relations(b, c);
            for (const auto& g : fs) {
              const auto g_op = opposite(g.rel);
              for (const auto& u : us) {
                const auto ug = compose(u.rel, g_op);
                for (const auto& v : vs) {
                  run.checked();
                  run.held();
                  if (is_subset(ug, v.rel) != is_subset(u.rel, compose(v.rel, g.rel))) {
                    run.counterexample("U∘g° ⊆ V and U ⊆ V∘g disagree", {g.rel, u.rel, v.rel});
                  }
                }
              }
            }
          }
        });
      }
    }
  }
}

void verify_inverse_unique(Runner& run) {
  for (std::size_t a = 1; a <= run.max_size(); ++a) {
    for (std::size_t b = 1; b <= run.max_size(); ++b) {
      if (!run.fits(a * b)) continue;
      run.configuration(sizes_label({{"A", a}, {"B", b}}), 2 * relations_of(a, b) * relations_of(b, a), [&] {
        const auto rs = all_relations(a, b);
        const auto candidates = all_relations(b, a);
        const auto id_a = identity(a);
        const auto id_b = identity(b);
        // Every triple (R, S, T) is covered: for each R only the S that are
        // right inverses and the T that are left inverses meet the premise.
        const auto per_r = static_cast<std::uint64_t>(candidates.size()) * candidates.size();
        for (const auto& r : rs) {
          std::vector<const Relation*> rights;
          std::vector<const Relation*> lefts;
          for (const auto& x : candidates) {
            if (compose(r.rel, x.rel) == id_b) rights.push_back(&x.rel);
            if (compose(x.rel, r.rel) == id_a) lefts.push_back(&x.rel);
          }
          run.checked(per_r);
          run.held(static_cast<std::uint64_t>(rights.size()) * lefts.size());
          for (const auto* s : rights) {
            for (const auto* t : lefts) {
              if (*s != *t) run.counterexample("distinct right and left inverses", {r.rel, *s, *t});
            }
          }
        }
      });
    }
  }
}

}  // namespace

std::string_view theorem_id(Theorem t) noexcept {
  switch (t) {
    case Theorem::thm1_1: return "THM1_1";
    case Theorem::thm1_2: return "THM1_2";
    case Theorem::thm1_corollary: return "THM1_COROLLARY";
    case Theorem::thm2: return "THM2";
    case Theorem::thm3: return "THM3";
    case Theorem::lemma_r1: return "LEMMA_R1";
    case Theorem::lemma_r2: return "LEMMA_R2";
    case Theorem::lemma_r3: return "LEMMA_R3";
    case Theorem::inverse_unique: return "INVERSE_UNIQUE";
  }
  return "?";
}

std::string_view theorem_statement(Theorem t) noexcept {
  switch (t) {
    case Theorem::thm1_1: return "R∘S = 1_B implies R ∈ RT and S ∈ LT";
    case Theorem::thm1_2: return "f∘S = 1_B implies f is a surjection and S ∈ LU ∩ LT";
    case Theorem::thm1_corollary: return "f∘S = 1_B with S ∈ RU implies S is an injection";
    case Theorem::thm2: return "RU, RT, LU and LT are each closed under composition";
    case Theorem::thm3: return "R ⊆ S: S ∈ RU ⇒ R ∈ RU, R ∈ RT ⇒ S ∈ RT, S ∈ LU ⇒ R ∈ LU, R ∈ LT ⇒ S ∈ LT";
    case Theorem::lemma_r1: return "(R∘S)° = S°∘R°";
    case Theorem::lemma_r2: return "R ⊆ R∘R°∘R";
    case Theorem::lemma_r3: return "f∘U ⊆ V ⇔ U ⊆ f°∘V and U∘g° ⊆ V ⇔ U ⊆ V∘g for functions f, g";
    case Theorem::inverse_unique: return "R∘S = 1_B and T∘R = 1_A imply S = T";
  }
  return "?";
}

std::optional<Theorem> parse_theorem(std::string_view id) {
  std::string upper(id);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  for (auto t : kAllTheorems) {
    if (theorem_id(t) == upper) return t;
  }
  return std::nullopt;
}

VerifyLimits default_limits(Theorem t) noexcept {
  switch (t) {
    case Theorem::thm1_1:
    case Theorem::thm1_2:
    case Theorem::thm1_corollary:
    case Theorem::inverse_unique:
      return {.max_set_size = 3, .max_cells = 9};
    case Theorem::thm3:
    case Theorem::lemma_r2:
      return {.max_set_size = 9, .max_cells = 9};
    case Theorem::thm2:
    case Theorem::lemma_r1:
    case Theorem::lemma_r3:
      return {.max_set_size = 2, .max_cells = 4};
  }
  return {};
}

std::string VerificationReport::summary_line() const {
  return "theorem=" + std::string(theorem_id(theorem)) + " checked=" + std::to_string(checked) +
         " counterexamples=" + std::to_string(counterexample_count);
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << "theorem " << theorem_id(theorem) << ": " << theorem_statement(theorem) << '\n';
  os << "limits: max-set-size=" << limits.max_set_size << " max-cells=" << limits.max_cells
     << " budget=" << limits.budget << '\n';
  os << "configurations: " << coverage.size() << (complete ? "" : " (incomplete)") << '\n';
  for (const auto& c : coverage) os << "  " << c << '\n';
  os << "checked: " << checked << " instance(s), premise held in " << hypothesis_held << '\n';
  os << "counterexamples: " << counterexample_count << '\n';
  for (const auto& c : counterexamples) {
    os << "  " << c.description << ':';
    for (const auto& w : c.witnesses) os << ' ' << w.to_string() << ';';
    os << '\n';
  }
  os << "elapsed: " << elapsed.count() << " s\n";
  os << summary_line() << '\n';
  return os.str();
}

VerificationReport verify_theorem(Theorem t, const VerifyLimits& limits) {
  Runner run(t, limits);
  switch (t) {
    case Theorem::thm1_1:
    case Theorem::thm1_2:
    case Theorem::thm1_corollary: verify_right_inverse(run, t); break;
    case Theorem::thm2: verify_closure(run); break;
    case Theorem::thm3: verify_monotone(run); break;
    case Theorem::lemma_r1: verify_opposite_of_composite(run); break;
    case Theorem::lemma_r2: verify_r2(run); break;
    case Theorem::lemma_r3: verify_shunting(run); break;
    case Theorem::inverse_unique: verify_inverse_unique(run); break;
  }
  return run.finish();
}

ConverseWitness converse_witness() {
  const Pair r_pairs[] = {{1, 1}, {1, 2}, {2, 1}};
  const Pair s_pairs[] = {{1, 1}, {2, 2}};
  return {make_relation(2, 2, r_pairs), make_relation(2, 2, s_pairs)};
}

}  // namespace relcalc
