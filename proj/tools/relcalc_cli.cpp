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

// relcalc: command-line front end over the C API.
//
// Exit codes: 0 success, 1 usage, 2 input parse, 3 domain, 4 cap/budget.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "relcalc/relcalc.h"

namespace {

enum Exit : int { kOk = 0, kUsage = 1, kParse = 2, kDomain = 3, kRefused = 4 };

int exit_code(relcalc_status status) {
  switch (status) {
    case RELCALC_OK: return kOk;
    case RELCALC_E_INVALID_ARGUMENT: return kUsage;
    case RELCALC_E_PARSE: return kParse;
    case RELCALC_E_CAP:
    case RELCALC_E_BUDGET: return kRefused;
    default: return kDomain;
  }
}

int report(relcalc_status status) {
  if (status != RELCALC_OK) std::cerr << "relcalc: " << relcalc_last_error() << '\n';
  return exit_code(status);
}

struct StringDeleter {
  void operator()(char* s) const { relcalc_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct RelationDeleter {
  void operator()(relcalc_relation* r) const { relcalc_relation_destroy(r); }
};
using OwnedRelation = std::unique_ptr<relcalc_relation, RelationDeleter>;

struct ReportDeleter {
  void operator()(relcalc_report* r) const { relcalc_report_destroy(r); }
};
using OwnedReport = std::unique_ptr<relcalc_report, ReportDeleter>;

// Runs a string-producing C call and prints the result.
template <typename Call>
int print_string(Call&& call) {
  char* raw = nullptr;
  const auto status = call(&raw);
  OwnedString text(raw);
  if (status == RELCALC_OK) std::cout << text.get();
  return report(status);
}

int usage_error(const std::string& message) {
  std::cerr << "relcalc: " << message << '\n';
  return kUsage;
}

int cmd_classify(const std::string& path, bool pointfree) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path);
    if (!in) {
      std::cerr << "relcalc: cannot open '" << path << "'\n";
      return kParse;
    }
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  relcalc_relation* raw = nullptr;
  if (const auto st = relcalc_relation_parse(text.c_str(), &raw); st != RELCALC_OK) return report(st);
  OwnedRelation rel(raw);

  relcalc_property_set p{};
  const auto st = relcalc_classify(rel.get(), pointfree ? RELCALC_POINTFREE : RELCALC_POINTWISE, &p);
  if (st != RELCALC_OK) return report(st);
  std::cout << "RT\t" << p.rt << "\nLT\t" << p.lt << "\nRU\t" << p.ru << "\nLU\t" << p.lu << "\nfunction\t"
            << p.function << "\ninjection\t" << p.injection << "\nsurjection\t" << p.surjection
            << "\nbijection\t" << p.bijection << '\n';
  return kOk;
}

// `bucket:TLUV` with four 0/1 digits in RT LT RU LU order selects one exact
// combination; anything else must be a class name.
bool parse_target(const std::string& text, relcalc_mc_target& target, bool& is_class) {
  target = {};
  if (text.rfind("bucket:", 0) == 0) {
    const std::string bits = text.substr(7);
    if (bits.size() != 4 || bits.find_first_not_of("01") != std::string::npos) return false;
    target.is_pattern = 1;
    target.rt = bits[0] == '1';
    target.lt = bits[1] == '1';
    target.ru = bits[2] == '1';
    target.lu = bits[3] == '1';
    is_class = false;
    return true;
  }
  is_class = true;
  return relcalc_class_from_name(text.c_str(), &target.cls) == RELCALC_OK;
}

struct ProbArgs {
  std::string target;
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  bool exact = false;
  bool approx = false;
  bool mc = false;
  bool census = false;
  bool half_even = false;
  unsigned places = 4;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 1;
  unsigned workers = 0;
};

int cmd_prob(const ProbArgs& a) {
  relcalc_mc_target target{};
  bool is_class = true;
  if (!parse_target(a.target, target, is_class)) {
    return usage_error("unknown class or bucket '" + a.target + "'");
  }
  if (a.mc) {
    relcalc_mc_estimate est{};
    const auto st = relcalc_estimate_mc(&target, a.n, a.k, a.samples, a.seed, a.workers, &est);
    if (st != RELCALC_OK) return report(st);
    std::printf("target\t%s\nn\t%llu\nk\t%llu\nestimate\t%.6f\nstandard_error\t%.6f\nhits\t%llu\nsamples\t%llu\n"
                "seed\t%llu\n",
                a.target.c_str(), static_cast<unsigned long long>(a.n), static_cast<unsigned long long>(a.k),
                est.estimate, est.standard_error, static_cast<unsigned long long>(est.hits),
                static_cast<unsigned long long>(est.samples), static_cast<unsigned long long>(est.seed));
    return kOk;
  }
  if (!is_class) return usage_error("bucket targets are only supported with --mc");
  if (a.approx) {
    double value = 0;
    const auto st = relcalc_probability_approx(target.cls, a.n, a.k, &value);
    if (st != RELCALC_OK) return report(st);
    std::printf("class\t%s\nn\t%llu\nk\t%llu\napprox\t%.10f\n", relcalc_class_name(target.cls),
                static_cast<unsigned long long>(a.n), static_cast<unsigned long long>(a.k), value);
    return kOk;
  }
  relcalc_probability p{};
  const auto st = a.census ? relcalc_probability_census(target.cls, a.n, a.k, a.places, a.half_even, &p)
                           : relcalc_probability_exact(target.cls, a.n, a.k, a.places, a.half_even, &p);
  if (st != RELCALC_OK) return report(st);
  std::cout << "class\t" << relcalc_class_name(target.cls) << "\nn\t" << a.n << "\nk\t" << a.k << "\nfraction\t"
            << p.numerator << '/' << p.denominator << "\nreduced\t" << p.reduced_numerator << '/'
            << p.reduced_denominator << "\ndecimal\t" << p.decimal << '\n';
  relcalc_probability_clear(&p);
  return kOk;
}

struct VerifyArgs {
  std::string id;
  std::size_t max_size = 0;
  std::size_t max_cells = 0;
  double budget = 0;
  bool summary_only = false;
};

int run_one_verify(const std::string& id, const VerifyArgs& a) {
  relcalc_verify_limits limits{};
  if (const auto st = relcalc_default_limits(id.c_str(), &limits); st != RELCALC_OK) return report(st);
  if (a.max_size != 0) {
    limits.max_set_size = a.max_size;
    limits.max_cells = a.max_size * a.max_size;
  }
  if (a.max_cells != 0) limits.max_cells = a.max_cells;
  if (a.budget > 0) limits.budget = a.budget;

  relcalc_report* raw = nullptr;
  const auto st = relcalc_verify(id.c_str(), &limits, &raw);
  // The report accessors below succeed and would clear the error text.
  const std::string error = st != RELCALC_OK ? relcalc_last_error() : "";
  OwnedReport rep(raw);
  if (rep) {
    char* text = nullptr;
    const auto fst = a.summary_only ? relcalc_report_summary(rep.get(), &text) : relcalc_report_text(rep.get(), &text);
    OwnedString owned(text);
    if (fst == RELCALC_OK) std::cout << owned.get() << (a.summary_only ? "\n" : "");
  }
  if (st != RELCALC_OK) {
    std::cerr << "relcalc: " << error << '\n';
    return exit_code(st);
  }
  return relcalc_report_passed(rep.get()) ? kOk : kDomain;
}

int cmd_verify(const VerifyArgs& a) {
  if (a.id != "all" && a.id != "ALL") return run_one_verify(a.id, a);
  int worst = kOk;
  for (const char* id : {"THM1_1", "THM1_2", "THM1_COROLLARY", "THM2", "THM3", "LEMMA_R1", "LEMMA_R2", "LEMMA_R3",
                         "INVERSE_UNIQUE"}) {
    const int rc = run_one_verify(id, a);
    if (rc != kOk) worst = rc;
  }
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"relcalc: finite binary relations, their intrinsic properties and exact counts"};
  app.require_subcommand(1);
  int rc = kOk;

  // classify
  std::string classify_path;
  bool classify_pointfree = false;
  auto* classify = app.add_subcommand("classify", "Print the intrinsic properties of a relation file ('-' for stdin)");
  classify->add_option("file", classify_path, "Relation text file")->required();
  classify->add_flag("--pointfree", classify_pointfree, "Decide properties with the point-free containments");
  classify->callback([&] { rc = cmd_classify(classify_path, classify_pointfree); });

  // count
  std::string count_class;
  std::uint64_t count_n = 0;
  std::uint64_t count_k = 0;
  bool count_census = false;
  bool count_allow_large = false;
  auto* count = app.add_subcommand("count", "Exact number of relations in a class");
  count->add_option("class", count_class, "ALL, RU, LU, RT, LT, FUNCTION, INJECTION, SURJECTION, BIJECTION, "
                                          "RU_AND_LU, RU_AND_RT, LU_AND_LT, RT_AND_LT")->required();
  count->add_option("n", count_n, "Input set size")->required();
  count->add_option("k", count_k, "Output set size")->required();
  count->add_flag("--census", count_census, "Count by exhaustive enumeration instead of the formula");
  count->add_flag("--allow-large", count_allow_large, "Lift the enumeration cap (with --census)");
  count->callback([&] {
    relcalc_class cls{};
    if (relcalc_class_from_name(count_class.c_str(), &cls) != RELCALC_OK) {
      rc = usage_error(relcalc_last_error());
      return;
    }
    rc = print_string([&](char** out) {
      const auto st = count_census ? relcalc_count_by_census(cls, count_n, count_k, count_allow_large, out)
                                   : relcalc_count(cls, count_n, count_k, out);
      return st;
    });
    if (rc == kOk) std::cout << '\n';
  });

  // table
  std::string table_name;
  std::size_t table_max_n = 6;
  std::size_t table_max_k = 6;
  bool table_exact = false;
  bool table_half_even = false;
  auto* table = app.add_subcommand("table", "Print a count or probability grid as TSV");
  table->add_option("name", table_name, "figure1..figure7 or census")->required();
  table->add_option("--max-n", table_max_n, "Largest input set size")->capture_default_str();
  table->add_option("--max-k", table_max_k, "Largest output set size")->capture_default_str();
  table->add_flag("--exact", table_exact, "Probability tables: one row per cell with numerator/denominator");
  table->add_flag("--half-even", table_half_even, "Round probability ties to even");
  table->callback([&] {
    rc = print_string([&](char** out) {
      return relcalc_table(table_name.c_str(), table_max_n, table_max_k, table_exact, table_half_even, out);
    });
  });

  // enumerate
  std::size_t enum_n = 0;
  std::size_t enum_k = 0;
  bool enum_appendix = false;
  bool enum_include_empty = false;
  bool enum_allow_large = false;
  auto* enumerate = app.add_subcommand("enumerate", "List every relation with its properties");
  enumerate->add_option("n", enum_n, "Input set size")->required();
  enumerate->add_option("k", enum_k, "Output set size")->required();
  enumerate->add_flag("--appendix", enum_appendix, "Order by pair count and print the totals row");
  enumerate->add_flag("--include-empty", enum_include_empty, "Include the empty relation");
  enumerate->add_flag("--allow-large", enum_allow_large, "Lift the enumeration cap");
  enumerate->callback([&] {
    rc = print_string([&](char** out) {
      return enum_appendix ? relcalc_appendix(enum_n, enum_k, out)
                           : relcalc_enumerate(enum_n, enum_k, enum_include_empty, enum_allow_large, out);
    });
  });

  // census
  std::size_t census_n = 0;
  std::size_t census_k = 0;
  bool census_include_empty = false;
  bool census_allow_large = false;
  unsigned census_workers = 0;
  auto* census = app.add_subcommand("census", "Count all relations in each of the 16 property combinations");
  census->add_option("n", census_n, "Input set size")->required();
  census->add_option("k", census_k, "Output set size")->required();
  census->add_flag("--include-empty", census_include_empty, "Include the empty relation");
  census->add_flag("--allow-large", census_allow_large, "Lift the enumeration cap");
  census->add_option("--workers", census_workers, "Worker threads (0: all cores)");
  census->callback([&] {
    rc = print_string([&](char** out) {
      return relcalc_census(census_n, census_k, census_include_empty, census_allow_large, census_workers, out);
    });
  });

  // verify
  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Exhaustively check a theorem (or 'all')");
  verify->add_option("theorem", verify_args.id,
                     "THM1_1, THM1_2, THM1_COROLLARY, THM2, THM3, LEMMA_R1, LEMMA_R2, LEMMA_R3, INVERSE_UNIQUE, all")
      ->required();
  verify->add_option("--max-size", verify_args.max_size, "Largest set size (also caps n*k at its square)");
  verify->add_option("--max-cells", verify_args.max_cells, "Largest n*k of any relation");
  verify->add_option("--budget", verify_args.budget, "Work budget in relation evaluations");
  verify->add_flag("--summary", verify_args.summary_only, "Print only the machine-readable summary line");
  verify->callback([&] { rc = cmd_verify(verify_args); });

  // prob
  ProbArgs prob_args;
  auto* prob = app.add_subcommand("prob", "Probability that a uniformly random relation lies in a class");
  prob->add_option("class", prob_args.target, "Class name, or bucket:XXXX (RT LT RU LU bits) with --mc")->required();
  prob->add_option("n", prob_args.n, "Input set size")->required();
  prob->add_option("k", prob_args.k, "Output set size")->required();
  auto* mode_exact = prob->add_flag("--exact", prob_args.exact, "Exact rational (default)");
  auto* mode_approx = prob->add_flag("--approx", prob_args.approx, "Large-set approximation");
  auto* mode_mc = prob->add_flag("--mc", prob_args.mc, "Monte Carlo estimate");
  mode_exact->excludes(mode_approx)->excludes(mode_mc);
  mode_approx->excludes(mode_mc);
  prob->add_flag("--census", prob_args.census, "Exact probability from an exhaustive census");
  prob->add_flag("--half-even", prob_args.half_even, "Round ties to even");
  prob->add_option("--places", prob_args.places, "Decimal places")->capture_default_str();
  prob->add_option("--samples", prob_args.samples, "Monte Carlo sample count")->capture_default_str();
  prob->add_option("--seed", prob_args.seed, "Monte Carlo seed")->capture_default_str();
  prob->add_option("--workers", prob_args.workers, "Worker threads (0: all cores)");
  prob->callback([&] { rc = cmd_prob(prob_args); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "relcalc: " << e.what() << '\n';
    return kUsage;
  }
  return rc;
}
