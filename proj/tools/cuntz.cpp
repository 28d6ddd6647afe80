// Copyright 2026 The cuntzalg Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end.
//
//   cuntz eval  EXPR [--n N] [--json]
//   cuntz check [U] [--corpus-id ID] [--n N] [--K K] [--L L] [--D D] [--json] [--timing]
//   cuntz corpus [--corpus-id ID] [--K K] [--L L] [--D D] [--json] [--timing]
//
// Exit codes: 0 every check passed, 1 some check failed, 2 usage or input error.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cuntz/corpus.hpp"
#include "cuntz/endo.hpp"
#include "cuntz/parse.hpp"
#include "cuntz/report.hpp"

#ifndef CUNTZ_CORPUS_DIR
#define CUNTZ_CORPUS_DIR "corpus"
#endif

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int emit(const cuntz::Report& r, bool as_json) {
  if (as_json)
    std::cout << cuntz::to_json(r).dump(2) << "\n";
  else
    std::cout << cuntz::render_text(r);
  return r.passed() ? kExitPass : kExitFail;
}

int usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact symbolic computations in the Cuntz algebra O_n"};
  app.require_subcommand(1);

  int n = 2;
  cuntz::Budget budget;
  bool as_json = false;
  bool timing = false;
  std::string expr;
  std::string unitary;
  std::string corpus_id;
  std::string corpus_dir = CUNTZ_CORPUS_DIR;

  auto* eval = app.add_subcommand("eval", "Normal form, grading, membership and trace of an element");
  eval->add_option("expr", expr, "Element, e.g. 'S[1]S[2]* + P[21]'")->required();
  eval->add_option("--n", n, "Number of generators")->check(CLI::Range(2, 9));
  eval->add_flag("--json", as_json, "Machine-readable report");

  auto* check = app.add_subcommand("check", "Decomposability analysis of lambda_u");
  check->add_option("u", unitary, "Unitary of O_n");
  check->add_option("--corpus-id", corpus_id, "Take u and expectations from a corpus entry");
  check->add_option("--corpus-dir", corpus_dir, "Corpus directory");
  check->add_option("--n", n, "Number of generators")->check(CLI::Range(2, 9));
  check->add_option("--K", budget.K, "Generator level of F_n^(K)")->check(CLI::Range(1, 12));
  check->add_option("--L", budget.L, "Word-length budget of the candidate space")->check(CLI::Range(1, 12));
  check->add_option("--D", budget.D, "Largest gauge degree |d| searched")->check(CLI::Range(0, 8));
  check->add_flag("--json", as_json, "Machine-readable report");
  check->add_flag("--timing", timing, "Record wall time per stage");

  auto* corpus = app.add_subcommand("corpus", "Run every bundled example against its expectations");
  corpus->add_option("--corpus-id", corpus_id, "Only run the entry with this id");
  corpus->add_option("--corpus-dir", corpus_dir, "Corpus directory");
  corpus->add_option("--K", budget.K, "Generator level of F_n^(K)")->check(CLI::Range(1, 12));
  corpus->add_option("--L", budget.L, "Word-length budget of the candidate space")->check(CLI::Range(1, 12));
  corpus->add_option("--D", budget.D, "Largest gauge degree |d| searched")->check(CLI::Range(0, 8));
  corpus->add_flag("--json", as_json, "Machine-readable report");
  corpus->add_flag("--timing", timing, "Record wall time per stage");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (eval->parsed()) return emit(cuntz::run_eval(expr, n), as_json);

    if (check->parsed()) {
      if (corpus_id.empty() == unitary.empty()) return usage_error("give exactly one of a unitary or --corpus-id");
      if (unitary.empty()) {
        for (const auto& entry : cuntz::load_corpus(corpus_dir))
          if (entry.id == corpus_id) return emit(cuntz::run_check(entry.unitary, entry.n, budget, timing, &entry.expect), as_json);
        return usage_error("no corpus entry with id " + corpus_id);
      }
      return emit(cuntz::run_check(unitary, n, budget, timing), as_json);
    }

    auto entries = cuntz::load_corpus(corpus_dir);
    if (!corpus_id.empty()) std::erase_if(entries, [&](const auto& e) { return e.id != corpus_id; });
    return emit(cuntz::run_corpus(entries, budget, timing), as_json);
  } catch (const cuntz::ParseError& e) {
    return usage_error(e.what());
  } catch (const cuntz::NotUnitary& e) {
    return usage_error(e.what());
  } catch (const cuntz::CorpusError& e) {
    return usage_error(e.what());
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what());
  }
}
