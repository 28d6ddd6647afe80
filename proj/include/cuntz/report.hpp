// Copyright 2026 The cuntzalg Authors
// SPDX-License-Identifier: Apache-2.0

// Command pipelines behind the CLI and their machine-readable reports.
//
// A report is {schema_version, command, params, checks: [{name, status,
// details}], verdict?, timing?}. Statuses are "pass", "fail" and
// "undetermined"; only "fail" makes a run unsuccessful.

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cuntz/corpus.hpp"
#include "cuntz/levels.hpp"

namespace cuntz {

inline constexpr int kSchemaVersion = 1;

enum class Status { kPass, kFail, kUndetermined };
std::string to_string(Status s);
Status status_from_string(const std::string& s);

struct CheckResult {
  std::string name;
  Status status = Status::kPass;
  nlohmann::json details = nlohmann::json::object();
};

struct Report {
  int schema_version = kSchemaVersion;
  std::string command;
  nlohmann::json params = nlohmann::json::object();
  std::vector<CheckResult> checks;
  std::optional<nlohmann::json> verdict;
  std::optional<nlohmann::json> timing;  // seconds per check, only on request

  bool passed() const;
};

nlohmann::json to_json(const Report& r);
/// Inverse of to_json; throws nlohmann::json::exception on malformed input.
Report report_from_json(const nlohmann::json& j);

/// Human-readable rendering, one line per check followed by its details.
std::string render_text(const Report& r);

struct Budget {
  std::size_t K = 5;
  std::size_t L = 6;
  int D = 2;
};

/// Normal form, grading, membership flags, trace and unitarity of one element.
/// Throws ParseError on malformed input.
Report run_eval(const std::string& text, int n);

/// Full decomposability pipeline for one unitary. Throws ParseError on
/// malformed input and NotUnitary when u is not unitary. When `expect` is
/// given each expectation becomes an extra check named "expect.<key>".
Report run_check(const std::string& text, int n, const Budget& b, bool timing = false,
                 const std::map<std::string, std::string>* expect = nullptr);

/// Runs the given entries concurrently; checks are prefixed by the entry id
/// and ordered by id. An empty list yields an empty, passing report.
Report run_corpus(const std::vector<CorpusEntry>& entries, const Budget& b, bool timing = false);

}  // namespace cuntz
