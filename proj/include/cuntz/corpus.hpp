// Copyright 2026 The cuntzalg Authors
// SPDX-License-Identifier: Apache-2.0

// Bundled example unitaries with expected outcomes.
//
// File format: one `key: value` pair per line, '#' starts a comment. Required
// keys are `id`, `n` and `u`; keys starting with `expect.` are expectations
// checked by the corpus runner.

#pragma once

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cuntz {

class CorpusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CorpusEntry {
  std::string id;
  std::string title;
  int n = 2;
  std::string unitary;
  std::map<std::string, std::string> expect;  // key without the "expect." prefix
  std::string source;
};

CorpusEntry parse_corpus_entry(std::string_view text, const std::string& source);
/// Every *.txt entry in dir, sorted by id; duplicate ids are an error.
std::vector<CorpusEntry> load_corpus(const std::filesystem::path& dir);

}  // namespace cuntz
