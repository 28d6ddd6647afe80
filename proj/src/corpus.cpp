// Copyright 2026 The cuntzalg Authors
// SPDX-License-Identifier: Apache-2.0

#include "cuntz/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace cuntz {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

CorpusEntry parse_corpus_entry(std::string_view text, const std::string& source) {
  CorpusEntry e;
  e.source = source;
  std::istringstream in{std::string(text)};
  std::string line;
  std::set<std::string> seen;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    const std::string body = trim(line.substr(0, line.find('#')));
    if (body.empty()) continue;
    const auto colon = body.find(':');
    if (colon == std::string::npos) throw CorpusError(source + ":" + std::to_string(lineno) + ": expected 'key: value'");
    const std::string key = trim(std::string_view(body).substr(0, colon));
    const std::string value = trim(std::string_view(body).substr(colon + 1));
    if (!seen.insert(key).second) throw CorpusError(source + ":" + std::to_string(lineno) + ": duplicate key " + key);
    if (key == "id") {
      e.id = value;
    } else if (key == "title") {
      e.title = value;
    } else if (key == "n") {
      try {
        e.n = std::stoi(value);
      } catch (const std::exception&) {
        throw CorpusError(source + ":" + std::to_string(lineno) + ": bad n");
      }
    } else if (key == "u") {
      e.unitary = value;
    } else if (key.starts_with("expect.")) {
      e.expect[key.substr(7)] = value;
    } else {
      throw CorpusError(source + ":" + std::to_string(lineno) + ": unknown key " + key);
    }
  }
  if (e.id.empty()) throw CorpusError(source + ": missing id");
  if (e.unitary.empty()) throw CorpusError(source + ": missing u");
  return e;
}

std::vector<CorpusEntry> load_corpus(const std::filesystem::path& dir) {
  std::vector<CorpusEntry> out;
  if (!std::filesystem::is_directory(dir)) throw CorpusError("corpus directory not found: " + dir.string());
  for (const auto& f : std::filesystem::directory_iterator(dir)) {
    if (f.path().extension() != ".txt") continue;
    std::ifstream in(f.path());
    std::stringstream ss;
    ss << in.rdbuf();
    out.push_back(parse_corpus_entry(ss.str(), f.path().filename().string()));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  for (std::size_t j = 1; j < out.size(); ++j)
    if (out[j].id == out[j - 1].id) throw CorpusError("duplicate corpus id " + out[j].id);
  return out;
}

}  // namespace cuntz
