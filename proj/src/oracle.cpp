// Copyright 2026 The cuntzalg Authors
// SPDX-License-Identifier: Apache-2.0

#include "cuntz/oracle.hpp"

#include <algorithm>
#include <optional>
#include <string>

namespace cuntz {

std::size_t OracleMatrix::trusted_count() const {
  return static_cast<std::size_t>(std::count(trusted.begin(), trusted.end(), true));
}

TruncatedRep::TruncatedRep(int n, std::size_t window) : n_(n), window_(window), max_len_(0) {
  if (n < 2 || n > kMaxAlphabet) throw std::invalid_argument("TruncatedRep: n out of range");
  // Words up to log_n(N) - 1 letters, so that at least the low columns stay in range.
  std::size_t reach = 1;
  while (reach * static_cast<std::size_t>(n) < window_) {
    reach *= static_cast<std::size_t>(n);
    ++max_len_;
  }
  if (max_len_ == 0) throw WindowTooSmall("TruncatedRep: window holds no words");
  --max_len_;
}

namespace {

// S_mu S_nu^* e_m, or nullopt when the result is zero. Sets `off` when an index leaves the window.
std::optional<std::size_t> apply_monomial(const Monomial& t, std::size_t m, int n, std::size_t window, bool& off) {
  const auto base = static_cast<std::size_t>(n);
  for (std::size_t j = 0; j < t.nu.size(); ++j) {
    const auto letter = static_cast<std::size_t>(t.nu[j] - 1);
    if (m % base != letter) return std::nullopt;
    m /= base;
  }
  for (std::size_t j = t.mu.size(); j-- > 0;) {
    m = m * base + static_cast<std::size_t>(t.mu[j] - 1);
    if (m >= window) {
      off = true;
      return std::nullopt;
    }
  }
  return m;
}

}  // namespace

OracleMatrix TruncatedRep::evaluate(const Element& x) const {
  if (x.n() != n_) throw AlphabetMismatch(n_, x.n());
  if (x.max_length() > max_len_)
    throw WindowTooSmall("evaluate: word length " + std::to_string(x.max_length()) + " exceeds the window limit " +
                         std::to_string(max_len_));
  OracleMatrix out;
  out.window = window_;
  out.columns.resize(window_);
  out.trusted.assign(window_, true);
  for (std::size_t m = 0; m < window_; ++m) {
    SparseVector col;
    bool off = false;
    for (const auto& t : x.terms()) {
      auto r = apply_monomial(t.m, m, n_, window_, off);
      if (r) col.emplace_back(*r, t.c);
    }
    if (off) {
      out.trusted[m] = false;
      continue;
    }
    std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVector merged;
    for (const auto& [r, c] : col) {
      if (!merged.empty() && merged.back().first == r)
        merged.back().second += c;
      else
        merged.emplace_back(r, c);
    }
    std::erase_if(merged, [](const auto& e) { return e.second.is_zero(); });
    out.columns[m] = std::move(merged);
  }
  return out;
}

OracleMatrix compose(const OracleMatrix& a, const OracleMatrix& b) {
  if (a.window != b.window) throw std::invalid_argument("compose: window mismatch");
  OracleMatrix out;
  out.window = a.window;
  out.columns.resize(a.window);
  out.trusted.assign(a.window, false);
  for (std::size_t m = 0; m < a.window; ++m) {
    if (!b.trusted[m]) continue;
    bool ok = true;
    SparseVector acc;
    for (const auto& [k, c] : b.columns[m]) {
      if (!a.trusted[k]) {
        ok = false;
        break;
      }
      acc = axpy(acc, c, a.columns[k]);
    }
    if (!ok) continue;
    out.trusted[m] = true;
    out.columns[m] = std::move(acc);
  }
  return out;
}

OracleMatrix add(const OracleMatrix& a, const OracleMatrix& b) {
  if (a.window != b.window) throw std::invalid_argument("add: window mismatch");
  OracleMatrix out;
  out.window = a.window;
  out.columns.resize(a.window);
  out.trusted.assign(a.window, false);
  for (std::size_t m = 0; m < a.window; ++m) {
    if (!a.trusted[m] || !b.trusted[m]) continue;
    out.trusted[m] = true;
    out.columns[m] = axpy(a.columns[m], Scalar(1), b.columns[m]);
  }
  return out;
}

bool agree(const OracleMatrix& a, const OracleMatrix& b) {
  if (a.window != b.window) throw std::invalid_argument("agree: window mismatch");
  std::size_t common = 0;
  for (std::size_t m = 0; m < a.window; ++m) {
    if (!a.trusted[m] || !b.trusted[m]) continue;
    ++common;
    if (a.columns[m] != b.columns[m]) return false;
  }
  if (common == 0) throw WindowTooSmall("agree: no column is trusted by both sides");
  return true;
}

}  // namespace cuntz
