// Copyright 2026 The cuntzalg Authors
// SPDX-License-Identifier: Apache-2.0

// Independent check of symbolic identities: O_n acting on a finite window of
// l^2(N) through S_i e_m = e_{nm+i-1}. Evaluation is exact, and a column is
// trusted only if no intermediate index leaves the window.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "cuntz/element.hpp"
#include "cuntz/linalg.hpp"

namespace cuntz {

class WindowTooSmall : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kDefaultWindow = std::size_t{1} << 12;

/// Matrix on span{e_0..e_{N-1}} stored by columns, with per-column trust.
struct OracleMatrix {
  std::size_t window = 0;
  std::vector<SparseVector> columns;  // columns[m] = x e_m, sorted by row
  std::vector<bool> trusted;

  std::size_t trusted_count() const;
};

class TruncatedRep {
 public:
  explicit TruncatedRep(int n, std::size_t window = kDefaultWindow);

  int n() const { return n_; }
  std::size_t window() const { return window_; }
  /// Longest word this window accepts.
  std::size_t max_word_length() const { return max_len_; }

  /// Throws WindowTooSmall if a word is longer than max_word_length().
  OracleMatrix evaluate(const Element& x) const;

 private:
  int n_;
  std::size_t window_;
  std::size_t max_len_;
};

/// (a b) e_m = a (b e_m); trusted where b is trusted at m and a at every row b e_m touches.
OracleMatrix compose(const OracleMatrix& a, const OracleMatrix& b);
OracleMatrix add(const OracleMatrix& a, const OracleMatrix& b);

/// Equality on the columns trusted in both; throws WindowTooSmall if there are none.
bool agree(const OracleMatrix& a, const OracleMatrix& b);

}  // namespace cuntz
