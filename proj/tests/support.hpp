// Copyright 2026 The cuntzalg Authors
// SPDX-License-Identifier: Apache-2.0

// Shared fixtures for the test binaries: bundled unitaries, random elements
// and oracle helpers that rebuild identities from independent factors.

#pragma once

#include <algorithm>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "cuntz/element.hpp"
#include "cuntz/endo.hpp"
#include "cuntz/oracle.hpp"
#include "cuntz/parse.hpp"

namespace cuntz::testing {

// Level-2 permutative unitary in F_2; alpha swaps P_1 and P_2.
inline const char* const kPermutativeF2 = "S[22]S[11]* + S[12]S[22]* + S[11]S[12]* + P[21]";
// Non-decomposable automorphism built from the partition P_1, P_21, P_22.
inline const char* const kNonDecomposable =
    "S[211]S[21]* + S[2121]S[112]* + S[2122]S[111]* + S[12]S[121]* + S[11]S[221]* + S[221]S[122]* + P[222]";
// Decomposable endomorphism whose relative commutant holds an M_2 corner.
inline const char* const kDecomposable =
    "S[2221]S[111]* + S[2222]S[211]* + S[111]S[1222]* + S[112]S[2222]* + S[1222]S[2221]* + S[211]S[112]* + "
    "P[121] + P[1221] + P[212] + P[221]";
inline const char* const kDecomposableWitness = "S[11]S[222]* + S[222]S[11]* + P[12] + P[21] + P[221]";

inline Element el(const std::string& s, int n = 2) { return parse_element(s, n); }

inline Word random_word(std::mt19937& rng, int n, std::size_t len) {
  std::string d;
  std::uniform_int_distribution<int> letter(1, n);
  for (std::size_t i = 0; i < len; ++i) d.push_back(static_cast<char>('0' + letter(rng)));
  return Word(d);
}

inline Scalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_int_distribution<int> coin(0, 3);
  Rational re(num(rng), den(rng));
  Rational im = coin(rng) == 0 ? Rational(num(rng), den(rng)) : Rational(0);
  if (re.is_zero() && im.is_zero()) re = Rational(1);
  return {re, im};
}

/// Sum of up to `terms` random monomials with words of length at most max_len.
inline Element random_element(std::mt19937& rng, int n, std::size_t terms, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::size_t> count(1, terms);
  Element x(n);
  const std::size_t t = count(rng);
  for (std::size_t j = 0; j < t; ++j)
    x += Element::monomial(n, random_word(rng, n, len(rng)), random_word(rng, n, len(rng)), random_scalar(rng));
  return x;
}

/// u = sum_mu S_{sigma(mu)} S_mu^* over the words of length m, sigma uniform.
inline Element random_permutative(std::mt19937& rng, int n, std::size_t m) {
  auto words = Word::all(n, m);
  auto image = words;
  std::shuffle(image.begin(), image.end(), rng);
  Element u(n);
  for (std::size_t j = 0; j < words.size(); ++j) u += Element::monomial(n, image[j], words[j]);
  return u;
}

/// Independent g_k = g phi(g) ... phi^{k-1}(g).
inline Element product_power(const Element& g, std::size_t k) {
  Element out = Element::identity(g.n());
  for (std::size_t j = 0; j < k; ++j) out = out * shift_power(g, j);
  return out;
}

/// Oracle matrix of S_mu S_nu^* built letter by letter: S_{mu_1} ... S_{mu_k} S_{nu_l}^* ... S_{nu_1}^*.
inline OracleMatrix oracle_monomial(const TruncatedRep& rep, const Word& mu, const Word& nu) {
  const int n = rep.n();
  OracleMatrix acc = rep.evaluate(Element::identity(n));
  for (std::size_t j = 0; j < mu.size(); ++j)
    acc = compose(acc, rep.evaluate(Element::isometry(n, Word{mu[j]})));
  for (std::size_t j = nu.size(); j-- > 0;)
    acc = compose(acc, rep.evaluate(adjoint(Element::isometry(n, Word{nu[j]}))));
  return acc;
}

/// Product of oracle matrices left to right.
inline OracleMatrix oracle_product(const std::vector<OracleMatrix>& fs) {
  OracleMatrix acc = fs.front();
  for (std::size_t j = 1; j < fs.size(); ++j) acc = compose(acc, fs[j]);
  return acc;
}

/// Entry (row r, column c); zero when absent.
inline Scalar oracle_entry(const OracleMatrix& a, std::size_t r, std::size_t c) {
  for (const auto& [row, v] : a.columns[c])
    if (row == r) return v;
  return Scalar(0);
}

/// a_star is the conjugate transpose of a on every pair of columns trusted in both.
inline bool oracle_adjoint_pair(const OracleMatrix& a, const OracleMatrix& a_star) {
  for (std::size_t c = 0; c < a.window; ++c) {
    if (!a.trusted[c]) continue;
    for (const auto& [r, v] : a.columns[c])
      if (a_star.trusted[r] && !(oracle_entry(a_star, c, r) == v.conj())) return false;
    for (const auto& [r, v] : a_star.columns[c])
      if (a.trusted[r] && !(oracle_entry(a, c, r) == v.conj())) return false;
  }
  return true;
}

}  // namespace cuntz::testing
