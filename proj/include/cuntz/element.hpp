// Copyright 2026 The cuntzalg Authors
// SPDX-License-Identifier: Apache-2.0

// Polynomial elements of the Cuntz algebra O_n in canonical form.
//
// Every element is a finite combination of monomials S_mu S_nu^* with
// Gaussian-rational coefficients. Two representations of the same operator
// differ only by the refinement S_mu S_nu^* = sum_i S_{mu i} S_{nu i}^*; the
// canonical form is the coarsest one, so structural equality of terms is
// operator equality.

#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cuntz/scalar.hpp"

namespace cuntz {

inline constexpr int kMaxAlphabet = 9;

/// A multi-index over {1..n}; stored as the digit string used in text form.
class Word {
 public:
  Word() = default;
  /// Digits '1'..'9'; throws std::invalid_argument on anything else.
  explicit Word(std::string digits);
  Word(std::initializer_list<int> letters);

  static Word repeat(int letter, std::size_t count) { return Word(std::string(count, static_cast<char>('0' + letter)), 0); }

  std::size_t size() const { return d_.size(); }
  bool empty() const { return d_.empty(); }
  int operator[](std::size_t i) const { return d_[i] - '0'; }
  int back() const { return d_.back() - '0'; }
  const std::string& digits() const { return d_; }
  int max_letter() const;

  Word operator+(const Word& o) const { return Word(d_ + o.d_, 0); }
  Word& append(int letter) {
    d_.push_back(static_cast<char>('0' + letter));
    return *this;
  }
  Word& append(const Word& o) {
    d_ += o.d_;
    return *this;
  }
  bool starts_with(const Word& prefix) const { return d_.compare(0, prefix.d_.size(), prefix.d_) == 0 && prefix.size() <= size(); }
  Word substr(std::size_t pos, std::size_t len = std::string::npos) const { return Word(d_.substr(pos, len), 0); }

  friend bool operator==(const Word&, const Word&) = default;
  /// Length first, then lexicographic.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    return a.d_.compare(b.d_) <=> 0;
  }

  /// All words of the given length over {1..n}, in lexicographic order.
  static std::vector<Word> all(int n, std::size_t length);

 private:
  Word(std::string digits, int /*unchecked*/) : d_(std::move(digits)) {}
  std::string d_;
};

/// S_mu S_nu^*.
struct Monomial {
  Word mu;
  Word nu;

  int degree() const { return static_cast<int>(mu.size()) - static_cast<int>(nu.size()); }
  bool diagonal() const { return mu == nu; }
  std::size_t length() const { return mu.size() > nu.size() ? mu.size() : nu.size(); }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Total length, then mu, then nu.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    auto la = a.mu.size() + a.nu.size();
    auto lb = b.mu.size() + b.nu.size();
    if (la != lb) return la <=> lb;
    if (auto c = a.mu <=> b.mu; c != 0) return c;
    return a.nu <=> b.nu;
  }
};

/// Product of two monomials under the Cuntz relations; nullopt when it vanishes.
std::optional<Monomial> multiply(const Monomial& a, const Monomial& b);

struct Term {
  Monomial m;
  Scalar c;
};

/// S_mu S_nu^* = S_{a rho} S_{b rho}^* with (a, b) not ending in a common
/// letter: the root of the refinement tree the monomial lies in, and the path
/// rho from that root.
struct RootPath {
  Monomial root;
  std::string path;
};
RootPath refinement_root(const Monomial& m);

/// Thrown when operands live in different O_n.
class AlphabetMismatch : public std::invalid_argument {
 public:
  AlphabetMismatch(int a, int b);
};

class Element {
 public:
  /// The zero element of O_n.
  explicit Element(int n = 2);

  static Element identity(int n) { return scalar(n, Scalar(1)); }
  static Element scalar(int n, const Scalar& c);
  static Element monomial(int n, const Word& mu, const Word& nu, const Scalar& c = Scalar(1));
  /// S_mu.
  static Element isometry(int n, const Word& mu) { return monomial(n, mu, Word{}); }
  /// P_mu = S_mu S_mu^*.
  static Element projection(int n, const Word& mu) { return monomial(n, mu, mu); }
  /// Canonicalizes an arbitrary (possibly overlapping, possibly duplicated) term list.
  static Element from_terms(int n, std::vector<Term> terms);

  int n() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Longest word appearing in the canonical form.
  std::size_t max_length() const;
  /// Sorted distinct degrees |mu|-|nu| present.
  std::set<int> degrees() const;

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element operator-() const;
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator*(const Scalar& s, const Element& a);
  friend bool operator==(const Element& a, const Element& b);

  /// Text form in the element grammar; "0" for the zero element.
  std::string to_string() const;

 private:
  int n_;
  std::vector<Term> terms_;
};

inline Element multiply(const Element& a, const Element& b) { return a * b; }
Element adjoint(const Element& a);
Element commutator(const Element& a, const Element& b);

/// Sum of the monomials with |mu| - |nu| = d.
Element graded_part(const Element& a, int d);
/// Conditional expectation onto the UHF core (the degree-0 part).
inline Element expectation(const Element& a) { return graded_part(a, 0); }

enum class TraceMode { kStrict, kLenient };

/// Thrown by strict-mode trace on elements outside F_n.
class NotInCore : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The unique trace of F_n; lenient mode evaluates tau(E(a)).
Scalar trace(const Element& a, TraceMode mode = TraceMode::kStrict);

/// Term list of a in F_n rewritten with every word of length exactly k.
/// Not canonical; Element::from_terms recovers the canonical form.
std::vector<Term> level_to(const Element& a, std::size_t k);

struct Membership {
  bool in_core = false;      // F_n
  bool in_diagonal = false;  // D_n
  std::optional<std::size_t> min_level;  // least k with a in F_n^(k)
  std::optional<int> pure_degree;        // set iff exactly one nonzero graded part
};

Membership membership(const Element& a);

/// Exact test of u u^* = u^* u = 1.
bool is_unitary(const Element& u);
/// Exact test of p = p^* = p^2.
bool is_projection(const Element& p);

}  // namespace cuntz
