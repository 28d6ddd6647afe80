// Copyright 2026 The cuntzalg Authors
// SPDX-License-Identifier: Apache-2.0

// Matrix realization of the UHF tower and finite-level relative commutants.
//
// F_n^(k) is realized as M_{n^k} with S_mu S_nu^* (|mu| = |nu| = k) sent to the
// matrix unit e_{mu,nu}. Words are indexed little-endian: the first letter is
// the least significant base-n digit, which matches the sequence-space oracle.

#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cuntz/element.hpp"
#include "cuntz/endo.hpp"
#include "cuntz/linalg.hpp"

namespace cuntz {

/// Square matrix over Q(i) stored as sparse rows.
class ExactMatrix {
 public:
  explicit ExactMatrix(std::size_t dim = 0) : rows_(dim) {}
  static ExactMatrix identity(std::size_t dim);

  std::size_t dim() const { return rows_.size(); }
  const SparseVector& row(std::size_t r) const { return rows_[r]; }
  Scalar at(std::size_t r, std::size_t c) const;
  /// Adds v to entry (r, c).
  void add(std::size_t r, std::size_t c, const Scalar& v);

  Scalar trace() const;
  ExactMatrix adjoint() const;
  /// Row-major flattening into a sparse vector of length dim^2.
  SparseVector flatten() const;
  static ExactMatrix unflatten(const SparseVector& v, std::size_t dim);

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) = default;

 private:
  std::vector<SparseVector> rows_;
};

/// Index map Word(k) <-> [0, n^k).
class MatrixLevel {
 public:
  MatrixLevel(int n, std::size_t k);

  int n() const { return n_; }
  std::size_t k() const { return k_; }
  std::size_t dim() const { return dim_; }

  std::size_t index(const Word& w) const;
  Word word(std::size_t index) const;
  /// Image of a level-k matrix in level k+1: e_{mu,nu} -> sum_i e_{mu i, nu i}.
  ExactMatrix embed(const ExactMatrix& m) const;

 private:
  int n_;
  std::size_t k_;
  std::size_t dim_;
};

/// Thrown when an element has words longer than the requested level.
class LevelTooSmall : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact matrix of x in M_{n^k}; throws NotInCore or LevelTooSmall.
ExactMatrix realize(const Element& x, std::size_t k);

/// Basis of {X : XM = MX for all M in mats} in reduced row echelon order.
/// The space is checked to be unital and closed under adjoints and products;
/// a failure there is a bug and throws std::logic_error.
std::vector<ExactMatrix> commutant(const std::vector<ExactMatrix>& mats, std::size_t dim);

/// Thrown when the length budget cannot hold the requested degree.
class BudgetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Degree-d candidates: S_mu S_nu^* with |mu| = L + d, |nu| = L for d >= 0 and
/// |mu| = L, |nu| = L - d for d < 0, sorted by the monomial order.
std::vector<Monomial> commutant_candidates(int n, int d, std::size_t L);

struct GradedCommutant {
  int degree = 0;
  std::size_t K = 0;
  std::size_t L = 0;
  std::size_t candidates = 0;
  std::vector<Element> basis;
};

/// Degree-d elements of the candidate space commuting with every generator.
/// The basis is the reduced row echelon form over the candidate order, then
/// canonicalized; each element is re-verified symbolically.
GradedCommutant graded_commutant(const std::vector<Element>& generators, int n, int d, std::size_t L);

/// graded_commutant against lambda_u(F_n^(K)); throws BudgetError if |d| > L.
GradedCommutant graded_relative_commutant(const Endomorphism& e, int d, std::size_t K, std::size_t L);

inline constexpr std::size_t kDefaultMaxRaise = 2;

struct RelativeCommutantApprox {
  int n = 2;
  std::size_t K = 0;       // requested generator level
  std::size_t K_used = 0;  // level the basis was computed at
  std::size_t L = 0;
  int D = 0;
  std::vector<Element> basis;  // grouped by degree, ascending
  std::vector<int> degrees;    // degree of each basis element
  std::map<int, std::size_t> graded_dims;
  std::map<int, std::size_t> graded_dims_next;  // the same at K_used + 1
  bool stabilized = false;
  bool adjoint_closed = false;
  bool product_closed = false;
  std::vector<std::string> closure_issues;

  bool closed() const { return adjoint_closed && product_closed; }
  std::size_t dimension() const { return basis.size(); }
  /// Basis elements of degree 0 (the part inside F_n).
  std::vector<Element> degree_zero() const;
};

/// Aggregates graded pieces for |d| <= D and checks closure under adjoints and
/// products.
///
/// Starting from generator level K, the level is raised (at most max_raise
/// times) while adding the next level still shrinks the space. The result is
/// stabilized iff the dimensions at K_used and K_used + 1 agree.
RelativeCommutantApprox relative_commutant(const Endomorphism& e, std::size_t K, std::size_t L, int D,
                                           std::size_t max_raise = kDefaultMaxRaise);

}  // namespace cuntz
