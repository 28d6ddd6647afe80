// Copyright 2026 The cuntzalg Authors
// SPDX-License-Identifier: Apache-2.0

// Exact linear algebra over Q(i): sparse row echelon forms for the large
// commutant systems and small dense routines for structure computations.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cuntz/element.hpp"
#include "cuntz/scalar.hpp"

namespace cuntz {

/// Sorted (column, value) pairs with nonzero values.
using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

/// a + s*b.
SparseVector axpy(const SparseVector& a, const Scalar& s, const SparseVector& b);

/// Row echelon form built by inserting rows one at a time. Pivot rows are
/// normalized to a leading 1.
class EchelonForm {
 public:
  explicit EchelonForm(std::size_t cols) : pivot_(cols) {}

  std::size_t cols() const { return pivot_.size(); }
  std::size_t rank() const { return rank_; }

  /// Reduces `row` against the current pivots; returns true if it raised the rank.
  bool insert(SparseVector row);
  /// Reduces `row` against the pivots without inserting it.
  SparseVector reduce(SparseVector row) const;

  /// Basis of {x : R x = 0}, one vector per free column (x_free = 1).
  std::vector<SparseVector> kernel() const;
  /// Rows of the reduced row echelon form, ordered by pivot column.
  std::vector<SparseVector> reduced_rows() const;

 private:
  std::vector<std::optional<SparseVector>> pivot_;
  std::size_t rank_ = 0;
};

/// Reduced row echelon form of the span of the given vectors (zero rows dropped).
std::vector<SparseVector> rref(std::span<const SparseVector> rows, std::size_t cols);

/// Coordinates of elements in the coarsest common refinement of their monomials.
///
/// Row r of the result is one refinement cell; its entries are (element index,
/// coefficient). A linear combination of the elements vanishes iff it vanishes
/// on every row.
std::vector<SparseVector> refinement_rows(std::span<const Element> elems);

/// Linear relations among elements: a basis of {c : sum_j c_j elems[j] = 0}.
std::vector<SparseVector> linear_relations(std::span<const Element> elems);

/// Coefficients c with sum_j c_j basis[j] = target, if target is in the span.
/// The basis must be linearly independent.
std::optional<std::vector<Scalar>> express_in_span(std::span<const Element> basis, const Element& target);

/// Indices of a maximal linearly independent subset, greedily from the front.
std::vector<std::size_t> independent_subset(std::span<const Element> elems);

/// Element sum_j coeffs[j] * elems[j].
Element combine(std::span<const Element> elems, std::span<const Scalar> coeffs, int n);

// ---------------------------------------------------------------------------
// Dense helpers (small systems)

using DenseMatrix = std::vector<std::vector<Scalar>>;

/// Kernel basis of a dense matrix with `cols` columns.
std::vector<std::vector<Scalar>> dense_kernel(const DenseMatrix& rows, std::size_t cols);
/// Some solution x of A x = b, if one exists.
std::optional<std::vector<Scalar>> dense_solve(const DenseMatrix& a, const std::vector<Scalar>& b);

}  // namespace cuntz
