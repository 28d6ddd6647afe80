// Copyright 2026 The cuntzalg Authors
// SPDX-License-Identifier: Apache-2.0

// Wedderburn data of a computed finite-dimensional *-subalgebra of O_n:
// center, minimal central projections, matrix units, traces and gauge degrees.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "cuntz/element.hpp"
#include "cuntz/levels.hpp"
#include "cuntz/rational.hpp"

namespace cuntz {

/// The algebra is not closed, not semisimple over Q(i), or needs a field
/// extension to split.
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One full matrix summand p A p = M_d.
struct Summand {
  Element central_projection;
  std::size_t dim = 0;
  /// units[r][s] = e_rs with e_rs e_tw = delta_st e_rw and sum_r e_rr = p.
  std::vector<std::vector<Element>> units;
  /// degrees[r][s] = gauge degree of e_rs.
  std::vector<std::vector<int>> degrees;
  /// Trace of the minimal projection e_11.
  Rational min_trace;
  /// True when e_rs^* = e_sr for all r, s (possible when the norms are rational squares).
  bool self_adjoint_units = true;

  /// Integers k_r = deg(e_r1), so that deg(e_rs) = k_r - k_s.
  std::vector<int> row_exponents() const;
};

struct AlgebraStructure {
  int n = 2;
  std::vector<Element> basis;
  std::vector<int> grading;  // degree of each basis element
  std::vector<Element> center_basis;
  std::vector<Element> minimal_central_projections;
  std::vector<std::size_t> dim_vector;
  std::vector<Rational> trace_vector;
  /// Distinct degrees of the matrix units under each p_i.
  std::vector<std::vector<int>> central_exponents;
  std::vector<Summand> summands;

  std::size_t dimension() const { return basis.size(); }
};

/// Full Wedderburn analysis; throws StructureError on non-closed input or when
/// central idempotents are not defined over Q(i).
AlgebraStructure analyze(const RelativeCommutantApprox& rc);
/// The same for an explicit graded basis (each element of pure degree).
AlgebraStructure analyze_basis(const std::vector<Element>& basis, const std::vector<int>& degrees);
/// A unital *-subalgebra whose unit is the projection `unit` rather than 1.
AlgebraStructure analyze_basis(const std::vector<Element>& basis, const std::vector<int>& degrees, const Element& unit);

struct SummandGrading {
  std::size_t summand = 0;
  /// Degrees of all d^2 matrix-unit positions, row-major.
  std::vector<int> degrees;
  /// All degrees zero: the summand sits inside F_n.
  bool in_core() const;
};

std::vector<SummandGrading> gauge_grading(const AlgebraStructure& s);
std::vector<SummandGrading> gauge_grading(const RelativeCommutantApprox& rc);

/// Total order on canonical elements used for deterministic output.
bool element_less(const Element& a, const Element& b);

}  // namespace cuntz
