// Copyright 2026 The cuntzalg Authors
// SPDX-License-Identifier: Apache-2.0

// Decisions about lambda_u built on the computed relative commutant: the
// action of alpha = Ad u o phi, decomposability u = w v, and membership of u_k
// in the UHF core.

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cuntz/element.hpp"
#include "cuntz/endo.hpp"
#include "cuntz/levels.hpp"
#include "cuntz/rational.hpp"
#include "cuntz/structure.hpp"

namespace cuntz {

/// alpha moved a computed projection outside the computed algebra.
class BudgetFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The criterion prediction contradicts a direct computation.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct AlphaAction {
  /// alpha(p_i) = p_{permutation[i]}.
  std::vector<std::size_t> permutation;
  std::vector<std::vector<std::size_t>> cycles;
  /// Least k >= 1 with alpha^k trivial on the minimal central projections.
  std::size_t order = 1;
  /// alpha(e_rs) for the matrix units of each summand.
  std::vector<std::vector<std::vector<Element>>> corner_images;
};

/// Throws BudgetFailure if some alpha(p_i) is not a computed central projection.
AlphaAction alpha_action(const Endomorphism& e, const AlgebraStructure& s);

enum class Decision { kYes, kNo, kUndetermined };
std::string to_string(Decision d);

/// Sorted (d, tau of a minimal projection) pairs of a finite-dimensional algebra with trace.
using TraceProfile = std::vector<std::pair<std::size_t, Rational>>;

struct CornerComparison {
  std::size_t summand = 0;
  std::size_t image = 0;  // permutation[summand]
  TraceProfile profile;   // of p (frc)
  TraceProfile image_profile;
  bool match = false;
};

struct Verdict {
  Decision decomposable = Decision::kUndetermined;
  std::string reason;
  std::vector<CornerComparison> comparisons;
  std::size_t K = 0;
  std::size_t K_used = 0;
  std::size_t L = 0;
  int D = 0;
  bool stabilized = false;
  std::vector<std::size_t> dim_vector;
  std::vector<Rational> trace_vector;
  std::vector<std::size_t> permutation;
  std::optional<Element> witness;
};

/// Trace profile of p (frc) for a projection p commuting with frc.
TraceProfile corner_profile(const Element& p, const std::vector<Element>& frc);

/// Compares p (frc) with alpha(p) (frc) for each minimal central projection p.
Verdict decomposability(const RelativeCommutantApprox& rc, const AlgebraStructure& s, const AlphaAction& a);

struct MembershipResult {
  std::size_t k = 1;
  Decision predicted = Decision::kUndetermined;
  bool maps_frc_onto_frc = false;  // alpha^k(frc) = frc
  bool preserves_trace = false;    // tau o alpha^k = tau on frc
  bool direct = false;             // u_k in F_n by direct grading
};

/// Tests alpha^k(frc) = frc and trace preservation, predicting u_k in F_n, and
/// cross-checks against the grading of u_k. Throws ConsistencyError on a
/// contradiction when rc is stabilized.
MembershipResult membership_test(const Endomorphism& e, const RelativeCommutantApprox& rc, std::size_t k);

struct FactorizationCheck {
  bool unitary = false;
  bool commutes = false;        // with lambda_u(F_n^(K))
  bool quotient_in_core = false;  // w^* u in F_n
  bool ok() const { return unitary && commutes && quotient_in_core; }
};

FactorizationCheck check_factorization(const Endomorphism& e, const Element& w, std::size_t K);
inline bool verify_factorization(const Endomorphism& e, const Element& w, std::size_t K) {
  return check_factorization(e, w, K).ok();
}

/// Searches w = sum over summands of phase * e_{sigma(r), r} with permutations
/// in lexicographic order (identity first) and phases from {1, -1, i, -i}.
/// Returns the first w passing verify_factorization at level K.
std::optional<Element> search_factorization(const Endomorphism& e, const AlgebraStructure& s, std::size_t K);

}  // namespace cuntz
