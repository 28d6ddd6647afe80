// Copyright 2026 The cuntzalg Authors
// SPDX-License-Identifier: Apache-2.0

// Endomorphisms of O_n through the Cuntz correspondence u <-> lambda_u with
// lambda_u(S_i) = u S_i.

#pragma once

#include <cstddef>
#include <deque>
#include <map>
#include <memory>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "cuntz/element.hpp"

namespace cuntz {

/// phi(x) = sum_i S_i x S_i^*.
Element shift(const Element& x);
/// phi^k(x) = sum_{|rho|=k} S_rho x S_rho^*.
Element shift_power(const Element& x, std::size_t k);
/// (Ad g o phi)(x) = g phi(x) g^*.
Element ad_shift(const Element& g, const Element& x);

class NotUnitary : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Endomorphism {
 public:
  /// Throws NotUnitary unless u u^* = u^* u = 1 exactly.
  explicit Endomorphism(Element u);

  int n() const { return u_.n(); }
  const Element& unitary() const { return u_; }

  /// u_k = u phi(u) ... phi^{k-1}(u); u_0 = 1. Memoized, safe to call concurrently.
  Element u_k(std::size_t k) const;

  /// lambda_u(x); on S_a S_b^* this is u_|a| S_a S_b^* u_|b|^*.
  Element apply(const Element& x) const;
  /// alpha(x) = u phi(x) u^*.
  Element alpha(const Element& x) const { return ad_shift(u_, x); }
  /// alpha^k(x) = u_k phi^k(x) u_k^*.
  Element alpha_power(const Element& x, std::size_t k) const;

 private:
  struct Cache {
    std::shared_mutex mutex;
    std::deque<Element> powers;
  };
  Element u_;
  std::shared_ptr<Cache> cache_;
};

inline Element apply_lambda(const Endomorphism& e, const Element& x) { return e.apply(x); }

/// x^(k) = x (Ad v o phi)(x) ... (Ad v o phi)^{k-1}(x); throws NotUnitary if v is not unitary.
Element twisted_power(const Element& x, const Element& v, std::size_t k);

/// Laurent polynomial in the gauge variable with element coefficients.
///
/// For the cocycle of a unitary u, coeffs[d] = u (graded_part(u, d))^*, and
/// u gamma_z(u^*) = sum_d z^{-d} coeffs[d].
struct LaurentCocycle {
  std::map<int, Element> coeffs;

  /// Sum of all coefficients (the value at z = 1).
  Element at_one(int n) const;
  bool is_constant() const { return coeffs.size() <= 1 && (coeffs.empty() || coeffs.begin()->first == 0); }
  /// "z^-1*(P[11]) + (...) + z^1*(P[222])", keyed by degree.
  std::string to_string() const;
};

LaurentCocycle gauge_cocycle(const Endomorphism& e);

/// Matrix unit e_ij placed in tensor position m of F_n^(K): phi^m(S_i S_j^*).
struct CoreGenerator {
  std::size_t position;
  int i;
  int j;
  Element element;
};

/// Algebra generators of F_n^(K): e_{i,i+1} and e_{i+1,i} in every tensor position m < K.
std::vector<CoreGenerator> core_generators(int n, std::size_t K);
/// lambda_u applied to core_generators(n, K), computed as u_m phi^m(lambda_u(e_ij)) u_m^*.
std::vector<Element> lambda_core_generators(const Endomorphism& e, std::size_t K);

struct UhfInvarianceWitness {
  int cocycle_degree;
  std::size_t position;
  int i;
  int j;
  Element commutator;
};

struct UhfInvarianceResult {
  bool holds_up_to_K = true;
  std::size_t K = 0;
  std::vector<UhfInvarianceWitness> witnesses;
};

/// Every gauge-cocycle coefficient must commute with lambda_u(F_n^(k)) for k <= K.
UhfInvarianceResult check_uhf_invariance(const Endomorphism& e, std::size_t K);

/// One block of a partition-form unitary: q is a projection and a a partial
/// isometry of pure degree `degree` with a a^* = q.
struct PartitionPart {
  Element q;
  Element a;
  int degree = 0;
};

class InvalidConstruction : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// u = sum_j a_j, validated: sum q_j = 1, each q_j a projection with a_j a_j^* = q_j,
/// a_j of pure degree k_j, u unitary, and Ad u o phi permuting the q_j.
Endomorphism partition_form_unitary(const std::vector<PartitionPart>& parts);

/// Isometries T_1..T_n satisfying the Cuntz relations relative to `unit`.
struct GeneratorImages {
  std::vector<Element> images;
  Element unit;

  int n() const { return unit.n(); }
  /// T_i^* T_j = delta_ij unit and sum_i T_i T_i^* = unit.
  bool satisfies_cuntz_relations() const;
  /// phi_T(x) = sum_i T_i x T_i^*.
  Element shift(const Element& x) const;
  /// T_mu = T_{mu_1} ... T_{mu_k}; the unit for the empty word.
  Element word(const Word& mu) const;
};

/// lambda with S_i -> T_i, i.e. u = sum_i T_i S_i^*; requires unit = 1.
Endomorphism endomorphism_from_images(const GeneratorImages& g);

/// T_i = S_{mu i} S_mu^*, generating P_mu O_n P_mu.
GeneratorImages corner_generators(int n, const Word& mu);

}  // namespace cuntz
