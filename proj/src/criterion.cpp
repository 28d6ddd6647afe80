// Copyright 2026 The cuntzalg Authors
// SPDX-License-Identifier: Apache-2.0

#include "cuntz/criterion.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "cuntz/linalg.hpp"

namespace cuntz {

std::string to_string(Decision d) {
  switch (d) {
    case Decision::kYes:
      return "yes";
    case Decision::kNo:
      return "no";
    case Decision::kUndetermined:
      break;
  }
  return "undetermined";
}

AlphaAction alpha_action(const Endomorphism& e, const AlgebraStructure& s) {
  AlphaAction a;
  const auto& ps = s.minimal_central_projections;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const Element img = e.alpha(ps[i]);
    auto it = std::find(ps.begin(), ps.end(), img);
    if (it == ps.end())
      throw BudgetFailure("alpha(p_" + std::to_string(i) + ") = " + img.to_string() +
                          " is not a minimal central projection of the computed algebra");
    a.permutation.push_back(static_cast<std::size_t>(it - ps.begin()));
  }
  std::vector<bool> seen(ps.size());
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t j = i; !seen[j]; j = a.permutation[j]) {
      seen[j] = true;
      cycle.push_back(j);
    }
    a.order = std::lcm(a.order, cycle.size());
    a.cycles.push_back(std::move(cycle));
  }
  for (const auto& sm : s.summands) {
    std::vector<std::vector<Element>> img(sm.dim);
    for (std::size_t r = 0; r < sm.dim; ++r)
      for (std::size_t c = 0; c < sm.dim; ++c) img[r].push_back(e.alpha(sm.units[r][c]));
    a.corner_images.push_back(std::move(img));
  }
  return a;
}

TraceProfile corner_profile(const Element& p, const std::vector<Element>& frc) {
  std::vector<Element> elems;
  elems.reserve(frc.size());
  for (const auto& b : frc) elems.push_back(p * b);
  std::vector<Element> basis;
  for (std::size_t k : independent_subset(elems)) basis.push_back(elems[k]);
  const auto s = analyze_basis(basis, std::vector<int>(basis.size(), 0), p);
  TraceProfile out;
  for (std::size_t i = 0; i < s.dim_vector.size(); ++i) out.emplace_back(s.dim_vector[i], s.trace_vector[i]);
  std::sort(out.begin(), out.end());
  return out;
}

Verdict decomposability(const RelativeCommutantApprox& rc, const AlgebraStructure& s, const AlphaAction& a) {
  Verdict v;
  v.K = rc.K;
  v.K_used = rc.K_used;
  v.L = rc.L;
  v.D = rc.D;
  v.stabilized = rc.stabilized;
  v.dim_vector = s.dim_vector;
  v.trace_vector = s.trace_vector;
  v.permutation = a.permutation;
  if (!rc.stabilized) {
    v.decomposable = Decision::kUndetermined;
    v.reason = "relative commutant did not stabilize within the generator budget";
    return v;
  }
  const auto frc = rc.degree_zero();
  const auto& ps = s.minimal_central_projections;
  std::vector<TraceProfile> profiles;
  profiles.reserve(ps.size());
  for (const auto& p : ps) profiles.push_back(corner_profile(p, frc));
  bool all = true;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    CornerComparison c;
    c.summand = i;
    c.image = a.permutation[i];
    c.profile = profiles[i];
    c.image_profile = profiles[c.image];
    c.match = c.profile == c.image_profile;
    all = all && c.match;
    v.comparisons.push_back(std::move(c));
  }
  v.decomposable = all ? Decision::kYes : Decision::kNo;
  v.reason = all ? "every corner p(frc) is trace-isomorphic to alpha(p)(frc)"
                 : "some corner p(frc) is not trace-isomorphic to alpha(p)(frc)";
  return v;
}

MembershipResult membership_test(const Endomorphism& e, const RelativeCommutantApprox& rc, std::size_t k) {
  if (k == 0) throw std::invalid_argument("membership_test: k must be positive");
  MembershipResult r;
  r.k = k;
  const auto frc = rc.degree_zero();
  r.maps_frc_onto_frc = true;
  r.preserves_trace = true;
  for (const auto& b : frc) {
    const Element img = e.alpha_power(b, k);
    if (!express_in_span(frc, img)) r.maps_frc_onto_frc = false;
    if (!(trace(img, TraceMode::kLenient) == trace(b, TraceMode::kLenient))) r.preserves_trace = false;
  }
  r.direct = membership(e.u_k(k)).in_core;
  if (!rc.stabilized) return r;
  r.predicted = r.maps_frc_onto_frc && r.preserves_trace ? Decision::kYes : Decision::kNo;
  if ((r.predicted == Decision::kYes) != r.direct)
    throw ConsistencyError("membership_test: criterion predicts u_" + std::to_string(k) +
                           (r.direct ? " outside" : " inside") + " F_n but direct grading disagrees");
  return r;
}

FactorizationCheck check_factorization(const Endomorphism& e, const Element& w, std::size_t K) {
  FactorizationCheck c;
  c.unitary = is_unitary(w);
  c.quotient_in_core = membership(adjoint(w) * e.unitary()).in_core;
  c.commutes = true;
  for (const auto& g : lambda_core_generators(e, K)) {
    if (!commutator(w, g).is_zero()) {
      c.commutes = false;
      break;
    }
  }
  return c;
}

namespace {

constexpr std::size_t kMaxCandidates = std::size_t{1} << 16;

// All signed-permutation unitaries of one summand, in search order.
std::vector<Element> summand_candidates(const Summand& sm, int n) {
  const std::array<Scalar, 4> phases{Scalar(1), Scalar(-1), Scalar::i(), -Scalar::i()};
  std::vector<Element> out;
  std::vector<std::size_t> sigma(sm.dim);
  std::iota(sigma.begin(), sigma.end(), std::size_t{0});
  do {
    std::vector<std::size_t> ph(sm.dim, 0);
    while (true) {
      Element w(n);
      for (std::size_t r = 0; r < sm.dim; ++r) w += phases[ph[r]] * sm.units[sigma[r]][r];
      out.push_back(std::move(w));
      std::size_t j = sm.dim;
      while (j > 0 && ph[j - 1] == phases.size() - 1) ph[--j] = 0;
      if (j == 0) break;
      ++ph[j - 1];
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

}  // namespace

std::optional<Element> search_factorization(const Endomorphism& e, const AlgebraStructure& s, std::size_t K) {
  std::vector<std::vector<Element>> options;
  std::size_t total = 1;
  for (const auto& sm : s.summands) {
    if (!sm.self_adjoint_units) return std::nullopt;  // no unitary of this form
    options.push_back(summand_candidates(sm, s.n));
    total *= options.back().size();
    if (total > kMaxCandidates) return std::nullopt;
  }
  const Element& u = e.unitary();
  std::vector<std::size_t> idx(options.size(), 0);
  for (std::size_t count = 0; count < total; ++count) {
    Element w(s.n);
    for (std::size_t i = 0; i < options.size(); ++i) w += options[i][idx[i]];
    if (membership(adjoint(w) * u).in_core && verify_factorization(e, w, K)) return w;
    std::size_t j = options.size();
    while (j > 0 && idx[j - 1] + 1 == options[j - 1].size()) idx[--j] = 0;
    if (j == 0) break;
    ++idx[j - 1];
  }
  return std::nullopt;
}

}  // namespace cuntz
