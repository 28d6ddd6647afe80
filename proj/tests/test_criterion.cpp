// Copyright 2026 The cuntzalg Authors
// SPDX-License-Identifier: Apache-2.0

#include <array>

#include "cuntz/criterion.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cuntz;
using cuntz::testing::el;

namespace {

struct Pipeline {
  Endomorphism e;
  RelativeCommutantApprox rc;
  AlgebraStructure s;
  AlphaAction a;
  Verdict v;

  explicit Pipeline(const Element& u, std::size_t K = 5)
      : e(u), rc(relative_commutant(e, K, 6, 2)), s(analyze(rc)), a(alpha_action(e, s)), v(decomposability(rc, s, a)) {}
};

const Pipeline& non_decomposable() {
  static const Pipeline p(el(cuntz::testing::kNonDecomposable));
  return p;
}

const Pipeline& decomposable() {
  static const Pipeline p(el(cuntz::testing::kDecomposable));
  return p;
}

}  // namespace

TEST_CASE("alpha permutes the minimal central projections") {
  const auto& p = non_decomposable();
  CHECK(p.a.permutation == std::vector<std::size_t>{1, 0, 2});
  CHECK(p.a.order == 2);
  CHECK(p.a.cycles.size() == 2);

  const auto& q = decomposable();
  CHECK(q.a.permutation == std::vector<std::size_t>{0, 1});
  // inside the fixed M_2 corner alpha swaps the diagonal units
  CHECK(q.a.corner_images[0][0][0] == q.s.summands[0].units[1][1]);
  CHECK(q.a.corner_images[0][1][1] == q.s.summands[0].units[0][0]);
}

TEST_CASE("alpha outside the computed algebra is a budget failure") {
  const Endomorphism e(el(cuntz::testing::kNonDecomposable));
  const auto s = analyze_basis({el("P[1]"), el("P[2]")}, {0, 0});
  CHECK_THROWS_AS(alpha_action(e, s), BudgetFailure);
}

TEST_CASE("decomposability verdicts") {
  const auto& p = non_decomposable();
  CHECK(p.v.decomposable == Decision::kNo);
  const auto& c0 = p.v.comparisons[0];
  CHECK(p.s.minimal_central_projections[c0.summand] == el("P[1]"));
  CHECK(p.s.minimal_central_projections[c0.image] == el("P[21]"));
  CHECK(c0.profile == TraceProfile{{1, Rational(1, 2)}});
  CHECK(c0.image_profile == TraceProfile{{1, Rational(1, 4)}});
  CHECK_FALSE(c0.match);

  CHECK(decomposable().v.decomposable == Decision::kYes);
  const Pipeline perm(el(cuntz::testing::kPermutativeF2));
  CHECK(perm.v.decomposable == Decision::kYes);
  CHECK(perm.a.permutation == std::vector<std::size_t>{1, 0});
}

TEST_CASE("lowering K leaves the verdict undetermined") {
  const Endomorphism e(el(cuntz::testing::kNonDecomposable));
  const auto rc = relative_commutant(e, 1, 6, 2);
  CHECK_FALSE(rc.stabilized);
  Verdict v;
  if (rc.closed()) {
    const auto s = analyze(rc);
    v = decomposability(rc, s, alpha_action(e, s));
  }
  CHECK(v.decomposable == Decision::kUndetermined);
}

TEST_CASE("membership test agrees with the direct grading of u_k") {
  for (const Pipeline* p : {&non_decomposable(), &decomposable()}) {
    for (std::size_t k = 1; k <= 3; ++k) {
      const auto m = membership_test(p->e, p->rc, k);
      CHECK(m.direct == membership(p->e.u_k(k)).in_core);
      CHECK((m.predicted == Decision::kYes) == m.direct);
      CHECK(m.direct == (k == 2));
    }
  }
  CHECK_THROWS_AS(membership_test(decomposable().e, decomposable().rc, 0), std::invalid_argument);
}

TEST_CASE("factorization witness for the decomposable example") {
  const auto& p = decomposable();
  const Element w = el(cuntz::testing::kDecomposableWitness);
  CHECK(w == el("S[11]S[222]* + S[222]S[11]* + I - P[11] - P[222]"));
  const auto fc = check_factorization(p.e, w, 5);
  CHECK(fc.unitary);
  CHECK(fc.commutes);
  CHECK(fc.quotient_in_core);
  const auto found = search_factorization(p.e, p.s, 5);
  REQUIRE(found.has_value());
  CHECK(*found == w);
  CHECK_FALSE(verify_factorization(p.e, el("I"), 5));
}

TEST_CASE("no witness among phases of the non-decomposable rc") {
  const auto& p = non_decomposable();
  const std::array<Scalar, 4> phases{Scalar(1), Scalar(-1), Scalar::i(), -Scalar::i()};
  for (const auto& a : phases)
    for (const auto& b : phases)
      for (const auto& c : phases) {
        const Element w = a * el("P[1]") + b * el("P[21]") + c * el("P[22]");
        REQUIRE_FALSE(verify_factorization(p.e, w, 5));
      }
  CHECK_FALSE(search_factorization(p.e, p.s, 5).has_value());
}

TEST_CASE("verdict is unchanged by a degree-0 unitary of the rc") {
  const Element g = el("I - 2*P[12] - 2*P[21] - 2*P[221]");
  REQUIRE(is_unitary(g));
  const Pipeline p(g * el(cuntz::testing::kDecomposable));
  CHECK(p.v.decomposable == decomposable().v.decomposable);
  CHECK(p.s.dim_vector == decomposable().s.dim_vector);
}
