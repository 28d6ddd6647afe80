// Copyright 2026 The cuntzalg Authors
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include "cuntz/endo.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cuntz;
using cuntz::testing::el;

namespace {

const char* const kFlip = "S[1]S[2]* + S[2]S[1]*";

}  // namespace

TEST_CASE("shift") {
  CHECK(shift(el("I")) == el("I"));
  CHECK(shift(el("P[1]")) == el("P[11] + P[21]"));
  std::mt19937 rng(3);
  for (int t = 0; t < 100; ++t) {
    const Element x = cuntz::testing::random_element(rng, 2, 3, 3);
    for (int i = 1; i <= 2; ++i) {
      const Element si = Element::isometry(2, Word{i});
      CHECK(si * x == shift(x) * si);
    }
    CHECK(shift_power(x, 2) == shift(shift(x)));
  }
  CHECK(membership(shift(el("S[1]S[2]*"))).min_level == std::size_t{2});
}

TEST_CASE("u_k") {
  const Endomorphism id(el("I"));
  CHECK(id.u_k(3) == el("I"));
  const Endomorphism f(el(kFlip));
  CHECK(f.u_k(0) == el("I"));
  CHECK(f.u_k(1) == el(kFlip));
  CHECK(f.u_k(2) == el(kFlip) * shift(el(kFlip)));
  for (std::size_t k = 1; k <= 4; ++k) {
    CHECK(f.u_k(k + 1) == f.u_k(k) * shift_power(el(kFlip), k));
    CHECK(is_unitary(f.u_k(k)));
  }
}

TEST_CASE("construction rejects non-unitaries") {
  CHECK_THROWS_AS(Endomorphism(el("S[1]")), NotUnitary);
  CHECK_THROWS_AS(Endomorphism(el("2*I")), NotUnitary);
}

TEST_CASE("lambda_u is a unital *-homomorphism") {
  std::mt19937 rng(17);
  for (int t = 0; t < 3; ++t) {
    const Endomorphism e(cuntz::testing::random_permutative(rng, 2, 2));
    const Element& u = e.unitary();
    CHECK(e.apply(el("I")) == el("I"));
    CHECK(e.apply(el("S[1]")) == u * el("S[1]"));
    CHECK(e.apply(el("S[2]")) == u * el("S[2]"));
    for (int s = 0; s < 40; ++s) {
      const Element x = cuntz::testing::random_element(rng, 2, 3, 3);
      const Element y = cuntz::testing::random_element(rng, 2, 3, 3);
      REQUIRE(e.apply(x * y) == e.apply(x) * e.apply(y));
      REQUIRE(e.apply(adjoint(x)) == adjoint(e.apply(x)));
      REQUIRE(e.apply(x + y) == e.apply(x) + e.apply(y));
    }
  }
}

TEST_CASE("Ad u coincides with lambda of u phi(u^*)") {
  std::mt19937 rng(23);
  for (int t = 0; t < 3; ++t) {
    const Element u = cuntz::testing::random_permutative(rng, 2, 2);
    const Endomorphism ad(u * shift(adjoint(u)));
    for (int i = 1; i <= 2; ++i) CHECK(ad.apply(Element::isometry(2, Word{i})) == u * Element::isometry(2, Word{i}) * adjoint(u));
    for (std::size_t a = 0; a <= 2; ++a)
      for (std::size_t b = 0; b <= 2; ++b)
        for (const auto& mu : Word::all(2, a))
          for (const auto& nu : Word::all(2, b)) {
            const Element x = Element::monomial(2, mu, nu);
            REQUIRE(ad.apply(x) == u * x * adjoint(u));
          }
  }
}

TEST_CASE("twisted power identities") {
  std::mt19937 rng(31);
  const Element one = el("I");
  CHECK(twisted_power(one, el(kFlip), 3) == one);
  CHECK_THROWS_AS(twisted_power(one, el("S[1]"), 2), NotUnitary);
  for (int t = 0; t < 3; ++t) {
    const Element g = cuntz::testing::random_permutative(rng, 2, 2);
    const Element v = cuntz::testing::random_permutative(rng, 2, 2);
    const Endomorphism eg(g);
    const Endomorphism ev(v);
    const Endomorphism egv(g * v);
    for (std::size_t k = 1; k <= 4; ++k) {
      // (Ad g o phi)^k(x) = g_k phi^k(x) g_k^*
      const Element x = cuntz::testing::random_element(rng, 2, 2, 2);
      Element iter = x;
      for (std::size_t j = 0; j < k; ++j) iter = g * shift(iter) * adjoint(g);
      const Element gk = cuntz::testing::product_power(g, k);
      REQUIRE(iter == gk * shift_power(x, k) * adjoint(gk));
      REQUIRE(eg.alpha_power(x, k) == iter);
      // (gv)_k = g^(k) v_k, with g^(k) = g (Ad v o phi)(g) ... (Ad v o phi)^{k-1}(g)
      Element gk_twisted = el("I");
      Element term = g;
      for (std::size_t j = 0; j < k; ++j) {
        gk_twisted = gk_twisted * term;
        term = v * shift(term) * adjoint(v);
      }
      REQUIRE(twisted_power(g, v, k) == gk_twisted);
      REQUIRE(egv.u_k(k) == gk_twisted * ev.u_k(k));
    }
  }
}

TEST_CASE("gauge cocycle") {
  const auto flip = gauge_cocycle(Endomorphism(el(kFlip)));
  CHECK(flip.is_constant());
  CHECK(flip.at_one(2) == el("I"));

  const auto dec = gauge_cocycle(Endomorphism(el(cuntz::testing::kDecomposable)));
  REQUIRE(dec.coeffs.size() == 3);
  CHECK(dec.coeffs.at(-1) == el("P[11]"));
  CHECK(dec.coeffs.at(1) == el("P[222]"));
  CHECK(dec.coeffs.at(0) == el("I - P[11] - P[222]"));
  CHECK(dec.at_one(2) == el("I"));

  const auto non = gauge_cocycle(Endomorphism(el(cuntz::testing::kNonDecomposable)));
  CHECK(non.coeffs.at(-1) == el("P[1]"));
  CHECK(non.coeffs.at(1) == el("P[21]"));
  CHECK(non.coeffs.at(0) == el("P[22]"));
}

TEST_CASE("gauge cocycle agrees with u gamma_z(u^*) at z = i") {
  // gamma_i scales a degree-d monomial by i^d.
  const auto gamma_i = [](const Element& x) {
    Element out(x.n());
    for (int d = -4; d <= 4; ++d) {
      Scalar z(1);
      for (int j = 0; j < (d % 4 + 4) % 4; ++j) z = z * Scalar::i();
      out += z * graded_part(x, d);
    }
    return out;
  };
  for (const char* text : {cuntz::testing::kDecomposable, cuntz::testing::kNonDecomposable}) {
    const Endomorphism e(el(text));
    const auto c = gauge_cocycle(e);
    Element rhs(2);
    for (const auto& [d, coeff] : c.coeffs) {
      Scalar z(1);
      for (int j = 0; j < ((-d) % 4 + 4) % 4; ++j) z = z * Scalar::i();
      rhs += z * coeff;
    }
    CHECK(e.unitary() * gamma_i(adjoint(e.unitary())) == rhs);
  }
}

TEST_CASE("UHF invariance") {
  CHECK(check_uhf_invariance(Endomorphism(el(kFlip)), 5).holds_up_to_K);
  CHECK(check_uhf_invariance(Endomorphism(el(cuntz::testing::kDecomposable)), 4).holds_up_to_K);
  CHECK(check_uhf_invariance(Endomorphism(el(cuntz::testing::kNonDecomposable)), 5).holds_up_to_K);
  // Swaps P_2 and P_11 with mixed degrees; the cocycle does not commute.
  const Endomorphism bad(el("S[11]S[2]* + S[2]S[11]* + P[12]"));
  const auto r = check_uhf_invariance(bad, 1);
  CHECK_FALSE(r.holds_up_to_K);
  REQUIRE_FALSE(r.witnesses.empty());
  CHECK_FALSE(r.witnesses.front().commutator.is_zero());
  for (std::size_t K = 2; K <= 4; ++K) CHECK_FALSE(check_uhf_invariance(bad, K).holds_up_to_K);
  // Direct confirmation: some lambda_u(e_ij) leaves the core.
  bool leaves = false;
  for (const auto& g : core_generators(2, 1)) leaves = leaves || !membership(bad.apply(g.element)).in_core;
  CHECK(leaves);
  // And it stays inside for the invariant examples.
  const Endomorphism dec(el(cuntz::testing::kDecomposable));
  for (const auto& g : core_generators(2, 3)) CHECK(membership(dec.apply(g.element)).in_core);
}

TEST_CASE("partition form") {
  const Endomorphism dec = partition_form_unitary({
      {el("P[11]"), el("S[111]S[1222]* + S[112]S[2222]*"), -1},
      {el("P[222]"), el("S[2221]S[111]* + S[2222]S[211]*"), 1},
      {el("I - P[11] - P[222]"), el("S[1222]S[2221]* + S[211]S[112]* + P[121] + P[1221] + P[212] + P[221]"), 0},
  });
  CHECK(dec.unitary() == el(cuntz::testing::kDecomposable));
  CHECK(dec.alpha(el("P[11]")) == el("P[222]"));
  CHECK(dec.alpha(el("P[222]")) == el("P[11]"));

  const Endomorphism non = partition_form_unitary({
      {el("P[1]"), el("S[12]S[121]* + S[11]S[221]*"), -1},
      {el("P[21]"), el("S[211]S[21]* + S[2121]S[112]* + S[2122]S[111]*"), 1},
      {el("P[22]"), el("S[221]S[122]* + P[222]"), 0},
  });
  CHECK(non.alpha(el("P[1]")) == el("P[21]"));
  CHECK(non.alpha(el("P[21]")) == el("P[1]"));
  CHECK(non.alpha(el("P[22]")) == el("P[22]"));

  const Endomorphism single = partition_form_unitary({{el("I"), el(kFlip), 0}});
  CHECK(single.unitary() == el(kFlip));

  CHECK_THROWS_AS(partition_form_unitary({{el("P[1]"), el("S[1]"), 1}}), InvalidConstruction);
  CHECK_THROWS_AS(partition_form_unitary({{el("I"), el(kFlip), 1}}), InvalidConstruction);
}

TEST_CASE("generator images") {
  const auto s = corner_generators(2, Word{});
  CHECK(s.images[0] == el("S[1]"));
  CHECK(s.satisfies_cuntz_relations());
  CHECK(endomorphism_from_images(s).unitary() == el("I"));

  const auto t = corner_generators(2, Word("1"));
  CHECK(t.images[0] == el("S[11]S[1]*"));
  CHECK(t.images[1] == el("S[12]S[1]*"));
  CHECK(t.unit == el("P[1]"));
  CHECK(t.satisfies_cuntz_relations());
  CHECK_THROWS(endomorphism_from_images(t));

  const auto r = corner_generators(2, Word("22"));
  CHECK(r.images[0] == el("S[221]S[22]*"));
  CHECK(r.images[1] == el("S[222]S[22]*"));

  // T_i = sum_j S_j S_i S_j^* gives lambda = phi on the generators.
  GeneratorImages phi_images{{shift(el("S[1]")), shift(el("S[2]"))}, el("I")};
  REQUIRE(phi_images.satisfies_cuntz_relations());
  const Endomorphism lam = endomorphism_from_images(phi_images);
  CHECK(lam.apply(el("S[1]")) == shift(el("S[1]")));
  CHECK(lam.apply(el("S[12]S[2]*")) == shift(el("S[12]S[2]*")));
}

TEST_CASE("conjugation relations between the corners of the decomposable example") {
  const Endomorphism e(el(cuntz::testing::kDecomposable));
  const auto t = corner_generators(2, Word("11"));
  const auto r = corner_generators(2, Word("222"));
  for (std::size_t j = 0; j < 2; ++j) {
    CHECK(e.alpha(t.images[j]) == r.shift(r.images[j]));
    CHECK(e.alpha(r.images[j]) == t.shift(t.images[j]));
  }
}

TEST_CASE("Q_2k identity for phi_T psi_T") {
  for (const Word& mu : {Word{}, Word("1")}) {
    const auto t = corner_generators(2, mu);
    const Element& t1 = t.images[0];
    const Element& t2 = t.images[1];
    const Element f = t2 * adjoint(t1) + t1 * adjoint(t2);
    const GeneratorImages psi{{t1, t2 * f}, t.unit};
    REQUIRE(psi.satisfies_cuntz_relations());
    for (std::size_t k = 1; k <= 3; ++k) {
      Element q(2);
      for (const auto& w : Word::all(2, 2 * k - 1)) {
        const Element tw = t.word(w + Word{1});
        q += tw * adjoint(tw);
      }
      for (const Element& x : {t1, t2, t1 * adjoint(t2), t2 * t1 * adjoint(t1)}) {
        Element lhs = x;
        Element rhs = x;
        for (std::size_t j = 0; j < k; ++j) lhs = t.shift(psi.shift(lhs));
        for (std::size_t j = 0; j < 2 * k; ++j) rhs = t.shift(rhs);
        REQUIRE(q * lhs == q * rhs);
      }
    }
  }
}
