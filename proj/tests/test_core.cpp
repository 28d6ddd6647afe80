// Copyright 2026 The cuntzalg Authors
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include "cuntz/element.hpp"
#include "cuntz/parse.hpp"
#include "cuntz/rational.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cuntz;
using cuntz::testing::el;

TEST_CASE("rational arithmetic is exact and normalized") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -3) == Rational(-1, 3));
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK((Rational(2, 3) * Rational(3, 4)).to_string() == "1/2");
  CHECK(Rational::parse("-5/10") == Rational(-1, 2));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational::parse("1/x"), std::invalid_argument);
  bool ok = false;
  CHECK(rational_sqrt(Rational(9, 16), ok) == Rational(3, 4));
  CHECK(ok);
  rational_sqrt(Rational(2), ok);
  CHECK_FALSE(ok);
}

TEST_CASE("rational overflow is reported rather than wrapped") {
  const Rational big(std::int64_t{1} << 62);
  CHECK_THROWS_AS(big * big, std::overflow_error);
}

TEST_CASE("gaussian scalars") {
  const Scalar i = Scalar::i();
  CHECK(i * i == Scalar(-1));
  CHECK((Scalar(1) / i) == -i);
  CHECK(Scalar(Rational(1), Rational(2)).conj() == Scalar(Rational(1), Rational(-2)));
  CHECK(Scalar(Rational(3), Rational(4)).norm2() == Rational(25));
}

TEST_CASE("multiplication follows the Cuntz relations") {
  CHECK(el("S[1]S[2]*") * el("S[2]S[1]*") == el("P[1]"));
  CHECK(adjoint(el("S[1]")) * el("S[1]") == el("I"));
  CHECK(adjoint(el("S[1]")) * el("S[2]") == el("0"));
  CHECK(el("S[11]S[2]*") * el("S[21]S[1]*") == el("S[111]S[1]*"));
  CHECK(el("P[1] + P[2]") == el("I"));
  for (int n = 2; n <= 4; ++n) {
    Element sum(n);
    for (int i = 1; i <= n; ++i) {
      const Element si = Element::isometry(n, Word{i});
      sum += si * adjoint(si);
      for (int j = 1; j <= n; ++j)
        CHECK(adjoint(si) * Element::isometry(n, Word{j}) == (i == j ? Element::identity(n) : Element(n)));
    }
    CHECK(sum == Element::identity(n));
  }
}

TEST_CASE("canonical form is the coarsest refinement") {
  CHECK(el("P[11] + P[12]") == el("P[1]"));
  CHECK(el("P[11] + P[12]").size() == 1);
  CHECK(el("S[11]S[21]* + S[12]S[22]*") == el("S[1]S[2]*"));
  CHECK(el("P[1] - P[1]").is_zero());
  CHECK(el("P[11] + P[12] + P[2]") == el("I"));
}

TEST_CASE("adjoint") {
  CHECK(adjoint(el("S[1]S[2]*")) == el("S[2]S[1]*"));
  CHECK(adjoint(el("P[11]")) == el("P[11]"));
  CHECK(adjoint(el("(0+1i)*S[1]")) == el("(0-1i)*S[]S[1]*"));
}

TEST_CASE("grading and expectation") {
  const Element x = el("S[1] + S[2]S[1]*");
  CHECK(graded_part(x, 1) == el("S[1]"));
  CHECK(graded_part(x, 0) == el("S[2]S[1]*"));
  CHECK(expectation(el("S[1]")).is_zero());
  const Element f = el("S[12]S[21]* + 1/2*P[1]");
  CHECK(graded_part(f, 0) == f);
}

TEST_CASE("trace") {
  CHECK(trace(el("P[1]")) == Scalar(Rational(1, 2)));
  CHECK(trace(el("P[21]")) == Scalar(Rational(1, 4)));
  CHECK(trace(el("P[222]")) == Scalar(Rational(1, 8)));
  CHECK(trace(el("I")) == Scalar(1));
  CHECK(trace(el("S[1]S[2]*")) == Scalar(0));
  CHECK(trace(el("P[1]", 3)) == Scalar(Rational(1, 3)));
  CHECK_THROWS_AS(trace(el("S[1]")), NotInCore);
  CHECK(trace(el("S[1] + P[2]"), TraceMode::kLenient) == Scalar(Rational(1, 2)));
}

TEST_CASE("level_to rewrites at a uniform length") {
  const auto lv = [](const std::string& s, std::size_t k) { return Element::from_terms(2, level_to(el(s), k)); };
  CHECK(level_to(el("P[1]"), 2).size() == 2);
  CHECK(lv("P[1]", 2) == el("P[11] + P[12]"));
  CHECK(level_to(el("I"), 1).size() == 2);
  CHECK(level_to(el("S[1]S[2]*"), 2).size() == 2);
  for (const auto& t : level_to(el("S[1]S[2]* + P[22]"), 3)) {
    CHECK(t.m.mu.size() == 3);
    CHECK(t.m.nu.size() == 3);
  }
  CHECK_THROWS(level_to(el("S[1]"), 2));
  CHECK_THROWS(level_to(el("P[111]"), 2));
}

TEST_CASE("membership flags") {
  CHECK(membership(el("P[21]")).in_diagonal);
  CHECK(membership(el("S[1]")).pure_degree == 1);
  const auto a1 = membership(el("S[2221]S[111]* + S[2222]S[211]*"));
  CHECK(a1.pure_degree == 1);
  CHECK_FALSE(a1.in_core);
  const auto f = membership(el("S[12]S[21]*"));
  CHECK(f.in_core);
  CHECK_FALSE(f.in_diagonal);
  CHECK(f.min_level == std::size_t{2});
  CHECK_FALSE(membership(el("S[1] + P[2]")).pure_degree.has_value());
}

TEST_CASE("parser") {
  CHECK(el("S[12]S[121]* + S[11]S[221]*").size() == 2);
  CHECK(el("-P[1] + P[1]").is_zero());
  CHECK(el("0").is_zero());
  CHECK(el("1/2*P[1] + (1/2+1/2i)*P[2]").size() == 2);
  CHECK(el("  S[1]S[2]*  +  P[1] ") == el("S[1]S[2]* + P[1]"));
  // S[a]S[b]* is one atom
  CHECK_THROWS_AS(el("S[1] S[2]*"), ParseError);
  try {
    el("S[1]S[2* + P[1]");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 7);
  }
  CHECK_THROWS_AS(el("S[3]"), ParseError);
  CHECK_THROWS_AS(el("P[1] +"), ParseError);
  CHECK_THROWS_AS(el("Q[1]"), ParseError);
}

TEST_CASE("text form round-trips through the parser") {
  std::mt19937 rng(7);
  for (int n : {2, 3}) {
    for (int t = 0; t < 200; ++t) {
      const Element x = cuntz::testing::random_element(rng, n, 4, 3);
      CHECK(parse_element(x.to_string(), n) == x);
    }
  }
}

TEST_CASE("alphabet mismatch is an error") {
  CHECK_THROWS_AS(el("S[1]", 2) * el("S[1]", 3), AlphabetMismatch);
  CHECK_THROWS_AS(el("S[1]", 2) + el("S[1]", 3), AlphabetMismatch);
}

TEST_CASE("randomized algebra identities") {
  std::mt19937 rng(2026);
  for (int n : {2, 3}) {
    for (int t = 0; t < 300; ++t) {
      const Element a = cuntz::testing::random_element(rng, n, 3, 4);
      const Element b = cuntz::testing::random_element(rng, n, 3, 4);
      const Element c = cuntz::testing::random_element(rng, n, 3, 4);
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(adjoint(a * b) == adjoint(b) * adjoint(a));
      REQUIRE(adjoint(adjoint(a)) == a);
      REQUIRE(a * (b + c) == a * b + a * c);
      Element sum(n);
      for (int d = -4; d <= 4; ++d) sum += graded_part(a, d);
      REQUIRE(sum == a);
    }
  }
}

TEST_CASE("grading is multiplicative on pure elements") {
  std::mt19937 rng(11);
  for (int t = 0; t < 200; ++t) {
    const Element a = Element::monomial(2, cuntz::testing::random_word(rng, 2, t % 4), cuntz::testing::random_word(rng, 2, (t / 4) % 4));
    const Element b = Element::monomial(2, cuntz::testing::random_word(rng, 2, (t / 2) % 4), cuntz::testing::random_word(rng, 2, t % 3));
    const Element p = a * b;
    if (p.is_zero()) continue;
    CHECK(membership(p).pure_degree == *membership(a).pure_degree + *membership(b).pure_degree);
  }
}

TEST_CASE("trace is tracial, positive and invariant under leveling") {
  std::mt19937 rng(5);
  for (int t = 0; t < 200; ++t) {
    Element a = expectation(cuntz::testing::random_element(rng, 2, 3, 3));
    Element b = expectation(cuntz::testing::random_element(rng, 2, 3, 3));
    CHECK(trace(a * b) == trace(b * a));
    const Scalar pos = trace(adjoint(a) * a);
    CHECK(pos.is_real());
    CHECK(pos.re() >= Rational(0));
    CHECK(trace(Element::from_terms(2, level_to(a, 3))) == trace(a));
  }
}

TEST_CASE("unitary and projection predicates") {
  CHECK(is_unitary(el(cuntz::testing::kNonDecomposable)));
  CHECK(is_unitary(el("S[1]S[2]* + S[2]S[1]*")));
  CHECK_FALSE(is_unitary(el("S[1]")));
  CHECK(is_projection(el("P[1] + P[22]")));
  CHECK_FALSE(is_projection(el("2*P[1]")));
}
