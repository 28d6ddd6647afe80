// Copyright 2026 The cuntzalg Authors
// SPDX-License-Identifier: Apache-2.0

#include "cuntz/structure.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cuntz;
using cuntz::testing::el;

namespace {

// Checks the matrix-unit relations e_rs e_tw = delta_st e_rw and sum_r e_rr = p.
void check_units(const Summand& s) {
  Element diag(s.central_projection.n());
  for (std::size_t r = 0; r < s.dim; ++r) {
    diag += s.units[r][r];
    for (std::size_t c = 0; c < s.dim; ++c)
      for (std::size_t t = 0; t < s.dim; ++t)
        for (std::size_t w = 0; w < s.dim; ++w) {
          const Element expect = c == t ? s.units[r][w] : Element(s.central_projection.n());
          REQUIRE(s.units[r][c] * s.units[t][w] == expect);
        }
  }
  CHECK(diag == s.central_projection);
}

}  // namespace

TEST_CASE("commutative algebra of three projections") {
  const auto s = analyze_basis({el("P[1]"), el("P[21]"), el("P[22]")}, {0, 0, 0});
  CHECK(s.dim_vector == std::vector<std::size_t>{1, 1, 1});
  CHECK(s.trace_vector == std::vector<Rational>{Rational(1, 2), Rational(1, 4), Rational(1, 4)});
  CHECK(s.center_basis.size() == 3);
  CHECK(s.minimal_central_projections[0] == el("P[1]"));
  for (const auto& sm : s.summands) check_units(sm);
  for (const auto& g : gauge_grading(s)) CHECK(g.in_core());
}

TEST_CASE("M_2 plus C with graded matrix units") {
  const std::vector<Element> basis{el("S[11]S[222]*"), el("P[11]"), el("P[12] + P[21] + P[221]"), el("P[222]"),
                                   el("S[222]S[11]*")};
  const auto s = analyze_basis(basis, {-1, 0, 0, 0, 1});
  CHECK(s.dim_vector == std::vector<std::size_t>{2, 1});
  std::size_t sum_sq = 0;
  for (auto d : s.dim_vector) sum_sq += d * d;
  CHECK(sum_sq == basis.size());
  CHECK(s.minimal_central_projections[0] == el("P[11] + P[222]"));
  const Summand& m2 = s.summands[0];
  check_units(m2);
  CHECK(m2.self_adjoint_units);
  CHECK(m2.degrees[0][1] == -m2.degrees[1][0]);
  CHECK(std::abs(m2.degrees[0][1]) == 1);
  const auto g = gauge_grading(s);
  CHECK_FALSE(g[0].in_core());
  CHECK(g[1].in_core());
  // trace of a minimal projection times d equals tau(p) on degree-0 summands only
  CHECK(s.summands[1].min_trace == trace(s.summands[1].central_projection).re());
}

TEST_CASE("unit of a corner algebra") {
  const auto s = analyze_basis({el("P[11]"), el("P[12]")}, {0, 0}, el("P[1]"));
  CHECK(s.dim_vector == std::vector<std::size_t>{1, 1});
}

TEST_CASE("idempotents outside Q(i) are reported") {
  // x^2 = 2 for x = S_1 S_2^* + S_2 S_1^* + P_1 - P_2
  const Element x = el("S[1]S[2]* + S[2]S[1]* + P[1] - P[2]");
  REQUIRE(x * x == el("2*I"));
  CHECK_THROWS_AS(analyze_basis({el("I"), x}, {0, 0}), StructureError);
}

TEST_CASE("non-closed input is rejected") {
  CHECK_THROWS_AS(analyze_basis({el("P[1]"), el("S[1]S[2]*")}, {0, 0}), StructureError);
}

TEST_CASE("deterministic element order") {
  CHECK(element_less(el("P[1]"), el("P[21]")));
  CHECK_FALSE(element_less(el("P[21]"), el("P[1]")));
}
