// Copyright 2026 The cuntzalg Authors
// SPDX-License-Identifier: Apache-2.0

#include "cuntz/structure.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <set>
#include <string>

#include "cuntz/linalg.hpp"

namespace cuntz {

std::vector<int> Summand::row_exponents() const {
  std::vector<int> k;
  k.reserve(dim);
  for (std::size_t r = 0; r < dim; ++r) k.push_back(degrees[r][0]);
  return k;
}

bool SummandGrading::in_core() const {
  return std::all_of(degrees.begin(), degrees.end(), [](int d) { return d == 0; });
}

bool element_less(const Element& a, const Element& b) {
  const auto& x = a.terms();
  const auto& y = b.terms();
  for (std::size_t j = 0; j < x.size() && j < y.size(); ++j) {
    if (x[j].m != y[j].m) return x[j].m < y[j].m;
    if (x[j].c.re() != y[j].c.re()) return x[j].c.re() < y[j].c.re();
    if (x[j].c.im() != y[j].c.im()) return x[j].c.im() < y[j].c.im();
  }
  return x.size() < y.size();
}

namespace {

bool independent(const std::vector<Element>& elems) { return linear_relations(elems).empty(); }

std::size_t span_dimension(const std::vector<Element>& elems) { return independent_subset(elems).size(); }

// Minimal polynomial of h over the unit e (lowest degree monic relation among
// e, h, h^2, ...), with coefficients c_0..c_{r-1} of x^0..x^{r-1}.
std::vector<Rational> minimal_polynomial(const Element& h, const Element& e, std::size_t max_degree) {
  std::vector<Element> powers{e};
  for (std::size_t k = 1; k <= max_degree + 1; ++k) {
    powers.push_back(powers.back() * h);
    auto rel = linear_relations(powers);
    if (rel.empty()) continue;
    // The relation freed at the newest power has coefficient 1 there.
    for (const auto& v : rel) {
      if (v.back().first != k) continue;
      std::vector<Rational> coeffs(k);
      for (const auto& [j, c] : v) {
        if (j == k) continue;
        if (!c.is_real()) throw StructureError("minimal polynomial of a self-adjoint element has non-real coefficients");
        coeffs[j] = c.re();
      }
      return coeffs;
    }
  }
  throw StructureError("minimal polynomial degree exceeds the algebra dimension");
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

std::vector<std::int64_t> divisors(std::int64_t v) {
  v = v < 0 ? -v : v;
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d * d <= v; ++d) {
    if (v % d) continue;
    out.push_back(d);
    if (d != v / d) out.push_back(v / d);
  }
  return out;
}

// Rational roots of x^r + c_{r-1} x^{r-1} + ... + c_0, by the rational root theorem.
std::vector<Rational> rational_roots(const std::vector<Rational>& monic_low) {
  const std::size_t r = monic_low.size();
  std::int64_t l = 1;
  for (const auto& c : monic_low) l = std::lcm(l, c.den());
  std::vector<std::int64_t> a(r + 1);  // integer coefficients, a[r] = l
  for (std::size_t j = 0; j < r; ++j) a[j] = (monic_low[j] * Rational(l)).num();
  a[r] = l;
  auto eval = [&](const Rational& x) {
    Rational acc(0);
    for (std::size_t j = r + 1; j-- > 0;) acc = acc * x + Rational(a[j]);
    return acc;
  };
  std::set<Rational> roots;
  std::size_t low = 0;
  while (low < r && a[low] == 0) ++low;
  if (low > 0) roots.insert(Rational(0));
  if (low < r) {
    for (std::int64_t p : divisors(a[low])) {
      for (std::int64_t q : divisors(a[r])) {
        if (gcd64(p, q) != 1) continue;
        for (std::int64_t s : {1, -1}) {
          Rational x(s * p, q);
          if (eval(x).is_zero()) roots.insert(x);
        }
      }
    }
  }
  return {roots.begin(), roots.end()};
}

// Spectral projections of h (over unit e) if its minimal polynomial splits over Q
// with at least two roots; empty otherwise.
std::vector<Element> spectral_projections(const Element& h, const Element& e, std::size_t max_degree) {
  const auto poly = minimal_polynomial(h, e, max_degree);
  const auto roots = rational_roots(poly);
  if (roots.size() != poly.size() || roots.size() < 2) return {};
  std::vector<Element> out;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    Element p = e;
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (j == i) continue;
      const Scalar inv = Scalar(Rational(1) / (roots[i] - roots[j]));
      p = inv * (p * (h - Scalar(roots[j]) * e));
    }
    out.push_back(std::move(p));
  }
  return out;
}

class Analyzer {
 public:
  Analyzer(const std::vector<Element>& basis, const std::vector<int>& degrees, Element unit)
      : basis_(basis), degrees_(degrees), unit_(std::move(unit)) {
    n_ = basis.front().n();
    // Degree-0 elements first: splitting with them keeps projections inside F_n.
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (degrees[k] == 0) order_.push_back(k);
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (degrees[k] != 0) order_.push_back(k);
  }

  AlgebraStructure run() {
    AlgebraStructure s;
    s.n = n_;
    s.basis = basis_;
    s.grading = degrees_;
    if (!in_span(unit_)) throw StructureError("algebra does not contain its unit");
    for (const auto& b : basis_)
      if (!(unit_ * b == b) || !(b * unit_ == b)) throw StructureError("unit does not act as the identity");
    s.center_basis = center();
    const auto central = central_projections(s.center_basis);
    std::size_t total = 0;
    for (const auto& p : central) {
      Summand sm = summand(p);
      total += sm.dim * sm.dim;
      s.summands.push_back(std::move(sm));
    }
    if (total != basis_.size())
      throw StructureError("sum of d_i^2 = " + std::to_string(total) + " differs from the dimension " +
                           std::to_string(basis_.size()) + " (not semisimple)");
    std::sort(s.summands.begin(), s.summands.end(),
              [](const Summand& a, const Summand& b) { return element_less(a.central_projection, b.central_projection); });
    for (const auto& sm : s.summands) {
      s.minimal_central_projections.push_back(sm.central_projection);
      s.dim_vector.push_back(sm.dim);
      s.trace_vector.push_back(sm.min_trace);
      std::set<int> ds;
      for (const auto& row : sm.degrees) ds.insert(row.begin(), row.end());
      s.central_exponents.emplace_back(ds.begin(), ds.end());
    }
    return s;
  }

 private:
  bool in_span(const Element& x) const {
    for (int d : x.degrees()) {
      std::vector<Element> piece;
      for (std::size_t k = 0; k < basis_.size(); ++k)
        if (degrees_[k] == d) piece.push_back(basis_[k]);
      if (!express_in_span(piece, graded_part(x, d))) return false;
    }
    return true;
  }

  std::vector<Element> center() const {
    const std::size_t m = basis_.size();
    EchelonForm ef(m);
    for (std::size_t k = 0; k < m; ++k) {
      std::vector<Element> comms;
      comms.reserve(m);
      for (std::size_t j = 0; j < m; ++j) comms.push_back(commutator(basis_[j], basis_[k]));
      for (auto& row : refinement_rows(comms)) ef.insert(std::move(row));
    }
    std::vector<Element> out;
    for (const auto& v : rref(ef.kernel(), m)) {
      std::vector<Scalar> c(m);
      for (const auto& [j, x] : v) c[j] = x;
      out.push_back(combine(basis_, c, n_));
    }
    return out;
  }

  std::vector<Element> central_projections(const std::vector<Element>& center) const {
    const Element& one = unit_;
    const std::size_t r = center.size();
    if (r == 1) return {one};
    std::vector<Element> herm;
    for (const auto& z : center) {
      herm.push_back(z + adjoint(z));
      herm.push_back(Scalar::i() * (z - adjoint(z)));
    }
    // A few deterministic weight patterns; a generic one separates every summand.
    for (int attempt = 0; attempt < 6; ++attempt) {
      Element h(n_);
      for (std::size_t j = 0; j < herm.size(); ++j) {
        const auto w = static_cast<std::int64_t>(attempt == 0 ? j + 1 : (j + 1) * (j + 1) + static_cast<std::size_t>(attempt) * j);
        h += Scalar(w) * herm[j];
      }
      const auto poly = minimal_polynomial(h, one, r);
      if (poly.size() != r) continue;
      auto projs = spectral_projections(h, one, r);
      if (projs.size() != r) throw StructureError("central idempotents are not defined over Q(i)");
      check_central(projs);
      return projs;
    }
    throw StructureError("could not separate the minimal central projections");
  }

  void check_central(const std::vector<Element>& projs) const {
    Element sum(n_);
    for (std::size_t i = 0; i < projs.size(); ++i) {
      const auto& p = projs[i];
      if (!is_projection(p)) throw StructureError("central idempotent is not a projection");
      for (const auto& b : basis_)
        if (!commutator(p, b).is_zero()) throw StructureError("central idempotent is not central");
      for (std::size_t j = i + 1; j < projs.size(); ++j)
        if (!(p * projs[j]).is_zero()) throw StructureError("central projections are not orthogonal");
      sum += p;
    }
    if (!(sum == unit_)) throw StructureError("central projections do not sum to the unit");
  }

  std::size_t corner_dimension(const Element& e) const {
    std::vector<Element> elems;
    for (const auto& b : basis_) elems.push_back(e * b * e);
    return span_dimension(elems);
  }

  // A minimal projection below e, split with degree-0 elements when possible.
  Element minimal_below(Element e) const {
    while (true) {
      const std::size_t dim = corner_dimension(e);
      if (dim == 1) return e;
      bool split = false;
      for (std::size_t k : order_) {
        const Element y = e * basis_[k] * e;
        for (const Element& h : {y + adjoint(y), Scalar::i() * (y - adjoint(y))}) {
          if (h.is_zero() || !independent({e, h})) continue;
          auto projs = spectral_projections(h, e, dim);
          if (projs.empty()) continue;
          e = *std::min_element(projs.begin(), projs.end(), element_less);
          split = true;
          break;
        }
        if (split) break;
      }
      if (!split) throw StructureError("corner cannot be split over Q(i)");
    }
  }

  Summand summand(const Element& p) const {
    Summand sm;
    sm.central_projection = p;
    const std::size_t cd = corner_dimension(p);
    std::size_t d = 0;
    while ((d + 1) * (d + 1) <= cd) ++d;
    if (d * d != cd) throw StructureError("corner dimension " + std::to_string(cd) + " is not a square");
    sm.dim = d;

    std::vector<Element> f;
    Element rest = p;
    while (f.size() < d) {
      Element m = minimal_below(rest);
      rest -= m;
      f.push_back(std::move(m));
    }
    if (!rest.is_zero()) throw StructureError("minimal projections do not exhaust the summand");

    std::vector<Element> row(d, Element(n_)), col(d, Element(n_));  // e_1r and e_r1
    row[0] = col[0] = f[0];
    const Scalar tau1 = trace(f[0], TraceMode::kLenient);
    for (std::size_t r = 1; r < d; ++r) {
      std::optional<Element> x;
      for (std::size_t k : order_) {
        Element y = f[0] * basis_[k] * f[r];
        if (!y.is_zero()) {
          x = std::move(y);
          break;
        }
      }
      if (!x) throw StructureError("no partial isometry between minimal projections");
      const Scalar c = trace(*x * adjoint(*x), TraceMode::kLenient) / tau1;
      if (!(*x * adjoint(*x) == c * f[0])) throw StructureError("x x^* is not a multiple of e_11");
      bool ok = false;
      const Rational root = c.is_real() ? rational_sqrt(c.re(), ok) : Rational(0);
      if (ok) {
        row[r] = Scalar(Rational(1) / root) * *x;
        col[r] = adjoint(row[r]);
      } else {
        sm.self_adjoint_units = false;
        row[r] = *x;
        col[r] = (Scalar(1) / c) * adjoint(*x);
      }
      if (!(col[r] * row[r] == f[r])) throw StructureError("matrix units do not reach e_rr");
    }
    sm.units.assign(d, std::vector<Element>(d, Element(n_)));
    sm.degrees.assign(d, std::vector<int>(d, 0));
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t s = 0; s < d; ++s) {
        sm.units[r][s] = r == 0 ? row[s] : (s == 0 ? col[r] : col[r] * row[s]);
        auto mem = membership(sm.units[r][s]);
        if (!mem.pure_degree) throw StructureError("matrix unit has mixed gauge degree");
        sm.degrees[r][s] = *mem.pure_degree;
      }
    }
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t s = 0; s < d; ++s)
        for (std::size_t t = 0; t < d; ++t)
          for (std::size_t w = 0; w < d; ++w) {
            Element expect = s == t ? sm.units[r][w] : Element(n_);
            if (!(sm.units[r][s] * sm.units[t][w] == expect)) throw StructureError("matrix unit relations fail");
          }
    if (!tau1.is_real()) throw StructureError("trace of a projection is not real");
    sm.min_trace = tau1.re();
    return sm;
  }

  const std::vector<Element>& basis_;
  const std::vector<int>& degrees_;
  Element unit_;
  std::vector<std::size_t> order_;
  int n_ = 2;
};

}  // namespace

AlgebraStructure analyze_basis(const std::vector<Element>& basis, const std::vector<int>& degrees) {
  if (basis.empty()) throw StructureError("empty algebra");
  return analyze_basis(basis, degrees, Element::identity(basis.front().n()));
}

AlgebraStructure analyze_basis(const std::vector<Element>& basis, const std::vector<int>& degrees, const Element& unit) {
  if (basis.empty()) throw StructureError("empty algebra");
  if (degrees.size() != basis.size()) throw std::invalid_argument("analyze_basis: degree list size mismatch");
  for (std::size_t k = 0; k < basis.size(); ++k) {
    auto mem = membership(basis[k]);
    if (!mem.pure_degree || *mem.pure_degree != degrees[k])
      throw std::invalid_argument("analyze_basis: basis element " + std::to_string(k) + " is not of its stated degree");
  }
  return Analyzer(basis, degrees, unit).run();
}

AlgebraStructure analyze(const RelativeCommutantApprox& rc) {
  if (!rc.closed()) {
    std::string why = rc.closure_issues.empty() ? "closure check failed" : rc.closure_issues.front();
    throw StructureError("relative commutant is not closed at this budget: " + why);
  }
  return analyze_basis(rc.basis, rc.degrees);
}

std::vector<SummandGrading> gauge_grading(const AlgebraStructure& s) {
  std::vector<SummandGrading> out;
  for (std::size_t i = 0; i < s.summands.size(); ++i) {
    SummandGrading g;
    g.summand = i;
    for (const auto& row : s.summands[i].degrees) g.degrees.insert(g.degrees.end(), row.begin(), row.end());
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<SummandGrading> gauge_grading(const RelativeCommutantApprox& rc) { return gauge_grading(analyze(rc)); }

}  // namespace cuntz
