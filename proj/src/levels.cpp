// Copyright 2026 The cuntzalg Authors
// SPDX-License-Identifier: Apache-2.0

#include "cuntz/levels.hpp"

#include <algorithm>
#include <future>
#include <optional>

namespace cuntz {

// ---------------------------------------------------------------------------
// ExactMatrix

ExactMatrix ExactMatrix::identity(std::size_t dim) {
  ExactMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.rows_[i].emplace_back(i, Scalar(1));
  return m;
}

Scalar ExactMatrix::at(std::size_t r, std::size_t c) const {
  const auto& row = rows_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, std::size_t col) { return e.first < col; });
  return it != row.end() && it->first == c ? it->second : Scalar{};
}

void ExactMatrix::add(std::size_t r, std::size_t c, const Scalar& v) {
  rows_[r] = axpy(rows_[r], Scalar(1), SparseVector{{c, v}});
}

Scalar ExactMatrix::trace() const {
  Scalar t;
  for (std::size_t i = 0; i < dim(); ++i) t += at(i, i);
  return t;
}

ExactMatrix ExactMatrix::adjoint() const {
  ExactMatrix out(dim());
  for (std::size_t r = 0; r < dim(); ++r)
    for (const auto& [c, v] : rows_[r]) out.rows_[c].emplace_back(r, v.conj());
  return out;  // rows visited in increasing r, so every output row is sorted
}

SparseVector ExactMatrix::flatten() const {
  SparseVector v;
  for (std::size_t r = 0; r < dim(); ++r)
    for (const auto& [c, x] : rows_[r]) v.emplace_back(r * dim() + c, x);
  return v;
}

ExactMatrix ExactMatrix::unflatten(const SparseVector& v, std::size_t dim) {
  ExactMatrix m(dim);
  for (const auto& [i, x] : v) m.rows_[i / dim].emplace_back(i % dim, x);
  return m;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  const std::size_t n = a.dim();
  ExactMatrix out(n);
  std::vector<Scalar> acc(n);
  std::vector<bool> touched(n);
  std::vector<std::size_t> cols;
  for (std::size_t r = 0; r < n; ++r) {
    cols.clear();
    for (const auto& [k, x] : a.rows_[r]) {
      for (const auto& [c, y] : b.rows_[k]) {
        if (!touched[c]) {
          touched[c] = true;
          cols.push_back(c);
        }
        acc[c] += x * y;
      }
    }
    std::sort(cols.begin(), cols.end());
    for (std::size_t c : cols) {
      if (!acc[c].is_zero()) out.rows_[r].emplace_back(c, acc[c]);
      acc[c] = Scalar{};
      touched[c] = false;
    }
  }
  return out;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix out(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r) out.rows_[r] = axpy(a.rows_[r], Scalar(1), b.rows_[r]);
  return out;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix out(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r) out.rows_[r] = axpy(a.rows_[r], Scalar(-1), b.rows_[r]);
  return out;
}

// ---------------------------------------------------------------------------
// MatrixLevel

MatrixLevel::MatrixLevel(int n, std::size_t k) : n_(n), k_(k), dim_(1) {
  if (n < 2 || n > kMaxAlphabet) throw std::invalid_argument("MatrixLevel: n out of range");
  for (std::size_t j = 0; j < k; ++j) dim_ *= static_cast<std::size_t>(n);
}

std::size_t MatrixLevel::index(const Word& w) const {
  if (w.size() != k_) throw std::invalid_argument("MatrixLevel: word length differs from level");
  std::size_t idx = 0;
  for (std::size_t j = w.size(); j-- > 0;) idx = idx * static_cast<std::size_t>(n_) + static_cast<std::size_t>(w[j] - 1);
  return idx;
}

Word MatrixLevel::word(std::size_t index) const {
  Word w;
  for (std::size_t j = 0; j < k_; ++j) {
    w.append(static_cast<int>(index % static_cast<std::size_t>(n_)) + 1);
    index /= static_cast<std::size_t>(n_);
  }
  return w;
}

ExactMatrix MatrixLevel::embed(const ExactMatrix& m) const {
  const std::size_t big = dim_ * static_cast<std::size_t>(n_);
  ExactMatrix out(big);
  // Appending letter i adds (i-1) n^k to the little-endian index.
  for (std::size_t r = 0; r < dim_; ++r)
    for (const auto& [c, v] : m.row(r))
      for (std::size_t i = 0; i < static_cast<std::size_t>(n_); ++i) out.add(r + i * dim_, c + i * dim_, v);
  return out;
}

ExactMatrix realize(const Element& x, std::size_t k) {
  if (!membership(x).in_core) throw NotInCore("realize: element is not in the UHF core");
  if (x.max_length() > k)
    throw LevelTooSmall("realize: words of length " + std::to_string(x.max_length()) + " exceed level " + std::to_string(k));
  MatrixLevel level(x.n(), k);
  ExactMatrix m(level.dim());
  for (const auto& t : level_to(x, k)) m.add(level.index(t.m.mu), level.index(t.m.nu), t.c);
  return m;
}

std::vector<ExactMatrix> commutant(const std::vector<ExactMatrix>& mats, std::size_t dim) {
  const std::size_t vars = dim * dim;
  EchelonForm ef(vars);
  for (const auto& m : mats) {
    if (m.dim() != dim) throw std::invalid_argument("commutant: matrix size mismatch");
    std::vector<SparseVector> cols(dim);  // column access of m
    for (std::size_t r = 0; r < dim; ++r)
      for (const auto& [c, v] : m.row(r)) cols[c].emplace_back(r, v);
    // (XM - MX)_{rc} = sum_k X_{rk} M_{kc} - sum_k M_{rk} X_{kc}.
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = 0; c < dim; ++c) {
        SparseVector eq;
        for (const auto& [k, v] : cols[c]) eq.emplace_back(r * dim + k, v);
        SparseVector rhs;
        for (const auto& [k, v] : m.row(r)) rhs.emplace_back(k * dim + c, v);
        eq = axpy(eq, Scalar(-1), rhs);
        if (!eq.empty()) ef.insert(std::move(eq));
      }
    }
  }
  auto kernel = ef.kernel();
  auto rows = rref(kernel, vars);
  std::vector<ExactMatrix> basis;
  basis.reserve(rows.size());
  for (const auto& r : rows) basis.push_back(ExactMatrix::unflatten(r, dim));

  for (const auto& b : basis)
    for (const auto& m : mats)
      if (!(b * m == m * b)) throw std::logic_error("commutant: solution fails to commute");
  EchelonForm span(vars);
  for (const auto& r : rows) span.insert(r);
  auto inside = [&](const ExactMatrix& x) { return span.reduce(x.flatten()).empty(); };
  if (!inside(ExactMatrix::identity(dim))) throw std::logic_error("commutant: not unital");
  for (const auto& a : basis) {
    if (!inside(a.adjoint())) throw std::logic_error("commutant: not closed under adjoints");
    for (const auto& b : basis)
      if (!inside(a * b)) throw std::logic_error("commutant: not closed under products");
  }
  return basis;
}

// ---------------------------------------------------------------------------
// Graded commutants

std::vector<Monomial> commutant_candidates(int n, int d, std::size_t L) {
  const auto ad = static_cast<std::size_t>(d < 0 ? -d : d);
  const std::size_t lmu = d >= 0 ? L + ad : L;
  const std::size_t lnu = d >= 0 ? L : L + ad;
  const auto mus = Word::all(n, lmu);
  const auto nus = Word::all(n, lnu);
  std::vector<Monomial> out;
  out.reserve(mus.size() * nus.size());
  for (const auto& mu : mus)
    for (const auto& nu : nus) out.push_back(Monomial{mu, nu});
  return out;
}

namespace {

// Rows of the linear map c -> [c, g] over the candidate monomials.
std::vector<SparseVector> commutator_rows(const std::vector<Monomial>& cands, const Element& g, int n) {
  std::vector<Element> comms;
  comms.reserve(cands.size());
  for (const auto& m : cands) {
    Element c = Element::monomial(n, m.mu, m.nu);
    comms.push_back(c * g - g * c);
  }
  return refinement_rows(comms);
}

Element from_coordinates(const SparseVector& v, const std::vector<Monomial>& cands, int n) {
  std::vector<Term> terms;
  terms.reserve(v.size());
  for (const auto& [j, c] : v) terms.push_back(Term{cands[j], c});
  return Element::from_terms(n, std::move(terms));
}

// A graded piece in candidate coordinates, rows in reduced echelon form.
struct Piece {
  int degree = 0;
  std::vector<Monomial> cands;
  std::vector<SparseVector> coords;

  std::vector<Element> elements(int n) const {
    std::vector<Element> out;
    out.reserve(coords.size());
    for (const auto& c : coords) out.push_back(from_coordinates(c, cands, n));
    return out;
  }
};

// Solves the stacked commutator systems from scratch, one job per generator.
Piece solve_piece(const std::vector<Element>& gens, int n, int d, std::size_t L) {
  if (static_cast<std::size_t>(d < 0 ? -d : d) > L)
    throw BudgetError("degree " + std::to_string(d) + " exceeds the length budget L = " + std::to_string(L));
  Piece p;
  p.degree = d;
  p.cands = commutant_candidates(n, d, L);
  std::vector<std::future<std::vector<SparseVector>>> jobs;
  jobs.reserve(gens.size());
  for (const auto& g : gens)
    jobs.push_back(std::async(std::launch::async, [&p, &g, n] { return commutator_rows(p.cands, g, n); }));
  EchelonForm ef(p.cands.size());
  for (auto& j : jobs)
    for (auto& row : j.get()) ef.insert(std::move(row));
  p.coords = rref(ef.kernel(), p.cands.size());
  return p;
}

// The subspace of a piece that also commutes with `extra`.
Piece restrict_piece(const Piece& p, const std::vector<Element>& extra, int n) {
  Piece out;
  out.degree = p.degree;
  out.cands = p.cands;
  if (p.coords.empty()) return out;
  const auto elems = p.elements(n);
  EchelonForm ef(elems.size());
  for (const auto& g : extra) {
    std::vector<Element> comms;
    comms.reserve(elems.size());
    for (const auto& b : elems) comms.push_back(commutator(b, g));
    for (auto& row : refinement_rows(comms)) ef.insert(std::move(row));
  }
  std::vector<SparseVector> rows;
  for (const auto& k : ef.kernel()) {
    SparseVector v;
    for (const auto& [j, c] : k) v = axpy(v, c, p.coords[j]);
    rows.push_back(std::move(v));
  }
  out.coords = rref(rows, p.cands.size());
  return out;
}

void verify_commuting(const std::vector<Element>& basis, const std::vector<Element>& gens) {
  for (const auto& b : basis)
    for (const auto& g : gens)
      if (!commutator(b, g).is_zero()) throw std::logic_error("graded commutant: basis element fails to commute");
}

}  // namespace

GradedCommutant graded_commutant(const std::vector<Element>& generators, int n, int d, std::size_t L) {
  const Piece p = solve_piece(generators, n, d, L);
  GradedCommutant out;
  out.degree = d;
  out.L = L;
  out.candidates = p.cands.size();
  out.basis = p.elements(n);
  verify_commuting(out.basis, generators);
  return out;
}

GradedCommutant graded_relative_commutant(const Endomorphism& e, int d, std::size_t K, std::size_t L) {
  auto out = graded_commutant(lambda_core_generators(e, K), e.n(), d, L);
  out.K = K;
  return out;
}

std::vector<Element> RelativeCommutantApprox::degree_zero() const {
  std::vector<Element> out;
  for (std::size_t j = 0; j < basis.size(); ++j)
    if (degrees[j] == 0) out.push_back(basis[j]);
  return out;
}

namespace {

constexpr std::size_t kMaxIssues = 8;

void note(RelativeCommutantApprox& rc, std::string issue) {
  if (rc.closure_issues.size() < kMaxIssues) rc.closure_issues.push_back(std::move(issue));
}

std::size_t lex_index(const Word& w, int n) {
  std::size_t idx = 0;
  for (std::size_t j = 0; j < w.size(); ++j) idx = idx * static_cast<std::size_t>(n) + static_cast<std::size_t>(w[j] - 1);
  return idx;
}

// Coordinates of x (pure degree d) over commutant_candidates(n, d, L), or
// nullopt when some canonical word is too long for the candidate level.
std::optional<SparseVector> candidate_coordinates(const Element& x, int d, std::size_t L) {
  const int n = x.n();
  const auto ad = static_cast<std::size_t>(d < 0 ? -d : d);
  const std::size_t lnu = d >= 0 ? L : L + ad;
  std::size_t nu_count = 1;
  for (std::size_t j = 0; j < lnu; ++j) nu_count *= static_cast<std::size_t>(n);
  SparseVector v;
  for (const auto& t : x.terms()) {
    if (t.m.degree() != d || t.m.nu.size() > lnu) return std::nullopt;
    const std::size_t extra = lnu - t.m.nu.size();
    for (const auto& rho : Word::all(n, extra))
      v.emplace_back(lex_index(t.m.mu + rho, n) * nu_count + lex_index(t.m.nu + rho, n), t.c);
  }
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

std::map<int, std::size_t> dims_of(const std::vector<Piece>& pieces) {
  std::map<int, std::size_t> out;
  for (const auto& p : pieces) out[p.degree] = p.coords.size();
  return out;
}

}  // namespace

RelativeCommutantApprox relative_commutant(const Endomorphism& e, std::size_t K, std::size_t L, int D, std::size_t max_raise) {
  if (K == 0) throw std::invalid_argument("relative_commutant: K must be at least 1");
  if (D < 0) throw std::invalid_argument("relative_commutant: negative degree window");
  if (static_cast<std::size_t>(D) > L) throw BudgetError("degree window D exceeds the length budget L");
  const int n = e.n();
  RelativeCommutantApprox rc;
  rc.n = n;
  rc.K = K;
  rc.L = L;
  rc.D = D;
  const auto all_gens = lambda_core_generators(e, K + max_raise + 1);
  const auto positions = core_generators(n, K + max_raise + 1);
  auto at_position = [&](std::size_t m) {
    std::vector<Element> out;
    for (std::size_t j = 0; j < all_gens.size(); ++j)
      if (positions[j].position == m) out.push_back(all_gens[j]);
    return out;
  };
  std::vector<Element> gens;
  for (std::size_t j = 0; j < all_gens.size(); ++j)
    if (positions[j].position < K) gens.push_back(all_gens[j]);

  std::vector<Piece> pieces;
  for (int d = -D; d <= D; ++d) pieces.push_back(solve_piece(gens, n, d, L));

  // Raise the generator level while the space still shrinks.
  std::size_t k = K;
  while (true) {
    const auto extra = at_position(k);
    std::vector<Piece> next;
    for (const auto& p : pieces) next.push_back(restrict_piece(p, extra, n));
    rc.graded_dims = dims_of(pieces);
    rc.graded_dims_next = dims_of(next);
    if (rc.graded_dims == rc.graded_dims_next) {
      rc.stabilized = true;
      break;
    }
    if (k == K + max_raise) break;
    pieces = std::move(next);
    for (const auto& g : extra) gens.push_back(g);
    ++k;
  }
  rc.K_used = k;

  std::map<int, EchelonForm> spans;
  for (const auto& p : pieces) {
    auto elems = p.elements(n);
    verify_commuting(elems, gens);
    for (const auto& b : elems) {
      rc.basis.push_back(b);
      rc.degrees.push_back(p.degree);
    }
    EchelonForm ef(p.cands.size());
    for (const auto& c : p.coords) ef.insert(c);
    spans.emplace(p.degree, std::move(ef));
  }
  auto inside = [&](const Element& x, int d) {
    auto v = candidate_coordinates(x, d, L);
    return v && spans.at(d).reduce(std::move(*v)).empty();
  };

  rc.adjoint_closed = true;
  for (std::size_t j = 0; j < rc.basis.size(); ++j) {
    if (!inside(adjoint(rc.basis[j]), -rc.degrees[j])) {
      rc.adjoint_closed = false;
      note(rc, "adjoint of basis element " + std::to_string(j) + " is outside the computed space");
    }
  }
  rc.product_closed = true;
  for (std::size_t a = 0; a < rc.basis.size(); ++a) {
    for (std::size_t b = 0; b < rc.basis.size(); ++b) {
      Element p = rc.basis[a] * rc.basis[b];
      if (p.is_zero()) continue;
      const int d = rc.degrees[a] + rc.degrees[b];
      const std::string where = "product of basis elements " + std::to_string(a) + " and " + std::to_string(b);
      if (d < -D || d > D) {
        rc.product_closed = false;
        note(rc, where + " has degree " + std::to_string(d) + " outside the window");
      } else if (!inside(p, d)) {
        rc.product_closed = false;
        note(rc, where + " is outside the computed space");
      }
    }
  }
  return rc;
}

}  // namespace cuntz
