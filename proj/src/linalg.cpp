// Copyright 2026 The cuntzalg Authors
// SPDX-License-Identifier: Apache-2.0

#include "cuntz/linalg.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace cuntz {

SparseVector axpy(const SparseVector& a, const Scalar& s, const SparseVector& b) {
  SparseVector out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, s * b[j].second);
      ++j;
    } else {
      Scalar v = a[i].second + s * b[j].second;
      if (!v.is_zero()) out.emplace_back(a[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// EchelonForm

SparseVector EchelonForm::reduce(SparseVector row) const {
  std::size_t start = 0;
  // Entries left of `start` have no pivot and stay put.
  SparseVector kept;
  while (start < row.size()) {
    const auto lead = row[start].first;
    if (!pivot_[lead]) {
      kept.push_back(row[start]);
      ++start;
      continue;
    }
    SparseVector tail(row.begin() + static_cast<std::ptrdiff_t>(start), row.end());
    row = axpy(tail, -tail.front().second, *pivot_[lead]);
    start = 0;
  }
  return kept;
}

bool EchelonForm::insert(SparseVector row) {
  while (!row.empty()) {
    const auto lead = row.front().first;
    if (pivot_[lead]) {
      row = axpy(row, -row.front().second, *pivot_[lead]);
      continue;
    }
    const Scalar inv = Scalar(1) / row.front().second;
    for (auto& [c, v] : row) v *= inv;
    pivot_[lead] = std::move(row);
    ++rank_;
    return true;
  }
  return false;
}

std::vector<SparseVector> EchelonForm::kernel() const {
  std::vector<SparseVector> basis;
  const std::size_t n = pivot_.size();
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < n; ++c)
    if (pivot_[c]) pivots.push_back(c);
  std::vector<Scalar> x(n);
  for (std::size_t f = 0; f < n; ++f) {
    if (pivot_[f]) continue;
    std::fill(x.begin(), x.end(), Scalar{});
    x[f] = Scalar(1);
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
      if (*it > f) continue;  // columns right of f are zero until a pivot left of f fills them
      Scalar s;
      for (const auto& [c, v] : *pivot_[*it])
        if (c != *it && !x[c].is_zero()) s -= v * x[c];
      x[*it] = s;
    }
    SparseVector v;
    for (std::size_t c = 0; c <= f; ++c)
      if (!x[c].is_zero()) v.emplace_back(c, x[c]);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<SparseVector> EchelonForm::reduced_rows() const {
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < pivot_.size(); ++c)
    if (pivot_[c]) pivots.push_back(c);
  std::vector<SparseVector> rows(pivots.size());
  // Back-substitute from the last pivot so every stored row is already reduced.
  std::unordered_map<std::size_t, std::size_t> slot;
  for (std::size_t k = pivots.size(); k-- > 0;) {
    SparseVector r = *pivot_[pivots[k]];
    SparseVector out{r.front()};
    SparseVector rest(r.begin() + 1, r.end());
    while (!rest.empty()) {
      auto it = slot.find(rest.front().first);
      if (it == slot.end()) {
        out.push_back(rest.front());
        rest.erase(rest.begin());
        continue;
      }
      rest = axpy(rest, -rest.front().second, rows[it->second]);
    }
    rows[k] = std::move(out);
    slot[pivots[k]] = k;
  }
  return rows;
}

std::vector<SparseVector> rref(std::span<const SparseVector> rows, std::size_t cols) {
  EchelonForm ef(cols);
  for (const auto& r : rows) ef.insert(r);
  return ef.reduced_rows();
}

// ---------------------------------------------------------------------------
// Common refinement

namespace {

struct RootGroup {
  std::vector<std::string> paths;  // unique after build
  std::vector<std::pair<std::size_t, std::size_t>> range;
};

class CellBuilder {
 public:
  CellBuilder(int n, std::size_t& next_cell) : n_(n), next_(next_cell) {}

  void build(RootGroup& g) {
    g.range.assign(g.paths.size(), {0, 0});
    group_ = &g;
    walk(0, g.paths.size(), 0);
  }

 private:
  // paths[b..e) share a prefix of length depth.
  void walk(std::size_t b, std::size_t e, std::size_t depth) {
    auto& paths = group_->paths;
    std::optional<std::size_t> self;
    if (b < e && paths[b].size() == depth) self = b++;
    const std::size_t lo = next_;
    if (b == e) {
      ++next_;
    } else {
      std::size_t i = b;
      for (int letter = 1; letter <= n_; ++letter) {
        const char ch = static_cast<char>('0' + letter);
        std::size_t j = i;
        while (j < e && paths[j][depth] == ch) ++j;
        if (j == i)
          ++next_;
        else
          walk(i, j, depth + 1);
        i = j;
      }
    }
    if (self) group_->range[*self] = {lo, next_};
  }

  int n_;
  std::size_t& next_;
  RootGroup* group_ = nullptr;
};

}  // namespace

std::vector<SparseVector> refinement_rows(std::span<const Element> elems) {
  if (elems.empty()) return {};
  const int n = elems.front().n();
  std::unordered_map<std::string, RootGroup> groups;
  struct Raw {
    RootGroup* group;
    std::string path;
    std::size_t elem;
    Scalar c;
  };
  std::vector<Raw> raws;
  for (std::size_t k = 0; k < elems.size(); ++k) {
    if (elems[k].n() != n) throw AlphabetMismatch(n, elems[k].n());
    for (const auto& t : elems[k].terms()) {
      auto rp = refinement_root(t.m);
      std::string key = rp.root.mu.digits() + "|" + rp.root.nu.digits();
      auto& g = groups[key];
      raws.push_back(Raw{&g, std::move(rp.path), k, t.c});
    }
  }
  for (auto& r : raws) r.group->paths.push_back(r.path);
  // Deterministic cell numbering: visit roots in key order.
  std::vector<std::pair<std::string, RootGroup*>> order;
  order.reserve(groups.size());
  for (auto& [key, g] : groups) order.emplace_back(key, &g);
  std::sort(order.begin(), order.end());
  std::size_t cells = 0;
  for (auto& [key, g] : order) {
    std::sort(g->paths.begin(), g->paths.end());
    g->paths.erase(std::unique(g->paths.begin(), g->paths.end()), g->paths.end());
    CellBuilder(n, cells).build(*g);
  }
  struct Triplet {
    std::size_t row, col;
    Scalar v;
  };
  std::vector<Triplet> trip;
  for (const auto& r : raws) {
    auto& paths = r.group->paths;
    auto idx = static_cast<std::size_t>(std::lower_bound(paths.begin(), paths.end(), r.path) - paths.begin());
    auto [lo, hi] = r.group->range[idx];
    for (std::size_t cell = lo; cell < hi; ++cell) trip.push_back(Triplet{cell, r.elem, r.c});
  }
  std::sort(trip.begin(), trip.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  std::vector<SparseVector> rows;
  std::size_t i = 0;
  while (i < trip.size()) {
    SparseVector row;
    const std::size_t r = trip[i].row;
    while (i < trip.size() && trip[i].row == r) {
      const std::size_t c = trip[i].col;
      Scalar v;
      while (i < trip.size() && trip[i].row == r && trip[i].col == c) v += trip[i++].v;
      if (!v.is_zero()) row.emplace_back(c, v);
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<SparseVector> linear_relations(std::span<const Element> elems) {
  EchelonForm ef(elems.size());
  for (auto& row : refinement_rows(elems)) ef.insert(std::move(row));
  return ef.kernel();
}

std::optional<std::vector<Scalar>> express_in_span(std::span<const Element> basis, const Element& target) {
  std::vector<Element> all(basis.begin(), basis.end());
  all.push_back(target);
  const std::size_t t = basis.size();
  for (const auto& rel : linear_relations(all)) {
    // Kernel vectors are indexed by their free column; the one freed at the
    // target column carries coefficient 1 there.
    if (rel.empty() || rel.back().first != t) continue;
    std::vector<Scalar> coeffs(t);
    for (const auto& [c, v] : rel)
      if (c < t) coeffs[c] = -v;
    return coeffs;
  }
  return std::nullopt;
}

std::vector<std::size_t> independent_subset(std::span<const Element> elems) {
  // Transpose the refinement coordinates so each element is one row, then keep
  // the rows that raise the rank.
  const auto cells = refinement_rows(elems);
  std::vector<SparseVector> cols(elems.size());
  for (std::size_t r = 0; r < cells.size(); ++r)
    for (const auto& [k, v] : cells[r]) cols[k].emplace_back(r, v);
  EchelonForm ef(cells.size());
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < elems.size(); ++k)
    if (ef.insert(std::move(cols[k]))) keep.push_back(k);
  return keep;
}

Element combine(std::span<const Element> elems, std::span<const Scalar> coeffs, int n) {
  std::vector<Term> raw;
  for (std::size_t k = 0; k < elems.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    for (const auto& t : elems[k].terms()) raw.push_back(Term{t.m, coeffs[k] * t.c});
  }
  return Element::from_terms(n, std::move(raw));
}

// ---------------------------------------------------------------------------
// Dense

std::vector<std::vector<Scalar>> dense_kernel(const DenseMatrix& rows, std::size_t cols) {
  EchelonForm ef(cols);
  for (const auto& r : rows) {
    SparseVector s;
    for (std::size_t c = 0; c < cols; ++c)
      if (!r[c].is_zero()) s.emplace_back(c, r[c]);
    ef.insert(std::move(s));
  }
  std::vector<std::vector<Scalar>> out;
  for (const auto& k : ef.kernel()) {
    std::vector<Scalar> v(cols);
    for (const auto& [c, x] : k) v[c] = x;
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<std::vector<Scalar>> dense_solve(const DenseMatrix& a, const std::vector<Scalar>& b) {
  const std::size_t cols = a.empty() ? 0 : a.front().size();
  DenseMatrix aug = a;
  for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(-b[r]);
  for (const auto& k : dense_kernel(aug, cols + 1)) {
    if (k[cols].is_zero()) continue;
    std::vector<Scalar> x(cols);
    for (std::size_t c = 0; c < cols; ++c) x[c] = k[c] / k[cols];
    return x;
  }
  return std::nullopt;
}

}  // namespace cuntz
