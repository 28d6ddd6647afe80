// Copyright 2026 The cuntzalg Authors
// SPDX-License-Identifier: Apache-2.0

#include "cuntz/element.hpp"

#include <algorithm>
#include <utility>

namespace cuntz {

// ---------------------------------------------------------------------------
// Word / Monomial

Word::Word(std::string digits) : d_(std::move(digits)) {
  for (char ch : d_)
    if (ch < '1' || ch > '9') throw std::invalid_argument("word letters must be digits 1..9: '" + d_ + "'");
}

Word::Word(std::initializer_list<int> letters) {
  for (int l : letters) {
    if (l < 1 || l > kMaxAlphabet) throw std::invalid_argument("word letter out of range");
    d_.push_back(static_cast<char>('0' + l));
  }
}

int Word::max_letter() const {
  int m = 0;
  for (char ch : d_) m = std::max(m, ch - '0');
  return m;
}

std::vector<Word> Word::all(int n, std::size_t length) {
  std::vector<Word> out{Word{}};
  for (std::size_t k = 0; k < length; ++k) {
    std::vector<Word> next;
    next.reserve(out.size() * static_cast<std::size_t>(n));
    for (const auto& w : out)
      for (int i = 1; i <= n; ++i) next.push_back(Word(w).append(i));
    out = std::move(next);
  }
  return out;
}

std::optional<Monomial> multiply(const Monomial& a, const Monomial& b) {
  // S_nu^* S_alpha = S_rho if alpha = nu rho, S_rho^* if nu = alpha rho, else 0.
  if (b.mu.starts_with(a.nu)) return Monomial{a.mu + b.mu.substr(a.nu.size()), b.nu};
  if (a.nu.starts_with(b.mu)) return Monomial{a.mu, b.nu + a.nu.substr(b.mu.size())};
  return std::nullopt;
}

AlphabetMismatch::AlphabetMismatch(int a, int b)
    : std::invalid_argument("alphabet size mismatch: O_" + std::to_string(a) + " vs O_" + std::to_string(b)) {}

RootPath refinement_root(const Monomial& m) {
  const auto& mu = m.mu.digits();
  const auto& nu = m.nu.digits();
  std::size_t s = 0;
  while (s < mu.size() && s < nu.size() && mu[mu.size() - 1 - s] == nu[nu.size() - 1 - s]) ++s;
  return {Monomial{m.mu.substr(0, mu.size() - s), m.nu.substr(0, nu.size() - s)}, mu.substr(mu.size() - s)};
}

// ---------------------------------------------------------------------------
// Canonical form
//
// S_mu S_nu^* and S_{mu rho} S_{nu rho}^* overlap; stripping the longest
// common suffix of (mu, nu) gives the root of the refinement tree a monomial
// lives in. Monomials in different trees are linearly independent. Inside a
// tree the element is a locally constant function on infinite paths, and the
// canonical form lists its maximal nonzero constant cylinders.

namespace {

struct Item {
  Monomial root;
  std::string path;
  Scalar c;
};

struct Outcome {
  bool uniform;
  Scalar value;
};

class Canonicalizer {
 public:
  Canonicalizer(int n, std::vector<Term>& out) : n_(n), out_(out) {}

  void run(std::vector<Item>& items) {
    std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
      if (a.root.mu != b.root.mu) return a.root.mu.digits() < b.root.mu.digits();
      if (a.root.nu != b.root.nu) return a.root.nu.digits() < b.root.nu.digits();
      return a.path < b.path;
    });
    std::size_t b = 0;
    while (b < items.size()) {
      std::size_t e = b + 1;
      while (e < items.size() && items[e].root == items[b].root) ++e;
      root_ = &items[b].root;
      items_ = &items;
      std::string prefix;
      Outcome o = solve(b, e, prefix, Scalar{});
      if (o.uniform && !o.value.is_zero()) emit(prefix, o.value);
      b = e;
    }
  }

 private:
  void emit(const std::string& path, const Scalar& v) {
    Word p(path);
    out_.push_back(Term{Monomial{root_->mu + p, root_->nu + p}, v});
  }

  Outcome solve(std::size_t b, std::size_t e, std::string& prefix, Scalar acc) {
    const auto& items = *items_;
    const std::size_t depth = prefix.size();
    while (b < e && items[b].path.size() == depth) acc += items[b++].c;
    if (b == e) return {true, acc};

    Outcome child[kMaxAlphabet + 1];
    bool all_uniform = true;
    std::size_t out_mark = out_.size();
    std::size_t i = b;
    for (int letter = 1; letter <= n_; ++letter) {
      const char ch = static_cast<char>('0' + letter);
      std::size_t j = i;
      while (j < e && items[j].path[depth] == ch) ++j;
      if (j == i) {
        child[letter] = {true, acc};
      } else {
        prefix.push_back(ch);
        child[letter] = solve(i, j, prefix, acc);
        prefix.pop_back();
      }
      all_uniform = all_uniform && child[letter].uniform;
      i = j;
    }
    if (all_uniform) {
      bool equal = true;
      for (int letter = 2; letter <= n_; ++letter) equal = equal && child[letter].value == child[1].value;
      if (equal) {
        out_.resize(out_mark);
        return {true, child[1].value};
      }
    }
    for (int letter = 1; letter <= n_; ++letter) {
      if (child[letter].uniform && !child[letter].value.is_zero()) {
        prefix.push_back(static_cast<char>('0' + letter));
        emit(prefix, child[letter].value);
        prefix.pop_back();
      }
    }
    return {false, Scalar{}};
  }

  int n_;
  std::vector<Term>& out_;
  const Monomial* root_ = nullptr;
  const std::vector<Item>* items_ = nullptr;
};

std::vector<Term> canonicalize(int n, std::vector<Term> raw) {
  std::vector<Item> items;
  items.reserve(raw.size());
  for (auto& t : raw) {
    if (t.c.is_zero()) continue;
    auto rp = refinement_root(t.m);
    items.push_back(Item{std::move(rp.root), std::move(rp.path), t.c});
  }
  std::vector<Term> out;
  out.reserve(items.size());
  Canonicalizer(n, out).run(items);
  std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return a.m < b.m; });
  return out;
}

void check_n(int n) {
  if (n < 2 || n > kMaxAlphabet) throw std::invalid_argument("alphabet size must be in [2, 9]");
}

void check_word(int n, const Word& w) {
  if (w.max_letter() > n) throw std::invalid_argument("letter exceeds alphabet size in word " + w.digits());
}

}  // namespace

// ---------------------------------------------------------------------------
// Element

Element::Element(int n) : n_(n) { check_n(n); }

Element Element::scalar(int n, const Scalar& c) { return monomial(n, Word{}, Word{}, c); }

Element Element::monomial(int n, const Word& mu, const Word& nu, const Scalar& c) {
  Element e(n);
  check_word(n, mu);
  check_word(n, nu);
  if (!c.is_zero()) {
    // A single monomial is canonical unless its suffixes allow a merge, which
    // a lone term never does.
    e.terms_.push_back(Term{Monomial{mu, nu}, c});
  }
  return e;
}

Element Element::from_terms(int n, std::vector<Term> terms) {
  Element e(n);
  for (const auto& t : terms) {
    check_word(n, t.m.mu);
    check_word(n, t.m.nu);
  }
  e.terms_ = canonicalize(n, std::move(terms));
  return e;
}

std::size_t Element::max_length() const {
  std::size_t m = 0;
  for (const auto& t : terms_) m = std::max(m, t.m.length());
  return m;
}

std::set<int> Element::degrees() const {
  std::set<int> d;
  for (const auto& t : terms_) d.insert(t.m.degree());
  return d;
}

Element& Element::operator+=(const Element& o) {
  if (o.n_ != n_) throw AlphabetMismatch(n_, o.n_);
  if (o.terms_.empty()) return *this;
  std::vector<Term> raw = terms_;
  raw.insert(raw.end(), o.terms_.begin(), o.terms_.end());
  terms_ = canonicalize(n_, std::move(raw));
  return *this;
}

Element& Element::operator-=(const Element& o) { return *this += -o; }

Element Element::operator-() const {
  Element r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

Element operator*(const Element& a, const Element& b) {
  if (a.n_ != b.n_) throw AlphabetMismatch(a.n_, b.n_);
  std::vector<Term> raw;
  raw.reserve(a.terms_.size() + b.terms_.size());
  if (a.terms_.size() * b.terms_.size() <= 64) {
    for (const auto& ta : a.terms_)
      for (const auto& tb : b.terms_)
        if (auto m = multiply(ta.m, tb.m)) raw.push_back(Term{std::move(*m), ta.c * tb.c});
  } else {
    // Only right factors whose mu is a prefix or an extension of nu survive;
    // index them by mu.
    std::vector<const Term*> by_mu;
    by_mu.reserve(b.terms_.size());
    for (const auto& tb : b.terms_) by_mu.push_back(&tb);
    std::sort(by_mu.begin(), by_mu.end(), [](const Term* x, const Term* y) { return x->m.mu.digits() < y->m.mu.digits(); });
    auto lower = [&](const std::string& key) {
      return std::lower_bound(by_mu.begin(), by_mu.end(), key,
                              [](const Term* x, const std::string& k) { return x->m.mu.digits() < k; });
    };
    for (const auto& ta : a.terms_) {
      const std::string& nu = ta.m.nu.digits();
      for (std::size_t len = 0; len < nu.size(); ++len) {
        std::string key = nu.substr(0, len);
        for (auto it = lower(key); it != by_mu.end() && (*it)->m.mu.digits() == key; ++it)
          raw.push_back(Term{Monomial{ta.m.mu, (*it)->m.nu + ta.m.nu.substr(len)}, ta.c * (*it)->c});
      }
      for (auto it = lower(nu); it != by_mu.end() && (*it)->m.mu.starts_with(ta.m.nu); ++it)
        raw.push_back(Term{Monomial{ta.m.mu + (*it)->m.mu.substr(nu.size()), (*it)->m.nu}, ta.c * (*it)->c});
    }
  }
  Element r(a.n_);
  r.terms_ = canonicalize(a.n_, std::move(raw));
  return r;
}

Element operator*(const Scalar& s, const Element& a) {
  Element r(a.n_);
  if (s.is_zero()) return r;
  r.terms_ = a.terms_;
  for (auto& t : r.terms_) t.c *= s;
  return r;
}

bool operator==(const Element& a, const Element& b) {
  if (a.n_ != b.n_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].m == b.terms_[i].m) || !(a.terms_[i].c == b.terms_[i].c)) return false;
  return true;
}

namespace {

std::string atom(const Monomial& m) {
  if (m.mu.empty() && m.nu.empty()) return "I";
  if (m.mu == m.nu) return "P[" + m.mu.digits() + "]";
  if (m.nu.empty()) return "S[" + m.mu.digits() + "]";
  return "S[" + m.mu.digits() + "]S[" + m.nu.digits() + "]*";
}

}  // namespace

std::string Element::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    Scalar c = t.c;
    if (!first) {
      if (c.is_real() && c.re().sign() < 0) {
        s += " - ";
        c = -c;
      } else {
        s += " + ";
      }
    }
    if (!c.is_one()) s += c.to_string() + "*";
    s += atom(t.m);
    first = false;
  }
  return s;
}

// ---------------------------------------------------------------------------
// Free operations

Element adjoint(const Element& a) {
  std::vector<Term> raw;
  raw.reserve(a.size());
  for (const auto& t : a.terms()) raw.push_back(Term{Monomial{t.m.nu, t.m.mu}, t.c.conj()});
  // Swapping mu and nu maps a canonical form to a canonical form; the only
  // work left is re-sorting.
  std::sort(raw.begin(), raw.end(), [](const Term& x, const Term& y) { return x.m < y.m; });
  return Element::from_terms(a.n(), std::move(raw));
}

Element commutator(const Element& a, const Element& b) { return a * b - b * a; }

Element graded_part(const Element& a, int d) {
  std::vector<Term> raw;
  for (const auto& t : a.terms())
    if (t.m.degree() == d) raw.push_back(t);
  return Element::from_terms(a.n(), std::move(raw));
}

Scalar trace(const Element& a, TraceMode mode) {
  Scalar sum;
  for (const auto& t : a.terms()) {
    if (t.m.degree() != 0) {
      if (mode == TraceMode::kStrict) throw NotInCore("trace of an element outside F_n: " + a.to_string());
      continue;
    }
    if (t.m.mu != t.m.nu) continue;
    Rational w(1);
    for (std::size_t k = 0; k < t.m.mu.size(); ++k) w /= Rational(a.n());
    sum += t.c * Scalar(w);
  }
  return sum;
}

std::vector<Term> level_to(const Element& a, std::size_t k) {
  std::vector<Term> out;
  for (const auto& t : a.terms()) {
    if (t.m.degree() != 0) throw NotInCore("level_to: element outside F_n");
    if (t.m.mu.size() > k)
      throw std::invalid_argument("level_to: monomial of length " + std::to_string(t.m.mu.size()) +
                                  " exceeds level " + std::to_string(k));
    for (const auto& rho : Word::all(a.n(), k - t.m.mu.size()))
      out.push_back(Term{Monomial{t.m.mu + rho, t.m.nu + rho}, t.c});
  }
  std::sort(out.begin(), out.end(), [](const Term& x, const Term& y) { return x.m < y.m; });
  return out;
}

Membership membership(const Element& a) {
  Membership m;
  auto deg = a.degrees();
  m.in_core = deg.empty() || (deg.size() == 1 && *deg.begin() == 0);
  m.in_diagonal = std::all_of(a.terms().begin(), a.terms().end(), [](const Term& t) { return t.m.diagonal(); });
  if (m.in_core) m.min_level = a.max_length();
  if (deg.size() == 1) m.pure_degree = *deg.begin();
  return m;
}

bool is_unitary(const Element& u) {
  Element one = Element::identity(u.n());
  Element us = adjoint(u);
  return u * us == one && us * u == one;
}

bool is_projection(const Element& p) { return adjoint(p) == p && p * p == p; }

}  // namespace cuntz
