// Copyright 2026 The cuntzalg Authors
// SPDX-License-Identifier: Apache-2.0

#include "cuntz/endo.hpp"

#include <algorithm>
#include <future>
#include <mutex>
#include <set>
#include <sstream>

namespace cuntz {

Element shift_power(const Element& x, std::size_t k) {
  if (k == 0) return x;
  std::vector<Term> raw;
  const auto prefixes = Word::all(x.n(), k);
  raw.reserve(prefixes.size() * x.size());
  for (const auto& rho : prefixes)
    for (const auto& t : x.terms()) raw.push_back(Term{Monomial{rho + t.m.mu, rho + t.m.nu}, t.c});
  return Element::from_terms(x.n(), std::move(raw));
}

Element shift(const Element& x) { return shift_power(x, 1); }

Element ad_shift(const Element& g, const Element& x) { return g * shift(x) * adjoint(g); }

// ---------------------------------------------------------------------------
// Endomorphism

Endomorphism::Endomorphism(Element u) : u_(std::move(u)), cache_(std::make_shared<Cache>()) {
  if (!is_unitary(u_)) throw NotUnitary("not a unitary: " + u_.to_string());
  cache_->powers.push_back(Element::identity(u_.n()));
  cache_->powers.push_back(u_);
}

Element Endomorphism::u_k(std::size_t k) const {
  {
    std::shared_lock lock(cache_->mutex);
    if (k < cache_->powers.size()) return cache_->powers[k];
  }
  std::unique_lock lock(cache_->mutex);
  auto& p = cache_->powers;
  while (p.size() <= k) {
    const std::size_t m = p.size() - 1;  // u_{m+1} = u_m phi^m(u)
    p.push_back(p[m] * shift_power(u_, m));
  }
  return p[k];
}

Element Endomorphism::apply(const Element& x) const {
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Term>> blocks;
  for (const auto& t : x.terms()) blocks[{t.m.mu.size(), t.m.nu.size()}].push_back(t);
  Element out(n());
  for (auto& [lengths, terms] : blocks) {
    Element block = Element::from_terms(n(), std::move(terms));
    out += u_k(lengths.first) * block * adjoint(u_k(lengths.second));
  }
  return out;
}

Element Endomorphism::alpha_power(const Element& x, std::size_t k) const {
  Element uk = u_k(k);
  return uk * shift_power(x, k) * adjoint(uk);
}

Element twisted_power(const Element& x, const Element& v, std::size_t k) {
  if (k == 0) throw std::invalid_argument("twisted_power: k must be positive");
  if (!is_unitary(v)) throw NotUnitary("twisted_power: v is not unitary");
  Element result = x;
  Element term = x;
  for (std::size_t j = 1; j < k; ++j) {
    term = ad_shift(v, term);
    result = result * term;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Gauge cocycle and the UHF-invariance check

Element LaurentCocycle::at_one(int n) const {
  Element s(n);
  for (const auto& [d, c] : coeffs) s += c;
  return s;
}

std::string LaurentCocycle::to_string() const {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : coeffs) {
    if (!first) os << " + ";
    first = false;
    if (d == 0)
      os << "(" << c.to_string() << ")";
    else
      os << "z^" << d << "*(" << c.to_string() << ")";
  }
  return os.str();
}

LaurentCocycle gauge_cocycle(const Endomorphism& e) {
  LaurentCocycle c;
  const Element& u = e.unitary();
  for (int d : u.degrees()) {
    Element coeff = u * adjoint(graded_part(u, d));
    if (!coeff.is_zero()) c.coeffs.emplace(d, std::move(coeff));
  }
  return c;
}

std::vector<CoreGenerator> core_generators(int n, std::size_t K) {
  std::vector<CoreGenerator> gens;
  for (std::size_t m = 0; m < K; ++m) {
    for (int i = 1; i < n; ++i) {
      for (auto [a, b] : {std::pair{i, i + 1}, std::pair{i + 1, i}}) {
        Element unit = Element::monomial(n, Word{a}, Word{b});
        gens.push_back(CoreGenerator{m, a, b, shift_power(unit, m)});
      }
    }
  }
  return gens;
}

std::vector<Element> lambda_core_generators(const Endomorphism& e, std::size_t K) {
  const int n = e.n();
  const auto gens = core_generators(n, K);
  // lambda_u(phi^m(y)) = u_m phi^m(lambda_u(y)) u_m^*.
  std::map<std::pair<int, int>, Element> base;
  for (const auto& g : gens)
    if (g.position == 0) base.emplace(std::pair{g.i, g.j}, e.apply(g.element));
  for (std::size_t m = 0; m <= K; ++m) e.u_k(m);  // warm the memo before fanning out
  std::vector<std::future<Element>> jobs;
  jobs.reserve(gens.size());
  for (const auto& g : gens) {
    jobs.push_back(std::async(std::launch::async, [&e, &base, g] {
      Element um = e.u_k(g.position);
      return um * shift_power(base.at({g.i, g.j}), g.position) * adjoint(um);
    }));
  }
  std::vector<Element> out;
  out.reserve(jobs.size());
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

UhfInvarianceResult check_uhf_invariance(const Endomorphism& e, std::size_t K) {
  if (K == 0) throw std::invalid_argument("check_uhf_invariance: K must be at least 1");
  UhfInvarianceResult r;
  r.K = K;
  const auto cocycle = gauge_cocycle(e);
  const auto gens = core_generators(e.n(), K);
  const auto images = lambda_core_generators(e, K);
  for (const auto& [d, c] : cocycle.coeffs) {
    for (std::size_t g = 0; g < gens.size(); ++g) {
      Element comm = commutator(c, images[g]);
      if (!comm.is_zero()) {
        r.holds_up_to_K = false;
        r.witnesses.push_back(UhfInvarianceWitness{d, gens[g].position, gens[g].i, gens[g].j, std::move(comm)});
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Constructions

Endomorphism partition_form_unitary(const std::vector<PartitionPart>& parts) {
  if (parts.empty()) throw InvalidConstruction("partition_form_unitary: no parts");
  const int n = parts.front().q.n();
  Element total(n);
  Element u(n);
  for (std::size_t j = 0; j < parts.size(); ++j) {
    const auto& p = parts[j];
    if (!is_projection(p.q)) throw InvalidConstruction("part " + std::to_string(j) + ": q is not a projection");
    auto mem = membership(p.a);
    if (!mem.pure_degree || *mem.pure_degree != p.degree)
      throw InvalidConstruction("part " + std::to_string(j) + ": a is not of pure degree " + std::to_string(p.degree));
    if (!(p.a * adjoint(p.a) == p.q))
      throw InvalidConstruction("part " + std::to_string(j) + ": range projection of a differs from q");
    total += p.q;
    u += p.a;
  }
  if (!(total == Element::identity(n))) throw InvalidConstruction("projections do not sum to 1");
  if (!is_unitary(u)) throw InvalidConstruction("parts do not sum to a unitary");
  Endomorphism e(u);
  for (std::size_t j = 0; j < parts.size(); ++j) {
    Element image = e.alpha(parts[j].q);
    bool found = std::any_of(parts.begin(), parts.end(), [&](const PartitionPart& p) { return p.q == image; });
    if (!found) throw InvalidConstruction("Ad u o phi does not permute the projections (part " + std::to_string(j) + ")");
  }
  return e;
}

bool GeneratorImages::satisfies_cuntz_relations() const {
  if (images.size() != static_cast<std::size_t>(n())) return false;
  Element sum(n());
  for (std::size_t i = 0; i < images.size(); ++i) {
    for (std::size_t j = 0; j < images.size(); ++j) {
      Element expect = i == j ? unit : Element(n());
      if (!(adjoint(images[i]) * images[j] == expect)) return false;
    }
    sum += images[i] * adjoint(images[i]);
  }
  return sum == unit;
}

Element GeneratorImages::shift(const Element& x) const {
  Element out(n());
  for (const auto& t : images) out += t * x * adjoint(t);
  return out;
}

Element GeneratorImages::word(const Word& mu) const {
  Element w = unit;
  for (std::size_t k = 0; k < mu.size(); ++k) w = w * images.at(static_cast<std::size_t>(mu[k] - 1));
  return w;
}

Endomorphism endomorphism_from_images(const GeneratorImages& g) {
  if (!(g.unit == Element::identity(g.n())))
    throw InvalidConstruction("endomorphism_from_images: images must be unital");
  if (!g.satisfies_cuntz_relations()) throw InvalidConstruction("endomorphism_from_images: Cuntz relations fail");
  Element u(g.n());
  for (int i = 1; i <= g.n(); ++i)
    u += g.images[static_cast<std::size_t>(i - 1)] * adjoint(Element::isometry(g.n(), Word{i}));
  return Endomorphism(u);
}

GeneratorImages corner_generators(int n, const Word& mu) {
  GeneratorImages g;
  g.unit = Element::projection(n, mu);
  for (int i = 1; i <= n; ++i) g.images.push_back(Element::monomial(n, Word(mu).append(i), mu));
  return g;
}

}  // namespace cuntz
