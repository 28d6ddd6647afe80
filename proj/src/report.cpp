// Copyright 2026 The cuntzalg Authors
// SPDX-License-Identifier: Apache-2.0

#include "cuntz/report.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <sstream>

#include "cuntz/criterion.hpp"
#include "cuntz/endo.hpp"
#include "cuntz/parse.hpp"
#include "cuntz/structure.hpp"

namespace cuntz {

using nlohmann::json;

std::string to_string(Status s) {
  switch (s) {
    case Status::kPass:
      return "pass";
    case Status::kFail:
      return "fail";
    case Status::kUndetermined:
      break;
  }
  return "undetermined";
}

Status status_from_string(const std::string& s) {
  if (s == "pass") return Status::kPass;
  if (s == "fail") return Status::kFail;
  if (s == "undetermined") return Status::kUndetermined;
  throw std::invalid_argument("unknown status: " + s);
}

bool Report::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const auto& c) { return c.status == Status::kFail; });
}

json to_json(const Report& r) {
  json j;
  j["schema_version"] = r.schema_version;
  j["command"] = r.command;
  j["params"] = r.params;
  j["checks"] = json::array();
  for (const auto& c : r.checks) j["checks"].push_back({{"name", c.name}, {"status", to_string(c.status)}, {"details", c.details}});
  if (r.verdict) j["verdict"] = *r.verdict;
  if (r.timing) j["timing"] = *r.timing;
  return j;
}

Report report_from_json(const json& j) {
  Report r;
  r.schema_version = j.at("schema_version").get<int>();
  r.command = j.at("command").get<std::string>();
  r.params = j.at("params");
  for (const auto& c : j.at("checks"))
    r.checks.push_back({c.at("name").get<std::string>(), status_from_string(c.at("status").get<std::string>()), c.at("details")});
  if (j.contains("verdict")) r.verdict = j.at("verdict");
  if (j.contains("timing")) r.timing = j.at("timing");
  return r;
}

namespace {

std::string plain(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void render_object(std::ostringstream& out, const json& obj) {
  if (!obj.is_object()) {
    out << "    " << plain(obj) << "\n";
    return;
  }
  for (const auto& [k, v] : obj.items()) out << "    " << k << ": " << plain(v) << "\n";
}

}  // namespace

std::string render_text(const Report& r) {
  std::ostringstream out;
  out << r.command << " " << r.params.dump() << "\n";
  for (const auto& c : r.checks) {
    out << "[" << to_string(c.status) << "] " << c.name << "\n";
    render_object(out, c.details);
  }
  if (r.verdict) {
    out << "verdict\n";
    render_object(out, *r.verdict);
  }
  if (r.timing) {
    out << "timing (s)\n";
    render_object(out, *r.timing);
  }
  out << (r.passed() ? "result: pass" : "result: fail") << "\n";
  return out.str();
}

namespace {

json degrees_json(const Element& x) {
  json d = json::array();
  for (int k : x.degrees()) d.push_back(k);
  return d;
}

json rationals(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& r : v) a.push_back(r.to_string());
  return a;
}

json profile_json(const TraceProfile& p) {
  json a = json::array();
  for (const auto& [d, t] : p) a.push_back({d, t.to_string()});
  return a;
}

json basis_json(const RelativeCommutantApprox& rc) {
  json a = json::array();
  for (std::size_t i = 0; i < rc.basis.size(); ++i)
    a.push_back({{"degree", rc.degrees[i]}, {"element", rc.basis[i].to_string()}});
  return a;
}

json dims_json(const std::map<int, std::size_t>& m) {
  json o = json::object();
  for (const auto& [d, k] : m) o[std::to_string(d)] = k;
  return o;
}

json structure_json(const AlgebraStructure& s) {
  json j;
  j["dimension"] = s.dimension();
  j["center_dimension"] = s.center_basis.size();
  j["dim_vector"] = s.dim_vector;
  j["trace_vector"] = rationals(s.trace_vector);
  json ps = json::array();
  for (const auto& p : s.minimal_central_projections) ps.push_back(p.to_string());
  j["central_projections"] = ps;
  json sums = json::array();
  for (const auto& sm : s.summands) {
    json units = json::array();
    for (const auto& row : sm.units) {
      json r = json::array();
      for (const auto& x : row) r.push_back(x.to_string());
      units.push_back(r);
    }
    sums.push_back({{"central_projection", sm.central_projection.to_string()},
                    {"dim", sm.dim},
                    {"min_trace", sm.min_trace.to_string()},
                    {"self_adjoint_units", sm.self_adjoint_units},
                    {"row_exponents", sm.row_exponents()},
                    {"degrees", sm.degrees},
                    {"units", units}});
  }
  j["summands"] = sums;
  return j;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    const auto b = cur.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    const auto e = cur.find_last_not_of(" \t");
    out.push_back(cur.substr(b, e - b + 1));
  }
  return out;
}

std::pair<std::string, std::string> split_arrow(const std::string& s) {
  const auto k = s.find("->");
  if (k == std::string::npos) throw std::invalid_argument("expected 'a -> b' in " + s);
  return {s.substr(0, k), s.substr(k + 2)};
}

bool parse_bool(const std::string& s) {
  if (s == "true" || s == "yes") return true;
  if (s == "false" || s == "no") return false;
  throw std::invalid_argument("expected a boolean, got " + s);
}

// Everything the expectation checks may consult.
struct Context {
  int n = 2;
  Budget budget;
  const Endomorphism* e = nullptr;
  std::optional<UhfInvarianceResult> uhf;
  std::optional<RelativeCommutantApprox> rc;
  std::optional<AlgebraStructure> s;
  std::optional<Verdict> verdict;
};

CheckResult expectation(const Context& ctx, const std::string& key, const std::string& value) {
  CheckResult c;
  c.name = "expect." + key;
  c.details["expected"] = value;
  const auto decide = [&](bool ok, json actual) {
    c.status = ok ? Status::kPass : Status::kFail;
    c.details["actual"] = std::move(actual);
  };
  const auto undetermined = [&](const std::string& why) {
    c.status = Status::kUndetermined;
    c.details["reason"] = why;
  };
  const bool settled = ctx.rc && ctx.rc->stabilized;
  const Endomorphism& e = *ctx.e;
  try {
    if (key == "unitary") {
      decide(parse_bool(value) == is_unitary(e.unitary()), is_unitary(e.unitary()));
    } else if (key == "in_core") {
      const bool in = membership(e.unitary()).in_core;
      decide(parse_bool(value) == in, in);
    } else if (key.starts_with("membership.")) {
      const auto k = static_cast<std::size_t>(std::stoul(key.substr(11)));
      const bool in = membership(e.u_k(k)).in_core;
      decide(parse_bool(value) == in, in);
    } else if (key.starts_with("cocycle.")) {
      const int d = std::stoi(key.substr(8));
      const auto cocycle = gauge_cocycle(e);
      const auto it = cocycle.coeffs.find(d);
      const Element actual = it == cocycle.coeffs.end() ? Element(ctx.n) : it->second;
      decide(actual == parse_element(value, ctx.n), actual.to_string());
    } else if (key == "uhf_invariant") {
      if (!ctx.uhf) return undetermined("not computed"), c;
      decide(parse_bool(value) == ctx.uhf->holds_up_to_K, ctx.uhf->holds_up_to_K);
    } else if (key == "alpha_maps") {
      bool ok = true;
      json actual = json::array();
      for (const auto& pair : split(value, ';')) {
        const auto [a, b] = split_arrow(pair);
        const Element img = e.alpha(parse_element(a, ctx.n));
        actual.push_back(img.to_string());
        ok = ok && img == parse_element(b, ctx.n);
      }
      decide(ok, actual);
    } else if (key == "witness") {
      const auto fc = check_factorization(e, parse_element(value, ctx.n), ctx.budget.K);
      decide(fc.ok(), json{{"unitary", fc.unitary}, {"commutes", fc.commutes}, {"quotient_in_core", fc.quotient_in_core}});
    } else if (!settled) {
      return undetermined("relative commutant not stabilized at this budget"), c;
    } else if (key == "rc_dimension") {
      decide(std::stoul(value) == ctx.rc->dimension(), ctx.rc->dimension());
    } else if (key == "rc_basis") {
      std::vector<std::string> want;
      for (const auto& t : split(value, ';')) want.push_back(parse_element(t, ctx.n).to_string());
      std::vector<std::string> have;
      for (const auto& b : ctx.rc->basis) have.push_back(b.to_string());
      std::sort(want.begin(), want.end());
      std::sort(have.begin(), have.end());
      decide(want == have, have);
    } else if (!ctx.s || !ctx.verdict) {
      return undetermined("structure or verdict not computed"), c;
    } else if (key == "dim_vector") {
      std::vector<std::size_t> want;
      for (const auto& t : split(value, ',')) want.push_back(std::stoul(t));
      decide(want == ctx.s->dim_vector, ctx.s->dim_vector);
    } else if (key == "trace_vector") {
      std::vector<Rational> want;
      for (const auto& t : split(value, ',')) want.push_back(Rational::parse(t));
      decide(want == ctx.s->trace_vector, rationals(ctx.s->trace_vector));
    } else if (key == "verdict") {
      if (ctx.verdict->decomposable == Decision::kUndetermined) return undetermined(ctx.verdict->reason), c;
      decide(value == to_string(ctx.verdict->decomposable), to_string(ctx.verdict->decomposable));
    } else if (key == "mismatch") {
      const auto [a, b] = split_arrow(value);
      const Element pa = parse_element(a, ctx.n);
      const Element pb = parse_element(b, ctx.n);
      const auto& ps = ctx.s->minimal_central_projections;
      bool ok = false;
      json actual = json::array();
      for (const auto& cmp : ctx.verdict->comparisons) {
        if (!(ps[cmp.summand] == pa)) continue;
        actual = {{"image", ps[cmp.image].to_string()},
                  {"profile", profile_json(cmp.profile)},
                  {"image_profile", profile_json(cmp.image_profile)}};
        ok = ps[cmp.image] == pb && !cmp.match;
      }
      decide(ok, actual);
    } else {
      c.status = Status::kFail;
      c.details["reason"] = "unknown expectation";
    }
  } catch (const std::exception& ex) {
    c.status = Status::kFail;
    c.details["reason"] = ex.what();
  }
  return c;
}

class Stopwatch {
 public:
  explicit Stopwatch(json* sink) : sink_(sink), t0_(std::chrono::steady_clock::now()) {}
  void lap(const std::string& name) {
    const auto t = std::chrono::steady_clock::now();
    if (sink_) (*sink_)[name] = std::chrono::duration<double>(t - t0_).count();
    t0_ = t;
  }

 private:
  json* sink_;
  std::chrono::steady_clock::time_point t0_;
};

json verdict_json(const Verdict& v, const AlgebraStructure* s) {
  json j;
  j["decomposable"] = to_string(v.decomposable);
  j["reason"] = v.reason;
  j["K"] = v.K;
  j["K_used"] = v.K_used;
  j["L"] = v.L;
  j["D"] = v.D;
  j["stabilized"] = v.stabilized;
  j["dim_vector"] = v.dim_vector;
  j["trace_vector"] = rationals(v.trace_vector);
  j["permutation"] = v.permutation;
  json ev = json::array();
  for (const auto& c : v.comparisons) {
    json item{{"summand", c.summand},
              {"image", c.image},
              {"profile", profile_json(c.profile)},
              {"image_profile", profile_json(c.image_profile)},
              {"match", c.match}};
    if (s) {
      item["projection"] = s->minimal_central_projections[c.summand].to_string();
      item["image_projection"] = s->minimal_central_projections[c.image].to_string();
    }
    ev.push_back(item);
  }
  j["evidence"] = ev;
  j["witness"] = v.witness ? json(v.witness->to_string()) : json(nullptr);
  return j;
}

json undetermined_verdict(const std::string& reason, const Budget& b) {
  return {{"decomposable", "undetermined"}, {"reason", reason}, {"K", b.K}, {"L", b.L}, {"D", b.D}, {"witness", nullptr}};
}

}  // namespace

Report run_eval(const std::string& text, int n) {
  const Element x = parse_element(text, n);
  Report r;
  r.command = "eval";
  r.params = {{"n", n}, {"expression", text}};
  r.checks.push_back({"normal_form", Status::kPass, {{"element", x.to_string()}, {"terms", x.size()}, {"degrees", degrees_json(x)}}});
  const Membership m = membership(x);
  r.checks.push_back({"membership",
                      Status::kPass,
                      {{"in_core", m.in_core},
                       {"in_diagonal", m.in_diagonal},
                       {"min_level", m.min_level ? json(*m.min_level) : json(nullptr)},
                       {"pure_degree", m.pure_degree ? json(*m.pure_degree) : json(nullptr)}}});
  json tr;
  if (m.in_core)
    tr["trace"] = trace(x).to_string();
  else
    tr["trace_of_expectation"] = trace(x, TraceMode::kLenient).to_string();
  r.checks.push_back({"trace", Status::kPass, tr});
  r.checks.push_back({"adjoint",
                      Status::kPass,
                      {{"adjoint", adjoint(x).to_string()},
                       {"self_adjoint", x == adjoint(x)},
                       {"unitary", is_unitary(x)},
                       {"projection", is_projection(x)}}});
  return r;
}

Report run_check(const std::string& text, int n, const Budget& b, bool timing,
                 const std::map<std::string, std::string>* expect) {
  Report r;
  r.command = "check";
  r.params = {{"n", n}, {"unitary", text}, {"K", b.K}, {"L", b.L}, {"D", b.D}};
  json times = json::object();
  Stopwatch sw(timing ? &times : nullptr);

  const Endomorphism e(parse_element(text, n));
  const Element& u = e.unitary();
  Context ctx;
  ctx.n = n;
  ctx.budget = b;
  ctx.e = &e;
  r.checks.push_back({"unitary", Status::kPass, {{"element", u.to_string()}, {"degrees", degrees_json(u)}}});

  const auto cocycle = gauge_cocycle(e);
  json coeffs = json::object();
  for (const auto& [d, c] : cocycle.coeffs) coeffs[std::to_string(d)] = c.to_string();
  r.checks.push_back({"gauge_cocycle",
                      Status::kPass,
                      {{"coefficients", coeffs}, {"constant", cocycle.is_constant()}, {"u_in_core", membership(u).in_core}}});
  sw.lap("gauge_cocycle");

  const auto finish = [&]() {
    if (expect)
      for (const auto& [k, v] : *expect) r.checks.push_back(expectation(ctx, k, v));
    sw.lap("expectations");
    if (timing) r.timing = times;
    return r;
  };

  ctx.uhf = check_uhf_invariance(e, b.K);
  {
    json w = json::array();
    for (std::size_t i = 0; i < std::min<std::size_t>(ctx.uhf->witnesses.size(), 4); ++i) {
      const auto& x = ctx.uhf->witnesses[i];
      w.push_back({{"cocycle_degree", x.cocycle_degree},
                   {"position", x.position},
                   {"i", x.i},
                   {"j", x.j},
                   {"commutator", x.commutator.to_string()}});
    }
    r.checks.push_back({"uhf_invariance",
                        ctx.uhf->holds_up_to_K ? Status::kPass : Status::kFail,
                        {{"K", ctx.uhf->K}, {"holds", ctx.uhf->holds_up_to_K}, {"witnesses", w}}});
  }
  sw.lap("uhf_invariance");
  if (!ctx.uhf->holds_up_to_K) {
    r.verdict = undetermined_verdict("lambda_u does not map F_n into F_n", b);
    return finish();
  }

  ctx.rc = relative_commutant(e, b.K, b.L, b.D);
  const auto& rc = *ctx.rc;
  {
    Status st = Status::kPass;
    if (!rc.stabilized) st = Status::kUndetermined;
    else if (!rc.closed()) st = Status::kFail;
    r.checks.push_back({"relative_commutant",
                        st,
                        {{"K", rc.K},
                         {"K_used", rc.K_used},
                         {"L", rc.L},
                         {"D", rc.D},
                         {"dimension", rc.dimension()},
                         {"stabilized", rc.stabilized},
                         {"adjoint_closed", rc.adjoint_closed},
                         {"product_closed", rc.product_closed},
                         {"graded_dims", dims_json(rc.graded_dims)},
                         {"graded_dims_next", dims_json(rc.graded_dims_next)},
                         {"closure_issues", rc.closure_issues},
                         {"basis", basis_json(rc)}}});
  }
  sw.lap("relative_commutant");
  if (!rc.closed()) {
    r.verdict = undetermined_verdict("computed relative commutant is not a *-algebra at this budget", b);
    return finish();
  }

  try {
    ctx.s = analyze(rc);
  } catch (const StructureError& ex) {
    r.checks.push_back({"structure", rc.stabilized ? Status::kFail : Status::kUndetermined, {{"error", ex.what()}}});
    r.verdict = undetermined_verdict(ex.what(), b);
    return finish();
  }
  const auto& s = *ctx.s;
  r.checks.push_back({"structure", Status::kPass, structure_json(s)});
  sw.lap("structure");

  AlphaAction a;
  try {
    a = alpha_action(e, s);
  } catch (const BudgetFailure& ex) {
    r.checks.push_back({"alpha_action", rc.stabilized ? Status::kFail : Status::kUndetermined, {{"error", ex.what()}}});
    r.verdict = undetermined_verdict(ex.what(), b);
    return finish();
  }
  {
    json images = json::array();
    for (std::size_t i = 0; i < a.permutation.size(); ++i)
      images.push_back({{"from", s.minimal_central_projections[i].to_string()},
                        {"to", s.minimal_central_projections[a.permutation[i]].to_string()}});
    r.checks.push_back({"alpha_action",
                        Status::kPass,
                        {{"permutation", a.permutation}, {"cycles", a.cycles}, {"order", a.order}, {"images", images}}});
  }
  sw.lap("alpha_action");

  ctx.verdict = decomposability(rc, s, a);
  auto& v = *ctx.verdict;
  sw.lap("decomposability");

  try {
    const auto m = membership_test(e, rc, 1);
    r.checks.push_back({"core_membership",
                        Status::kPass,
                        {{"k", m.k},
                         {"predicted", to_string(m.predicted)},
                         {"direct", m.direct},
                         {"maps_frc_onto_frc", m.maps_frc_onto_frc},
                         {"preserves_trace", m.preserves_trace}}});
  } catch (const ConsistencyError& ex) {
    r.checks.push_back({"core_membership", Status::kFail, {{"error", ex.what()}}});
  }
  sw.lap("core_membership");

  if (v.decomposable != Decision::kUndetermined) {
    v.witness = search_factorization(e, s, b.K);
    json d{{"witness", v.witness ? json(v.witness->to_string()) : json(nullptr)}};
    Status st = Status::kPass;
    if (v.decomposable == Decision::kYes) {
      if (v.witness)
        d["quotient"] = (adjoint(*v.witness) * u).to_string();
      else
        st = Status::kUndetermined, d["reason"] = "no witness among signed permutations of matrix units";
    } else if (v.witness) {
      st = Status::kFail;
      d["reason"] = "a witness exists although the trace test says no";
    }
    r.checks.push_back({"factorization", st, d});
    sw.lap("factorization");
  }
  r.checks.push_back({"decomposability",
                      v.decomposable == Decision::kUndetermined ? Status::kUndetermined : Status::kPass,
                      {{"decision", to_string(v.decomposable)}, {"reason", v.reason}}});
  r.verdict = verdict_json(v, &s);
  return finish();
}

Report run_corpus(const std::vector<CorpusEntry>& entries, const Budget& b, bool timing) {
  Report r;
  r.command = "corpus";
  json ids = json::array();
  for (const auto& e : entries) ids.push_back(e.id);
  r.params = {{"K", b.K}, {"L", b.L}, {"D", b.D}, {"entries", ids}};
  std::vector<std::future<Report>> jobs;
  for (const auto& entry : entries) {
    jobs.push_back(std::async(std::launch::async, [&entry, &b, timing]() {
      try {
        return run_check(entry.unitary, entry.n, b, timing, &entry.expect);
      } catch (const std::exception& ex) {
        Report err;
        err.checks.push_back({"error", Status::kFail, {{"message", ex.what()}}});
        return err;
      }
    }));
  }
  json verdicts = json::object();
  json times = json::object();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    Report one = jobs[i].get();
    for (auto& c : one.checks) {
      c.name = entries[i].id + "/" + c.name;
      r.checks.push_back(std::move(c));
    }
    verdicts[entries[i].id] = one.verdict ? *one.verdict : json(nullptr);
    if (one.timing) times[entries[i].id] = *one.timing;
  }
  r.verdict = verdicts;
  if (timing) r.timing = times;
  return r;
}

}  // namespace cuntz
