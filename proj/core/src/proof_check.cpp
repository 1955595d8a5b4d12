// Copyright 2026 The trustlogic Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <map>

#include "trustlogic/proof.hpp"

namespace tl::proof {
namespace {

using K = Formula::Kind;

struct RuleInfo {
  Rule rule;
  const char* tag;
  size_t arity;
};

const RuleInfo kRules[] = {
    {Rule::Ax, "ax", 0},         {Rule::ImpI, "imp-i", 1},     {Rule::ImpE, "imp-e", 2},
    {Rule::Efq, "efq", 1},       {Rule::Dne, "dne", 1},        {Rule::AndI, "and-i", 2},
    {Rule::AndE1, "and-e1", 1},  {Rule::AndE2, "and-e2", 1},   {Rule::AllI, "all-i", 1},
    {Rule::AllE, "all-e", 1},    {Rule::EqRefl, "eq-refl", 0}, {Rule::EqSym, "eq-sym", 1},
    {Rule::EqTrans, "eq-trans", 2}, {Rule::EqSubst, "eq-subst", 2}, {Rule::KNec, "k-nec", 1},
    {Rule::KDist, "k-dist", 2},  {Rule::KT, "k-t", 1},         {Rule::K5, "k-5", 1},
    {Rule::JApp, "j-app", 2},    {Rule::JT, "j-t", 1},         {Rule::JBang, "j-bang", 1},
    {Rule::JEqL, "j-eq-l", 2},   {Rule::JEqR, "j-eq-r", 2},    {Rule::TIntro, "t-intro", 1},
    {Rule::TElim, "t-elim", 1},  {Rule::NecKT, "nec-kt", 1},   {Rule::Weak, "weak", 1},
    {Rule::Contr, "contr", 1},   {Rule::Dup, "dup", 1},
};

const RuleInfo& info(Rule r) {
  for (const auto& i : kRules)
    if (i.rule == r) return i;
  throw std::logic_error("unknown rule");
}

std::map<Formula, size_t> counts(const Context& c) {
  std::map<Formula, size_t> m;
  for (const auto& f : c) ++m[f];
  return m;
}

struct Failure {
  FailKind kind;
  std::string condition;
  std::string detail;
};

Failure schema(std::string d) { return {FailKind::SchemaMismatch, "", std::move(d)}; }
Failure side(std::string c, std::string d) { return {FailKind::SideConditionViolated, std::move(c), std::move(d)}; }
Failure substitution(std::string d) { return {FailKind::SubstitutionMismatch, "", std::move(d)}; }

std::string show(const Formula& f) { return "'" + to_string(f) + "'"; }

std::string show(const Context& c) {
  std::string s = "{";
  for (size_t i = 0; i < c.size(); ++i) s += (i ? ", " : "") + to_string(c[i]);
  return s + "}";
}

VarSet free_in(const Context& c) {
  VarSet out;
  for (const auto& f : c) {
    auto v = free_vars(f);
    out.insert(v.begin(), v.end());
  }
  return out;
}

bool var_occurs_anywhere(Var x, const Context& c) {
  for (const auto& f : c)
    if (all_vars(f).count(x)) return true;
  return false;
}

// nullopt when the node instantiates its rule.
std::optional<Failure> check_node(const Derivation& d) {
  const Sequent& c = d.conclusion;
  const auto& ps = d.premises;
  if (ps.size() != info(d.rule).arity)
    return schema("expected " + std::to_string(info(d.rule).arity) + " premises, found " + std::to_string(ps.size()));
  for (const auto& p : ps)
    if (!p) return schema("null premise");
  auto prem = [&](size_t i) -> const Sequent& { return ps[i]->conclusion; };
  auto same_ctx = [&](const Context& want) -> std::optional<Failure> {
    if (same_multiset(c.ctx, want)) return std::nullopt;
    return schema("context " + show(c.ctx) + " should be " + show(want));
  };
  auto ctx1 = [&]() { return same_ctx(prem(0).ctx); };
  auto ctx2 = [&]() { return same_ctx(multiset_sum(prem(0).ctx, prem(1).ctx)); };
  const Params& pa = d.params;

  switch (d.rule) {
    case Rule::Ax:
      if (c.ctx.size() != 1 || !(c.ctx[0] == c.concl)) return schema("axiom must be A => A");
      return std::nullopt;

    case Rule::ImpI: {
      if (!c.concl.is(K::Imp)) return schema("conclusion is not an implication");
      if (!(prem(0).concl == c.concl.right())) return schema("premise conclusion should be " + show(c.concl.right()));
      Context want = c.ctx;
      want.push_back(c.concl.left());
      if (!same_multiset(prem(0).ctx, want)) return schema("premise context should be " + show(want));
      return std::nullopt;
    }

    case Rule::ImpE: {
      const Formula& major = prem(0).concl;
      if (!major.is(K::Imp)) return schema("major premise is not an implication");
      if (!(major.right() == c.concl)) return schema("consequent does not match conclusion");
      if (!(major.left() == prem(1).concl)) return schema("minor premise does not match antecedent");
      return ctx2();
    }

    case Rule::Efq:
      if (!prem(0).concl.is(K::Bot)) return schema("premise must conclude bot");
      if (!c.concl.is_atomic()) return side("atomic-conclusion", show(c.concl) + " is not atomic");
      return ctx1();

    case Rule::Dne:
      if (!(prem(0).concl == Formula::neg(Formula::neg(c.concl)))) return schema("premise must be ~~A");
      return ctx1();

    case Rule::AndI:
      if (!(c.concl == Formula::conj(prem(0).concl, prem(1).concl))) return schema("conclusion must be A1 & A2");
      return ctx2();

    case Rule::AndE1:
    case Rule::AndE2: {
      const Formula& p = prem(0).concl;
      if (!p.is(K::And)) return schema("premise is not a conjunction");
      const Formula& want = d.rule == Rule::AndE1 ? p.left() : p.right();
      if (!(want == c.concl)) return schema("conclusion should be " + show(want));
      return ctx1();
    }

    case Rule::AllI: {
      if (!pa.var) return schema("missing (var y) parameter");
      if (!c.concl.is(K::Forall)) return schema("conclusion is not universal");
      Var y = *pa.var;
      Formula want = subst_quant(c.concl.body(), Term::var(y), c.concl.var());
      if (!(prem(0).concl == want)) return substitution("premise should be " + show(want));
      if (free_in(c.ctx).count(y))
        return side("eigenvariable", names::var_name(y) + " occurs free in the context");
      if (free_vars(c.concl).count(y))
        return side("eigenvariable", names::var_name(y) + " occurs free in " + show(c.concl));
      return ctx1();
    }

    case Rule::AllE: {
      if (!pa.term) return schema("missing (term t) parameter");
      const Formula& p = prem(0).concl;
      if (!p.is(K::Forall)) return schema("premise is not universal");
      Formula want = subst_quant(p.body(), *pa.term, p.var());
      if (!(c.concl == want)) return substitution("conclusion should be " + show(want));
      return ctx1();
    }

    case Rule::EqRefl:
      if (!c.ctx.empty()) return schema("identity axiom has empty context");
      if (!c.concl.is(K::Eq) || !(c.concl.lhs() == c.concl.rhs())) return schema("conclusion must be t = t");
      return std::nullopt;

    case Rule::EqSym: {
      const Formula& p = prem(0).concl;
      if (!p.is(K::Eq)) return schema("premise is not an identity");
      if (!(c.concl == Formula::eq(p.rhs(), p.lhs()))) return schema("conclusion must swap the identity");
      return ctx1();
    }

    case Rule::EqTrans: {
      const Formula& l = prem(0).concl;
      const Formula& r = prem(1).concl;
      if (!l.is(K::Eq) || !r.is(K::Eq)) return schema("premises must be identities");
      if (!(l.rhs() == r.lhs())) return schema("middle terms differ");
      if (!(c.concl == Formula::eq(l.lhs(), r.rhs()))) return schema("conclusion must be u = v");
      return ctx2();
    }

    case Rule::EqSubst:
    case Rule::JEqL:
    case Rule::JEqR: {
      if (!pa.var || !pa.formula) return schema("missing (var x) / (formula A) parameters");
      Var x = *pa.var;
      const Formula& a = *pa.formula;
      Formula id = prem(0).concl;
      Formula body = prem(1).concl;
      Formula out = c.concl;
      if (d.rule != Rule::EqSubst) {
        if (!id.is(K::Just)) return schema("identity premise must be justified");
        id = id.body();
        if (!body.is(K::Just) || !out.is(K::Just)) return schema("premise and conclusion must be justified");
        if (!(body.term() == out.term())) return schema("justification term changes");
        body = body.body();
        out = out.body();
      }
      if (!id.is(K::Eq)) return schema("first premise is not an identity");
      Term t = d.rule == Rule::JEqR ? id.rhs() : id.lhs();
      Term s = d.rule == Rule::JEqR ? id.lhs() : id.rhs();
      Formula want_in = subst_ident(a, t, x);
      if (!(body == want_in)) return substitution("second premise should be " + show(want_in));
      Formula want_out = subst_ident(a, s, x);
      if (!(out == want_out)) return substitution("conclusion should be " + show(want_out));
      return ctx2();
    }

    case Rule::KNec:
    case Rule::NecKT: {
      if (!pa.agent) return schema("missing (agent a) parameter");
      Agent a = *pa.agent;
      if (!(c.concl == Formula::know(a, prem(0).concl))) return schema("conclusion must be K[a] of the premise");
      for (const auto& g : c.ctx) {
        bool k_form = g.is(K::K) && g.agent() == a;
        bool t_form = d.rule == Rule::NecKT && g.is(K::Trust) && g.agent() == a;
        if (!k_form && !t_form)
          return side("necessitation-context", show(g) + " is not of the form K[" + names::agent_name(a) + "] A" +
                                                   (d.rule == Rule::NecKT ? " or T[" + names::agent_name(a) + ",t] A" : ""));
      }
      return ctx1();
    }

    case Rule::KDist: {
      const Formula& l = prem(0).concl;
      const Formula& r = prem(1).concl;
      if (!l.is(K::K) || !l.body().is(K::Imp)) return schema("major premise must be K[a](A -> B)");
      if (!(r == Formula::know(l.agent(), l.body().left()))) return schema("minor premise must be K[a] A");
      if (!(c.concl == Formula::know(l.agent(), l.body().right()))) return schema("conclusion must be K[a] B");
      return ctx2();
    }

    case Rule::KT:
      if (!prem(0).concl.is(K::K) || !(prem(0).concl.body() == c.concl)) return schema("premise must be K[a] A");
      return ctx1();

    case Rule::K5: {
      const Formula& p = prem(0).concl;
      if (!p.is(K::Imp) || !p.right().is(K::Bot) || !p.left().is(K::K)) return schema("premise must be ~K[a] A");
      if (!(c.concl == Formula::know(p.left().agent(), p))) return schema("conclusion must be K[a] ~K[a] A");
      return ctx1();
    }

    case Rule::JApp: {
      const Formula& l = prem(0).concl;
      const Formula& r = prem(1).concl;
      if (!l.is(K::Just) || !l.body().is(K::Imp)) return schema("major premise must be j:(A -> B)");
      if (!r.is(K::Just) || !(r.body() == l.body().left())) return schema("minor premise must be k:A");
      if (!(c.concl == Formula::just(Term::app(l.term(), r.term()), l.body().right())))
        return schema("conclusion must be (j k):B");
      return ctx2();
    }

    case Rule::JT:
      if (!prem(0).concl.is(K::Just) || !(prem(0).concl.body() == c.concl)) return schema("premise must be j:A");
      return ctx1();

    case Rule::JBang: {
      const Formula& p = prem(0).concl;
      if (!p.is(K::Just)) return schema("premise must be j:A");
      if (!(c.concl == Formula::just(Term::bang(p.term()), p))) return schema("conclusion must be !j:(j:A)");
      return ctx1();
    }

    case Rule::TIntro: {
      const Formula& p = prem(0).concl;
      if (!p.is(K::K) || !p.body().is(K::Just)) return schema("premise must be K[a] j:A");
      if (!c.concl.is(K::Trust) || c.concl.agent() != p.agent() || !(c.concl.body() == p.body().body()))
        return schema("conclusion must be T[a,t] A");
      if (!occurs_in(c.concl.term(), c.concl.body()))
        return side("trust-subject", to_string(c.concl.term()) + " does not occur in " + show(c.concl.body()));
      return ctx1();
    }

    case Rule::TElim: {
      const Formula& p = prem(0).concl;
      if (!p.is(K::Trust)) return schema("premise must be T[a,t] B");
      if (!c.concl.is(K::K) || c.concl.agent() != p.agent() || !c.concl.body().is(K::Just) ||
          !(c.concl.body().body() == p.body()) || !c.concl.body().term().is_var())
        return schema("conclusion must be K[a] x:B");
      Var x = c.concl.body().term().var();
      if (pa.var && *pa.var != x) return schema("eigenvariable parameter differs from the conclusion");
      if (all_vars(p.body()).count(x)) return side("eigenvariable", names::var_name(x) + " occurs in " + show(p.body()));
      if (var_occurs_anywhere(x, c.ctx)) return side("eigenvariable", names::var_name(x) + " occurs in the context");
      return ctx1();
    }

    case Rule::Weak: {
      if (!(prem(0).concl == c.concl)) return schema("weakening changes the conclusion");
      auto have = counts(c.ctx);
      for (const auto& [f, n] : counts(prem(0).ctx))
        if (have[f] < n) return schema("weakening drops " + show(f));
      return std::nullopt;
    }

    case Rule::Contr:
    case Rule::Dup: {
      if (!(prem(0).concl == c.concl)) return schema("structural rule changes the conclusion");
      auto before = counts(prem(0).ctx);
      auto after = counts(c.ctx);
      if (before.size() != after.size()) return schema("structural rule changes the set of hypotheses");
      for (const auto& [f, n] : before) {
        auto it = after.find(f);
        if (it == after.end()) return schema("structural rule removes " + show(f));
        if (d.rule == Rule::Contr && it->second > n) return schema("contraction adds copies of " + show(f));
        if (d.rule == Rule::Dup && it->second < n) return schema("duplication removes copies of " + show(f));
      }
      return std::nullopt;
    }
  }
  return schema("unhandled rule");
}

bool check_rec(const Derivation& d, std::vector<size_t>& path, CheckReport& rep) {
  if (auto f = check_node(d)) {
    rep.ok = false;
    rep.path = path;
    rep.rule = d.rule;
    rep.kind = f->kind;
    rep.condition = f->condition;
    rep.detail = f->detail;
    return false;
  }
  for (size_t i = 0; i < d.premises.size(); ++i) {
    path.push_back(i);
    if (!check_rec(*d.premises[i], path, rep)) return false;
    path.pop_back();
  }
  return true;
}

}  // namespace

const char* tag(Rule r) { return info(r).tag; }

std::optional<Rule> rule_from_tag(std::string_view t) {
  for (const auto& i : kRules)
    if (t == i.tag) return i.rule;
  return std::nullopt;
}

const std::vector<Rule>& all_rules() {
  static const std::vector<Rule> v = [] {
    std::vector<Rule> out;
    for (const auto& i : kRules) out.push_back(i.rule);
    return out;
  }();
  return v;
}

size_t arity(Rule r) { return info(r).arity; }

bool same_multiset(const Context& a, const Context& b) {
  if (a.size() != b.size()) return false;
  Context x = a, y = b;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

Context multiset_sum(const Context& a, const Context& b) {
  Context out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

const char* to_string(FailKind k) {
  switch (k) {
    case FailKind::SchemaMismatch: return "SchemaMismatch";
    case FailKind::SideConditionViolated: return "SideConditionViolated";
    case FailKind::SubstitutionMismatch: return "SubstitutionMismatch";
  }
  return "?";
}

std::string CheckReport::describe() const {
  if (ok) return "ok";
  std::string where = "root";
  for (size_t i : path) where += "." + std::to_string(i);
  std::string kind_s = to_string(kind);
  if (kind == FailKind::SideConditionViolated) kind_s += "(" + condition + ")";
  return kind_s + " at " + where + " [" + tag(rule) + "]: " + detail;
}

CheckReport check(const Derivation& d) {
  CheckReport rep;
  std::vector<size_t> path;
  check_rec(d, path, rep);
  return rep;
}

bool derives(const std::vector<Formula>& hyps, const Formula& goal, const Derivation& witness) {
  CheckReport r = check(witness);
  if (!r.ok) throw UncheckedWitness(r);
  if (!(witness.conclusion.concl == goal)) return false;
  for (const auto& g : witness.conclusion.ctx)
    if (std::find(hyps.begin(), hyps.end(), g) == hyps.end()) return false;
  return true;
}

size_t node_count(const Derivation& d) {
  size_t n = 1;
  for (const auto& p : d.premises) n += node_count(*p);
  return n;
}

const Derivation& node_at(const Derivation& d, const std::vector<size_t>& path) {
  const Derivation* cur = &d;
  for (size_t i : path) cur = cur->premises.at(i).get();
  return *cur;
}

}  // namespace tl::proof
