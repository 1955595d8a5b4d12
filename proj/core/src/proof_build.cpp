// Copyright 2026 The trustlogic Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>

#include "trustlogic/proof.hpp"

namespace tl::proof::build {
namespace {

using K = Formula::Kind;

DerivationPtr node(Rule r, Params p, std::vector<DerivationPtr> ps, Context ctx, Formula concl) {
  return std::make_shared<const Derivation>(
      Derivation{r, std::move(p), std::move(ps), Sequent{std::move(ctx), std::move(concl)}});
}

const Formula& concl(const DerivationPtr& d) { return d->conclusion.concl; }
const Context& ctx(const DerivationPtr& d) { return d->conclusion.ctx; }

void need(bool ok, const char* rule, const char* what) {
  if (!ok) throw std::logic_error(std::string(rule) + ": " + what);
}

Context remove_one(Context c, const Formula& f, const char* rule) {
  auto it = std::find(c.begin(), c.end(), f);
  need(it != c.end(), rule, "formula not in context");
  c.erase(it);
  return c;
}

DerivationPtr identity_rule(Rule r, const char* name, const DerivationPtr& eq, const DerivationPtr& d, Var x,
                            const Formula& a, bool justified, bool reversed) {
  Formula id = concl(eq);
  if (justified) {
    need(id.is(K::Just), name, "identity premise must be justified");
    need(concl(d).is(K::Just), name, "second premise must be justified");
    id = id.body();
  }
  need(id.is(K::Eq), name, "first premise is not an identity");
  Term s = reversed ? id.lhs() : id.rhs();
  Formula out = subst_ident(a, s, x);
  if (justified) out = Formula::just(concl(d).term(), out);
  Params p;
  p.var = x;
  p.formula = a;
  return node(r, std::move(p), {eq, d}, multiset_sum(ctx(eq), ctx(d)), out);
}

}  // namespace

DerivationPtr ax(const Formula& a) { return node(Rule::Ax, {}, {}, {a}, a); }

DerivationPtr imp_i(const DerivationPtr& d, const Formula& discharged) {
  return node(Rule::ImpI, {}, {d}, remove_one(ctx(d), discharged, "imp-i"), Formula::imp(discharged, concl(d)));
}

DerivationPtr imp_e(const DerivationPtr& major, const DerivationPtr& minor) {
  need(concl(major).is(K::Imp), "imp-e", "major premise is not an implication");
  return node(Rule::ImpE, {}, {major, minor}, multiset_sum(ctx(major), ctx(minor)), concl(major).right());
}

DerivationPtr efq(const DerivationPtr& d, const Formula& atom) { return node(Rule::Efq, {}, {d}, ctx(d), atom); }

DerivationPtr dne(const DerivationPtr& d) {
  const Formula& f = concl(d);
  need(f.is(K::Imp) && f.left().is(K::Imp), "dne", "premise is not a double negation");
  return node(Rule::Dne, {}, {d}, ctx(d), f.left().left());
}

DerivationPtr and_i(const DerivationPtr& l, const DerivationPtr& r) {
  return node(Rule::AndI, {}, {l, r}, multiset_sum(ctx(l), ctx(r)), Formula::conj(concl(l), concl(r)));
}

DerivationPtr and_e(const DerivationPtr& d, int index) {
  need(concl(d).is(K::And), "and-e", "premise is not a conjunction");
  return node(index == 1 ? Rule::AndE1 : Rule::AndE2, {}, {d}, ctx(d),
              index == 1 ? concl(d).left() : concl(d).right());
}

DerivationPtr all_i(const DerivationPtr& d, Var x, const Formula& body, Var eigen) {
  Params p;
  p.var = eigen;
  return node(Rule::AllI, std::move(p), {d}, ctx(d), Formula::forall(x, body));
}

DerivationPtr all_e(const DerivationPtr& d, const Term& t) {
  need(concl(d).is(K::Forall), "all-e", "premise is not universal");
  Params p;
  p.term = t;
  return node(Rule::AllE, std::move(p), {d}, ctx(d), subst_quant(concl(d).body(), t, concl(d).var()));
}

DerivationPtr eq_refl(const Term& t) { return node(Rule::EqRefl, {}, {}, {}, Formula::eq(t, t)); }

DerivationPtr eq_sym(const DerivationPtr& d) {
  need(concl(d).is(K::Eq), "eq-sym", "premise is not an identity");
  return node(Rule::EqSym, {}, {d}, ctx(d), Formula::eq(concl(d).rhs(), concl(d).lhs()));
}

DerivationPtr eq_trans(const DerivationPtr& l, const DerivationPtr& r) {
  need(concl(l).is(K::Eq) && concl(r).is(K::Eq), "eq-trans", "premises must be identities");
  return node(Rule::EqTrans, {}, {l, r}, multiset_sum(ctx(l), ctx(r)), Formula::eq(concl(l).lhs(), concl(r).rhs()));
}

DerivationPtr eq_subst(const DerivationPtr& eq, const DerivationPtr& d, Var x, const Formula& a) {
  return identity_rule(Rule::EqSubst, "eq-subst", eq, d, x, a, false, false);
}

DerivationPtr k_nec(const DerivationPtr& d, Agent a) {
  Params p;
  p.agent = a;
  return node(Rule::KNec, std::move(p), {d}, ctx(d), Formula::know(a, concl(d)));
}

DerivationPtr k_dist(const DerivationPtr& l, const DerivationPtr& r) {
  const Formula& f = concl(l);
  need(f.is(K::K) && f.body().is(K::Imp), "k-dist", "major premise must be K[a](A -> B)");
  return node(Rule::KDist, {}, {l, r}, multiset_sum(ctx(l), ctx(r)), Formula::know(f.agent(), f.body().right()));
}

DerivationPtr k_t(const DerivationPtr& d) {
  need(concl(d).is(K::K), "k-t", "premise must be K[a] A");
  return node(Rule::KT, {}, {d}, ctx(d), concl(d).body());
}

DerivationPtr k_5(const DerivationPtr& d) {
  const Formula& f = concl(d);
  need(f.is(K::Imp) && f.left().is(K::K), "k-5", "premise must be ~K[a] A");
  return node(Rule::K5, {}, {d}, ctx(d), Formula::know(f.left().agent(), f));
}

DerivationPtr j_app(const DerivationPtr& l, const DerivationPtr& r) {
  const Formula& f = concl(l);
  need(f.is(K::Just) && f.body().is(K::Imp) && concl(r).is(K::Just), "j-app", "premises must be j:(A -> B), k:A");
  return node(Rule::JApp, {}, {l, r}, multiset_sum(ctx(l), ctx(r)),
              Formula::just(Term::app(f.term(), concl(r).term()), f.body().right()));
}

DerivationPtr j_t(const DerivationPtr& d) {
  need(concl(d).is(K::Just), "j-t", "premise must be j:A");
  return node(Rule::JT, {}, {d}, ctx(d), concl(d).body());
}

DerivationPtr j_bang(const DerivationPtr& d) {
  need(concl(d).is(K::Just), "j-bang", "premise must be j:A");
  return node(Rule::JBang, {}, {d}, ctx(d), Formula::just(Term::bang(concl(d).term()), concl(d)));
}

DerivationPtr j_eq_l(const DerivationPtr& eq, const DerivationPtr& d, Var x, const Formula& a) {
  return identity_rule(Rule::JEqL, "j-eq-l", eq, d, x, a, true, false);
}

DerivationPtr j_eq_r(const DerivationPtr& eq, const DerivationPtr& d, Var x, const Formula& a) {
  return identity_rule(Rule::JEqR, "j-eq-r", eq, d, x, a, true, true);
}

DerivationPtr t_intro(const DerivationPtr& d, const Term& subject) {
  const Formula& f = concl(d);
  need(f.is(K::K) && f.body().is(K::Just), "t-intro", "premise must be K[a] j:A");
  return node(Rule::TIntro, {}, {d}, ctx(d), Formula::trust(f.agent(), subject, f.body().body()));
}

DerivationPtr t_elim(const DerivationPtr& d, Var eigen) {
  const Formula& f = concl(d);
  need(f.is(K::Trust), "t-elim", "premise must be T[a,t] B");
  Params p;
  p.var = eigen;
  return node(Rule::TElim, std::move(p), {d}, ctx(d),
              Formula::know(f.agent(), Formula::just(Term::var(eigen), f.body())));
}

DerivationPtr nec_kt(const DerivationPtr& d, Agent a) {
  Params p;
  p.agent = a;
  return node(Rule::NecKT, std::move(p), {d}, ctx(d), Formula::know(a, concl(d)));
}

DerivationPtr weak(const DerivationPtr& d, const Context& extra) {
  return node(Rule::Weak, {}, {d}, multiset_sum(ctx(d), extra), concl(d));
}

DerivationPtr contr(const DerivationPtr& d, const Formula& f) {
  Context c = remove_one(ctx(d), f, "contr");
  need(std::find(c.begin(), c.end(), f) != c.end(), "contr", "only one copy present");
  return node(Rule::Contr, {}, {d}, std::move(c), concl(d));
}

DerivationPtr dup(const DerivationPtr& d, const Formula& f) {
  Context c = ctx(d);
  need(std::find(c.begin(), c.end(), f) != c.end(), "dup", "formula not in context");
  c.push_back(f);
  return node(Rule::Dup, {}, {d}, std::move(c), concl(d));
}

DerivationPtr raw(Rule r, Params p, std::vector<DerivationPtr> premises, Sequent conclusion) {
  return std::make_shared<const Derivation>(
      Derivation{r, std::move(p), std::move(premises), std::move(conclusion)});
}

}  // namespace tl::proof::build
