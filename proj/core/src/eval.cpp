// Copyright 2026 The trustlogic Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>

#include "trustlogic/semantics.hpp"

namespace tl::sem {
namespace {
using K = Formula::Kind;
}  // namespace

Assignment Assignment::variant(Var x, Elem e) const {
  Assignment g = *this;
  g.overrides[x] = e;
  return g;
}

Evaluator::Evaluator(const Model& m, size_t depth) : m_(m), evidence_(m, depth) {}

Elem Evaluator::value(const Assignment& f, const Term& t) const {
  if (t.is_var())
    if (auto it = f.overrides.find(t.var()); it != f.overrides.end()) return it->second;
  auto it = m_.table.find(t);
  if (it == m_.table.end()) throw UnknownTerm(t);
  return it->second;
}

bool Evaluator::eval(StateId w, const Assignment& f, const Formula& a) {
  switch (a.kind()) {
    case K::Bot: return false;
    case K::Eq: return m_.eq[f.pred_state].count({value(f, a.lhs()), value(f, a.rhs())}) > 0;
    case K::Pred: {
      Tuple tup;
      for (const auto& t : a.args()) tup.push_back(value(f, t));
      const auto& interp = m_.pred[f.pred_state];
      auto it = interp.find(a.sym());
      return it != interp.end() && it->second.count(tup);
    }
    case K::Imp: return !eval(w, f, a.left()) || eval(w, f, a.right());
    case K::And: return eval(w, f, a.left()) && eval(w, f, a.right());
    case K::Forall:
      for (Elem e = 0; e < m_.domain.size(); ++e)
        if (!eval(w, f.variant(a.var(), e), a.body())) return false;
      return true;
    case K::K:
      for (StateId v : m_.agent_successors(a.agent(), w))
        if (!eval(v, f.moved_to(v), a.body())) return false;
      return true;
    case K::Just: return eval_just(w, f, a);
    case K::Trust:
      // Some table term j with K_a(j:A).
      for (const auto& [j, e] : m_.table) {
        (void)e;
        if (eval(w, f, Formula::know(a.agent(), Formula::just(j, a.body())))) return true;
      }
      return false;
  }
  return false;
}

bool Evaluator::eval_just(StateId w, const Assignment& f, const Formula& a) {
  const Formula& body = a.body();
  for (StateId v : m_.successors(m_.gamma, w))
    if (!eval(v, f.moved_to(v), body)) return false;

  // Witness search: every free x_i may be replaced by a table term that f
  // maps to the same element, or kept.
  VarSet fv = free_vars(body);
  std::vector<Var> xs(fv.begin(), fv.end());
  std::vector<std::vector<Term>> choices;
  for (Var x : xs) {
    Elem target = value(f, Term::var(x));
    std::vector<Term> c{Term::var(x)};
    for (const auto& [t, e] : m_.table)
      if (e == target && !(t.is_var() && t.var() == x)) c.push_back(t);
    choices.push_back(std::move(c));
  }
  std::vector<size_t> pick(xs.size(), 0);
  bool exhausted = false;
  for (;;) {
    std::vector<std::pair<Var, Term>> sigma;
    for (size_t i = 0; i < xs.size(); ++i) sigma.emplace_back(xs[i], choices[i][pick[i]]);
    Formula inst = sigma.empty() ? body : subst_quant_many(body, sigma);
    Tri r = evidence_.member(w, a.term(), inst);
    if (r == Tri::True) return true;
    if (r == Tri::Exhausted) exhausted = true;
    size_t i = 0;
    while (i < pick.size() && ++pick[i] == choices[i].size()) pick[i++] = 0;
    if (i == pick.size()) break;
  }
  if (exhausted)
    throw DepthExhausted("evidence search for " + to_string(a) + " at " + m_.states[w] + " did not settle");
  return false;
}

bool consequence(const Model& m, const std::vector<Formula>& hyps, const Formula& goal, size_t depth) {
  Evaluator ev(m, depth);
  for (StateId w = 0; w < m.states.size(); ++w) {
    bool all = std::all_of(hyps.begin(), hyps.end(), [&](const Formula& h) { return ev.eval(w, h); });
    if (all && !ev.eval(w, goal)) return false;
  }
  return true;
}

bool valid_in(const Model& m, const Formula& a, size_t depth) { return consequence(m, {}, a, depth); }

}  // namespace tl::sem
