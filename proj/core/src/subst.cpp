// Copyright 2026 The trustlogic Authors
// SPDX-License-Identifier: Apache-2.0

#include "trustlogic/syntax.hpp"

namespace tl {
namespace {

void term_free(const Term& t, VarSet& bound, VarSet& out) {
  switch (t.kind()) {
    case Term::Kind::Var:
      if (!bound.count(t.var())) out.insert(t.var());
      return;
    case Term::Kind::App:
      term_free(t.fn(), bound, out);
      term_free(t.arg(), bound, out);
      return;
    case Term::Kind::Lam: {
      bool added = bound.insert(t.var()).second;
      term_free(t.body(), bound, out);
      if (added) bound.erase(t.var());
      return;
    }
    case Term::Kind::Bang: term_free(t.inner(), bound, out); return;
  }
}

void term_all(const Term& t, VarSet& out) {
  switch (t.kind()) {
    case Term::Kind::Var: out.insert(t.var()); return;
    case Term::Kind::App:
      term_all(t.fn(), out);
      term_all(t.arg(), out);
      return;
    case Term::Kind::Lam:
      out.insert(t.var());
      term_all(t.body(), out);
      return;
    case Term::Kind::Bang: term_all(t.inner(), out); return;
  }
}

void formula_free(const Formula& f, VarSet& bound, VarSet& out) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Bot: return;
    case K::Eq:
    case K::Pred:
      for (const auto& t : f.args())
        if (t.is_var() && !bound.count(t.var())) out.insert(t.var());
      return;
    case K::Imp:
    case K::And:
      formula_free(f.left(), bound, out);
      formula_free(f.right(), bound, out);
      return;
    case K::Forall: {
      bool added = bound.insert(f.var()).second;
      formula_free(f.body(), bound, out);
      if (added) bound.erase(f.var());
      return;
    }
    case K::K:
    case K::Just:
    case K::Trust: formula_free(f.body(), bound, out); return;
  }
}

void formula_all(const Formula& f, VarSet& out) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Bot: return;
    case K::Eq:
    case K::Pred:
      for (const auto& t : f.args()) term_all(t, out);
      return;
    case K::Imp:
    case K::And:
      formula_all(f.left(), out);
      formula_all(f.right(), out);
      return;
    case K::Forall:
      out.insert(f.var());
      formula_all(f.body(), out);
      return;
    case K::K: formula_all(f.body(), out); return;
    case K::Just:
    case K::Trust:
      term_all(f.term(), out);
      formula_all(f.body(), out);
      return;
  }
}

void occurrences(const Formula& f, std::vector<Term>& out) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Bot: return;
    case K::Eq:
    case K::Pred:
      for (const auto& t : f.args()) out.push_back(t);
      return;
    case K::Imp:
    case K::And:
      occurrences(f.left(), out);
      occurrences(f.right(), out);
      return;
    case K::Forall:
    case K::K:
    case K::Just:
    case K::Trust: occurrences(f.body(), out); return;
  }
}

Term atomic_subst(const Term& t, const Term& u, Var v) {
  return t.is_var() && t.var() == v ? u : t;
}

std::vector<Term> map_args(const std::vector<Term>& args, const Term& u, Var v) {
  std::vector<Term> out;
  out.reserve(args.size());
  for (const auto& t : args) out.push_back(atomic_subst(t, u, v));
  return out;
}

template <bool Opaque>
Formula subst(const Formula& a, const Term& u, Var v) {
  using K = Formula::Kind;
  switch (a.kind()) {
    case K::Bot: return a;
    case K::Eq: return Formula::eq(atomic_subst(a.lhs(), u, v), atomic_subst(a.rhs(), u, v));
    case K::Pred: return Formula::pred(a.sym(), map_args(a.args(), u, v));
    case K::Imp: return Formula::imp(subst<Opaque>(a.left(), u, v), subst<Opaque>(a.right(), u, v));
    case K::And: return Formula::conj(subst<Opaque>(a.left(), u, v), subst<Opaque>(a.right(), u, v));
    case K::Forall: {
      Var y = a.var();
      if (y == v) return a;
      if (!(u.is_var() && u.var() == y)) return Formula::forall(y, subst<Opaque>(a.body(), u, v));
      VarSet avoid = all_vars(a);
      term_all(u, avoid);
      avoid.insert(v);
      Var z = fresh_var(avoid);
      Formula renamed = subst<Opaque>(a.body(), Term::var(z), y);
      return Formula::forall(z, subst<Opaque>(renamed, u, v));
    }
    case K::K:
      if constexpr (Opaque) return a;
      else return Formula::know(a.agent(), subst<Opaque>(a.body(), u, v));
    case K::Just:
      if constexpr (Opaque) return a;
      else return Formula::just(a.term(), subst<Opaque>(a.body(), u, v));
    case K::Trust:
      if constexpr (Opaque) return a;
      else return Formula::trust(a.agent(), atomic_subst(a.term(), u, v), subst<Opaque>(a.body(), u, v));
  }
  return a;
}

void lint(const Formula& a, const Term& u, Var v, std::vector<std::string>& out) {
  using K = Formula::Kind;
  switch (a.kind()) {
    case K::Bot:
    case K::Eq:
    case K::Pred: return;
    case K::Imp:
    case K::And:
      lint(a.left(), u, v, out);
      lint(a.right(), u, v, out);
      return;
    case K::Forall: {
      Var y = a.var();
      if (y == v) return;
      if (!u.is_var() && all_vars(u).count(y) && free_vars(a.body()).count(v))
        out.push_back("substituting " + to_string(u) + " for " + names::var_name(v) + " under forall " +
                      names::var_name(y) + ": the compound term mentions the binder and no renaming applies");
      lint(a.body(), u, v, out);
      return;
    }
    case K::K:
    case K::Just:
    case K::Trust: lint(a.body(), u, v, out); return;
  }
}

}  // namespace

VarSet free_vars(const Term& t) {
  VarSet bound, out;
  term_free(t, bound, out);
  return out;
}

VarSet all_vars(const Term& t) {
  VarSet out;
  term_all(t, out);
  return out;
}

VarSet free_vars(const Formula& f) {
  VarSet bound, out;
  formula_free(f, bound, out);
  return out;
}

VarSet all_vars(const Formula& f) {
  VarSet out;
  formula_all(f, out);
  return out;
}

std::vector<Term> term_occurrences(const Formula& f) {
  std::vector<Term> out;
  occurrences(f, out);
  return out;
}

bool occurs_in(const Term& t, const Formula& f) {
  for (const auto& o : term_occurrences(f))
    if (o == t) return true;
  return false;
}

Var fresh_var(const VarSet& avoid) {
  uint32_t i = 0;
  for (Var v : avoid) {  // ordered ascending
    if (v.id != i) break;
    ++i;
  }
  return Var{i};
}

Formula subst_quant(const Formula& a, const Term& u, Var v) { return subst<false>(a, u, v); }
Formula subst_ident(const Formula& a, const Term& u, Var v) { return subst<true>(a, u, v); }

Formula subst_quant_many(const Formula& a, const std::vector<std::pair<Var, Term>>& sigma) {
  VarSet avoid = all_vars(a);
  for (const auto& [x, t] : sigma) {
    avoid.insert(x);
    term_all(t, avoid);
  }
  std::vector<std::pair<Var, Term>> staged;
  Formula out = a;
  for (const auto& [x, t] : sigma) {
    if (t.is_var() && t.var() == x) continue;
    Var z = fresh_var(avoid);
    avoid.insert(z);
    out = subst_quant(out, Term::var(z), x);
    staged.emplace_back(z, t);
  }
  for (const auto& [z, t] : staged) out = subst_quant(out, t, z);
  return out;
}

std::vector<std::string> lint_subst_quant(const Formula& a, const Term& u, Var v) {
  std::vector<std::string> out;
  lint(a, u, v, out);
  return out;
}

bool contains_modal(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Bot:
    case K::Eq:
    case K::Pred: return false;
    case K::Imp:
    case K::And: return contains_modal(f.left()) || contains_modal(f.right());
    case K::Forall: return contains_modal(f.body());
    case K::K:
    case K::Just:
    case K::Trust: return true;
  }
  return false;
}

}  // namespace tl
