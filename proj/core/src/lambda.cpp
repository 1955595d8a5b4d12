// Copyright 2026 The trustlogic Authors
// SPDX-License-Identifier: Apache-2.0

#include "trustlogic/lambda.hpp"

#include <deque>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace tl::lambda {
namespace {

Term subst_rec(const Term& t, const Term& s, Var x, const VarSet& fv_s) {
  switch (t.kind()) {
    case Term::Kind::Var: return t.var() == x ? s : t;
    case Term::Kind::App: {
      Term f = subst_rec(t.fn(), s, x, fv_s);
      Term a = subst_rec(t.arg(), s, x, fv_s);
      if (f.identity() == t.fn().identity() && a.identity() == t.arg().identity()) return t;
      return Term::app(f, a);
    }
    case Term::Kind::Lam: {
      Var y = t.var();
      if (y == x || !free_vars(t.body()).count(x)) return t;
      if (fv_s.count(y)) {
        VarSet avoid = fv_s;
        VarSet vt = all_vars(t);
        avoid.insert(vt.begin(), vt.end());
        Var z = fresh_var(avoid);
        Term renamed = subst_rec(t.body(), Term::var(z), y, VarSet{z});
        return Term::lam(z, subst_rec(renamed, s, x, fv_s));
      }
      return Term::lam(y, subst_rec(t.body(), s, x, fv_s));
    }
    case Term::Kind::Bang: {
      Term i = subst_rec(t.inner(), s, x, fv_s);
      return i.identity() == t.inner().identity() ? t : Term::bang(i);
    }
  }
  return t;
}

bool is_redex(const Term& t) { return t.is_app() && t.fn().is_lam(); }

void collect(const Term& t, Path& here, std::vector<Path>& out) {
  if (is_redex(t)) out.push_back(here);
  switch (t.kind()) {
    case Term::Kind::Var: return;
    case Term::Kind::App:
      here.push_back(0);
      collect(t.fn(), here, out);
      here.back() = 1;
      collect(t.arg(), here, out);
      here.pop_back();
      return;
    case Term::Kind::Lam:
    case Term::Kind::Bang:
      here.push_back(0);
      collect(t.kind() == Term::Kind::Lam ? t.body() : t.inner(), here, out);
      here.pop_back();
      return;
  }
}

Term step_at(const Term& t, const Path& p, size_t i) {
  if (i == p.size()) {
    if (!is_redex(t)) throw std::invalid_argument("path does not address a redex");
    return term_subst(t.fn().body(), t.arg(), t.fn().var());
  }
  switch (t.kind()) {
    case Term::Kind::App:
      if (p[i] == 0) return Term::app(step_at(t.fn(), p, i + 1), t.arg());
      if (p[i] == 1) return Term::app(t.fn(), step_at(t.arg(), p, i + 1));
      break;
    case Term::Kind::Lam:
      if (p[i] == 0) return Term::lam(t.var(), step_at(t.body(), p, i + 1));
      break;
    case Term::Kind::Bang:
      if (p[i] == 0) return Term::bang(step_at(t.inner(), p, i + 1));
      break;
    case Term::Kind::Var: break;
  }
  throw std::invalid_argument("path leaves the term");
}

void key_rec(const Term& t, std::vector<Var>& binders, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::Var: {
      for (size_t k = binders.size(); k-- > 0;) {
        if (binders[k] == t.var()) {
          out += '#' + std::to_string(binders.size() - 1 - k) + ' ';
          return;
        }
      }
      out += 'v' + std::to_string(t.var().id) + ' ';
      return;
    }
    case Term::Kind::App:
      out += '(';
      key_rec(t.fn(), binders, out);
      key_rec(t.arg(), binders, out);
      out += ')';
      return;
    case Term::Kind::Lam:
      out += '\\';
      binders.push_back(t.var());
      key_rec(t.body(), binders, out);
      binders.pop_back();
      return;
    case Term::Kind::Bang:
      out += '!';
      key_rec(t.inner(), binders, out);
      return;
  }
}

Term v(const char* name) { return Term::var(name); }
Var n(const char* name) { return names::var(name); }

}  // namespace

const char* to_string(Reach r) {
  switch (r) {
    case Reach::Yes: return "yes";
    case Reach::No: return "no";
    case Reach::FuelExhausted: return "fuel-exhausted";
  }
  return "?";
}

Term term_subst(const Term& t, const Term& s, Var x) { return subst_rec(t, s, x, free_vars(s)); }

std::vector<Path> redexes(const Term& t) {
  std::vector<Path> out;
  Path here;
  collect(t, here, out);
  return out;
}

const Term& subterm_at(const Term& t, const Path& p) {
  const Term* cur = &t;
  for (uint8_t c : p) {
    switch (cur->kind()) {
      case Term::Kind::App: cur = c == 0 ? &cur->fn() : &cur->arg(); break;
      case Term::Kind::Lam: cur = &cur->body(); break;
      case Term::Kind::Bang: cur = &cur->inner(); break;
      case Term::Kind::Var: throw std::invalid_argument("path leaves the term");
    }
  }
  return *cur;
}

Term step(const Term& t, const Path& p) { return step_at(t, p, 0); }

std::vector<Term> reducts(const Term& t) {
  std::vector<Term> out;
  for (const auto& p : redexes(t)) out.push_back(step(t, p));
  return out;
}

Reach reduces_to(const Term& t, const Term& u, const ReduceLimits& lim) {
  if (t == u) return Reach::Yes;
  std::unordered_set<Term> seen{t};
  std::vector<Term> frontier{t};
  for (uint64_t level = 0;; ++level) {
    std::vector<Term> next;
    for (const auto& x : frontier)
      for (auto& r : reducts(x)) {
        if (r == u) return level < lim.fuel ? Reach::Yes : Reach::FuelExhausted;
        if (seen.insert(r).second) next.push_back(std::move(r));
      }
    if (next.empty()) return Reach::No;
    if (seen.size() > lim.max_visited) return Reach::FuelExhausted;
    if (level + 1 >= lim.fuel) {
      // Out of fuel: exhausted only if the search could still move.
      for (const auto& x : next)
        for (const auto& r : reducts(x))
          if (r == u || !seen.count(r)) return Reach::FuelExhausted;
      return Reach::No;
    }
    frontier = std::move(next);
  }
}

Trace normal_order(const Term& t, uint64_t fuel) {
  Trace tr;
  tr.terms.push_back(t);
  for (uint64_t i = 0; i < fuel; ++i) {
    auto rs = redexes(tr.terms.back());
    if (rs.empty()) break;
    tr.terms.push_back(step(tr.terms.back(), rs.front()));
  }
  tr.normal = redexes(tr.terms.back()).empty();
  return tr;
}

std::string alpha_key(const Term& t) {
  std::string out;
  std::vector<Var> binders;
  key_rec(t, binders, out);
  return out;
}

bool alpha_equivalent(const Term& a, const Term& b) { return a == b || alpha_key(a) == alpha_key(b); }

Reach joinable(const Term& a, const Term& b, uint64_t fuel, size_t max_terms) {
  struct Side {
    std::unordered_set<std::string> keys;
    std::vector<Term> frontier;
    bool closed = false;
  };
  Side s[2];
  s[0].keys.insert(alpha_key(a));
  s[0].frontier = {a};
  s[1].keys.insert(alpha_key(b));
  s[1].frontier = {b};
  if (s[1].keys.count(*s[0].keys.begin())) return Reach::Yes;
  for (uint64_t level = 0; level < fuel; ++level) {
    for (int k = 0; k < 2; ++k) {
      Side& me = s[k];
      Side& other = s[1 - k];
      if (me.closed) continue;
      std::vector<Term> next;
      for (const auto& x : me.frontier)
        for (auto& r : reducts(x)) {
          std::string key = alpha_key(r);
          if (other.keys.count(key)) return Reach::Yes;
          if (me.keys.insert(std::move(key)).second) next.push_back(std::move(r));
        }
      me.frontier = std::move(next);
      me.closed = me.frontier.empty();
      if (me.keys.size() > max_terms) return Reach::FuelExhausted;
    }
    if (s[0].closed && s[1].closed) return Reach::No;
  }
  return Reach::FuelExhausted;
}

Term pair_operator() { return Term::lam(n("x"), Term::lam(n("y"), Term::lam(n("z"), Term::app(Term::app(v("z"), v("x")), v("y"))))); }

Term encode_pair(const Term& t, const Term& s) {
  Term applied = Term::app(Term::app(pair_operator(), t), s);
  return step(step(applied, Path{0}), Path{});
}

Term first_projection() { return Term::lam(n("z1"), Term::lam(n("z2"), v("z1"))); }
Term second_projection() { return Term::lam(n("z1"), Term::lam(n("z2"), v("z2"))); }
Term nil() { return Term::lam(n("x"), Term::lam(n("y"), v("y"))); }

Term encode_list(const std::vector<Term>& items) {
  Term out = nil();
  for (auto it = items.rbegin(); it != items.rend(); ++it) out = encode_pair(*it, out);
  return out;
}

Term church(uint64_t k) {
  Term body = v("x");
  for (uint64_t i = 0; i < k; ++i) body = Term::app(v("f"), body);
  return Term::lam(n("f"), Term::lam(n("x"), body));
}

}  // namespace tl::lambda
