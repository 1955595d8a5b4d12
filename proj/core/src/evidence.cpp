// Copyright 2026 The trustlogic Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "trustlogic/semantics.hpp"

namespace tl::sem {
namespace {

using K = Formula::Kind;
using FormulaSet = std::unordered_set<Formula, FormulaHash>;

// Closures larger than this are abandoned and the state marked exhausted.
constexpr size_t kMaxClosure = 20000;

// Replaces the index-th whole-argument occurrence of t outside K, Just and
// Trust by x. `seen` counts occurrences visited so far.
Formula abstract_occurrence(const Formula& f, const Term& t, size_t index, Var x, size_t& seen) {
  auto swap_args = [&](std::vector<Term> args) {
    for (auto& a : args) {
      if (a == t) {
        if (seen == index) a = Term::var(x);
        ++seen;
      }
    }
    return args;
  };
  switch (f.kind()) {
    case K::Eq: {
      auto args = swap_args(f.args());
      return Formula::eq(args[0], args[1]);
    }
    case K::Pred: return Formula::pred(f.sym(), swap_args(f.args()));
    case K::Imp: {
      Formula l = abstract_occurrence(f.left(), t, index, x, seen);
      return Formula::imp(l, abstract_occurrence(f.right(), t, index, x, seen));
    }
    case K::And: {
      Formula l = abstract_occurrence(f.left(), t, index, x, seen);
      return Formula::conj(l, abstract_occurrence(f.right(), t, index, x, seen));
    }
    case K::Forall: return Formula::forall(f.var(), abstract_occurrence(f.body(), t, index, x, seen));
    default: return f;
  }
}

size_t count_occurrences(const Formula& f, const Term& t) {
  size_t seen = 0;
  abstract_occurrence(f, t, static_cast<size_t>(-1), Var{}, seen);
  return seen;
}

// Every A(s/x) with A(t/x) = f, one occurrence of t at a time.
std::vector<Formula> single_rewrites(const Formula& f, const Term& t, const Term& s) {
  std::vector<Formula> out;
  size_t n = count_occurrences(f, t);
  if (n == 0) return out;
  VarSet avoid = all_vars(f);
  for (Var v : all_vars(t)) avoid.insert(v);
  for (Var v : all_vars(s)) avoid.insert(v);
  Var x = fresh_var(avoid);
  for (size_t i = 0; i < n; ++i) {
    size_t seen = 0;
    Formula a = abstract_occurrence(f, t, i, x, seen);
    if (!(subst_ident(a, t, x) == f)) continue;  // occurrence sits under a binder it would escape
    out.push_back(subst_ident(a, s, x));
  }
  return out;
}

}  // namespace

class Evidence::State {
 public:
  State(const Model& m, StateId w, size_t depth) {
    for (auto [u, v] : m.gamma) {
      if (v != w) continue;
      for (const auto& [t, fs] : m.evidence[u]) seeds_[t].insert(fs.begin(), fs.end());
    }
    if (!m.gamma.count({w, w}))
      for (const auto& [t, fs] : m.evidence[w]) seeds_[t].insert(fs.begin(), fs.end());
    build(depth);
  }

  Tri member(const Term& j, const Formula& a) {
    if (mem(j, a)) return Tri::True;
    return exhausted_ ? Tri::Exhausted : Tri::False;
  }

 private:
  void build(size_t depth) {
    bool stable = false;
    for (size_t round = 0; round <= depth && !stable; ++round) {
      memo_.clear();
      FormulaSet any;
      for (const auto& [t, fs] : seeds_) any.insert(fs.begin(), fs.end());
      for (bool grew = true; grew;) {
        close(any);
        grew = false;
        std::vector<Formula> add;
        for (const auto& f : any) {
          if (!f.is(K::Imp) || any.count(f.right())) continue;
          const Formula& a = f.left();
          if (any.count(a) || (a.is(K::Just) && bang_mem(a))) add.push_back(f.right());
        }
        for (auto& f : add) grew |= any.insert(std::move(f)).second;
      }
      std::vector<std::pair<Term, Term>> next;
      for (const auto& f : any)
        if (f.is(K::Eq) && !(f.lhs() == f.rhs())) {
          next.emplace_back(f.lhs(), f.rhs());
          next.emplace_back(f.rhs(), f.lhs());
        }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      stable = next == jset_;
      jset_ = std::move(next);
    }
    if (!stable) exhausted_ = true;
    memo_.clear();
  }

  // k:Y holds in E(!k) exactly when Y is in E(k).
  bool bang_mem(const Formula& just) { return mem(just.term(), just.body()); }

  bool mem(const Term& j, const Formula& a) {
    if (j.is_bang() && a.is(K::Just) && a.term() == j.inner() && mem(j.inner(), a.body())) return true;
    return set_of(j)->count(a) > 0;
  }

  std::shared_ptr<const FormulaSet> set_of(const Term& j) {
    if (auto it = memo_.find(j); it != memo_.end()) return it->second;
    FormulaSet s;
    if (auto it = seeds_.find(j); it != seeds_.end()) s.insert(it->second.begin(), it->second.end());
    if (j.is_app()) {
      auto major = set_of(j.fn());
      for (const auto& f : *major)
        if (f.is(K::Imp) && mem(j.arg(), f.left())) s.insert(f.right());
    }
    close(s);
    auto ptr = std::make_shared<const FormulaSet>(std::move(s));
    memo_.emplace(j, ptr);
    return ptr;
  }

  // Closure under justified identity rewriting with the current jset.
  void close(FormulaSet& s) {
    if (jset_.empty()) return;
    std::deque<Formula> work(s.begin(), s.end());
    while (!work.empty()) {
      Formula f = std::move(work.front());
      work.pop_front();
      for (const auto& [t, u] : jset_) {
        for (auto& g : single_rewrites(f, t, u)) {
          if (s.size() >= kMaxClosure) {
            exhausted_ = true;
            return;
          }
          if (s.insert(g).second) work.push_back(std::move(g));
        }
      }
    }
  }

  std::map<Term, FormulaSet> seeds_;
  std::vector<std::pair<Term, Term>> jset_;
  std::unordered_map<Term, std::shared_ptr<const FormulaSet>, TermHash> memo_;
  bool exhausted_ = false;
};

Evidence::Evidence(const Model& m, size_t depth) : m_(m), depth_(depth) {}
Evidence::~Evidence() = default;

Evidence::State& Evidence::at(StateId w) {
  auto it = states_.find(w);
  if (it == states_.end()) it = states_.emplace(w, std::make_unique<State>(m_, w, depth_)).first;
  return *it->second;
}

Tri Evidence::member(StateId w, const Term& j, const Formula& a) { return at(w).member(j, a); }

Tri e_member(const Model& m, StateId w, const Term& j, const Formula& a, size_t depth) {
  Evidence e(m, depth);
  return e.member(w, j, a);
}

const char* to_string(Tri t) {
  switch (t) {
    case Tri::True: return "true";
    case Tri::False: return "false";
    case Tri::Exhausted: return "depth-exhausted";
  }
  return "?";
}

}  // namespace tl::sem
