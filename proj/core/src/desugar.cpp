// Copyright 2026 The trustlogic Authors
// SPDX-License-Identifier: Apache-2.0

#include <map>
#include <set>

#include "trustlogic/proof.hpp"

namespace tl::proof {
namespace {

using K = Formula::Kind;

bool formula_has_trust(const Formula& f) {
  switch (f.kind()) {
    case K::Trust: return true;
    case K::Imp:
    case K::And: return formula_has_trust(f.left()) || formula_has_trust(f.right());
    case K::Forall:
    case K::K:
    case K::Just: return formula_has_trust(f.body());
    default: return false;
  }
}

class Desugarer {
 public:
  void collect(const Derivation& d) {
    if (d.rule == Rule::TIntro) {
      bind(d.conclusion.concl, d.premises[0]->conclusion.concl);
    } else if (d.rule == Rule::TElim && d.premises[0]->rule == Rule::Ax) {
      bind(d.premises[0]->conclusion.concl, d.conclusion.concl);
    }
    for (const auto& p : d.premises) collect(*p);
  }

  DerivationPtr rewrite(const DerivationPtr& d) {
    if (d->rule == Rule::TIntro) return rewrite(d->premises[0]);
    if (d->rule == Rule::TElim) {
      if (d->premises[0]->rule == Rule::Ax && !conflicted_.count(d->premises[0]->conclusion.concl))
        return build::ax(map(d->conclusion.concl));
      note("t-elim over a derived trust premise kept: " + to_string(d->premises[0]->conclusion.concl));
    }
    std::vector<DerivationPtr> ps;
    for (const auto& p : d->premises) ps.push_back(rewrite(p));
    Sequent s;
    for (const auto& f : d->conclusion.ctx) s.ctx.push_back(map(f));
    s.concl = map(d->conclusion.concl);
    Params params = d->params;
    if (params.formula) params.formula = map(*params.formula);
    Rule r = d->rule;
    if (r == Rule::NecKT) {
      bool all_k = true;
      for (const auto& f : s.ctx) all_k = all_k && f.is(K::K);
      if (all_k) {
        r = Rule::KNec;
      } else {
        note("nec-kt with a trust hypothesis that has no K form");
      }
    }
    return build::raw(r, std::move(params), std::move(ps), std::move(s));
  }

  std::vector<std::string> residual() const { return {notes_.begin(), notes_.end()}; }

 private:
  void bind(const Formula& trust, const Formula& k) {
    auto [it, fresh] = map_.emplace(trust, k);
    if (!fresh && !(it->second == k)) {
      conflicted_.insert(trust);
      note("trust formula with two K readings: " + to_string(trust));
    }
  }

  Formula map(const Formula& f) {
    if (!formula_has_trust(f)) return f;
    switch (f.kind()) {
      case K::Trust: {
        auto it = map_.find(f);
        if (it != map_.end() && !conflicted_.count(f)) return it->second;
        note("trust formula without a K reading: " + to_string(f));
        return f;
      }
      case K::Imp: return Formula::imp(map(f.left()), map(f.right()));
      case K::And: return Formula::conj(map(f.left()), map(f.right()));
      case K::Forall: return Formula::forall(f.var(), map(f.body()));
      case K::K: return Formula::know(f.agent(), map(f.body()));
      case K::Just: return Formula::just(f.term(), map(f.body()));
      default: return f;
    }
  }

  void note(std::string s) { notes_.insert(std::move(s)); }

  std::map<Formula, Formula> map_;
  std::set<Formula> conflicted_;
  std::set<std::string> notes_;
};

}  // namespace

DesugarResult desugar_trust(const DerivationPtr& d) {
  if (!mentions_trust(*d)) return {d, {}};
  Desugarer ds;
  ds.collect(*d);
  DerivationPtr out = ds.rewrite(d);
  return {out, ds.residual()};
}

bool mentions_trust(const Derivation& d) {
  if (d.rule == Rule::TIntro || d.rule == Rule::TElim || d.rule == Rule::NecKT) return true;
  if (formula_has_trust(d.conclusion.concl)) return true;
  for (const auto& f : d.conclusion.ctx)
    if (formula_has_trust(f)) return true;
  for (const auto& p : d.premises)
    if (mentions_trust(*p)) return true;
  return false;
}

}  // namespace tl::proof
