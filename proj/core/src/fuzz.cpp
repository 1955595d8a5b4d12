// Copyright 2026 The trustlogic Authors
// SPDX-License-Identifier: Apache-2.0

#include "trustlogic/fuzz.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tl::fuzz {
namespace {

using K = Formula::Kind;

struct Vocabulary {
  std::vector<Term> terms;
  std::vector<Term> evidence;
  std::map<PredSym, size_t> preds;
  std::set<Agent> agents;
  std::vector<Formula> subformulas;
  bool trust = false;

  template <class T>
  static void add_unique(std::vector<T>& v, const T& x) {
    if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
  }

  void walk(const Formula& f) {
    add_unique(subformulas, f);
    switch (f.kind()) {
      case K::Bot: break;
      case K::Eq:
      case K::Pred:
        if (f.is(K::Pred)) preds[f.sym()] = f.args().size();
        for (const auto& t : f.args()) add_unique(terms, t);
        break;
      case K::Imp:
      case K::And:
        walk(f.left());
        walk(f.right());
        break;
      case K::Forall: walk(f.body()); break;
      case K::K:
        agents.insert(f.agent());
        walk(f.body());
        break;
      case K::Just:
        add_unique(evidence, f.term());
        add_unique(terms, f.term());
        walk(f.body());
        break;
      case K::Trust:
        trust = true;
        agents.insert(f.agent());
        add_unique(terms, f.term());
        walk(f.body());
        break;
    }
  }
};

std::string show_state(const sem::Model& m, sem::StateId w) { return m.states[w]; }

}  // namespace

sem::RandomParams signature(const proof::Sequent& s) {
  Vocabulary voc;
  for (const auto& f : s.ctx) voc.walk(f);
  voc.walk(s.concl);
  sem::RandomParams p;
  p.terms = voc.terms;
  if (p.terms.empty()) p.terms.push_back(Term::var("c0"));
  p.preds.assign(voc.preds.begin(), voc.preds.end());
  p.agents.assign(voc.agents.begin(), voc.agents.end());
  if (p.agents.empty()) p.agents.push_back(names::agent("a"));
  for (const auto& f : voc.subformulas)
    if (!f.is(K::Trust) && !f.is(K::Bot)) p.formula_pool.push_back(f);
  // Trust is witnessed by any table term, so every table term may carry evidence.
  p.evidence_terms = voc.trust ? p.terms : voc.evidence;
  return p;
}

SoundnessReport soundness(const proof::Sequent& s, size_t models, uint64_t seed, size_t depth) {
  SoundnessReport rep;
  sem::RandomParams p = signature(s);
  const sem::RandomParams base = p;
  for (size_t i = 0; i < models; ++i) {
    // Alternate sparse and dense draws; dense ones make hypotheses hold often
    // enough for the implication to be exercised.
    p = base;
    p.states = 2 + i % 3;
    if (i % 2 == 1) {
      p.eq_p = 0.6;
      p.pred_p = 0.75;
      p.seed_p = 0.8;
      p.agent_edge_p = 0.15;
      p.gamma_edge_p = 0.15;
    }
    sem::Model m = sem::random_model(p, seed * 1000003ULL + i);
    sem::Evaluator ev(m, depth);
    ++rep.models;
    for (sem::StateId w = 0; w < m.states.size(); ++w) {
      ++rep.states;
      try {
        bool ctx = std::all_of(s.ctx.begin(), s.ctx.end(), [&](const Formula& f) { return ev.eval(w, f); });
        if (!ctx) continue;
        ++rep.verified_contexts;
        if (!ev.eval(w, s.concl)) {
          ++rep.violations;
          if (rep.examples.size() < 3)
            rep.examples.push_back("model " + std::to_string(i) + " state " + show_state(m, w) + ":\n" +
                                   sem::write_model(m));
        }
      } catch (const sem::DepthExhausted&) {
        ++rep.undecided;
      }
    }
  }
  return rep;
}

namespace {

SymbolTable& separation_symbols() {
  static SymbolTable st;
  return st;
}

}  // namespace

std::vector<Formula> separation_hyps() {
  auto& st = separation_symbols();
  return {parse_formula("~T[a,t] s = t", st), parse_formula("T[a,u] s = u", st), parse_formula("T[a,s] C(s)", st)};
}

Formula separation_goal() { return parse_formula("T[a,t] C(t)", separation_symbols()); }

SeparationReport example2_separation(size_t models, uint64_t seed, size_t depth) {
  auto& st = separation_symbols();
  const auto hyps = separation_hyps();
  const Formula goal = separation_goal();
  const Formula ts = parse_formula("t = s", st);

  sem::RandomParams base;
  base.terms = {Term::var("s"), Term::var("t"), Term::var("u"), Term::var("j1"), Term::var("j2")};
  base.preds = {{names::pred("C"), 1}};
  base.agents = {names::agent("a")};
  for (const char* f : {"C(s)", "C(u)", "s = u", "u = s", "C(s) -> C(u)"})
    base.formula_pool.push_back(parse_formula(f, st));
  base.evidence_terms = base.terms;

  SeparationReport rep;
  for (size_t i = 0; i < models; ++i) {
    sem::RandomParams p = base;
    p.states = 2 + i % 3;
    p.seed_p = 0.6 + 0.1 * static_cast<double>(i % 4);
    p.eq_p = 0.3;
    p.pred_p = 0.6;
    sem::Model m = sem::random_model(p, seed * 7919ULL + i);
    ++rep.models;
    sem::Evaluator ev(m, depth);
    bool separated = false;
    for (sem::StateId w = 0; w < m.states.size(); ++w) {
      try {
        if (!std::all_of(hyps.begin(), hyps.end(), [&](const Formula& h) { return ev.eval(w, h); })) continue;
        separated = true;
        ++rep.separated_states;
        if (ev.eval(w, ts)) ++rep.identity_states;
        if (ev.eval(w, goal)) ++rep.goal_true;
      } catch (const sem::DepthExhausted&) {
        ++rep.undecided;
      }
    }
    if (!separated) continue;
    ++rep.separated_models;
    try {
      if (sem::consequence(m, hyps, goal, depth)) ++rep.consequence_true;
    } catch (const sem::DepthExhausted&) {
      ++rep.undecided;
    }
  }
  return rep;
}

namespace {

struct VariantVocab {
  Var x = names::var("x");
  Var y = names::var("y");
  std::vector<Term> consts{Term::var("c1"), Term::var("c2"), Term::var("c3")};
  std::vector<Term> all{Term::var("x"), Term::var("y"), Term::var("c1"), Term::var("c2"), Term::var("c3")};
  PredSym p = names::pred("P");
  PredSym q = names::pred("Q");
  std::vector<Agent> agents{names::agent("a"), names::agent("b")};
  std::vector<Term> evidence{Term::var("j"), Term::var("k")};
};

template <class T>
const T& pick(Rng& rng, const std::vector<T>& v) {
  return v[std::uniform_int_distribution<size_t>(0, v.size() - 1)(rng)];
}

Formula random_atom(Rng& rng, const VariantVocab& v, const std::vector<Term>& terms) {
  switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
    case 0: return Formula::eq(pick(rng, terms), pick(rng, terms));
    case 1: return Formula::pred(v.q, {pick(rng, terms), pick(rng, terms)});
    default: return Formula::pred(v.p, {pick(rng, terms)});
  }
}

Formula random_formula(Rng& rng, const VariantVocab& v, const std::vector<Term>& terms, int depth, bool modal) {
  int top = depth <= 0 ? 0 : (modal ? 7 : 4);
  switch (std::uniform_int_distribution<int>(0, top)(rng)) {
    case 0:
    case 1: return random_atom(rng, v, terms);
    case 2:
      return Formula::imp(random_formula(rng, v, terms, depth - 1, modal),
                          std::uniform_int_distribution<int>(0, 4)(rng) == 0
                              ? Formula::bot()
                              : random_formula(rng, v, terms, depth - 1, modal));
    case 3:
      return Formula::conj(random_formula(rng, v, terms, depth - 1, modal),
                           random_formula(rng, v, terms, depth - 1, modal));
    case 4:
      return Formula::forall(std::uniform_int_distribution<int>(0, 1)(rng) ? v.x : v.y,
                             random_formula(rng, v, terms, depth - 1, modal));
    case 5:
      return Formula::know(pick(rng, v.agents), random_formula(rng, v, terms, depth - 1, modal));
    default:
      return Formula::just(pick(rng, v.evidence), random_formula(rng, v, terms, depth - 1, modal));
  }
}

}  // namespace

VariantReport variant_substitution(size_t cases, uint64_t seed, size_t depth) {
  VariantReport rep;
  Rng rng(seed);
  VariantVocab v;
  for (size_t i = 0; i < cases; ++i) {
    sem::RandomParams p;
    p.terms = v.all;
    p.preds = {{v.p, 1}, {v.q, 2}};
    p.agents = v.agents;
    p.evidence_terms = v.evidence;
    for (int k = 0; k < 8; ++k) p.formula_pool.push_back(random_formula(rng, v, v.consts, 2, false));
    p.states = 1 + i % 3;
    sem::Model m = sem::random_model(p, rng());

    Formula a = random_formula(rng, v, v.all, 3, true);
    const Term& t = pick(rng, v.all);
    sem::StateId w = std::uniform_int_distribution<size_t>(0, m.states.size() - 1)(rng);
    ++rep.cases;
    try {
      sem::Evaluator ev(m, depth);
      sem::Assignment g = sem::Assignment::of_state(w);
      sem::Assignment f = g.variant(v.x, ev.value(g, t));
      bool lhs = ev.eval(w, f, a);
      bool rhs = ev.eval(w, g, subst_quant(a, t, v.x));
      if (lhs == rhs) {
        ++rep.agree;
      } else {
        ++rep.disagree;
        if (rep.examples.size() < 5)
          rep.examples.push_back("A = " + to_string(a) + ", t = " + to_string(t) + ", state " + m.states[w] +
                                 ": variant " + (lhs ? "true" : "false") + ", substituted " + (rhs ? "true" : "false"));
      }
    } catch (const std::exception& e) {
      ++rep.errors;
      if (rep.examples.size() < 5) rep.examples.push_back(std::string("error: ") + e.what());
    }
  }
  return rep;
}

Term random_term(Rng& rng, size_t size) {
  static const Var vars[] = {names::var("x"), names::var("y"), names::var("z"), names::var("w")};
  auto var = [&]() { return vars[std::uniform_int_distribution<int>(0, 3)(rng)]; };
  if (size <= 1) return Term::var(var());
  if (size == 2 || std::uniform_int_distribution<int>(0, 2)(rng) == 0) return Term::lam(var(), random_term(rng, size - 1));
  size_t left = std::uniform_int_distribution<size_t>(1, size - 2)(rng);
  return Term::app(random_term(rng, left), random_term(rng, size - 1 - left));
}

ConfluenceReport local_confluence(size_t terms, size_t max_size, uint64_t fuel, uint64_t seed) {
  ConfluenceReport rep;
  Rng rng(seed);
  while (rep.terms < terms) {
    size_t size = std::uniform_int_distribution<size_t>(4, std::max<size_t>(4, max_size))(rng);
    Term t = random_term(rng, size);
    if (lambda::redexes(t).size() < 2) continue;
    ++rep.terms;
    auto rs = lambda::reducts(t);
    bool exhausted = false;
    for (size_t i = 0; i < rs.size(); ++i)
      for (size_t j = i + 1; j < rs.size(); ++j) {
        ++rep.pairs;
        switch (lambda::joinable(rs[i], rs[j], fuel)) {
          case lambda::Reach::Yes: ++rep.joined; break;
          case lambda::Reach::FuelExhausted: exhausted = true; break;
          case lambda::Reach::No:
            ++rep.failures;
            if (rep.examples.size() < 5) rep.examples.push_back(to_string(t));
            break;
        }
      }
    if (exhausted) ++rep.exhausted_terms;
  }
  return rep;
}

}  // namespace tl::fuzz
