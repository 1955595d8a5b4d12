// Copyright 2026 The trustlogic Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "trustlogic/semantics.hpp"

namespace tl::sem {
namespace {

void reflexive_euclidean_closure(Relation& r, size_t n) {
  for (size_t w = 0; w < n; ++w) r.insert({w, w});
  for (bool grew = true; grew;) {
    grew = false;
    for (size_t w = 0; w < n; ++w) {
      std::vector<size_t> succ;
      for (auto it = r.lower_bound({w, 0}); it != r.end() && it->first == w; ++it) succ.push_back(it->second);
      for (size_t x : succ)
        for (size_t y : succ) grew |= r.insert({x, y}).second;
    }
  }
}

void reflexive_transitive_closure(Relation& r, size_t n) {
  for (size_t w = 0; w < n; ++w) r.insert({w, w});
  for (size_t k = 0; k < n; ++k)
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        if (r.count({i, k}) && r.count({k, j})) r.insert({i, j});
}

Relation equivalence_closure(const Relation& r, size_t n) {
  std::vector<size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [a, b] : r) parent[find(a)] = find(b);
  Relation out;
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      if (find(a) == find(b)) out.insert({a, b});
  return out;
}

void replacement_closure(std::set<Tuple>& tuples, const Relation& eq) {
  std::vector<Tuple> work(tuples.begin(), tuples.end());
  while (!work.empty()) {
    Tuple tup = std::move(work.back());
    work.pop_back();
    for (size_t i = 0; i < tup.size(); ++i)
      for (auto it = eq.lower_bound({tup[i], 0}); it != eq.end() && it->first == tup[i]; ++it) {
        Tuple moved = tup;
        for (auto& e : moved)
          if (e == tup[i]) e = it->second;
        if (tuples.insert(moved).second) work.push_back(std::move(moved));
      }
  }
}

void all_tuples(size_t arity, size_t u, Tuple& cur, const std::function<void(const Tuple&)>& f) {
  if (cur.size() == arity) {
    f(cur);
    return;
  }
  for (Elem e = 0; e < u; ++e) {
    cur.push_back(e);
    all_tuples(arity, u, cur, f);
    cur.pop_back();
  }
}

Model skeleton(std::vector<std::string> states, std::vector<std::string> domain) {
  Model m;
  m.states = std::move(states);
  m.domain = std::move(domain);
  m.resize_states();
  m.gamma = identity_relation(m.states.size());
  for (auto& e : m.eq) e = identity_relation(m.domain.size());
  return m;
}

Relation full_relation(size_t n) {
  Relation r;
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) r.insert({a, b});
  return r;
}

}  // namespace

Model build_hyper_counterexample() {
  Model m = skeleton({"w", "v"}, {"d0", "d1", "d2", "d3"});
  m.gamma.insert({0, 1});
  m.agent_rel[names::agent("a")] = identity_relation(2);
  const char* terms[] = {"x", "y", "j", "k"};
  for (size_t i = 0; i < 4; ++i) m.table[Term::var(terms[i])] = i;
  PredSym p = names::pred("P"), q = names::pred("Q");
  Formula pq = Formula::conj(Formula::pred(p, {Term::var("x")}), Formula::pred(q, {Term::var("y")}));
  for (size_t w = 0; w < 2; ++w) {
    for (Elem e = 0; e < 4; ++e) {
      m.pred[w][p].insert({e});
      m.pred[w][q].insert({e});
    }
    m.evidence[w][Term::var("j")] = {pq};
  }
  return m;
}

Model build_intensional_counterexample() {
  Model m = skeleton({"w", "v"}, {"d0", "d1"});
  m.agent_rel[names::agent("a")] = full_relation(2);
  m.table[Term::var("t")] = 0;
  m.table[Term::var("s")] = 1;
  m.eq[0] = full_relation(2);
  PredSym p = names::pred("P");
  m.pred[0][p] = {{0}, {1}};
  m.pred[1][p] = {{0}};
  return m;
}

Model build_example2_model() {
  Model m = skeleton({"w", "v"}, {"ds", "dt", "du", "dj1", "dj2"});
  m.agent_rel[names::agent("a")] = full_relation(2);
  const char* terms[] = {"s", "t", "u", "j1", "j2"};
  for (size_t i = 0; i < 5; ++i) m.table[Term::var(terms[i])] = i;
  m.eq[0] = equivalence_closure({{0, 1}, {1, 2}}, 5);
  m.eq[1] = equivalence_closure({{0, 2}}, 5);
  PredSym c = names::pred("C");
  m.pred[0][c] = {{0}, {1}, {2}};
  m.pred[1][c] = {{0}, {2}};
  Term s = Term::var("s"), u = Term::var("u");
  for (size_t w = 0; w < 2; ++w) {
    m.evidence[w][Term::var("j1")] = {Formula::eq(s, u)};
    m.evidence[w][Term::var("j2")] = {Formula::pred(c, {s})};
  }
  return m;
}

Model random_model(const RandomParams& p, uint64_t seed) {
  if (p.terms.empty()) throw std::invalid_argument("random_model needs at least one table term");
  std::vector<Term> terms;
  for (const auto& t : p.terms)
    if (std::find(terms.begin(), terms.end(), t) == terms.end()) terms.push_back(t);
  std::mt19937_64 rng(seed);
  auto coin = [&](double prob) { return std::bernoulli_distribution(prob)(rng); };
  const size_t n = std::max<size_t>(1, p.states);

  std::vector<std::string> states, domain;
  for (size_t i = 0; i < n; ++i) states.push_back("w" + std::to_string(i));
  size_t u = p.domain == 0 ? terms.size() : std::min(p.domain, terms.size());
  for (size_t i = 0; i < u; ++i) domain.push_back("d" + std::to_string(i));
  Model m = skeleton(std::move(states), std::move(domain));

  // Table: the first u terms hit distinct elements so every element is named.
  std::vector<Elem> perm(u);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (size_t i = 0; i < terms.size(); ++i) {
    Elem e = i < u ? perm[i] : std::uniform_int_distribution<Elem>(0, u - 1)(rng);
    m.table.emplace(terms[i], e);
  }

  for (Agent a : p.agents) {
    Relation r;
    for (size_t x = 0; x < n; ++x)
      for (size_t y = 0; y < n; ++y)
        if (x != y && coin(p.agent_edge_p)) r.insert({x, y});
    reflexive_euclidean_closure(r, n);
    m.agent_rel[a] = std::move(r);
  }
  for (size_t x = 0; x < n; ++x)
    for (size_t y = 0; y < n; ++y)
      if (x != y && coin(p.gamma_edge_p)) m.gamma.insert({x, y});
  reflexive_transitive_closure(m.gamma, n);

  for (size_t w = 0; w < n; ++w) {
    Relation r;
    for (size_t a = 0; a < u; ++a)
      for (size_t b = a + 1; b < u; ++b)
        if (coin(p.eq_p)) r.insert({a, b});
    m.eq[w] = equivalence_closure(r, u);
    for (const auto& [sym, arity] : p.preds) {
      auto& tuples = m.pred[w][sym];
      Tuple cur;
      all_tuples(arity, u, cur, [&](const Tuple& t) {
        if (coin(p.pred_p)) tuples.insert(t);
      });
      replacement_closure(tuples, m.eq[w]);
    }
    for (const auto& j : p.evidence_terms)
      for (const auto& f : p.formula_pool)
        if (coin(p.seed_p)) m.evidence[w][j].push_back(f);
  }

  // Seeds flow forward along gamma (already transitive).
  std::vector<std::map<Term, std::vector<Formula>>> grown = m.evidence;
  for (auto [w, v] : m.gamma) {
    if (w == v) continue;
    for (const auto& [j, fs] : m.evidence[w]) {
      auto& dst = grown[v][j];
      for (const auto& f : fs)
        if (std::find(dst.begin(), dst.end(), f) == dst.end()) dst.push_back(f);
    }
  }
  m.evidence = std::move(grown);
  return m;
}

}  // namespace tl::sem
