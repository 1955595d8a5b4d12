// Copyright 2026 The trustlogic Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "trustlogic/syntax.hpp"

namespace tl::sem {

using StateId = size_t;
using Elem = size_t;
using Relation = std::set<std::pair<size_t, size_t>>;
using Tuple = std::vector<Elem>;

// Finite model. States and domain elements are referred to by index; the
// name vectors are only for I/O and reports.
struct Model {
  std::vector<std::string> states;
  std::vector<std::string> domain;
  std::map<Agent, Relation> agent_rel;  // agents absent here see only themselves
  Relation gamma;
  std::map<Term, Elem> table;  // rigid: one map for every state
  std::vector<Relation> eq;    // per state
  std::vector<std::map<PredSym, std::set<Tuple>>> pred;
  std::vector<std::map<Term, std::vector<Formula>>> evidence;  // seeds

  // Empty per-state tables sized to `states`.
  void resize_states();
  std::optional<StateId> state(std::string_view name) const;
  std::vector<StateId> successors(const Relation& r, StateId w) const;
  std::vector<StateId> agent_successors(Agent a, StateId w) const;
};

Relation identity_relation(size_t n);

struct Violation {
  std::string condition;  // stable identifier, e.g. "agent-euclidean"
  std::string witness;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  bool has(std::string_view condition) const;
  std::string describe() const;
};

ValidationReport validate_model(const Model& m);

Model read_model(std::string_view text, SymbolTable& symtab);
std::string write_model(const Model& m);

class UnknownTerm : public std::runtime_error {
 public:
  explicit UnknownTerm(const Term& t) : std::runtime_error("unknown term '" + to_string(t) + "'"), term(t) {}
  Term term;
};

class DepthExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Tri { True, False, Exhausted };
const char* to_string(Tri t);

// Least evidence function over the model's seeds, decided per query. Caches
// per state; not thread-safe, use one instance per thread.
class Evidence {
 public:
  explicit Evidence(const Model& m, size_t depth = 6);
  ~Evidence();
  Evidence(const Evidence&) = delete;
  Evidence& operator=(const Evidence&) = delete;

  Tri member(StateId w, const Term& j, const Formula& a);

 private:
  class State;
  State& at(StateId w);
  const Model& m_;
  size_t depth_;
  std::map<StateId, std::unique_ptr<State>> states_;
};

Tri e_member(const Model& m, StateId w, const Term& j, const Formula& a, size_t depth = 6);

// Term images come from the table except for overridden variables; the
// predicate and identity interpretation is that of pred_state.
struct Assignment {
  std::map<Var, Elem> overrides;
  StateId pred_state = 0;

  static Assignment of_state(StateId w) { return Assignment{{}, w}; }
  Assignment variant(Var x, Elem e) const;
  Assignment moved_to(StateId v) const { return Assignment{overrides, v}; }
};

// Not thread-safe (evidence cache); cheap to construct per thread.
class Evaluator {
 public:
  explicit Evaluator(const Model& m, size_t depth = 6);

  bool eval(StateId w, const Assignment& f, const Formula& a);
  bool eval(StateId w, const Formula& a) { return eval(w, Assignment::of_state(w), a); }
  Elem value(const Assignment& f, const Term& t) const;
  const Model& model() const { return m_; }

 private:
  bool eval_just(StateId w, const Assignment& f, const Formula& a);

  const Model& m_;
  Evidence evidence_;
};

bool consequence(const Model& m, const std::vector<Formula>& hyps, const Formula& goal, size_t depth = 6);
bool valid_in(const Model& m, const Formula& a, size_t depth = 6);

Model build_hyper_counterexample();
Model build_intensional_counterexample();
// Two states, full R_a: s, t, u identified at w, only s and u at v; C holds of
// the identified elements; j1 justifies s = u, j2 justifies C(s).
Model build_example2_model();

struct RandomParams {
  std::vector<Term> terms;                         // table domain; must be nonempty
  std::vector<std::pair<PredSym, size_t>> preds;   // symbols with arity
  std::vector<Agent> agents;
  std::vector<Formula> formula_pool;  // seed candidates
  std::vector<Term> evidence_terms;   // seeded terms
  size_t states = 3;
  // 0 gives one element per term (injective table); a smaller value folds
  // the remaining terms onto random elements.
  size_t domain = 0;
  double agent_edge_p = 0.3;
  double gamma_edge_p = 0.3;
  double eq_p = 0.15;
  double pred_p = 0.4;
  double seed_p = 0.3;
};

// Random draw repaired into a model: closures for R_a, gamma, identity,
// uniform replacement and seed monotonicity. Deterministic per seed.
Model random_model(const RandomParams& p, uint64_t seed);

}  // namespace tl::sem
