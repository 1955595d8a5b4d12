// Copyright 2026 The trustlogic Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "trustlogic/syntax.hpp"

namespace tl::proof {

enum class Rule {
  Ax, ImpI, ImpE, Efq, Dne, AndI, AndE1, AndE2, AllI, AllE,
  EqRefl, EqSym, EqTrans, EqSubst,
  KNec, KDist, KT, K5,
  JApp, JT, JBang, JEqL, JEqR,
  TIntro, TElim, NecKT,
  Weak, Contr, Dup,
};

const char* tag(Rule r);
std::optional<Rule> rule_from_tag(std::string_view tag);
const std::vector<Rule>& all_rules();
size_t arity(Rule r);

struct Params {
  std::optional<Var> var;          // eigenvariable or abstraction variable
  std::optional<Term> term;        // instantiation term
  std::optional<Agent> agent;      // necessitation agent
  std::optional<Formula> formula;  // abstraction A for the identity rules
};

using Context = std::vector<Formula>;

struct Sequent {
  Context ctx;  // multiset; order is presentation only
  Formula concl;
};

bool same_multiset(const Context& a, const Context& b);
Context multiset_sum(const Context& a, const Context& b);

struct Derivation;
using DerivationPtr = std::shared_ptr<const Derivation>;

struct Derivation {
  Rule rule;
  Params params;
  std::vector<DerivationPtr> premises;
  Sequent conclusion;
};

enum class FailKind { SchemaMismatch, SideConditionViolated, SubstitutionMismatch };
const char* to_string(FailKind k);

struct CheckReport {
  bool ok = true;
  std::vector<size_t> path;  // premise indices from the root to the failing node
  Rule rule = Rule::Ax;
  FailKind kind = FailKind::SchemaMismatch;
  std::string condition;  // side-condition name, when kind is SideConditionViolated
  std::string detail;

  std::string describe() const;
};

CheckReport check(const Derivation& d);

class UncheckedWitness : public std::runtime_error {
 public:
  explicit UncheckedWitness(const CheckReport& r)
      : std::runtime_error("witness does not check: " + r.describe()), report(r) {}
  CheckReport report;
};

// Conclusion is Gamma => goal with the support of Gamma inside hyps.
bool derives(const std::vector<Formula>& hyps, const Formula& goal, const Derivation& witness);

struct DesugarResult {
  DerivationPtr derivation;
  std::vector<std::string> residual;  // trust uses that could not be removed
};
DesugarResult desugar_trust(const DerivationPtr& d);
bool mentions_trust(const Derivation& d);

std::vector<DerivationPtr> read_proofs(std::string_view text, SymbolTable& symtab);
std::string write_proof(const Derivation& d);

size_t node_count(const Derivation& d);
const Derivation& node_at(const Derivation& d, const std::vector<size_t>& path);

// Forward construction with computed conclusions. Throws std::logic_error
// when the premises do not have the needed shape; side conditions are left
// to check().
namespace build {
DerivationPtr ax(const Formula& a);
DerivationPtr imp_i(const DerivationPtr& d, const Formula& discharged);
DerivationPtr imp_e(const DerivationPtr& major, const DerivationPtr& minor);
DerivationPtr efq(const DerivationPtr& d, const Formula& atom);
DerivationPtr dne(const DerivationPtr& d);
DerivationPtr and_i(const DerivationPtr& l, const DerivationPtr& r);
DerivationPtr and_e(const DerivationPtr& d, int index);
DerivationPtr all_i(const DerivationPtr& d, Var x, const Formula& body, Var eigen);
DerivationPtr all_e(const DerivationPtr& d, const Term& t);
DerivationPtr eq_refl(const Term& t);
DerivationPtr eq_sym(const DerivationPtr& d);
DerivationPtr eq_trans(const DerivationPtr& l, const DerivationPtr& r);
DerivationPtr eq_subst(const DerivationPtr& eq, const DerivationPtr& d, Var x, const Formula& a);
DerivationPtr k_nec(const DerivationPtr& d, Agent a);
DerivationPtr k_dist(const DerivationPtr& l, const DerivationPtr& r);
DerivationPtr k_t(const DerivationPtr& d);
DerivationPtr k_5(const DerivationPtr& d);
DerivationPtr j_app(const DerivationPtr& l, const DerivationPtr& r);
DerivationPtr j_t(const DerivationPtr& d);
DerivationPtr j_bang(const DerivationPtr& d);
DerivationPtr j_eq_l(const DerivationPtr& eq, const DerivationPtr& d, Var x, const Formula& a);
DerivationPtr j_eq_r(const DerivationPtr& eq, const DerivationPtr& d, Var x, const Formula& a);
DerivationPtr t_intro(const DerivationPtr& d, const Term& subject);
DerivationPtr t_elim(const DerivationPtr& d, Var eigen);
DerivationPtr nec_kt(const DerivationPtr& d, Agent a);
DerivationPtr weak(const DerivationPtr& d, const Context& extra);
DerivationPtr contr(const DerivationPtr& d, const Formula& f);
DerivationPtr dup(const DerivationPtr& d, const Formula& f);
// Arbitrary node, conclusion supplied verbatim (used for negative tests).
DerivationPtr raw(Rule r, Params p, std::vector<DerivationPtr> premises, Sequent conclusion);
}  // namespace build

}  // namespace tl::proof
