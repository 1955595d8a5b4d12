// Copyright 2026 The trustlogic Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tl {

struct Var {
  uint32_t id = 0;
  auto operator<=>(const Var&) const = default;
};

struct Agent {
  uint32_t id = 0;
  auto operator<=>(const Agent&) const = default;
};

struct PredSym {
  uint32_t id = 0;
  auto operator<=>(const PredSym&) const = default;
};

// Process-wide name interning. Variables, agents and predicate symbols live
// in separate index spaces. Safe to call from any thread.
namespace names {
Var var(std::string_view name);
Agent agent(std::string_view name);
PredSym pred(std::string_view name);
// Unnamed variable indices get a printable name on first use (x<i>, primed
// until unique) so that printed output parses back to the same index.
std::string var_name(Var v);
std::string agent_name(Agent a);
std::string pred_name(PredSym p);
}  // namespace names

class Term {
 public:
  enum class Kind : uint8_t { Var, App, Lam, Bang };

  Term() = default;
  static Term var(Var v);
  static Term var(std::string_view name) { return var(names::var(name)); }
  static Term app(const Term& fn, const Term& arg);
  static Term lam(Var binder, const Term& body);
  static Term bang(const Term& inner);

  Kind kind() const;
  bool is_var() const { return kind() == Kind::Var; }
  bool is_app() const { return kind() == Kind::App; }
  bool is_lam() const { return kind() == Kind::Lam; }
  bool is_bang() const { return kind() == Kind::Bang; }
  // Variable of a Var node, binder of a Lam node.
  Var var() const;
  const Term& fn() const;
  const Term& arg() const;
  const Term& body() const;
  const Term& inner() const;

  size_t hash() const;
  size_t size() const;
  bool valid() const { return static_cast<bool>(n_); }
  const void* identity() const { return n_.get(); }

  friend bool operator==(const Term& x, const Term& y);
  friend std::strong_ordering operator<=>(const Term& x, const Term& y);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

struct Term::Node {
  Kind kind;
  Var v;
  Term a, b;
  size_t hash;
  size_t size;
};
inline Term::Kind Term::kind() const { return n_->kind; }
inline Var Term::var() const { return n_->v; }
inline const Term& Term::fn() const { return n_->a; }
inline const Term& Term::arg() const { return n_->b; }
inline const Term& Term::body() const { return n_->a; }
inline const Term& Term::inner() const { return n_->a; }
inline size_t Term::hash() const { return n_->hash; }
inline size_t Term::size() const { return n_->size; }

class Formula {
 public:
  enum class Kind : uint8_t { Bot, Eq, Pred, Imp, And, Forall, K, Just, Trust };

  Formula() = default;
  static Formula bot();
  static Formula eq(const Term& lhs, const Term& rhs);
  static Formula pred(PredSym p, std::vector<Term> args);
  static Formula imp(const Formula& a, const Formula& b);
  static Formula conj(const Formula& a, const Formula& b);
  static Formula forall(Var x, const Formula& body);
  static Formula know(Agent a, const Formula& body);
  static Formula just(const Term& evidence, const Formula& body);
  // No occurrence check here; the parser and the proof kernel enforce it.
  static Formula trust(Agent a, const Term& subject, const Formula& body);
  static Formula neg(const Formula& a) { return imp(a, bot()); }
  static Formula exists(Var x, const Formula& body) { return neg(forall(x, neg(body))); }

  Kind kind() const;
  bool is(Kind k) const { return kind() == k; }
  bool is_atomic() const { return is(Kind::Bot) || is(Kind::Eq) || is(Kind::Pred); }
  const std::vector<Term>& args() const;
  const Term& lhs() const { return args()[0]; }
  const Term& rhs() const { return args()[1]; }
  PredSym sym() const;
  const Formula& left() const;
  const Formula& right() const;
  const Formula& body() const;
  Var var() const;
  Agent agent() const;
  // Evidence of Just, subject of Trust.
  const Term& term() const;

  size_t hash() const;
  bool valid() const { return static_cast<bool>(n_); }
  const void* identity() const { return n_.get(); }

  friend bool operator==(const Formula& x, const Formula& y);
  friend std::strong_ordering operator<=>(const Formula& x, const Formula& y);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

struct Formula::Node {
  Kind kind;
  uint32_t id;  // predicate, binder or agent
  std::vector<Term> args;
  Formula a, b;
  Term t;
  size_t hash;
};
inline Formula::Kind Formula::kind() const { return n_->kind; }
inline const std::vector<Term>& Formula::args() const { return n_->args; }
inline PredSym Formula::sym() const { return PredSym{n_->id}; }
inline const Formula& Formula::left() const { return n_->a; }
inline const Formula& Formula::right() const { return n_->b; }
inline const Formula& Formula::body() const { return n_->a; }
inline Var Formula::var() const { return Var{n_->id}; }
inline Agent Formula::agent() const { return Agent{n_->id}; }
inline const Term& Formula::term() const { return n_->t; }
inline size_t Formula::hash() const { return n_->hash; }

struct TermHash {
  size_t operator()(const Term& t) const { return t.hash(); }
};
struct FormulaHash {
  size_t operator()(const Formula& f) const { return f.hash(); }
};

using VarSet = std::set<Var>;

// Predicate arities. Registration at a second arity is an error.
class SymbolTable {
 public:
  PredSym declare(std::string_view name, size_t arity);
  bool known(PredSym p) const;
  size_t arity(PredSym p) const;
  std::vector<std::pair<PredSym, size_t>> entries() const;

 private:
  mutable std::mutex mu_;
  std::map<PredSym, size_t> arity_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " at offset " + std::to_string(pos)), pos_(pos) {}
  size_t pos() const { return pos_; }

 private:
  size_t pos_;
};

Term parse_term(std::string_view text);
Formula parse_formula(std::string_view text, SymbolTable& symtab);

std::string to_string(const Term& t);
std::string to_string(const Formula& f);

// Free variables of a term.
VarSet free_vars(const Term& t);
// Every variable symbol in t, binders included.
VarSet all_vars(const Term& t);
// Variables with a free whole-term occurrence in a Pred/Eq argument.
VarSet free_vars(const Formula& f);
// Every variable symbol anywhere in f: terms, evidence, subjects, binders.
VarSet all_vars(const Formula& f);

// t has a whole-argument occurrence in some Pred or Eq of f (bound or not).
bool occurs_in(const Term& t, const Formula& f);
// Whole-argument term occurrences in left-to-right order, including ones
// under K, Just and Trust.
std::vector<Term> term_occurrences(const Formula& f);

Var fresh_var(const VarSet& avoid);

// [u/v]: permutes into K, Just and Trust.
Formula subst_quant(const Formula& a, const Term& u, Var v);
// (u/v): stops at K, Just and Trust.
Formula subst_ident(const Formula& a, const Term& u, Var v);
// Simultaneous [t1/x1 ... tn/xn], staged through fresh variables.
Formula subst_quant_many(const Formula& a, const std::vector<std::pair<Var, Term>>& sigma);

// Warnings for cases the renaming clause does not cover: a compound u that
// contains the binder of a quantifier the substitution passes under.
std::vector<std::string> lint_subst_quant(const Formula& a, const Term& u, Var v);

bool contains_modal(const Formula& f);  // any K, Just or Trust node

}  // namespace tl

template <>
struct std::hash<tl::Term> {
  size_t operator()(const tl::Term& t) const { return t.hash(); }
};
template <>
struct std::hash<tl::Formula> {
  size_t operator()(const tl::Formula& f) const { return f.hash(); }
};
