// Copyright 2026 The trustlogic Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "trustlogic/syntax.hpp"

namespace tl::theory {

using Rational = boost::rational<int64_t>;

std::string to_string(const Rational& r);
Rational parse_rational(std::string_view s);  // "n/d" or "n"

struct ProbFact {
  Term source;
  Rational prob;
  Term target;
};

struct ProbDist {
  std::vector<std::pair<Rational, Term>> entries;

  Rational mass() const;
  Term encode() const;  // list of pair(church num, church den) / term pairs
  std::string pretty() const;
  friend bool operator==(const ProbDist&, const ProbDist&) = default;
};
std::strong_ordering compare(const ProbDist& a, const ProbDist& b);
Term encode_rational(const Rational& r);

class MassError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Finite, deduplicated, canonically ordered set of formulas.
class Theory {
 public:
  Theory() = default;
  explicit Theory(std::string label) : label_(std::move(label)) {}

  bool add(const Formula& f);  // false if already present
  bool contains(const Formula& f) const;
  const std::vector<Formula>& formulas() const { return items_; }
  size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const std::string& label() const { return label_; }
  // Optional human-readable note per formula, emitted as a ;; comment.
  void annotate(const Formula& f, std::string note) { notes_[f] = std::move(note); }
  const std::string* note(const Formula& f) const;

  friend bool operator==(const Theory& a, const Theory& b) { return a.items_ == b.items_; }

 private:
  std::string label_;
  std::vector<Formula> items_;  // sorted
  std::map<Formula, std::string> notes_;
};

// Designated binary predicates for one-step and many-step reduction.
PredSym step_pred();
PredSym star_pred();
Formula step_fact(const Term& u, const Term& v);
Formula star_fact(const Term& u, const Term& v);

struct StepTheory {
  Theory theory;
  bool fuel_exhausted = false;
};

StepTheory sigma_step(const std::vector<Term>& seeds, uint64_t fuel);
Theory sigma_star(const Theory& facts, const std::vector<Term>& universe);
// Literal reading: mutual one-step reduction. With via_star, t = s for every
// t ->* s with t != s.
Theory sigma_lambda_eq(const Theory& step_facts, bool via_star = false);

struct ProbIdentity {
  ProbDist lhs, rhs;
  int rule = 0;   // 1 root, 2 expansion, 3 swap, 4 collapse
  int round = 0;  // closure round that first produced it
};

struct ProbTheory {
  std::vector<ProbIdentity> identities;  // canonical order
  Theory theory;                         // the same identities as formulas
  bool saturated = false;                // closure reached a fixpoint within maxDepth

  // Shortest chain of identities leading from `from` to `to`, if any.
  std::optional<std::vector<ProbIdentity>> find_chain(const ProbDist& from, const ProbDist& to) const;
};

ProbTheory sigma_prob_eq(const std::vector<ProbFact>& facts, int max_depth);

Theory lift_K(const Theory& t, Agent a);
using SubjectChooser = std::function<Term(const Formula&)>;
Term leftmost_subject(const Formula& f);
// Throws std::invalid_argument if the chooser returns a term not occurring in A.
Theory lift_T(const Theory& t, Agent a, const SubjectChooser& chooser = leftmost_subject);

// `t |>p u` per line, ;; comments.
std::vector<ProbFact> parse_behavior(std::string_view text);
std::string write_theory(const Theory& t);
Theory read_theory(std::string_view text, SymbolTable& symtab, std::string label = "");

}  // namespace tl::theory
