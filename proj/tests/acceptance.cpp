// Copyright 2026 The trustlogic Authors
// SPDX-License-Identifier: Apache-2.0

// One line per acceptance criterion; nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "support/mutations.hpp"
#include "trustlogic/corpus.hpp"
#include "trustlogic/fuzz.hpp"
#include "trustlogic/lambda.hpp"
#include "trustlogic/proof.hpp"
#include "trustlogic/semantics.hpp"
#include "trustlogic/theory.hpp"

namespace {

using namespace tl;

// Wall-clock limits in seconds.
constexpr double kExample2Limit = 1.0;
constexpr double kSeparationLimit = 30.0;
constexpr double kExample3Limit = 5.0;
constexpr double kSoundnessLimit = 120.0;
constexpr double kDefaultLimit = 60.0;

constexpr size_t kSeparationModels = 200;
constexpr size_t kSoundnessModels = 200;
constexpr size_t kVariantCases = 1000;
constexpr size_t kConfluenceTerms = 500;
constexpr size_t kConfluenceMaxSize = 12;
constexpr uint64_t kConfluenceFuel = 50;
constexpr double kConfluenceExhaustedShare = 0.05;
constexpr uint64_t kSeed = 20260101;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    detail += (detail.empty() ? "" : "; ") + what;
  }
};

struct Criterion {
  int id;
  const char* name;
  double limit;
  std::function<Outcome()> run;
};

Outcome example2_derivation() {
  Outcome o;
  SymbolTable st;
  const auto* e = corpus::find("example2");
  o.require(e != nullptr, "example2 missing from corpus");
  if (!e) return o;
  auto r = proof::check(*e->derivation);
  o.require(r.ok, "check: " + r.describe());
  std::vector<Formula> hyps{parse_formula("T[a,s] C(s)", st), parse_formula("T[a,u] s = u", st)};
  bool d = r.ok && proof::derives(hyps, parse_formula("T[a,u] C(u)", st), *e->derivation);
  o.require(d, "derives returned false");
  if (o.pass) o.detail = std::to_string(proof::node_count(*e->derivation)) + " nodes, derives = true";
  return o;
}

Outcome example2_separation() {
  Outcome o;
  auto rep = fuzz::example2_separation(kSeparationModels, kSeed);
  o.require(rep.models == kSeparationModels, "wrong model count");
  o.require(rep.separated_models > 0, "no model satisfied the hypotheses");
  o.require(rep.goal_true == 0, std::to_string(rep.goal_true) + " separated states make the goal true");
  o.require(rep.consequence_true == 0, std::to_string(rep.consequence_true) + " models report consequence = true");
  o.require(rep.undecided == 0, std::to_string(rep.undecided) + " undecided evaluations");
  sem::Model m = sem::build_example2_model();
  o.require(sem::validate_model(m).ok(), "handcrafted model invalid");
  bool handcrafted = sem::consequence(m, fuzz::separation_hyps(), fuzz::separation_goal());
  o.require(!handcrafted, "handcrafted model reports consequence = true");
  if (o.pass)
    o.detail = std::to_string(rep.separated_models) + "/" + std::to_string(rep.models) + " models separate (" +
               std::to_string(rep.separated_states) + " states, " + std::to_string(rep.identity_states) +
               " with t = s), 0 consequence, handcrafted = false";
  return o;
}

Outcome example3_pipeline() {
  using theory::ProbDist;
  using theory::Rational;
  Outcome o;
  auto pt = theory::sigma_prob_eq(corpus::example3_behavior(), 6);
  auto chain = corpus::example3_chain();
  o.require(chain.size() == 5, "chain has " + std::to_string(chain.size()) + " links");
  for (size_t i = 0; i + 1 < chain.size(); ++i)
    o.require(pt.theory.contains(Formula::eq(chain[i].encode(), chain[i + 1].encode())),
              "missing " + chain[i].pretty() + " = " + chain[i + 1].pretty());
  o.require(Rational(3, 4) * Rational(1, 3) == Rational(1, 4), "3/4 * 1/3");
  o.require(Rational(3, 4) * Rational(2, 3) == Rational(1, 2), "3/4 * 2/3");
  o.require(Rational(1, 2) + Rational(1, 4) == Rational(3, 4), "1/2 + 1/4");
  if (chain.size() == 5) {
    o.require(chain[2].entries[0].first == Rational(1, 4) && chain[2].entries[1].first == Rational(1, 2),
              "expansion weights");
    o.require(chain[4].entries.size() == 2 && chain[4].entries[1].first == Rational(3, 4), "collapse weight");
    o.require(pt.find_chain(chain.front(), chain.back()).has_value(), "no chain from ((1,u)) to the outcome list");
  }
  theory::Theory lifted = theory::lift_T(pt.theory, names::agent("a"));
  const auto* e = corpus::find("example3");
  o.require(e != nullptr, "example3 missing from corpus");
  if (!e) return o;
  auto r = proof::check(*e->derivation);
  o.require(r.ok, "check: " + r.describe());
  for (const auto& h : e->hyps) o.require(lifted.contains(h), "hypothesis not in the lifted theory: " + to_string(h));
  std::vector<Formula> hyps(lifted.formulas().begin(), lifted.formulas().end());
  o.require(r.ok && proof::derives(hyps, e->goal, *e->derivation), "derives returned false");
  if (o.pass)
    o.detail = std::to_string(pt.identities.size()) + " identities, chain of " + std::to_string(chain.size()) +
               " exact, goal " + to_string(e->goal);
  return o;
}

Outcome counterexamples() {
  Outcome o;
  SymbolTable st;
  sem::Model h = sem::build_hyper_counterexample();
  o.require(sem::validate_model(h).ok(), "hyper model invalid");
  sem::Evaluator hv(h);
  sem::StateId hw = *h.state("w");
  o.require(hv.eval(hw, parse_formula("j : (P(x) & Q(y))", st)), "j:(P(x) & Q(y)) false");
  Formula qp = parse_formula("Q(y) & P(x)", st);
  for (const auto& [t, e] : h.table)
    o.require(!hv.eval(hw, Formula::just(t, qp)), to_string(t) + " justifies Q(y) & P(x)");

  sem::Model m = sem::build_intensional_counterexample();
  o.require(sem::validate_model(m).ok(), "intensional model invalid");
  sem::Evaluator iv(m);
  sem::StateId w = *m.state("w");
  o.require(iv.eval(w, parse_formula("t = s", st)), "t = s false");
  o.require(iv.eval(w, parse_formula("K[a] P(t)", st)), "K[a] P(t) false");
  o.require(!iv.eval(w, parse_formula("K[a] P(s)", st)), "K[a] P(s) true");
  if (o.pass) o.detail = "hyper: true/false over " + std::to_string(h.table.size()) + " terms; intensional: true true false";
  return o;
}

Outcome soundness() {
  Outcome o;
  const auto& all = corpus::derivations();
  bool has_bf = false, has_em = false;
  size_t verified = 0, undecided = 0, violations = 0;
  for (const auto& e : all) {
    has_bf |= e.name == "barcan";
    has_em |= e.name == "excluded-middle";
    auto rep = fuzz::soundness(e.derivation->conclusion, kSoundnessModels, kSeed);
    verified += rep.verified_contexts;
    undecided += rep.undecided;
    violations += rep.violations;
    o.require(rep.violations == 0, e.name + ": " + std::to_string(rep.violations) + " violations");
  }
  o.require(all.size() >= 12, "corpus has " + std::to_string(all.size()) + " derivations");
  o.require(has_bf && has_em, "corpus lacks barcan or excluded-middle");
  if (o.pass)
    o.detail = std::to_string(all.size()) + " derivations x " + std::to_string(kSoundnessModels) + " models, " +
               std::to_string(verified) + " verified contexts, 0 violations, " + std::to_string(undecided) +
               " undecided";
  return o;
}

Outcome variant_agreement() {
  Outcome o;
  auto rep = fuzz::variant_substitution(kVariantCases, kSeed);
  o.require(rep.cases == kVariantCases, "wrong case count");
  o.require(rep.disagree == 0, std::to_string(rep.disagree) + " disagreements" +
                                   (rep.examples.empty() ? "" : ", first: " + rep.examples[0]));
  o.require(rep.errors == 0, std::to_string(rep.errors) + " errors");
  if (o.pass) o.detail = std::to_string(rep.agree) + "/" + std::to_string(rep.cases) + " agree";
  return o;
}

Outcome substitution_discipline() {
  Outcome o;
  const auto* good = corpus::find("leibniz-opaque");
  o.require(good && proof::check(*good->derivation).ok, "leibniz-opaque does not check");
  auto swapped = proof::check(*corpus::quantifier_substitution_in_eq_subst());
  o.require(!swapped.ok, "eq-subst with the quantifier substitution checks");
  o.require(swapped.kind == proof::FailKind::SubstitutionMismatch, "wrong failure kind for the swapped substitution");
  auto nec = proof::check(*corpus::necessity_of_identity());
  o.require(!nec.ok, "necessity of identity checks");
  o.require(nec.condition == "necessitation-context", "wrong failure for necessity of identity");
  if (o.pass) o.detail = "swapped: " + swapped.describe() + " | necessity: " + nec.describe();
  return o;
}

Outcome validator_mutations() {
  Outcome o;
  size_t caught = 0;
  for (const auto& mu : mutation::all()) {
    SymbolTable st;
    sem::Model m = mutation::base_model(st);
    mu.apply(m);
    auto r = sem::validate_model(m);
    std::set<std::string> got;
    for (const auto& v : r.violations) got.insert(v.condition);
    bool exact = got == std::set<std::string>{mu.expect};
    o.require(exact, mu.name + ": " + r.describe());
    caught += exact;
  }
  if (o.pass) o.detail = std::to_string(caught) + "/" + std::to_string(mutation::all().size()) + " targeted reports";
  return o;
}

Outcome lambda_engine() {
  Outcome o;
  Term t = parse_term("t"), s = parse_term("s");
  Term p = lambda::encode_pair(t, s);
  o.require(lambda::reduces_to(Term::app(p, lambda::first_projection()), t, 10) == lambda::Reach::Yes,
            "first projection");
  o.require(lambda::reduces_to(Term::app(p, lambda::second_projection()), s, 10) == lambda::Reach::Yes,
            "second projection");
  auto rep = fuzz::local_confluence(kConfluenceTerms, kConfluenceMaxSize, kConfluenceFuel, kSeed);
  o.require(rep.terms == kConfluenceTerms, "wrong term count");
  o.require(rep.failures == 0, std::to_string(rep.failures) + " join failures" +
                                   (rep.examples.empty() ? "" : ", first: " + rep.examples[0]));
  double share = static_cast<double>(rep.exhausted_terms) / static_cast<double>(rep.terms);
  o.require(share <= kConfluenceExhaustedShare, "fuel exhausted on " + std::to_string(rep.exhausted_terms) + " terms");
  if (o.pass)
    o.detail = "projections ok; " + std::to_string(rep.terms) + " terms, " + std::to_string(rep.pairs) + " pairs, " +
               std::to_string(rep.joined) + " joined, 0 failures, " + std::to_string(rep.exhausted_terms) +
               " exhausted";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "example2-derivation", kExample2Limit, example2_derivation},
      {2, "example2-separation", kSeparationLimit, example2_separation},
      {3, "example3-pipeline", kExample3Limit, example3_pipeline},
      {4, "counterexamples", kDefaultLimit, counterexamples},
      {5, "soundness-fuzz", kSoundnessLimit, soundness},
      {6, "variant-substitution", kDefaultLimit, variant_agreement},
      {7, "substitution-discipline", kDefaultLimit, substitution_discipline},
      {8, "validator-mutations", kDefaultLimit, validator_mutations},
      {9, "lambda-engine", kDefaultLimit, lambda_engine},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit) {
      o.pass = false;
      o.detail += " (over the " + std::to_string(c.limit) + " s limit)";
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.3f s", secs);
    std::cout << (o.pass ? "PASS" : "FAIL") << ' ' << c.id << ' ' << c.name << " [" << timing << "]: " << o.detail
              << '\n';
    failed += !o.pass;
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << criteria.size() - failed << "/" << criteria.size() << '\n';
  return failed ? 1 : 0;
}
