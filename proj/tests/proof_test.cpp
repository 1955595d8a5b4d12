// Copyright 2026 The trustlogic Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "trustlogic/corpus.hpp"
#include "trustlogic/fuzz.hpp"
#include "trustlogic/proof.hpp"

namespace tl::proof {
namespace {

class ProofTest : public ::testing::Test {
 protected:
  Formula F(std::string_view s) { return parse_formula(s, st_); }
  static Term T(std::string_view s) { return parse_term(s); }
  static Var V(std::string_view s) { return names::var(s); }
  static Agent A(std::string_view s) { return names::agent(s); }
  SymbolTable st_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool same_tree(const Derivation& x, const Derivation& y) {
  if (x.rule != y.rule || x.premises.size() != y.premises.size()) return false;
  if (!(x.conclusion.concl == y.conclusion.concl) || x.conclusion.ctx != y.conclusion.ctx) return false;
  if (x.params.var != y.params.var || x.params.term != y.params.term || x.params.agent != y.params.agent)
    return false;
  if (x.params.formula.has_value() != y.params.formula.has_value()) return false;
  if (x.params.formula && !(*x.params.formula == *y.params.formula)) return false;
  for (size_t i = 0; i < x.premises.size(); ++i)
    if (!same_tree(*x.premises[i], *y.premises[i])) return false;
  return true;
}

void collect_rules(const Derivation& d, std::set<Rule>& out) {
  out.insert(d.rule);
  for (const auto& p : d.premises) collect_rules(*p, out);
}

TEST(Rules, TagsRoundTrip) {
  EXPECT_EQ(all_rules().size(), 29u);
  for (Rule r : all_rules()) {
    auto back = rule_from_tag(tag(r));
    ASSERT_TRUE(back.has_value()) << tag(r);
    EXPECT_EQ(*back, r);
  }
  EXPECT_FALSE(rule_from_tag("k-4").has_value());
  EXPECT_EQ(arity(Rule::Ax), 0u);
  EXPECT_EQ(arity(Rule::EqSubst), 2u);
  EXPECT_EQ(arity(Rule::TElim), 1u);
}

TEST_F(ProofTest, AxiomAndImplication) {
  auto d = build::imp_i(build::ax(F("P(x)")), F("P(x)"));
  EXPECT_TRUE(check(*d).ok);
  EXPECT_TRUE(d->conclusion.ctx.empty());
  EXPECT_EQ(d->conclusion.concl, F("P(x) -> P(x)"));
}

TEST_F(ProofTest, AxiomWithExtraHypothesisIsRejected) {
  auto d = build::raw(Rule::Ax, {}, {}, {{F("P(x)"), F("Q(x)")}, F("P(x)")});
  auto r = check(*d);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.kind, FailKind::SchemaMismatch);
}

TEST_F(ProofTest, WrongPremiseCountIsSchemaMismatch) {
  auto d = build::raw(Rule::AndI, {}, {build::ax(F("P(x)"))}, {{F("P(x)")}, F("P(x) & P(x)")});
  auto r = check(*d);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.kind, FailKind::SchemaMismatch);
}

TEST_F(ProofTest, UniversalIntroductionWithFreshEigenvariable) {
  auto d = build::all_i(build::eq_refl(T("y")), V("x"), F("x = x"), V("y"));
  EXPECT_TRUE(check(*d).ok) << check(*d).describe();
  EXPECT_EQ(d->conclusion.concl, F("forall x. x = x"));
}

TEST_F(ProofTest, EigenvariableFreeInContextIsRejected) {
  auto d = build::all_i(build::ax(F("P(x)")), V("x"), F("P(x)"), V("x"));
  auto r = check(*d);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.kind, FailKind::SideConditionViolated);
  EXPECT_EQ(r.condition, "eigenvariable");
  EXPECT_TRUE(r.path.empty());
}

TEST_F(ProofTest, EigenvariableFreeInConclusionIsRejected) {
  auto d = build::all_i(build::eq_refl(T("y")), V("x"), F("x = y"), V("y"));
  auto r = check(*d);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.condition, "eigenvariable");
}

TEST_F(ProofTest, UniversalEliminationAtAnyTerm) {
  auto d = build::all_e(build::ax(F("forall x. P(x)")), T("f t"));
  EXPECT_TRUE(check(*d).ok);
  EXPECT_EQ(d->conclusion.concl, F("P(f t)"));
}

TEST_F(ProofTest, ExFalsoOnlyToAtoms) {
  EXPECT_TRUE(check(*build::efq(build::ax(F("bot")), F("P(x)"))).ok);
  auto r = check(*build::efq(build::ax(F("bot")), F("P(x) & Q(x)")));
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.condition, "atomic-conclusion");
}

TEST_F(ProofTest, IdentitySubstitutionBelowModalitiesOnly) {
  auto ok = build::eq_subst(build::ax(F("t = s")), build::ax(F("P(t) & K[a] Q(x)")), V("x"), F("P(x) & K[a] Q(x)"));
  EXPECT_TRUE(check(*ok).ok) << check(*ok).describe();
  EXPECT_EQ(ok->conclusion.concl, F("P(s) & K[a] Q(x)"));

  auto bad = corpus::quantifier_substitution_in_eq_subst();
  auto r = check(*bad);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.kind, FailKind::SubstitutionMismatch);
}

TEST_F(ProofTest, NecessitationNeedsEpistemicContext) {
  auto r = check(*corpus::necessity_of_identity());
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.rule, Rule::KNec);
  EXPECT_EQ(r.condition, "necessitation-context");

  auto other_agent = build::k_nec(build::k_t(build::ax(F("K[b] P(x)"))), A("a"));
  EXPECT_EQ(check(*other_agent).condition, "necessitation-context");

  auto same_agent = build::k_nec(build::k_t(build::ax(F("K[a] P(x)"))), A("a"));
  EXPECT_TRUE(check(*same_agent).ok);
}

TEST_F(ProofTest, TrustContextOnlyForTheCombinedRule) {
  auto premise = build::ax(F("T[a,t] P(t)"));
  auto elim = build::t_elim(premise, V("z"));
  auto inner = build::j_t(build::k_t(elim));
  auto combined = build::nec_kt(inner, A("a"));
  EXPECT_TRUE(check(*combined).ok) << check(*combined).describe();
  auto plain = build::k_nec(inner, A("a"));
  EXPECT_EQ(check(*plain).condition, "necessitation-context");
}

TEST_F(ProofTest, TrustSubjectMustOccur) {
  auto prem = build::ax(F("K[a] j : P(t)"));
  auto ok = build::t_intro(prem, T("t"));
  EXPECT_TRUE(check(*ok).ok);
  auto bad = build::t_intro(prem, T("s"));
  auto r = check(*bad);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.condition, "trust-subject");
}

TEST_F(ProofTest, TrustEliminationEigenvariable) {
  auto in_body = build::t_elim(build::ax(F("T[a,t] P(t, z)")), V("z"));
  EXPECT_EQ(check(*in_body).condition, "eigenvariable");
  auto prem = build::weak(build::ax(F("T[a,t] P(t, t)")), {F("Q(z)")});
  auto in_ctx = build::t_elim(prem, V("z"));
  EXPECT_EQ(check(*in_ctx).condition, "eigenvariable");
  auto fresh = build::t_elim(build::ax(F("T[a,t] P(t, t)")), V("z"));
  EXPECT_TRUE(check(*fresh).ok);
}

TEST_F(ProofTest, JustificationApplicationAndBang) {
  auto app = build::j_app(build::ax(F("j : (P(x) -> Q(x))")), build::ax(F("k : P(x)")));
  EXPECT_TRUE(check(*app).ok);
  EXPECT_EQ(app->conclusion.concl, F("(j k) : Q(x)"));
  auto wrong = build::raw(Rule::JApp, {}, app->premises, {app->conclusion.ctx, F("(k j) : Q(x)")});
  EXPECT_EQ(check(*wrong).kind, FailKind::SchemaMismatch);
  auto bang = build::j_bang(build::ax(F("j : P(x)")));
  EXPECT_TRUE(check(*bang).ok);
  EXPECT_EQ(bang->conclusion.concl, F("!j : j : P(x)"));
}

TEST_F(ProofTest, StructuralRules) {
  auto base = build::ax(F("P(x)"));
  auto w = build::weak(base, {F("Q(x)"), F("Q(x)")});
  EXPECT_TRUE(check(*w).ok);
  auto c = build::contr(w, F("Q(x)"));
  EXPECT_TRUE(check(*c).ok);
  EXPECT_EQ(c->conclusion.ctx.size(), 2u);
  auto d = build::dup(c, F("P(x)"));
  EXPECT_TRUE(check(*d).ok);
  EXPECT_EQ(d->conclusion.ctx.size(), 3u);
  auto lose = build::raw(Rule::Contr, {}, {w}, {{F("P(x)")}, F("P(x)")});
  EXPECT_FALSE(check(*lose).ok);
}

TEST_F(ProofTest, FailurePathPointsAtNode) {
  auto bad = build::efq(build::ax(F("bot")), F("P(x) & Q(x)"));
  auto outer = build::imp_i(bad, F("bot"));
  auto r = check(*outer);
  ASSERT_FALSE(r.ok);
  EXPECT_EQ(r.path, std::vector<size_t>{0});
  EXPECT_EQ(r.rule, Rule::Efq);
  EXPECT_EQ(&node_at(*outer, r.path), bad.get());
}

TEST_F(ProofTest, DerivesChecksGoalAndSupport) {
  auto d = build::ax(F("P(x)"));
  EXPECT_TRUE(derives({F("P(x)"), F("Q(x)")}, F("P(x)"), *d));
  EXPECT_FALSE(derives({F("Q(x)")}, F("P(x)"), *d));
  EXPECT_FALSE(derives({F("P(x)")}, F("Q(x)"), *d));
  auto bad = build::efq(build::ax(F("bot")), F("P(x) & Q(x)"));
  EXPECT_THROW(derives({F("bot")}, F("P(x) & Q(x)"), *bad), UncheckedWitness);
}

TEST(Corpus, EveryDerivationChecks) {
  ASSERT_EQ(corpus::derivations().size(), 26u);
  for (const auto& e : corpus::derivations()) {
    auto r = check(*e.derivation);
    EXPECT_TRUE(r.ok) << e.name << ": " << r.describe();
    EXPECT_TRUE(derives(e.hyps, e.goal, *e.derivation)) << e.name;
  }
}

TEST(Corpus, CoversEveryRule) {
  std::set<Rule> used;
  for (const auto& e : corpus::derivations()) collect_rules(*e.derivation, used);
  for (Rule r : all_rules()) EXPECT_TRUE(used.count(r)) << tag(r);
}

TEST(Corpus, NamedTheoremsFromNoHypotheses) {
  SymbolTable st;
  EXPECT_TRUE(derives({}, parse_formula("~(~forall x. P(x) & ~~forall x. P(x))", st),
                      *corpus::find("excluded-middle")->derivation));
  EXPECT_TRUE(derives({}, parse_formula("(forall x. K[a] P(x)) -> K[a] forall x. P(x)", st),
                      *corpus::find("barcan")->derivation));
}

TEST(Corpus, TrustExamples) {
  SymbolTable st;
  const auto* e2 = corpus::find("example2");
  ASSERT_NE(e2, nullptr);
  EXPECT_TRUE(derives({parse_formula("T[a,s] C(s)", st), parse_formula("T[a,u] s = u", st)},
                      parse_formula("T[a,u] C(u)", st), *e2->derivation));
  const auto* e3 = corpus::find("example3");
  ASSERT_NE(e3, nullptr);
  EXPECT_TRUE(e3->goal.is(Formula::Kind::Trust));
  EXPECT_TRUE(check(*e3->derivation).ok);
}

// Replace the node at `path` and rebuild the spine above it verbatim.
DerivationPtr replace_at(const DerivationPtr& d, const std::vector<size_t>& path, size_t i, DerivationPtr with) {
  if (i == path.size()) return with;
  auto copy = std::make_shared<Derivation>(*d);
  copy->premises[path[i]] = replace_at(d->premises[path[i]], path, i + 1, std::move(with));
  return copy;
}

void identity_nodes(const Derivation& d, std::vector<size_t>& here, std::vector<std::vector<size_t>>& out) {
  if (d.rule == Rule::EqSubst || d.rule == Rule::JEqL || d.rule == Rule::JEqR) out.push_back(here);
  for (size_t i = 0; i < d.premises.size(); ++i) {
    here.push_back(i);
    identity_nodes(*d.premises[i], here, out);
    here.pop_back();
  }
}

// Recomputing an identity step with the quantifier substitution must be
// caught wherever the two substitutions differ.
TEST(Corpus, QuantifierSubstitutionInIdentityStepsFlipsCheck) {
  size_t flipped = 0;
  for (const auto& e : corpus::derivations()) {
    std::vector<std::vector<size_t>> nodes;
    std::vector<size_t> here;
    identity_nodes(*e.derivation, here, nodes);
    for (const auto& path : nodes) {
      const Derivation& n = node_at(*e.derivation, path);
      Var x = *n.params.var;
      const Formula& a = *n.params.formula;
      Formula id = n.premises[0]->conclusion.concl;
      if (n.rule != Rule::EqSubst) id = id.body();
      Term t = n.rule == Rule::JEqR ? id.rhs() : id.lhs();
      Term s = n.rule == Rule::JEqR ? id.lhs() : id.rhs();
      if (subst_quant(a, s, x) == subst_ident(a, s, x) && subst_quant(a, t, x) == subst_ident(a, t, x)) continue;
      auto prem = build::ax(subst_quant(a, t, x));
      Formula out = subst_quant(a, s, x);
      if (n.rule != Rule::EqSubst) {
        prem = build::ax(Formula::just(n.premises[1]->conclusion.concl.term(), subst_quant(a, t, x)));
        out = Formula::just(n.conclusion.concl.term(), out);
      }
      auto mutated = build::raw(n.rule, n.params, {n.premises[0], prem},
                                {multiset_sum(n.premises[0]->conclusion.ctx, prem->conclusion.ctx), out});
      auto r = check(*replace_at(e.derivation, path, 0, mutated));
      EXPECT_FALSE(r.ok) << e.name;
      ++flipped;
    }
  }
  EXPECT_GE(flipped, 1u);
}

TEST(ProofIo, WriteReadRoundTrip) {
  for (const auto& e : corpus::derivations()) {
    SymbolTable st;
    std::string text = write_proof(*e.derivation);
    auto back = read_proofs(text, st);
    ASSERT_EQ(back.size(), 1u) << e.name;
    EXPECT_TRUE(same_tree(*back[0], *e.derivation)) << e.name;
  }
}

TEST(ProofIo, DataFilesMatchCorpus) {
  for (const auto& e : corpus::derivations()) {
    SymbolTable st;
    std::string text = read_file(std::string(TRUSTLOGIC_DATA_DIR) + "/proofs/" + e.name + ".proof");
    ASSERT_FALSE(text.empty()) << e.name;
    auto back = read_proofs(text, st);
    ASSERT_EQ(back.size(), 1u);
    EXPECT_TRUE(same_tree(*back[0], *e.derivation)) << e.name;
  }
}

TEST(ProofIo, MalformedInputThrows) {
  SymbolTable st;
  EXPECT_THROW(read_proofs("(ax (seq (\"P(x)\") \"P(x)\")", st), std::exception);
  EXPECT_THROW(read_proofs("(k-4 (seq () \"P(x)\"))", st), std::exception);
}

// Root sequents of the corpus hold in random valid models.
TEST(Soundness, CorpusRootsOnRandomModels) {
  for (const auto& e : corpus::derivations()) {
    auto rep = fuzz::soundness(e.derivation->conclusion, 60, 3);
    EXPECT_EQ(rep.violations, 0u) << e.name << "\n" << (rep.examples.empty() ? "" : rep.examples[0]);
    const auto& ctx = e.derivation->conclusion.ctx;
    bool satisfiable = std::none_of(ctx.begin(), ctx.end(), [](const Formula& f) { return f.is(Formula::Kind::Bot); });
    if (satisfiable) {
      EXPECT_GT(rep.verified_contexts, 0u) << e.name;
    }
  }
}

}  // namespace
}  // namespace tl::proof
