// Copyright 2026 The trustlogic Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "support/debruijn.hpp"
#include "trustlogic/fuzz.hpp"
#include "trustlogic/lambda.hpp"

namespace tl::lambda {
namespace {

Term T(std::string_view s) { return parse_term(s); }
Var V(std::string_view s) { return names::var(s); }

TEST(TermSubst, VariableAndShadowingClauses) {
  EXPECT_EQ(term_subst(T("x"), T("s"), V("x")), T("s"));
  EXPECT_EQ(term_subst(T("\\x. t"), T("s"), V("x")), T("\\x. t"));
  EXPECT_EQ(term_subst(T("\\x. x"), T("s"), V("x")), T("\\x. x"));
  EXPECT_EQ(term_subst(T("!x"), T("s"), V("x")), T("!s"));
}

TEST(TermSubst, RenamesCapturingBinder) {
  Term r = term_subst(T("\\y. x"), T("y"), V("x"));
  ASSERT_TRUE(r.is_lam());
  EXPECT_NE(r.var(), V("y"));
  EXPECT_EQ(r.body(), T("y"));
  EXPECT_EQ(free_vars(r), VarSet{V("y")});
}

TEST(Redexes, PositionsInLeftmostOutermostOrder) {
  EXPECT_EQ(redexes(T("(\\x. x) y")), std::vector<Path>{Path{}});
  EXPECT_EQ(redexes(T("\\w. (\\x. x) y")), std::vector<Path>{Path{0}});
  EXPECT_TRUE(redexes(T("y z")).empty());
  Term t = T("(\\x. x) ((\\y. y) z)");
  auto rs = redexes(t);
  ASSERT_EQ(rs.size(), 2u);
  EXPECT_EQ(rs[0], Path{});
  EXPECT_EQ(rs[1], (Path{1}));
}

// Every application of a lambda, found by scanning all subterms.
void scan(const Term& t, Path& here, std::vector<Path>& out) {
  if (t.is_app() && t.fn().is_lam()) out.push_back(here);
  auto child = [&](const Term& c, uint8_t i) {
    here.push_back(i);
    scan(c, here, out);
    here.pop_back();
  };
  switch (t.kind()) {
    case Term::Kind::App:
      child(t.fn(), 0);
      child(t.arg(), 1);
      break;
    case Term::Kind::Lam: child(t.body(), 0); break;
    case Term::Kind::Bang: child(t.inner(), 0); break;
    case Term::Kind::Var: break;
  }
}

TEST(Redexes, MatchSubtermScan) {
  fuzz::Rng rng(5);
  for (int i = 0; i < 1000; ++i) {
    Term t = fuzz::random_term(rng, 2 + i % 14);
    std::vector<Path> expect;
    Path here;
    scan(t, here, expect);
    ASSERT_EQ(redexes(t), expect) << to_string(t);
  }
}

TEST(Step, ContractsAddressedRedexOnly) {
  EXPECT_EQ(step(T("(\\x. x) y"), {}), T("y"));
  EXPECT_EQ(step(T("(\\x. \\y. \\z. z x y) t"), {}), T("\\y. \\z. z t y"));
  EXPECT_EQ(step(T("\\w. (\\x. x) y"), {0}), T("\\w. y"));
  EXPECT_THROW(step(T("y z"), {}), std::invalid_argument);
}

TEST(ReducesTo, ReflexiveAtZeroFuel) {
  EXPECT_EQ(reduces_to(T("t"), T("t"), 0), Reach::Yes);
  EXPECT_EQ(reduces_to(T("(\\x. x) y"), T("y"), 0), Reach::FuelExhausted);
  EXPECT_EQ(reduces_to(T("(\\x. x) y"), T("y"), 1), Reach::Yes);
}

TEST(ReducesTo, OmegaReachesOnlyItself) {
  Term omega = T("(\\x. x x) (\\x. x x)");
  auto rs = reducts(omega);
  ASSERT_EQ(rs.size(), 1u);
  EXPECT_EQ(rs[0], omega);
  for (uint64_t fuel : {0, 1, 5, 50}) EXPECT_NE(reduces_to(omega, T("y"), fuel), Reach::Yes);
  EXPECT_EQ(reduces_to(omega, omega, 3), Reach::Yes);
}

TEST(ReducesTo, TransitivitySpotCheck) {
  fuzz::Rng rng(8);
  int checked = 0;
  for (int i = 0; i < 300 && checked < 100; ++i) {
    Term t = fuzz::random_term(rng, 4 + i % 8);
    auto tr = normal_order(t, 6);
    if (tr.terms.size() < 3) continue;
    size_t mid = tr.terms.size() / 2;
    uint64_t f = mid, g = tr.terms.size() - 1 - mid;
    ASSERT_EQ(reduces_to(t, tr.terms[mid], f), Reach::Yes);
    ASSERT_EQ(reduces_to(tr.terms[mid], tr.terms.back(), g), Reach::Yes);
    ASSERT_EQ(reduces_to(t, tr.terms.back(), f + g), Reach::Yes) << to_string(t);
    ++checked;
  }
  EXPECT_GT(checked, 20);
}

TEST(Pairs, ProjectionsRecoverComponents) {
  Term p = encode_pair(T("t"), T("s"));
  EXPECT_EQ(p, T("\\z. z t s"));
  EXPECT_EQ(reduces_to(Term::app(p, first_projection()), T("t"), 10), Reach::Yes);
  EXPECT_EQ(reduces_to(Term::app(p, second_projection()), T("s"), 10), Reach::Yes);
  EXPECT_EQ(reduces_to(Term::app(Term::app(pair_operator(), T("t")), T("s")), p, 2), Reach::Yes);
}

TEST(Pairs, ListsAreNestedPairs) {
  EXPECT_EQ(encode_list({}), T("\\x. \\y. y"));
  EXPECT_EQ(encode_list({T("a"), T("b")}), encode_pair(T("a"), encode_pair(T("b"), nil())));
  EXPECT_EQ(church(2), T("\\f. \\x. f (f x)"));
}

TEST(NormalOrder, FuelZeroStopsImmediately) {
  auto tr = normal_order(T("(\\x. x) y"), 0);
  EXPECT_EQ(tr.terms.size(), 1u);
  EXPECT_FALSE(tr.normal);
  auto one = normal_order(T("(\\x. x) y"), 1);
  EXPECT_EQ(one.terms.size(), 2u);
  EXPECT_TRUE(one.normal);
}

// Step-by-step agreement with the nameless reducer.
TEST(NormalOrder, AgreesWithNamelessOracle) {
  fuzz::Rng rng(13);
  for (int i = 0; i < 1500; ++i) {
    Term t = fuzz::random_term(rng, 3 + i % 14);
    auto mine = normal_order(t, 40);
    auto theirs = oracle::normalize(t, 40);
    ASSERT_EQ(mine.normal, theirs.normal) << to_string(t);
    ASSERT_EQ(mine.terms.size(), theirs.terms.size()) << to_string(t);
    for (size_t k = 0; k < mine.terms.size(); ++k)
      ASSERT_EQ(oracle::show(oracle::to_db(mine.terms[k])), theirs.terms[k]) << to_string(t) << " step " << k;
  }
}

TEST(AlphaEquivalence, KeyIgnoresBinderNames) {
  EXPECT_TRUE(alpha_equivalent(T("\\x. x"), T("\\y. y")));
  EXPECT_FALSE(alpha_equivalent(T("\\x. y"), T("\\y. y")));
  EXPECT_EQ(alpha_key(T("\\x. \\y. x y")), alpha_key(T("\\a. \\b. a b")));
}

TEST(Property, StepPreservesFreeVariables) {
  fuzz::Rng rng(21);
  for (int i = 0; i < 2000; ++i) {
    Term t = fuzz::random_term(rng, 3 + i % 12);
    VarSet before = free_vars(t);
    for (const auto& r : reducts(t))
      for (Var v : free_vars(r)) ASSERT_TRUE(before.count(v)) << to_string(t) << " -> " << to_string(r);
  }
}

TEST(Property, LocalConfluenceAtDeskScale) {
  auto rep = fuzz::local_confluence(200, 12, 50, 99);
  EXPECT_EQ(rep.terms, 200u);
  EXPECT_EQ(rep.failures, 0u);
  EXPECT_LE(rep.exhausted_terms * 20, rep.terms);
}

TEST(Property, JoinableReportsNonJoinableDistinctNormalForms) {
  EXPECT_EQ(joinable(T("x"), T("y"), 10), Reach::No);
  EXPECT_EQ(joinable(T("(\\x. x) y"), T("y"), 10), Reach::Yes);
}

}  // namespace
}  // namespace tl::lambda
