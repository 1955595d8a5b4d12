// Copyright 2026 The trustlogic Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "support/fractions.hpp"
#include "trustlogic/corpus.hpp"
#include "trustlogic/lambda.hpp"
#include "trustlogic/theory.hpp"

namespace tl::theory {
namespace {

Term T(std::string_view s) { return parse_term(s); }

ProbDist D(std::vector<std::pair<Rational, std::string>> es) {
  ProbDist d;
  for (auto& [p, t] : es) d.entries.emplace_back(p, T(t));
  return d;
}

TEST(Rational, ParsesAndPrintsReduced) {
  EXPECT_EQ(parse_rational("2/4"), Rational(1, 2));
  EXPECT_EQ(parse_rational("1"), Rational(1));
  EXPECT_EQ(to_string(Rational(3, 4)), "3/4");
  EXPECT_EQ(to_string(Rational(1)), "1");
}

TEST(SigmaStep, SingleRedex) {
  auto r = sigma_step({T("(\\x. x) y")}, 1);
  ASSERT_EQ(r.theory.size(), 1u);
  EXPECT_TRUE(r.theory.contains(step_fact(T("(\\x. x) y"), T("y"))));
}

TEST(SigmaStep, NormalSeedGivesNothing) {
  EXPECT_TRUE(sigma_step({T("y")}, 5).theory.empty());
  EXPECT_FALSE(sigma_step({T("y")}, 5).fuel_exhausted);
}

TEST(SigmaStep, PairProjectionChain) {
  Term start = Term::app(Term::app(Term::app(lambda::pair_operator(), T("t")), T("s")), lambda::first_projection());
  auto r = sigma_step({start}, 10);
  auto tr = lambda::normal_order(start, 10);
  ASSERT_TRUE(tr.normal);
  for (size_t i = 0; i + 1 < tr.terms.size(); ++i)
    EXPECT_TRUE(r.theory.contains(step_fact(tr.terms[i], tr.terms[i + 1]))) << to_string(tr.terms[i]);
  EXPECT_EQ(tr.terms.back(), T("t"));
}

TEST(SigmaStep, FlagsExhaustionOnDivergence) {
  auto r = sigma_step({T("(\\x. x x x) (\\x. x x x)")}, 3);
  EXPECT_TRUE(r.fuel_exhausted);
}

TEST(SigmaStar, ReflexiveOnUniverse) {
  Theory t = sigma_star(Theory{}, {T("t")});
  ASSERT_EQ(t.size(), 1u);
  EXPECT_TRUE(t.contains(star_fact(T("t"), T("t"))));
}

TEST(SigmaStar, TransitiveAndIdempotent) {
  Theory facts;
  facts.add(step_fact(T("a"), T("b")));
  facts.add(step_fact(T("b"), T("c")));
  Theory s = sigma_star(facts, {});
  EXPECT_TRUE(s.contains(star_fact(T("a"), T("c"))));
  EXPECT_TRUE(s.contains(star_fact(T("b"), T("b"))));
  EXPECT_FALSE(s.contains(star_fact(T("c"), T("a"))));
  EXPECT_EQ(sigma_star(s, {}), s);
  // Reflexive and transitive, checked directly.
  std::vector<Term> u{T("a"), T("b"), T("c")};
  for (const auto& x : u) {
    EXPECT_TRUE(s.contains(star_fact(x, x)));
    for (const auto& y : u)
      for (const auto& z : u)
        if (s.contains(star_fact(x, y)) && s.contains(star_fact(y, z))) {
          EXPECT_TRUE(s.contains(star_fact(x, z)));
        }
  }
}

TEST(SigmaLambdaEq, LiteralReadingNeedsBothDirections) {
  Theory one;
  one.add(step_fact(T("a"), T("b")));
  EXPECT_TRUE(sigma_lambda_eq(one).empty());
  Theory both = one;
  both.add(step_fact(T("b"), T("a")));
  Theory eq = sigma_lambda_eq(both);
  ASSERT_EQ(eq.size(), 1u);
  EXPECT_TRUE(eq.contains(Formula::eq(T("a"), T("b"))) || eq.contains(Formula::eq(T("b"), T("a"))));
  EXPECT_TRUE(sigma_lambda_eq(Theory{}).empty());
}

TEST(SigmaLambdaEq, StarReadingIsOptIn) {
  Theory one;
  one.add(step_fact(T("a"), T("b")));
  Theory eq = sigma_lambda_eq(one, true);
  EXPECT_TRUE(eq.contains(Formula::eq(T("a"), T("b"))));
}

TEST(SigmaProbEq, RootTranslation) {
  auto facts = parse_behavior("x |>1/3 t\nx |>2/3 s\n");
  auto pt = sigma_prob_eq(facts, 3);
  ProbDist lhs = D({{Rational(1), "x"}});
  ProbDist rhs = D({{Rational(1, 3), "t"}, {Rational(2, 3), "s"}});
  EXPECT_TRUE(pt.theory.contains(Formula::eq(lhs.encode(), rhs.encode())));
  EXPECT_TRUE(pt.saturated);
}

TEST(SigmaProbEq, RejectsBadMass) {
  EXPECT_THROW(sigma_prob_eq(parse_behavior("x |>1/3 t\nx |>1/3 s\n"), 3), MassError);
  EXPECT_THROW(sigma_prob_eq(parse_behavior("x |>0 t\nx |>1 s\n"), 3), MassError);
}

TEST(SigmaProbEq, ExampleChainWithExactArithmetic) {
  auto pt = sigma_prob_eq(corpus::example3_behavior(), 6);
  const Rational q(1, 4), h(1, 2), tq(3, 4);
  std::vector<ProbDist> expect{
      D({{Rational(1), "u"}}),
      D({{tq, "u1"}, {q, "u2"}}),
      D({{q, "o1"}, {h, "o2"}, {q, "u2"}}),
      D({{q, "o1"}, {h, "o2"}, {q, "o2"}}),
      D({{q, "o1"}, {tq, "o2"}}),
  };
  for (size_t i = 0; i + 1 < expect.size(); ++i)
    EXPECT_TRUE(pt.theory.contains(Formula::eq(expect[i].encode(), expect[i + 1].encode())))
        << expect[i].pretty() << " = " << expect[i + 1].pretty();
  EXPECT_EQ(corpus::example3_chain(), expect);
  auto chain = pt.find_chain(expect.front(), expect.back());
  ASSERT_TRUE(chain.has_value());
  EXPECT_EQ(chain->size(), 4u);
  EXPECT_TRUE(pt.theory.contains(
      Formula::eq(D({{Rational(1), "s"}}).encode(), D({{q, "o1"}, {tq, "o2"}}).encode())));
}

// Intermediate values against plain fraction arithmetic.
TEST(SigmaProbEq, ExampleArithmeticMatchesFractionOracle) {
  std::vector<oracle::Edge> edges;
  for (const auto& f : corpus::example3_behavior())
    edges.push_back({to_string(f.source), oracle::Frac(f.prob.numerator(), f.prob.denominator()), to_string(f.target)});
  auto u = oracle::run_to_end(edges, "u");
  auto s = oracle::run_to_end(edges, "s");
  EXPECT_EQ(u, s);
  EXPECT_EQ(u.at("o1"), oracle::Frac(1, 4));
  EXPECT_EQ(u.at("o2"), oracle::Frac(3, 4));
  EXPECT_EQ(oracle::Frac(3, 4) * oracle::Frac(1, 3), oracle::Frac(1, 4));
  EXPECT_EQ(oracle::Frac(3, 4) * oracle::Frac(2, 3), oracle::Frac(1, 2));
  EXPECT_EQ(oracle::Frac(1, 2) + oracle::Frac(1, 4), oracle::Frac(3, 4));
}

oracle::Outcomes outcomes(const std::vector<oracle::Edge>& edges, const ProbDist& d) {
  oracle::Outcomes out;
  for (const auto& [p, t] : d.entries)
    for (const auto& [o, m] : oracle::run_to_end(edges, to_string(t), oracle::Frac(p.numerator(), p.denominator())))
      out[o] = out[o] + m;
  return out;
}

TEST(SigmaProbEq, EveryIdentityPreservesOutcomesAndMass) {
  auto facts = corpus::example3_behavior();
  std::vector<oracle::Edge> edges;
  for (const auto& f : facts)
    edges.push_back({to_string(f.source), oracle::Frac(f.prob.numerator(), f.prob.denominator()), to_string(f.target)});
  auto pt = sigma_prob_eq(facts, 6);
  ASSERT_FALSE(pt.identities.empty());
  for (const auto& id : pt.identities) {
    EXPECT_EQ(id.lhs.mass(), Rational(1));
    EXPECT_EQ(id.rhs.mass(), Rational(1));
    EXPECT_EQ(outcomes(edges, id.lhs), outcomes(edges, id.rhs)) << id.lhs.pretty() << " = " << id.rhs.pretty();
  }
}

TEST(SigmaProbEq, AdjacentTranspositionsAreLinked) {
  auto pt = sigma_prob_eq(corpus::example3_behavior(), 8);
  ASSERT_TRUE(pt.saturated);
  std::set<std::string> keys;
  for (const auto& id : pt.identities) keys.insert(id.lhs.pretty() + "|" + id.rhs.pretty());
  for (const auto& id : pt.identities) {
    const auto& e = id.rhs.entries;
    for (size_t i = 0; i + 1 < e.size(); ++i) {
      ProbDist sw = id.rhs;
      std::swap(sw.entries[i], sw.entries[i + 1]);
      if (sw == id.rhs) continue;
      EXPECT_TRUE(keys.count(id.rhs.pretty() + "|" + sw.pretty())) << id.rhs.pretty();
    }
  }
}

TEST(SigmaProbEq, Deterministic) {
  auto a = sigma_prob_eq(corpus::example3_behavior(), 6);
  auto b = sigma_prob_eq(corpus::example3_behavior(), 6);
  EXPECT_EQ(write_theory(a.theory), write_theory(b.theory));
}

TEST(Lifting, KPrefixesEveryFormula) {
  SymbolTable st;
  Theory t;
  t.add(parse_formula("P(t)", st));
  Theory k = lift_K(t, names::agent("a"));
  ASSERT_EQ(k.size(), 1u);
  EXPECT_TRUE(k.contains(parse_formula("K[a] P(t)", st)));
  EXPECT_TRUE(lift_K(Theory{}, names::agent("a")).empty());
}

TEST(Lifting, TrustUsesLeftmostTermByDefault) {
  auto pt = sigma_prob_eq(corpus::example3_behavior(), 6);
  Theory lifted = lift_T(pt.theory, names::agent("a"));
  ASSERT_EQ(lifted.size(), pt.theory.size());
  for (const auto& f : lifted.formulas()) {
    ASSERT_TRUE(f.is(Formula::Kind::Trust));
    EXPECT_EQ(f.term(), f.body().lhs());
  }
  const auto& e = *corpus::find("example3");
  for (const auto& h : e.hyps) EXPECT_TRUE(lifted.contains(h)) << to_string(h);
}

TEST(Lifting, ChooserMustPickOccurringTerm) {
  SymbolTable st;
  Theory t;
  t.add(parse_formula("P(t)", st));
  EXPECT_THROW(lift_T(t, names::agent("a"), [](const Formula&) { return parse_term("s"); }), std::invalid_argument);
}

TEST(TheoryFile, RoundTrip) {
  SymbolTable st;
  auto pt = sigma_prob_eq(corpus::example3_behavior(), 6);
  std::string text = write_theory(pt.theory);
  Theory back = read_theory(text, st);
  EXPECT_EQ(back, pt.theory);
}

TEST(BehaviourFile, ParsesCommentsAndRationals) {
  auto facts = parse_behavior(";; two outcomes\nx |>1/3 t ;; first\n\nx |>2/3 s\n");
  ASSERT_EQ(facts.size(), 2u);
  EXPECT_EQ(facts[1].prob, Rational(2, 3));
  EXPECT_EQ(facts[1].target, T("s"));
  EXPECT_THROW(parse_behavior("x |> t\n"), ParseError);
}

}  // namespace
}  // namespace tl::theory
