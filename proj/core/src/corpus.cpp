// Copyright 2026 The trustlogic Authors
// SPDX-License-Identifier: Apache-2.0

#include "trustlogic/corpus.hpp"

namespace tl::corpus {
namespace {

namespace b = proof::build;
using proof::DerivationPtr;
using theory::ProbDist;
using theory::Rational;

SymbolTable& symbols() {
  static SymbolTable st;
  return st;
}

Formula F(std::string_view s) { return parse_formula(s, symbols()); }
Term T(std::string_view s) { return parse_term(s); }
Var V(std::string_view s) { return names::var(s); }
Agent A(std::string_view s) { return names::agent(s); }

Entry entry(std::string name, std::string summary, DerivationPtr d, std::vector<Formula> hyps = {}) {
  Formula goal = d->conclusion.concl;
  if (hyps.empty()) hyps = d->conclusion.ctx;
  return Entry{std::move(name), std::move(summary), std::move(d), std::move(hyps), goal};
}

DerivationPtr barcan() {
  const Agent a = A("a");
  const Formula ka = F("K[a] P(x)");
  const Formula all_ka = F("forall x. K[a] P(x)");
  const Formula not_all_ka = Formula::neg(all_ka);
  const Formula k_not_all_ka = Formula::know(a, not_all_ka);
  const Formula hyp = Formula::know(a, Formula::neg(k_not_all_ka));  // K~K~forall x K P(x)
  const Formula not_ka = Formula::neg(ka);
  const Formula k_not_ka = Formula::know(a, not_ka);

  // K~KA => K~forall x KA
  DerivationPtr inner = b::imp_e(b::k_t(b::ax(k_not_ka)), b::all_e(b::ax(all_ka), T("x")));
  DerivationPtr k_not_all = b::k_nec(b::imp_i(inner, all_ka), a);
  // K~K~forall x KA, K~KA => bot
  DerivationPtr clash = b::imp_e(b::k_t(b::ax(hyp)), k_not_all);
  DerivationPtr not_k_not_ka = b::imp_i(clash, k_not_ka);
  DerivationPtr bot = b::imp_e(not_k_not_ka, b::k_5(b::ax(not_ka)));
  DerivationPtr a_x = b::k_t(b::dne(b::imp_i(bot, not_ka)));
  DerivationPtr all_a = b::all_i(a_x, V("x"), F("P(x)"), V("x"));
  DerivationPtr delta1 = b::imp_i(b::k_nec(all_a, a), hyp);

  // forall x KA => K~K~forall x KA
  DerivationPtr refute = b::imp_e(b::k_t(b::ax(k_not_all_ka)), b::ax(all_ka));
  DerivationPtr delta2 = b::k_5(b::imp_i(refute, k_not_all_ka));
  return b::imp_i(b::imp_e(delta1, delta2), all_ka);
}

DerivationPtr excluded_middle() {
  Formula e = F("~(forall x. P(x)) & ~~(forall x. P(x))");
  DerivationPtr clash = b::imp_e(b::and_e(b::ax(e), 2), b::and_e(b::ax(e), 1));
  return b::imp_i(b::contr(clash, e), e);
}

DerivationPtr example2() {
  Agent a = A("a");
  DerivationPtr c_s = b::k_t(b::t_elim(b::ax(F("T[a,s] C(s)")), V("e1")));
  DerivationPtr s_u = b::k_t(b::t_elim(b::ax(F("T[a,u] s = u")), V("e2")));
  DerivationPtr c_u = b::j_eq_l(s_u, c_s, V("x"), F("C(x)"));
  return b::t_intro(b::nec_kt(c_u, a), T("u"));
}

ProbDist dist(std::vector<std::pair<Rational, const char*>> es) {
  ProbDist d;
  for (auto& [p, t] : es) d.entries.emplace_back(p, T(t));
  return d;
}

DerivationPtr example3() {
  Agent a = A("a");
  auto chain = example3_chain();
  ProbDist ls = example3_s_root();
  const ProbDist& out = chain.back();
  auto fact = [](const ProbDist& l, const ProbDist& r) { return Formula::eq(l.encode(), r.encode()); };
  auto hyp = [&](const ProbDist& l, const ProbDist& r) { return Formula::trust(a, l.encode(), fact(l, r)); };

  // T-elim then K-elim on every lifted identity.
  int n = 0;
  auto open = [&](const ProbDist& l, const ProbDist& r) {
    return b::k_t(b::t_elim(b::ax(hyp(l, r)), V("e" + std::to_string(++n))));
  };
  DerivationPtr cur = open(ls, out);  // e1 : LS = D
  Var hole = V("hole");
  Formula abstraction = Formula::eq(ls.encode(), Term::var(hole));
  // Walk the chain backwards, rewriting the right-hand side towards ((1,u)).
  for (size_t i = chain.size() - 1; i > 0; --i) {
    DerivationPtr link = open(chain[i - 1], chain[i]);  // e_k : r_{i-1} = r_i
    cur = b::j_eq_r(link, cur, hole, abstraction);
  }
  return b::t_intro(b::nec_kt(cur, a), chain.front().encode());
}

std::vector<Entry> build_all() {
  Agent a = A("a");
  std::vector<Entry> v;
  v.push_back(entry("identity", "P(x) -> P(x)", b::imp_i(b::ax(F("P(x)")), F("P(x)"))));
  v.push_back(entry("eq-refl", "identity axiom", b::eq_refl(T("t"))));
  v.push_back(entry("eq-chain", "symmetry and transitivity of identity",
                    b::eq_sym(b::eq_trans(b::ax(F("s = t")), b::ax(F("t = u"))))));
  v.push_back(entry("leibniz", "substitution of identicals in an extensional context",
                    b::eq_subst(b::ax(F("t = s")), b::ax(F("P(t)")), V("x"), F("P(x)"))));
  v.push_back(entry("leibniz-opaque", "substitution stops at K",
                    b::eq_subst(b::ax(F("t = s")), b::ax(F("P(t) & K[a] Q(x)")), V("x"), F("P(x) & K[a] Q(x)"))));
  v.push_back(entry("k-mp", "distribution of K over implication",
                    b::k_dist(b::ax(F("K[a] (P(x) -> Q(x))")), b::ax(F("K[a] P(x)")))));
  v.push_back(entry("k-leibniz", "known identity licenses substitution under K",
                    b::k_nec(b::eq_subst(b::k_t(b::ax(F("K[a] t = s"))), b::k_t(b::ax(F("K[a] P(t)"))), V("x"),
                                         F("P(x)")),
                             a)));
  v.push_back(entry("k-5", "negative introspection", b::k_5(b::ax(F("~K[a] P(x)")))));
  v.push_back(entry("j-app", "application of justifications",
                    b::j_app(b::ax(F("j : (P(x) -> Q(x))")), b::ax(F("k : P(x)")))));
  v.push_back(entry("j-bang", "proof checker", b::j_bang(b::ax(F("j : P(x)")))));
  v.push_back(entry("j-eq-l", "justified identity, left orientation",
                    b::j_eq_l(b::ax(F("k : t = s")), b::ax(F("j : P(t)")), V("x"), F("P(x)"))));
  v.push_back(entry("j-eq-r", "justified identity, right orientation",
                    b::j_eq_r(b::ax(F("k : s = t")), b::ax(F("j : P(t)")), V("x"), F("P(x)"))));
  v.push_back(entry("j-t", "factivity of justification", b::j_t(b::ax(F("j : P(x)")))));
  v.push_back(entry("barcan", "forall x K[a] P(x) -> K[a] forall x P(x)", barcan()));
  v.push_back(entry("excluded-middle", "~(~forall x P(x) & ~~forall x P(x))", excluded_middle()));
  v.push_back(entry("example2", "a trusts u to be a good classifier", example2(),
                    {F("T[a,s] C(s)"), F("T[a,u] s = u")}));
  v.push_back(entry("example3", "a trusts u to behave as s", example3()));
  v.push_back(entry("forall-and", "universal conjunction elimination",
                    b::all_i(b::and_e(b::all_e(b::ax(F("forall x. (P(x) & Q(x))")), T("x")), 1), V("x"), F("P(x)"),
                             V("x"))));
  v.push_back(entry("nec-kt", "trust hypotheses feed necessitation",
                    b::nec_kt(b::j_t(b::k_t(b::t_elim(b::ax(F("T[a,t] P(t)")), V("e1")))), a)));
  v.push_back(entry("t-intro", "known justification gives trust", b::t_intro(b::ax(F("K[a] j : P(t)")), T("t"))));
  v.push_back(entry("trust-roundtrip", "trust elimination then reintroduction",
                    b::t_intro(b::t_elim(b::ax(F("T[a,t] P(t)")), V("e1")), T("t"))));
  v.push_back(entry("efq", "ex falso on an atom", b::efq(b::ax(F("bot")), F("P(x)"))));
  v.push_back(entry("dne", "double negation elimination", b::dne(b::ax(F("~~P(x)")))));
  v.push_back(entry("structural", "weakening, contraction and duplication",
                    b::dup(b::weak(b::contr(b::and_i(b::ax(F("P(x)")), b::ax(F("P(x)"))), F("P(x)")), {F("Q(x)")}),
                           F("P(x)"))));
  v.push_back(entry("all-e-term", "instantiation at a compound term",
                    b::all_e(b::ax(F("forall x. P(x)")), T("f t"))));
  v.push_back(entry("k-nec", "necessitation with an empty context",
                    b::k_nec(b::imp_i(b::ax(F("P(x)")), F("P(x)")), a)));
  return v;
}

}  // namespace

const std::vector<Entry>& derivations() {
  static const std::vector<Entry> all = build_all();
  return all;
}

const Entry* find(std::string_view name) {
  for (const auto& e : derivations())
    if (e.name == name) return &e;
  return nullptr;
}

std::vector<theory::ProbFact> example3_behavior() { return theory::parse_behavior(example3_behavior_text()); }

std::string example3_behavior_text() {
  return ";; behaviour of the services s and u\n"
         "s |>1/4 o1\n"
         "s |>3/4 o2\n"
         "u |>3/4 u1\n"
         "u |>1/4 u2\n"
         "u1 |>1/3 o1\n"
         "u1 |>2/3 o2\n"
         "u2 |>1 o2\n";
}

std::vector<ProbDist> example3_chain() {
  const Rational q(1, 4), h(1, 2), tq(3, 4);
  return {
      dist({{Rational(1), "u"}}),
      dist({{tq, "u1"}, {q, "u2"}}),
      dist({{q, "o1"}, {h, "o2"}, {q, "u2"}}),
      dist({{q, "o1"}, {h, "o2"}, {q, "o2"}}),
      dist({{q, "o1"}, {tq, "o2"}}),
  };
}

ProbDist example3_s_root() { return dist({{Rational(1), "s"}}); }

DerivationPtr quantifier_substitution_in_eq_subst() {
  Formula abstraction = F("P(x) & K[a] Q(x)");
  Term t = T("t"), s = T("s");
  Var x = V("x");
  DerivationPtr eq = b::ax(F("t = s"));
  DerivationPtr body = b::ax(subst_quant(abstraction, t, x));
  proof::Params p;
  p.var = x;
  p.formula = abstraction;
  return b::raw(proof::Rule::EqSubst, p, {eq, body},
                proof::Sequent{proof::multiset_sum(eq->conclusion.ctx, body->conclusion.ctx),
                               subst_quant(abstraction, s, x)});
}

DerivationPtr necessity_of_identity() { return b::k_nec(b::ax(F("t = s")), A("a")); }

}  // namespace tl::corpus
