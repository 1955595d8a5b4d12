// Copyright 2026 The trustlogic Authors
// SPDX-License-Identifier: Apache-2.0

#include "trustlogic/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "trustlogic/corpus.hpp"
#include "trustlogic/fuzz.hpp"
#include "trustlogic/lambda.hpp"
#include "trustlogic/proof.hpp"
#include "trustlogic/semantics.hpp"
#include "trustlogic/theory.hpp"

namespace tl::cli {
namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  uint64_t fuel = 100;
  size_t depth = 6;
  size_t models = 200;
  uint64_t seed = 1;
  std::string only_case;
  std::string format = "text";
  bool records() const { return format == "records"; }
};

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool blank(std::string_view text) {
  bool comment = false;
  for (char c : text) {
    if (c == '\n') comment = false;
    else if (c == ';') comment = true;
    else if (!comment && !std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

void emit(std::ostream& out, const Config& cfg, const std::string& id, const Outcome& o) {
  if (cfg.records()) {
    std::string detail = o.detail;
    std::replace(detail.begin(), detail.end(), '\n', ' ');
    out << id << ' ' << (o.pass ? "pass" : "fail") << ' ' << detail << '\n';
  } else {
    out << (o.pass ? "PASS " : "FAIL ") << id << ": " << o.detail << '\n';
  }
}

std::string fuzz_summary(const fuzz::SoundnessReport& r) {
  return std::to_string(r.models) + " models, " + std::to_string(r.states) + " states, " +
         std::to_string(r.verified_contexts) + " verified, " + std::to_string(r.undecided) + " undecided, " +
         std::to_string(r.violations) + " violations";
}

// ---------------------------------------------------------------- check

int cmd_check(const Config& cfg, const std::string& proof_file, const std::string& hyps_file, std::ostream& out,
              std::ostream& err) {
  SymbolTable st;
  std::string text = slurp(proof_file);
  if (blank(text)) throw InputError("'" + proof_file + "' contains no derivations");
  auto proofs = proof::read_proofs(text, st);
  std::optional<std::vector<Formula>> hyps;
  if (!hyps_file.empty()) hyps = theory::read_theory(slurp(hyps_file), st).formulas();

  int rc = kOk;
  for (size_t i = 0; i < proofs.size(); ++i) {
    const auto& d = *proofs[i];
    std::string id = "proof-" + std::to_string(i + 1);
    Outcome o;
    auto rep = proof::check(d);
    if (!rep.ok) {
      o.detail = rep.describe();
      err << id << ": " << o.detail << '\n';
    } else if (hyps && !proof::derives(*hyps, d.conclusion.concl, d)) {
      o.detail = "checks, but its context is not drawn from the hypotheses";
      err << id << ": " << o.detail << '\n';
    } else {
      o.pass = true;
      o.detail = std::to_string(proof::node_count(d)) + " nodes, concludes " + to_string(d.conclusion.concl);
    }
    if (!o.pass) rc = kLogicalFailure;
    emit(out, cfg, id, o);
  }
  return rc;
}

// ---------------------------------------------------------------- eval / validate

int cmd_eval(const Config& cfg, const std::string& model_file, const std::string& formula_text,
             const std::string& state, std::ostream& out, std::ostream& err) {
  SymbolTable st;
  sem::Model m = sem::read_model(slurp(model_file), st);
  Formula f = parse_formula(formula_text, st);
  std::vector<sem::StateId> at;
  if (state.empty()) {
    for (sem::StateId w = 0; w < m.states.size(); ++w) at.push_back(w);
  } else {
    auto w = m.state(state);
    if (!w) throw InputError("no state named '" + state + "'");
    at.push_back(*w);
  }
  sem::Evaluator ev(m, cfg.depth);
  int rc = kOk;
  for (sem::StateId w : at) {
    try {
      bool v = ev.eval(w, f);
      if (!v) rc = kLogicalFailure;
      if (at.size() == 1 && !cfg.records()) out << (v ? "true" : "false") << '\n';
      else emit(out, cfg, m.states[w], Outcome{v, v ? "true" : "false"});
    } catch (const sem::DepthExhausted& e) {
      err << m.states[w] << ": " << e.what() << '\n';
      emit(out, cfg, m.states[w], Outcome{false, "undecided"});
      rc = kLogicalFailure;
    }
  }
  return rc;
}

int cmd_validate(const Config& cfg, const std::string& model_file, std::ostream& out) {
  SymbolTable st;
  sem::Model m = sem::read_model(slurp(model_file), st);
  auto rep = sem::validate_model(m);
  if (cfg.records()) {
    if (rep.ok()) out << model_file << " pass valid\n";
    for (const auto& v : rep.violations) out << v.condition << " fail " << v.witness << '\n';
  } else {
    out << (rep.ok() ? "valid\n" : rep.describe());
    if (!rep.ok() && rep.describe().back() != '\n') out << '\n';
  }
  return rep.ok() ? kOk : kLogicalFailure;
}

// ---------------------------------------------------------------- reduce

int cmd_reduce(const Config& cfg, const std::string& term_text, std::ostream& out) {
  Term t = parse_term(term_text);
  auto tr = lambda::normal_order(t, cfg.fuel);
  for (size_t i = 0; i < tr.terms.size(); ++i) out << (i ? "-> " : "   ") << to_string(tr.terms[i]) << '\n';
  size_t steps = tr.terms.size() - 1;
  if (tr.normal) out << ";; normal form after " << steps << " step" << (steps == 1 ? "" : "s") << '\n';
  else out << ";; FuelExhausted after " << steps << " step" << (steps == 1 ? "" : "s") << '\n';
  return kOk;
}

// ---------------------------------------------------------------- theory

struct TheoryOptions {
  std::string input;
  bool lambda = false;
  bool via_star = false;
  std::string lift_k, lift_t;
  std::string output;
};

int cmd_theory(const Config& cfg, const TheoryOptions& opt, std::ostream& out, std::ostream& err) {
  std::string text = slurp(opt.input);
  theory::Theory th;
  if (opt.lambda) {
    std::vector<Term> seeds;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      if (auto c = line.find(";;"); c != std::string::npos) line.resize(c);
      if (!blank(line)) seeds.push_back(parse_term(line));
    }
    auto steps = theory::sigma_step(seeds, cfg.fuel);
    if (steps.fuel_exhausted) err << ";; one-step closure stopped at the fuel bound\n";
    th = theory::sigma_lambda_eq(steps.theory, opt.via_star);
  } else {
    auto facts = theory::parse_behavior(text);
    if (facts.empty()) throw InputError("'" + opt.input + "' has no behaviour facts");
    auto pt = theory::sigma_prob_eq(facts, static_cast<int>(cfg.depth));
    if (!pt.saturated) err << ";; closure not saturated within depth " << cfg.depth << '\n';
    th = pt.theory;
  }
  if (!opt.lift_k.empty()) th = theory::lift_K(th, names::agent(opt.lift_k));
  if (!opt.lift_t.empty()) th = theory::lift_T(th, names::agent(opt.lift_t));
  std::string rendered = theory::write_theory(th);
  if (opt.output.empty()) {
    out << rendered;
  } else {
    std::ofstream f(opt.output, std::ios::binary);
    if (!f) throw InputError("cannot write '" + opt.output + "'");
    f << rendered;
  }
  return kOk;
}

// ---------------------------------------------------------------- corpus

struct Case {
  std::string id;
  std::function<Outcome(const Config&)> run;
};

Outcome run_derivation(const corpus::Entry& e, const Config& cfg) {
  auto rep = proof::check(*e.derivation);
  if (!rep.ok) return {false, rep.describe()};
  if (!proof::derives(e.hyps, e.goal, *e.derivation)) return {false, "conclusion not derived from the listed hypotheses"};
  auto fz = fuzz::soundness(e.derivation->conclusion, cfg.models, cfg.seed, cfg.depth);
  return {fz.violations == 0, std::to_string(proof::node_count(*e.derivation)) + " nodes; " + fuzz_summary(fz)};
}

Outcome run_example3_theory(const Config& cfg) {
  auto pt = theory::sigma_prob_eq(corpus::example3_behavior(), static_cast<int>(cfg.depth));
  auto chain = corpus::example3_chain();
  for (size_t i = 0; i + 1 < chain.size(); ++i)
    if (!pt.theory.contains(Formula::eq(chain[i].encode(), chain[i + 1].encode())))
      return {false, "missing " + chain[i].pretty() + " = " + chain[i + 1].pretty()};
  theory::Theory lifted = theory::lift_T(pt.theory, names::agent("a"));
  const auto& e = *corpus::find("example3");
  for (const auto& h : e.hyps)
    if (!lifted.contains(h)) return {false, "hypothesis not in the lifted theory: " + to_string(h)};
  return {true, std::to_string(pt.identities.size()) + " identities; chain of " + std::to_string(chain.size()) +
                    " distributions present; " + std::to_string(e.hyps.size()) + " hypotheses lifted"};
}

std::vector<Case> all_cases() {
  std::vector<Case> cases;
  for (const auto& e : corpus::derivations()) {
    if (e.name == "example3") {
      cases.push_back({e.name, [&e](const Config& cfg) {
                         Outcome d = run_derivation(e, cfg);
                         Outcome t = run_example3_theory(cfg);
                         return Outcome{d.pass && t.pass, d.detail + "; " + t.detail};
                       }});
    } else {
      cases.push_back({e.name, [&e](const Config& cfg) { return run_derivation(e, cfg); }});
    }
  }
  cases.push_back({"reject-eq-subst-quant", [](const Config&) {
                     auto r = proof::check(*corpus::quantifier_substitution_in_eq_subst());
                     return Outcome{!r.ok && r.kind == proof::FailKind::SubstitutionMismatch,
                                    r.ok ? "accepted" : r.describe()};
                   }});
  cases.push_back({"reject-necessity-of-identity", [](const Config&) {
                     auto r = proof::check(*corpus::necessity_of_identity());
                     return Outcome{!r.ok && r.kind == proof::FailKind::SideConditionViolated,
                                    r.ok ? "accepted" : r.describe()};
                   }});
  cases.push_back({"hyper-model", [](const Config& cfg) {
                     SymbolTable st;
                     sem::Model m = sem::build_hyper_counterexample();
                     auto v = sem::validate_model(m);
                     if (!v.ok()) return Outcome{false, v.describe()};
                     sem::Evaluator ev(m, cfg.depth);
                     sem::StateId w = *m.state("w");
                     if (!ev.eval(w, parse_formula("j : (P(x) & Q(y))", st))) return Outcome{false, "j:(P(x)&Q(y)) false"};
                     for (const auto& [t, _] : m.table)
                       if (ev.eval(w, Formula::just(t, parse_formula("Q(y) & P(x)", st))))
                         return Outcome{false, to_string(t) + ":(Q(y)&P(x)) true"};
                     return Outcome{true, "j:(P(x)&Q(y)) true, no table term justifies Q(y)&P(x)"};
                   }});
  cases.push_back({"intensional-model", [](const Config& cfg) {
                     SymbolTable st;
                     sem::Model m = sem::build_intensional_counterexample();
                     auto v = sem::validate_model(m);
                     if (!v.ok()) return Outcome{false, v.describe()};
                     sem::Evaluator ev(m, cfg.depth);
                     sem::StateId w = *m.state("w");
                     bool a = ev.eval(w, parse_formula("t = s", st));
                     bool b = ev.eval(w, parse_formula("K[a] P(t)", st));
                     bool c = ev.eval(w, parse_formula("K[a] P(s)", st));
                     return Outcome{a && b && !c, std::string("t = s ") + (a ? "true" : "false") + ", K[a] P(t) " +
                                                      (b ? "true" : "false") + ", K[a] P(s) " + (c ? "true" : "false")};
                   }});
  cases.push_back({"example2-countermodel", [](const Config& cfg) {
                     sem::Model m = sem::build_example2_model();
                     auto v = sem::validate_model(m);
                     if (!v.ok()) return Outcome{false, v.describe()};
                     bool c = sem::consequence(m, fuzz::separation_hyps(), fuzz::separation_goal(), cfg.depth);
                     return Outcome{!c, c ? "consequence holds" : "consequence fails, as claimed"};
                   }});
  cases.push_back({"example2-separation", [](const Config& cfg) {
                     auto r = fuzz::example2_separation(cfg.models, cfg.seed, cfg.depth);
                     bool pass = r.separated_models > 0 && r.goal_true == 0 && r.consequence_true == 0;
                     return Outcome{pass, std::to_string(r.separated_models) + "/" + std::to_string(r.models) +
                                              " models separated, " + std::to_string(r.identity_states) +
                                              " states with t = s, " + std::to_string(r.goal_true) + " goal true, " +
                                              std::to_string(r.consequence_true) + " consequence true"};
                   }});
  cases.push_back({"variant-substitution", [](const Config& cfg) {
                     auto r = fuzz::variant_substitution(1000, cfg.seed, cfg.depth);
                     return Outcome{r.disagree == 0 && r.errors == 0,
                                    std::to_string(r.agree) + "/" + std::to_string(r.cases) + " agree, " +
                                        std::to_string(r.errors) + " errors"};
                   }});
  cases.push_back({"pair-projections", [](const Config& cfg) {
                     Term t = parse_term("t"), s = parse_term("s");
                     Term p = lambda::encode_pair(t, s);
                     auto first = lambda::reduces_to(Term::app(p, lambda::first_projection()), t, cfg.fuel);
                     auto second = lambda::reduces_to(Term::app(p, lambda::second_projection()), s, cfg.fuel);
                     return Outcome{first == lambda::Reach::Yes && second == lambda::Reach::Yes,
                                    std::string("first ") + lambda::to_string(first) + ", second " +
                                        lambda::to_string(second)};
                   }});
  cases.push_back({"confluence", [](const Config& cfg) {
                     auto r = fuzz::local_confluence(500, 12, 50, cfg.seed);
                     bool pass = r.failures == 0 && r.exhausted_terms * 20 <= r.terms;
                     return Outcome{pass, std::to_string(r.joined) + "/" + std::to_string(r.pairs) + " pairs joined, " +
                                              std::to_string(r.failures) + " failures, " +
                                              std::to_string(r.exhausted_terms) + " terms out of fuel"};
                   }});
  return cases;
}

int cmd_corpus(const Config& cfg, bool list, std::ostream& out) {
  auto cases = all_cases();
  if (list) {
    for (const auto& c : cases) out << c.id << '\n';
    return kOk;
  }
  bool any = false, all_pass = true;
  for (const auto& c : cases) {
    if (!cfg.only_case.empty() && c.id != cfg.only_case) continue;
    any = true;
    Outcome o = c.run(cfg);
    all_pass = all_pass && o.pass;
    emit(out, cfg, c.id, o);
  }
  if (!any) throw InputError("no corpus case named '" + cfg.only_case + "'");
  return all_pass ? kOk : kLogicalFailure;
}

// ---------------------------------------------------------------- fuzz

int cmd_fuzz(const Config& cfg, const std::string& proof_file, std::ostream& out) {
  std::vector<std::pair<std::string, proof::DerivationPtr>> targets;
  SymbolTable st;
  if (!proof_file.empty()) {
    auto proofs = proof::read_proofs(slurp(proof_file), st);
    if (proofs.empty()) throw InputError("'" + proof_file + "' contains no derivations");
    for (size_t i = 0; i < proofs.size(); ++i) targets.emplace_back("proof-" + std::to_string(i + 1), proofs[i]);
  } else {
    for (const auto& e : corpus::derivations())
      if (cfg.only_case.empty() || e.name == cfg.only_case) targets.emplace_back(e.name, e.derivation);
    if (targets.empty()) throw InputError("no corpus derivation named '" + cfg.only_case + "'");
  }
  bool clean = true;
  for (const auto& [id, d] : targets) {
    auto r = fuzz::soundness(d->conclusion, cfg.models, cfg.seed, cfg.depth);
    clean = clean && r.violations == 0;
    Outcome o{r.violations == 0, fuzz_summary(r)};
    if (!r.examples.empty() && !cfg.records()) o.detail += "\n" + r.examples.front();
    emit(out, cfg, id, o);
  }
  return clean ? kOk : kLogicalFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Proof checker and model evaluator for quantified epistemic justification logic with trust",
               "trustlogic"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  app.add_option("--fuel", cfg.fuel, "beta-step bound")->check(CLI::NonNegativeNumber)->capture_default_str();
  app.add_option("--depth", cfg.depth, "evidence closure rounds / theory depth")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--models", cfg.models, "random models per fuzz run")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  app.add_option("--case", cfg.only_case, "restrict to one corpus case");
  app.add_option("--format", cfg.format, "text or records")
      ->check(CLI::IsMember({"text", "records"}))
      ->capture_default_str();

  std::string proof_file, hyps_file, model_file, formula, state, term;
  auto* check = app.add_subcommand("check", "check every derivation in a proof file");
  check->add_option("proof", proof_file, "proof file")->required();
  check->add_option("--hyps", hyps_file, "theory file the contexts must be drawn from");

  auto* eval = app.add_subcommand("eval", "evaluate a formula in a model");
  eval->add_option("model", model_file, "model file")->required();
  eval->add_option("formula", formula, "formula")->required();
  eval->add_option("--state", state, "state name (default: every state)");

  auto* validate = app.add_subcommand("validate", "check the frame conditions of a model");
  validate->add_option("model", model_file, "model file")->required();

  auto* reduce = app.add_subcommand("reduce", "normal-order reduction trace");
  reduce->add_option("term", term, "lambda term")->required();

  TheoryOptions topt;
  auto* th = app.add_subcommand("theory", "generate an identity theory");
  th->add_option("input", topt.input, "behaviour file, or term file with --lambda")->required();
  th->add_flag("--lambda", topt.lambda, "input lists lambda terms; emit the beta identity theory");
  th->add_flag("--via-star", topt.via_star, "identify t and s whenever t reduces to s");
  th->add_option("--lift-k", topt.lift_k, "prefix every identity with K[agent]");
  th->add_option("--lift-t", topt.lift_t, "prefix every identity with T[agent, leftmost term]");
  th->add_option("-o,--output", topt.output, "write to a file instead of stdout");

  bool list = false;
  auto* corpus = app.add_subcommand("corpus", "replay the built-in cases");
  corpus->add_flag("--list", list, "print case ids only");

  std::string fuzz_file;
  auto* fz = app.add_subcommand("fuzz", "random-model soundness check of derivation roots");
  fz->add_option("--proof", fuzz_file, "proof file (default: the built-in corpus)");

  std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*check) return cmd_check(cfg, proof_file, hyps_file, out, err);
    if (*eval) return cmd_eval(cfg, model_file, formula, state, out, err);
    if (*validate) return cmd_validate(cfg, model_file, out);
    if (*reduce) return cmd_reduce(cfg, term, out);
    if (*th) return cmd_theory(cfg, topt, out, err);
    if (*corpus) return cmd_corpus(cfg, list, out);
    if (*fz) return cmd_fuzz(cfg, fuzz_file, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const ParseError& e) {
    err << "parse error at offset " << e.pos() << ": " << e.what() << '\n';
    return kInputError;
  } catch (const sem::UnknownTerm& e) {
    err << "UnknownTerm: " << e.what() << '\n';
    return kInputError;
  } catch (const theory::MassError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace tl::cli
