// Copyright 2026 The trustlogic Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "trustlogic/lambda.hpp"
#include "trustlogic/proof.hpp"
#include "trustlogic/semantics.hpp"

namespace tl::fuzz {

using Rng = std::mt19937_64;

// Random-model parameters fitted to the vocabulary of a sequent: every term
// occurrence, evidence term and trust subject goes into the table; seed
// candidates are its subformulas.
sem::RandomParams signature(const proof::Sequent& s);

struct SoundnessReport {
  size_t models = 0;
  size_t states = 0;
  size_t verified_contexts = 0;  // states where every hypothesis held
  size_t undecided = 0;          // evidence search did not settle
  size_t violations = 0;
  std::vector<std::string> examples;  // first few violations, printable
};

// Checks "context verified => conclusion verified" at every state of
// `models` random models. Only the root sequent is tested.
SoundnessReport soundness(const proof::Sequent& s, size_t models, uint64_t seed, size_t depth = 6);

struct VariantReport {
  size_t cases = 0;
  size_t agree = 0;
  size_t disagree = 0;
  size_t errors = 0;
  std::vector<std::string> examples;
};

// Samples (model, state, formula, term) and compares evaluation under the
// x-variant with evaluation of the substituted formula. Sampling domain:
// injective tables, g = I_w, evidence seeds over constants only.
VariantReport variant_substitution(size_t cases, uint64_t seed, size_t depth = 6);

struct SeparationReport {
  size_t models = 0;
  size_t separated_models = 0;    // models with a state where all three hypotheses hold
  size_t separated_states = 0;
  size_t identity_states = 0;     // separated states where t = s is also true
  size_t goal_true = 0;           // separated states where T[a,t] C(t) came out true
  size_t consequence_true = 0;    // separated models where consequence() returned true
  size_t undecided = 0;
};

// Random valid models over s, t, u, C, a whose evidence seeds never mention t.
// At every state where
// they hold the goal must be false and consequence() must report false.
SeparationReport example2_separation(size_t models, uint64_t seed, size_t depth = 6);
std::vector<Formula> separation_hyps();
Formula separation_goal();

// Random pure term with exactly `size` nodes over variables x y z w.
Term random_term(Rng& rng, size_t size);

struct ConfluenceReport {
  size_t terms = 0;
  size_t pairs = 0;
  size_t joined = 0;
  size_t failures = 0;         // a pair whose searches both finished without meeting
  size_t exhausted_terms = 0;  // terms with at least one pair that ran out of fuel
  std::vector<std::string> examples;
};

// Terms of size <= max_size with at least two redexes; every pair of one-step
// reducts is tested for a common reduct within fuel.
ConfluenceReport local_confluence(size_t terms, size_t max_size, uint64_t fuel, uint64_t seed);

}  // namespace tl::fuzz
