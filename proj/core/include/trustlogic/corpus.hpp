// Copyright 2026 The trustlogic Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "trustlogic/proof.hpp"
#include "trustlogic/theory.hpp"

namespace tl::corpus {

struct Entry {
  std::string name;
  std::string summary;
  proof::DerivationPtr derivation;
  std::vector<Formula> hyps;  // hypothesis set the derivation is meant to draw on
  Formula goal;
};

// Built once on first use; safe to call from several threads.
const std::vector<Entry>& derivations();
const Entry* find(std::string_view name);

// The seven behaviour facts of the service comparison.
std::vector<theory::ProbFact> example3_behavior();
std::string example3_behavior_text();
// Distributions of the chain ((1,u)) = ... = ((1/4,o1),(3/4,o2)).
std::vector<theory::ProbDist> example3_chain();
theory::ProbDist example3_s_root();

// Negative cases: both must be rejected by proof::check.
// eq-subst over P(x) & K[a] Q(x) computed with the quantifier substitution.
proof::DerivationPtr quantifier_substitution_in_eq_subst();
// t = s => K[a] t = s by k-nec over a non-epistemic context.
proof::DerivationPtr necessity_of_identity();

}  // namespace tl::corpus
