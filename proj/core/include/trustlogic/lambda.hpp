// Copyright 2026 The trustlogic Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "trustlogic/syntax.hpp"

namespace tl::lambda {

// Child indices from the root: App 0=fn 1=arg, Lam 0=body, Bang 0=inner.
using Path = std::vector<uint8_t>;

enum class Reach { Yes, No, FuelExhausted };
const char* to_string(Reach r);

// Capture-avoiding t^{s/x}.
Term term_subst(const Term& t, const Term& s, Var x);

// Redex positions in leftmost-outermost (preorder) order.
std::vector<Path> redexes(const Term& t);
const Term& subterm_at(const Term& t, const Path& p);
// Contract the redex at p. Throws std::invalid_argument if p is not a redex.
Term step(const Term& t, const Path& p);
// One-step reducts in redex order, duplicates kept.
std::vector<Term> reducts(const Term& t);

struct ReduceLimits {
  uint64_t fuel = 100;
  size_t max_visited = 200000;
};

// Is there a reduction path t ->* u of length <= fuel? Breadth-first.
Reach reduces_to(const Term& t, const Term& u, const ReduceLimits& lim);
inline Reach reduces_to(const Term& t, const Term& u, uint64_t fuel) { return reduces_to(t, u, ReduceLimits{fuel}); }

struct Trace {
  std::vector<Term> terms;  // terms[0] is the input
  bool normal = false;      // last term has no redex
};
// Leftmost-outermost reduction for at most fuel steps.
Trace normal_order(const Term& t, uint64_t fuel);

bool alpha_equivalent(const Term& a, const Term& b);
// Key identical exactly for alpha-equivalent terms (de Bruijn rendering).
std::string alpha_key(const Term& t);

// Two one-step reducts of a common term, joined within the budget?
// Exhaustion of either search is reported as FuelExhausted.
Reach joinable(const Term& a, const Term& b, uint64_t fuel, size_t max_terms = 4000);

Term pair_operator();  // \x. \y. \z. z x y
Term encode_pair(const Term& t, const Term& s);
Term first_projection();   // \z1. \z2. z1
Term second_projection();  // \z1. \z2. z2
Term nil();                // \x. \y. y
Term encode_list(const std::vector<Term>& items);
Term church(uint64_t n);

}  // namespace tl::lambda
