// Copyright 2026 The trustlogic Authors
// SPDX-License-Identifier: Apache-2.0

#include <boost/container_hash/hash.hpp>

#include "trustlogic/syntax.hpp"

namespace tl {
namespace {

size_t mix(size_t seed, size_t v) {
  boost::hash_combine(seed, v);
  return seed;
}

}  // namespace

Term Term::var(Var v) {
  return Term(std::make_shared<const Node>(
      Node{Kind::Var, v, {}, {}, mix(0x51, v.id), 1}));
}

Term Term::app(const Term& fn, const Term& arg) {
  return Term(std::make_shared<const Node>(
      Node{Kind::App, {}, fn, arg, mix(mix(0x52, fn.hash()), arg.hash()), 1 + fn.size() + arg.size()}));
}

Term Term::lam(Var binder, const Term& body) {
  return Term(std::make_shared<const Node>(
      Node{Kind::Lam, binder, body, {}, mix(mix(0x53, binder.id), body.hash()), 1 + body.size()}));
}

Term Term::bang(const Term& inner) {
  return Term(std::make_shared<const Node>(
      Node{Kind::Bang, {}, inner, {}, mix(0x54, inner.hash()), 1 + inner.size()}));
}

bool operator==(const Term& x, const Term& y) {
  if (x.n_ == y.n_) return true;
  if (!x.n_ || !y.n_) return false;
  if (x.hash() != y.hash() || x.kind() != y.kind() || x.size() != y.size()) return false;
  switch (x.kind()) {
    case Term::Kind::Var: return x.var() == y.var();
    case Term::Kind::App: return x.fn() == y.fn() && x.arg() == y.arg();
    case Term::Kind::Lam: return x.var() == y.var() && x.body() == y.body();
    case Term::Kind::Bang: return x.inner() == y.inner();
  }
  return false;
}

std::strong_ordering operator<=>(const Term& x, const Term& y) {
  if (x.n_ == y.n_) return std::strong_ordering::equal;
  if (!x.n_) return std::strong_ordering::less;
  if (!y.n_) return std::strong_ordering::greater;
  if (auto c = x.kind() <=> y.kind(); c != 0) return c;
  switch (x.kind()) {
    case Term::Kind::Var: return x.var() <=> y.var();
    case Term::Kind::App:
      if (auto c = x.fn() <=> y.fn(); c != 0) return c;
      return x.arg() <=> y.arg();
    case Term::Kind::Lam:
      if (auto c = x.var() <=> y.var(); c != 0) return c;
      return x.body() <=> y.body();
    case Term::Kind::Bang: return x.inner() <=> y.inner();
  }
  return std::strong_ordering::equal;
}

Formula Formula::bot() {
  static const Formula b(std::make_shared<const Node>(Node{Kind::Bot, 0, {}, {}, {}, {}, 0x61}));
  return b;
}

Formula Formula::eq(const Term& lhs, const Term& rhs) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::Eq, 0, {lhs, rhs}, {}, {}, {}, mix(mix(0x62, lhs.hash()), rhs.hash())}));
}

Formula Formula::pred(PredSym p, std::vector<Term> args) {
  size_t h = mix(0x63, p.id);
  for (const auto& t : args) h = mix(h, t.hash());
  h = mix(h, args.size());
  return Formula(std::make_shared<const Node>(Node{Kind::Pred, p.id, std::move(args), {}, {}, {}, h}));
}

Formula Formula::imp(const Formula& a, const Formula& b) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::Imp, 0, {}, a, b, {}, mix(mix(0x64, a.hash()), b.hash())}));
}

Formula Formula::conj(const Formula& a, const Formula& b) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::And, 0, {}, a, b, {}, mix(mix(0x65, a.hash()), b.hash())}));
}

Formula Formula::forall(Var x, const Formula& body) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::Forall, x.id, {}, body, {}, {}, mix(mix(0x66, x.id), body.hash())}));
}

Formula Formula::know(Agent a, const Formula& body) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::K, a.id, {}, body, {}, {}, mix(mix(0x67, a.id), body.hash())}));
}

Formula Formula::just(const Term& evidence, const Formula& body) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::Just, 0, {}, body, {}, evidence, mix(mix(0x68, evidence.hash()), body.hash())}));
}

Formula Formula::trust(Agent a, const Term& subject, const Formula& body) {
  return Formula(std::make_shared<const Node>(Node{
      Kind::Trust, a.id, {}, body, {}, subject, mix(mix(mix(0x69, a.id), subject.hash()), body.hash())}));
}

bool operator==(const Formula& x, const Formula& y) {
  if (x.n_ == y.n_) return true;
  if (!x.n_ || !y.n_) return false;
  if (x.hash() != y.hash() || x.kind() != y.kind()) return false;
  const auto& a = *x.n_;
  const auto& b = *y.n_;
  return a.id == b.id && a.args == b.args && a.a == b.a && a.b == b.b && a.t == b.t;
}

std::strong_ordering operator<=>(const Formula& x, const Formula& y) {
  if (x.n_ == y.n_) return std::strong_ordering::equal;
  if (!x.n_) return std::strong_ordering::less;
  if (!y.n_) return std::strong_ordering::greater;
  const auto& a = *x.n_;
  const auto& b = *y.n_;
  if (auto c = a.kind <=> b.kind; c != 0) return c;
  if (auto c = a.id <=> b.id; c != 0) return c;
  if (auto c = a.args.size() <=> b.args.size(); c != 0) return c;
  for (size_t i = 0; i < a.args.size(); ++i)
    if (auto c = a.args[i] <=> b.args[i]; c != 0) return c;
  if (auto c = a.t <=> b.t; c != 0) return c;
  if (auto c = a.a <=> b.a; c != 0) return c;
  return a.b <=> b.b;
}

PredSym SymbolTable::declare(std::string_view name, size_t arity) {
  PredSym p = names::pred(name);
  std::lock_guard lock(mu_);
  auto [it, fresh] = arity_.emplace(p, arity);
  if (!fresh && it->second != arity)
    throw std::invalid_argument("predicate " + std::string(name) + " used with arity " +
                                std::to_string(arity) + " but declared with arity " +
                                std::to_string(it->second));
  return p;
}

bool SymbolTable::known(PredSym p) const {
  std::lock_guard lock(mu_);
  return arity_.count(p) > 0;
}

size_t SymbolTable::arity(PredSym p) const {
  std::lock_guard lock(mu_);
  return arity_.at(p);
}

std::vector<std::pair<PredSym, size_t>> SymbolTable::entries() const {
  std::lock_guard lock(mu_);
  return {arity_.begin(), arity_.end()};
}

}  // namespace tl
