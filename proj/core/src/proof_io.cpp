// Copyright 2026 The trustlogic Authors
// SPDX-License-Identifier: Apache-2.0

#include "trustlogic/proof.hpp"
#include "trustlogic/sexpr.hpp"

namespace tl::proof {
namespace {

using sexpr::Node;

const Node& string_at(const Node& n, size_t i, const char* what) {
  if (i >= n.items.size() || n.items[i].kind != Node::Kind::String)
    throw ParseError(std::string("expected quoted ") + what, n.pos);
  return n.items[i];
}

const Node& atom_at(const Node& n, size_t i, const char* what) {
  if (i >= n.items.size() || !n.items[i].is_atom()) throw ParseError(std::string("expected ") + what, n.pos);
  return n.items[i];
}

// Re-anchors parse errors from an embedded string at the string's offset.
template <class F>
auto embedded(const Node& s, F&& f) {
  try {
    return f(s.text);
  } catch (const ParseError& e) {
    throw ParseError(std::string("in \"") + s.text + "\": " + e.what(), s.pos);
  }
}

Params read_params(const Node& n, SymbolTable& st) {
  Params p;
  for (size_t i = 1; i < n.items.size(); ++i) {
    const Node& it = n.items[i];
    if (!it.is_list() || it.items.size() != 2) throw ParseError("malformed parameter", it.pos);
    const std::string& h = it.head();
    if (h == "var") {
      p.var = names::var(atom_at(it, 1, "variable").text);
    } else if (h == "agent") {
      p.agent = names::agent(atom_at(it, 1, "agent").text);
    } else if (h == "term") {
      const Node& s = string_at(it, 1, "term");
      p.term = embedded(s, [](std::string_view t) { return parse_term(t); });
    } else if (h == "formula") {
      const Node& s = string_at(it, 1, "formula");
      p.formula = embedded(s, [&](std::string_view t) { return parse_formula(t, st); });
    } else {
      throw ParseError("unknown parameter '" + h + "'", it.pos);
    }
  }
  return p;
}

Sequent read_seq(const Node& n, SymbolTable& st) {
  if (n.items.size() != 3 || !n.items[1].is_list()) throw ParseError("expected (seq (hyp*) concl)", n.pos);
  Sequent s;
  auto formula = [&](const Node& x) {
    if (x.kind != Node::Kind::String) throw ParseError("expected quoted formula", x.pos);
    return embedded(x, [&](std::string_view t) { return parse_formula(t, st); });
  };
  for (const auto& h : n.items[1].items) s.ctx.push_back(formula(h));
  s.concl = formula(n.items[2]);
  return s;
}

DerivationPtr read_node(const Node& n, SymbolTable& st) {
  if (!n.is_list() || n.items.empty() || n.items[0].kind != Node::Kind::Symbol)
    throw ParseError("expected (rule-tag ...)", n.pos);
  auto rule = rule_from_tag(n.items[0].text);
  if (!rule) throw ParseError("unknown rule tag '" + n.items[0].text + "'", n.items[0].pos);
  Params params;
  std::vector<DerivationPtr> premises;
  std::optional<Sequent> seq;
  for (size_t i = 1; i < n.items.size(); ++i) {
    const Node& it = n.items[i];
    if (seq) throw ParseError("material after (seq ...)", it.pos);
    if (it.headed("params")) {
      if (i != 1) throw ParseError("(params ...) must come first", it.pos);
      params = read_params(it, st);
    } else if (it.headed("seq")) {
      seq = read_seq(it, st);
    } else {
      premises.push_back(read_node(it, st));
    }
  }
  if (!seq) throw ParseError("missing (seq ...)", n.pos);
  return build::raw(*rule, std::move(params), std::move(premises), std::move(*seq));
}

void write_node(const Derivation& d, int indent, std::string& out) {
  std::string pad(indent, ' ');
  out += pad + "(" + tag(d.rule);
  const Params& p = d.params;
  if (p.var || p.term || p.agent || p.formula) {
    out += " (params";
    if (p.var) out += " (var " + names::var_name(*p.var) + ")";
    if (p.term) out += " (term " + sexpr::quote(to_string(*p.term)) + ")";
    if (p.agent) out += " (agent " + names::agent_name(*p.agent) + ")";
    if (p.formula) out += " (formula " + sexpr::quote(to_string(*p.formula)) + ")";
    out += ")";
  }
  out += "\n";
  for (const auto& prem : d.premises) write_node(*prem, indent + 2, out);
  out += pad + "  (seq (";
  for (size_t i = 0; i < d.conclusion.ctx.size(); ++i)
    out += (i ? " " : "") + sexpr::quote(to_string(d.conclusion.ctx[i]));
  out += ") " + sexpr::quote(to_string(d.conclusion.concl)) + "))\n";
}

}  // namespace

std::vector<DerivationPtr> read_proofs(std::string_view text, SymbolTable& symtab) {
  std::vector<DerivationPtr> out;
  for (const auto& n : sexpr::parse(text)) out.push_back(read_node(n, symtab));
  return out;
}

std::string write_proof(const Derivation& d) {
  std::string out;
  write_node(d, 0, out);
  return out;
}

}  // namespace tl::proof
