// Copyright 2026 The trustlogic Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>

#include "trustlogic/semantics.hpp"
#include "trustlogic/sexpr.hpp"

namespace tl::sem {

void Model::resize_states() {
  eq.resize(states.size());
  pred.resize(states.size());
  evidence.resize(states.size());
}

std::optional<StateId> Model::state(std::string_view name) const {
  for (size_t i = 0; i < states.size(); ++i)
    if (states[i] == name) return i;
  return std::nullopt;
}

std::vector<StateId> Model::successors(const Relation& r, StateId w) const {
  std::vector<StateId> out;
  for (auto it = r.lower_bound({w, 0}); it != r.end() && it->first == w; ++it) out.push_back(it->second);
  return out;
}

std::vector<StateId> Model::agent_successors(Agent a, StateId w) const {
  auto it = agent_rel.find(a);
  if (it == agent_rel.end()) return {w};
  return successors(it->second, w);
}

Relation identity_relation(size_t n) {
  Relation r;
  for (size_t i = 0; i < n; ++i) r.insert({i, i});
  return r;
}

bool ValidationReport::has(std::string_view condition) const {
  return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.condition == condition; });
}

std::string ValidationReport::describe() const {
  if (ok()) return "valid";
  std::string out;
  for (const auto& v : violations) out += v.condition + ": " + v.witness + "\n";
  return out;
}

namespace {

std::string tuple_str(const Model& m, const Tuple& t) {
  std::string s = "(";
  for (size_t i = 0; i < t.size(); ++i) s += (i ? " " : "") + m.domain[t[i]];
  return s + ")";
}

void check_relation_range(const Relation& r, size_t n, const std::string& name, ValidationReport& rep) {
  for (auto [a, b] : r)
    if (a >= n || b >= n) rep.violations.push_back({"range", name + " mentions an unknown index"});
}

void check_reflexive(const Model& m, const Relation& r, const std::string& cond, const std::string& name,
                     ValidationReport& rep) {
  for (size_t w = 0; w < m.states.size(); ++w)
    if (!r.count({w, w})) rep.violations.push_back({cond, name + " not reflexive at " + m.states[w]});
}

}  // namespace

ValidationReport validate_model(const Model& m) {
  ValidationReport rep;
  auto add = [&](std::string c, std::string w) { rep.violations.push_back({std::move(c), std::move(w)}); };
  const size_t n = m.states.size();
  const size_t u = m.domain.size();
  if (n == 0) add("states-nonempty", "W is empty");
  if (u == 0) add("domain-nonempty", "U is empty");
  if (m.eq.size() != n || m.pred.size() != n || m.evidence.size() != n) {
    add("shape", "per-state tables do not match the state count");
    return rep;
  }

  for (const auto& [a, r] : m.agent_rel) {
    std::string name = "R_" + names::agent_name(a);
    check_relation_range(r, n, name, rep);
    check_reflexive(m, r, "agent-reflexive", name, rep);
    for (size_t w = 0; w < n; ++w) {
      auto succ = m.successors(r, w);
      for (StateId x : succ)
        for (StateId y : succ)
          if (!r.count({x, y}))
            add("agent-euclidean", name + ": " + m.states[w] + "->" + m.states[x] + ", " + m.states[w] + "->" +
                                       m.states[y] + " but not " + m.states[x] + "->" + m.states[y]);
    }
  }

  check_relation_range(m.gamma, n, "gamma", rep);
  check_reflexive(m, m.gamma, "gamma-reflexive", "gamma", rep);
  for (auto [w, v] : m.gamma)
    for (StateId x : m.successors(m.gamma, v))
      if (!m.gamma.count({w, x}))
        add("gamma-transitive", m.states[w] + "->" + m.states[v] + "->" + m.states[x] + " but not " + m.states[w] +
                                    "->" + m.states[x]);

  std::vector<bool> hit(u, false);
  for (const auto& [t, e] : m.table) {
    if (e >= u) {
      add("range", "term-table maps " + to_string(t) + " outside U");
      continue;
    }
    hit[e] = true;
  }
  for (size_t e = 0; e < u; ++e)
    if (!hit[e]) add("table-surjective", "no term denotes " + m.domain[e]);

  std::map<PredSym, size_t> arities;
  for (size_t w = 0; w < n; ++w) {
    const Relation& eq = m.eq[w];
    check_relation_range(eq, u, "eq at " + m.states[w], rep);
    for (size_t e = 0; e < u; ++e)
      if (!eq.count({e, e})) add("eq-reflexive", "(" + m.domain[e] + ", " + m.domain[e] + ") missing at " + m.states[w]);
    for (auto [a, b] : eq)
      if (!eq.count({b, a}))
        add("eq-symmetric", "(" + m.domain[a] + ", " + m.domain[b] + ") without its converse at " + m.states[w]);
    for (auto [a, b] : eq)
      for (auto it = eq.lower_bound({b, 0}); it != eq.end() && it->first == b; ++it)
        if (!eq.count({a, it->second}))
          add("eq-transitive", "(" + m.domain[a] + ", " + m.domain[b] + "), (" + m.domain[b] + ", " +
                                   m.domain[it->second] + ") but not (" + m.domain[a] + ", " + m.domain[it->second] +
                                   ") at " + m.states[w]);

    for (const auto& [p, tuples] : m.pred[w]) {
      for (const auto& tup : tuples) {
        auto [it, fresh] = arities.emplace(p, tup.size());
        if (!fresh && it->second != tup.size())
          add("pred-arity", names::pred_name(p) + " has tuples of lengths " + std::to_string(it->second) + " and " +
                                std::to_string(tup.size()) + " (at " + m.states[w] + ")");
        bool in_range = std::all_of(tup.begin(), tup.end(), [&](Elem e) { return e < u; });
        if (!in_range) {
          add("range", names::pred_name(p) + " tuple outside U at " + m.states[w]);
          continue;
        }
        for (size_t i = 0; i < tup.size(); ++i) {
          for (auto it = eq.lower_bound({tup[i], 0}); it != eq.end() && it->first == tup[i]; ++it) {
            Tuple moved = tup;
            for (auto& e : moved)
              if (e == tup[i]) e = it->second;
            if (!tuples.count(moved))
              add("pred-replacement", names::pred_name(p) + tuple_str(m, tup) + " with " + m.domain[tup[i]] + " = " +
                                          m.domain[it->second] + " but not " + names::pred_name(p) +
                                          tuple_str(m, moved) + " at " + m.states[w]);
          }
        }
      }
    }
  }

  // Seedwise monotonicity along gamma.
  for (auto [w, v] : m.gamma) {
    if (w >= n || v >= n || w == v) continue;
    for (const auto& [t, fs] : m.evidence[w]) {
      auto it = m.evidence[v].find(t);
      for (const auto& f : fs) {
        bool present = it != m.evidence[v].end() && std::find(it->second.begin(), it->second.end(), f) != it->second.end();
        if (!present)
          add("evidence-monotone", to_string(f) + " seeded for " + to_string(t) + " at " + m.states[w] + " but not at " +
                                       m.states[v]);
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------- file I/O

namespace {

using sexpr::Node;

[[noreturn]] void fail(const Node& n, const std::string& msg) { throw ParseError(msg, n.pos); }

const std::string& atom(const Node& n, const char* what) {
  if (!n.is_atom()) fail(n, std::string("expected ") + what);
  return n.text;
}

size_t index_of(const std::vector<std::string>& names, const Node& n, const char* what) {
  const std::string& s = atom(n, what);
  auto it = std::find(names.begin(), names.end(), s);
  if (it == names.end()) fail(n, std::string("unknown ") + what + " '" + s + "'");
  return static_cast<size_t>(it - names.begin());
}

std::pair<size_t, size_t> pair_of(const std::vector<std::string>& names, const Node& n, const char* what) {
  if (!n.is_list() || n.items.size() != 2) fail(n, std::string("expected a (") + what + " " + what + ") pair");
  return {index_of(names, n.items[0], what), index_of(names, n.items[1], what)};
}

template <class F>
auto embedded(const Node& s, F&& f) {
  if (s.kind != Node::Kind::String) fail(s, "expected a quoted string");
  try {
    return f(s.text);
  } catch (const ParseError& e) {
    throw ParseError(std::string("in \"") + s.text + "\": " + e.what(), s.pos);
  }
}

}  // namespace

Model read_model(std::string_view text, SymbolTable& symtab) {
  auto top = sexpr::parse(text);
  if (top.size() != 1 || !top[0].headed("model")) throw ParseError("expected a single (model ...) form", 0);
  const Node& root = top[0];
  Model m;
  // States and domain first so that later sections may refer to them in any order.
  for (size_t i = 1; i < root.items.size(); ++i) {
    const Node& sec = root.items[i];
    if (sec.headed("states"))
      for (size_t k = 1; k < sec.items.size(); ++k) m.states.push_back(atom(sec.items[k], "state name"));
    if (sec.headed("domain"))
      for (size_t k = 1; k < sec.items.size(); ++k) m.domain.push_back(atom(sec.items[k], "element name"));
  }
  m.resize_states();
  for (size_t i = 1; i < root.items.size(); ++i) {
    const Node& sec = root.items[i];
    const std::string& h = sec.head();
    if (h == "states" || h == "domain") continue;
    if (h == "agent-rel") {
      if (sec.items.size() < 2) fail(sec, "agent-rel needs an agent name");
      Relation& r = m.agent_rel[names::agent(atom(sec.items[1], "agent"))];
      for (size_t k = 2; k < sec.items.size(); ++k) r.insert(pair_of(m.states, sec.items[k], "state"));
    } else if (h == "gamma-rel") {
      for (size_t k = 1; k < sec.items.size(); ++k) m.gamma.insert(pair_of(m.states, sec.items[k], "state"));
    } else if (h == "term-table") {
      for (size_t k = 1; k < sec.items.size(); ++k) {
        const Node& e = sec.items[k];
        if (!e.is_list() || e.items.size() != 2) fail(e, "expected (\"term\" element)");
        Term t = embedded(e.items[0], [](std::string_view s) { return parse_term(s); });
        if (!m.table.emplace(t, index_of(m.domain, e.items[1], "element")).second)
          fail(e, "term " + to_string(t) + " listed twice");
      }
    } else if (h == "eq") {
      if (sec.items.size() < 2) fail(sec, "eq needs a state");
      StateId w = index_of(m.states, sec.items[1], "state");
      for (size_t k = 2; k < sec.items.size(); ++k) m.eq[w].insert(pair_of(m.domain, sec.items[k], "element"));
    } else if (h == "pred") {
      if (sec.items.size() < 3) fail(sec, "pred needs a state and a symbol");
      StateId w = index_of(m.states, sec.items[1], "state");
      const std::string& name = atom(sec.items[2], "predicate");
      auto& tuples = m.pred[w][names::pred(name)];
      for (size_t k = 3; k < sec.items.size(); ++k) {
        const Node& t = sec.items[k];
        if (!t.is_list()) fail(t, "expected a tuple");
        Tuple tup;
        for (const auto& e : t.items) tup.push_back(index_of(m.domain, e, "element"));
        try {
          symtab.declare(name, tup.size());
        } catch (const std::invalid_argument& e) {
          fail(t, e.what());
        }
        tuples.insert(std::move(tup));
      }
    } else if (h == "evidence") {
      if (sec.items.size() < 2) fail(sec, "evidence needs a state");
      StateId w = index_of(m.states, sec.items[1], "state");
      for (size_t k = 2; k < sec.items.size(); ++k) {
        const Node& e = sec.items[k];
        if (!e.is_list() || e.items.empty()) fail(e, "expected (\"term\" \"formula\" ...)");
        Term t = embedded(e.items[0], [](std::string_view s) { return parse_term(s); });
        auto& fs = m.evidence[w][t];
        for (size_t q = 1; q < e.items.size(); ++q)
          fs.push_back(embedded(e.items[q], [&](std::string_view s) { return parse_formula(s, symtab); }));
      }
    } else {
      fail(sec, "unknown model section '" + h + "'");
    }
  }
  return m;
}

std::string write_model(const Model& m) {
  auto names_of = [](const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += " " + x;
    return s;
  };
  auto pairs = [&](const Relation& r, const std::vector<std::string>& n) {
    std::string s;
    for (auto [a, b] : r) s += " (" + n[a] + " " + n[b] + ")";
    return s;
  };
  std::string out = "(model\n";
  out += "  (states" + names_of(m.states) + ")\n";
  out += "  (domain" + names_of(m.domain) + ")\n";
  for (const auto& [a, r] : m.agent_rel) out += "  (agent-rel " + names::agent_name(a) + pairs(r, m.states) + ")\n";
  out += "  (gamma-rel" + pairs(m.gamma, m.states) + ")\n";
  out += "  (term-table";
  for (const auto& [t, e] : m.table) out += "\n    (" + sexpr::quote(to_string(t)) + " " + m.domain[e] + ")";
  out += ")\n";
  for (size_t w = 0; w < m.states.size(); ++w) {
    out += "  (eq " + m.states[w] + pairs(m.eq[w], m.domain) + ")\n";
    for (const auto& [p, tuples] : m.pred[w]) {
      out += "  (pred " + m.states[w] + " " + names::pred_name(p);
      for (const auto& t : tuples) out += " " + tuple_str(m, t);
      out += ")\n";
    }
    if (!m.evidence[w].empty()) {
      out += "  (evidence " + m.states[w];
      for (const auto& [t, fs] : m.evidence[w]) {
        out += "\n    (" + sexpr::quote(to_string(t));
        for (const auto& f : fs) out += " " + sexpr::quote(to_string(f));
        out += ")";
      }
      out += ")\n";
    }
  }
  return out + ")\n";
}

}  // namespace tl::sem
