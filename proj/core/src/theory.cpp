// Copyright 2026 The trustlogic Authors
// SPDX-License-Identifier: Apache-2.0

#include "trustlogic/theory.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "trustlogic/lambda.hpp"

namespace tl::theory {
namespace {

struct DistLess {
  bool operator()(const ProbDist& a, const ProbDist& b) const { return compare(a, b) < 0; }
};
struct PairLess {
  bool operator()(const std::pair<ProbDist, ProbDist>& a, const std::pair<ProbDist, ProbDist>& b) const {
    if (auto c = compare(a.first, b.first); c != 0) return c < 0;
    return compare(a.second, b.second) < 0;
  }
};

std::string trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string_view strip_comment(std::string_view line) {
  auto c = line.find(";;");
  return c == std::string_view::npos ? line : line.substr(0, c);
}

}  // namespace

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(std::string_view s) {
  std::string t = trim(s);
  auto slash = t.find('/');
  try {
    size_t used = 0;
    if (slash == std::string::npos) {
      int64_t n = std::stoll(t, &used);
      if (used != t.size()) throw std::invalid_argument("bad rational");
      return Rational(n);
    }
    std::string ns = t.substr(0, slash), ds = t.substr(slash + 1);
    int64_t n = std::stoll(ns, &used);
    if (used != ns.size()) throw std::invalid_argument("bad rational");
    int64_t d = std::stoll(ds, &used);
    if (used != ds.size() || d <= 0) throw std::invalid_argument("bad rational");
    return Rational(n, d);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("not a rational literal: '" + t + "'");
  }
}

Rational ProbDist::mass() const {
  Rational m(0);
  for (const auto& [p, t] : entries) m += p;
  return m;
}

Term encode_rational(const Rational& r) {
  return lambda::encode_pair(lambda::church(static_cast<uint64_t>(r.numerator())),
                             lambda::church(static_cast<uint64_t>(r.denominator())));
}

Term ProbDist::encode() const {
  std::vector<Term> items;
  for (const auto& [p, t] : entries) items.push_back(lambda::encode_pair(encode_rational(p), t));
  return lambda::encode_list(items);
}

std::string ProbDist::pretty() const {
  std::string s = "(";
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i) s += ",";
    s += "(" + to_string(entries[i].first) + "," + tl::to_string(entries[i].second) + ")";
  }
  return s + ")";
}

std::strong_ordering compare(const ProbDist& a, const ProbDist& b) {
  size_t n = std::min(a.entries.size(), b.entries.size());
  for (size_t i = 0; i < n; ++i) {
    const auto& [p, t] = a.entries[i];
    const auto& [q, s] = b.entries[i];
    if (p != q) return p < q ? std::strong_ordering::less : std::strong_ordering::greater;
    if (auto c = t <=> s; c != 0) return c;
  }
  return a.entries.size() <=> b.entries.size();
}

bool Theory::add(const Formula& f) {
  auto it = std::lower_bound(items_.begin(), items_.end(), f);
  if (it != items_.end() && *it == f) return false;
  items_.insert(it, f);
  return true;
}

bool Theory::contains(const Formula& f) const { return std::binary_search(items_.begin(), items_.end(), f); }

const std::string* Theory::note(const Formula& f) const {
  auto it = notes_.find(f);
  return it == notes_.end() ? nullptr : &it->second;
}

PredSym step_pred() { return names::pred("step"); }
PredSym star_pred() { return names::pred("star"); }
Formula step_fact(const Term& u, const Term& v) { return Formula::pred(step_pred(), {u, v}); }
Formula star_fact(const Term& u, const Term& v) { return Formula::pred(star_pred(), {u, v}); }

StepTheory sigma_step(const std::vector<Term>& seeds, uint64_t fuel) {
  StepTheory out{Theory("sigma-step"), false};
  std::unordered_map<Term, uint64_t> depth;
  std::deque<Term> queue;
  for (const auto& s : seeds)
    if (depth.emplace(s, 0).second) queue.push_back(s);
  while (!queue.empty()) {
    Term u = queue.front();
    queue.pop_front();
    uint64_t d = depth.at(u);
    auto rs = lambda::reducts(u);
    if (d >= fuel) {
      if (!rs.empty()) out.fuel_exhausted = true;
      continue;
    }
    for (const auto& v : rs) {
      out.theory.add(step_fact(u, v));
      if (depth.emplace(v, d + 1).second) queue.push_back(v);
    }
  }
  return out;
}

Theory sigma_star(const Theory& facts, const std::vector<Term>& universe) {
  std::vector<Term> terms;
  std::unordered_map<Term, size_t> index;
  auto id = [&](const Term& t) {
    auto [it, fresh] = index.emplace(t, terms.size());
    if (fresh) terms.push_back(t);
    return it->second;
  };
  for (const auto& t : universe) id(t);
  std::vector<std::pair<size_t, size_t>> edges;
  for (const auto& f : facts.formulas()) {
    if (!f.is(Formula::Kind::Pred) || f.args().size() != 2) continue;
    if (f.sym() != step_pred() && f.sym() != star_pred()) continue;
    size_t a = id(f.args()[0]);
    size_t b = id(f.args()[1]);
    edges.emplace_back(a, b);
  }
  size_t n = terms.size();
  std::vector<std::vector<char>> r(n, std::vector<char>(n, 0));
  for (size_t i = 0; i < n; ++i) r[i][i] = 1;
  for (auto [a, b] : edges) r[a][b] = 1;
  for (size_t k = 0; k < n; ++k)
    for (size_t i = 0; i < n; ++i)
      if (r[i][k])
        for (size_t j = 0; j < n; ++j)
          if (r[k][j]) r[i][j] = 1;
  Theory out("sigma-star");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (r[i][j]) out.add(star_fact(terms[i], terms[j]));
  return out;
}

Theory sigma_lambda_eq(const Theory& step_facts, bool via_star) {
  Theory out(via_star ? "sigma-lambda-eq-star" : "sigma-lambda-eq");
  if (via_star) {
    const Theory star = sigma_star(step_facts, {});
    for (const auto& f : star.formulas())
      if (f.args()[0] != f.args()[1]) out.add(Formula::eq(f.args()[0], f.args()[1]));
    return out;
  }
  std::set<std::pair<Term, Term>> steps;
  for (const auto& f : step_facts.formulas())
    if (f.is(Formula::Kind::Pred) && f.sym() == step_pred() && f.args().size() == 2)
      steps.emplace(f.args()[0], f.args()[1]);
  for (const auto& [u, v] : steps)
    if (steps.count({v, u})) out.add(u <= v ? Formula::eq(u, v) : Formula::eq(v, u));
  return out;
}

ProbTheory sigma_prob_eq(const std::vector<ProbFact>& facts, int max_depth) {
  std::vector<Term> sources;
  std::map<Term, std::vector<std::pair<Rational, Term>>> behaviour;
  for (const auto& f : facts) {
    if (f.prob <= Rational(0) || f.prob > Rational(1))
      throw MassError("probability " + to_string(f.prob) + " of " + tl::to_string(f.source) + " outside (0,1]");
    auto [it, fresh] = behaviour.try_emplace(f.source);
    if (fresh) sources.push_back(f.source);
    it->second.emplace_back(f.prob, f.target);
  }
  for (const auto& s : sources) {
    Rational m(0);
    for (const auto& [p, t] : behaviour[s]) m += p;
    if (m != Rational(1))
      throw MassError("outgoing probabilities of " + tl::to_string(s) + " sum to " + to_string(m));
  }

  ProbTheory out;
  std::map<std::pair<ProbDist, ProbDist>, ProbIdentity, PairLess> found;
  std::vector<ProbDist> fresh_rhs;
  std::set<ProbDist, DistLess> processed;
  auto emit = [&](ProbDist l, ProbDist r, int rule, int round) {
    if (l == r) return;
    auto key = std::make_pair(l, r);
    if (found.count(key)) return;
    found.emplace(key, ProbIdentity{l, r, rule, round});
    if (!processed.count(r)) fresh_rhs.push_back(r);
  };

  for (const auto& s : sources) emit(ProbDist{{{Rational(1), s}}}, ProbDist{behaviour[s]}, 1, 0);
  out.saturated = false;
  for (int round = 1; round <= max_depth; ++round) {
    std::vector<ProbDist> work;
    work.swap(fresh_rhs);
    size_t before = found.size();
    for (const auto& r : work) {
      if (!processed.insert(r).second) continue;
      const auto& e = r.entries;
      for (size_t i = 0; i < e.size(); ++i) {
        auto b = behaviour.find(e[i].second);
        if (b == behaviour.end()) continue;
        ProbDist x;
        x.entries.insert(x.entries.end(), e.begin(), e.begin() + static_cast<long>(i));
        for (const auto& [q, s] : b->second) x.entries.emplace_back(e[i].first * q, s);
        x.entries.insert(x.entries.end(), e.begin() + static_cast<long>(i) + 1, e.end());
        emit(r, x, 2, round);
      }
      for (size_t i = 0; i + 1 < e.size(); ++i) {
        ProbDist x = r;
        std::swap(x.entries[i], x.entries[i + 1]);
        emit(r, x, 3, round);
        if (e[i].second == e[i + 1].second) {
          ProbDist y = r;
          y.entries[i].first += y.entries[i + 1].first;
          y.entries.erase(y.entries.begin() + static_cast<long>(i) + 1);
          emit(r, y, 4, round);
        }
      }
    }
    if (found.size() == before && fresh_rhs.empty()) {
      out.saturated = true;
      break;
    }
  }
  if (!out.saturated) {
    // A final unproductive round also counts as a fixpoint.
    bool pending = false;
    for (const auto& r : fresh_rhs)
      if (!processed.count(r)) pending = true;
    out.saturated = !pending;
  }

  out.theory = Theory("sigma-prob-eq");
  for (auto& [key, id] : found) {
    Formula f = Formula::eq(id.lhs.encode(), id.rhs.encode());
    out.theory.add(f);
    out.theory.annotate(f, id.lhs.pretty() + " = " + id.rhs.pretty() + "  [rule " + std::to_string(id.rule) + "]");
    out.identities.push_back(id);
  }
  return out;
}

std::optional<std::vector<ProbIdentity>> ProbTheory::find_chain(const ProbDist& from, const ProbDist& to) const {
  std::map<ProbDist, std::vector<const ProbIdentity*>, DistLess> out_edges;
  for (const auto& id : identities) out_edges[id.lhs].push_back(&id);
  std::map<ProbDist, const ProbIdentity*, DistLess> via;
  std::deque<ProbDist> queue{from};
  std::set<ProbDist, DistLess> seen{from};
  while (!queue.empty()) {
    ProbDist cur = queue.front();
    queue.pop_front();
    if (cur == to) {
      std::vector<ProbIdentity> chain;
      while (!(cur == from)) {
        const ProbIdentity* e = via.at(cur);
        chain.push_back(*e);
        cur = e->lhs;
      }
      std::reverse(chain.begin(), chain.end());
      return chain;
    }
    auto it = out_edges.find(cur);
    if (it == out_edges.end()) continue;
    for (const ProbIdentity* e : it->second)
      if (seen.insert(e->rhs).second) {
        via[e->rhs] = e;
        queue.push_back(e->rhs);
      }
  }
  return std::nullopt;
}

Theory lift_K(const Theory& t, Agent a) {
  Theory out(t.label() + "/K");
  for (const auto& f : t.formulas()) out.add(Formula::know(a, f));
  return out;
}

Term leftmost_subject(const Formula& f) {
  auto occ = term_occurrences(f);
  if (occ.empty()) throw std::invalid_argument("no term occurs in " + tl::to_string(f));
  return occ.front();
}

Theory lift_T(const Theory& t, Agent a, const SubjectChooser& chooser) {
  Theory out(t.label() + "/T");
  for (const auto& f : t.formulas()) {
    Term s = chooser(f);
    if (!occurs_in(s, f))
      throw std::invalid_argument("chosen subject " + tl::to_string(s) + " does not occur in " + tl::to_string(f));
    out.add(Formula::trust(a, s, f));
  }
  return out;
}

std::vector<ProbFact> parse_behavior(std::string_view text) {
  std::vector<ProbFact> out;
  std::istringstream in{std::string(text)};
  std::string line;
  size_t offset = 0;
  while (std::getline(in, line)) {
    size_t here = offset;
    offset += line.size() + 1;
    std::string body = trim(strip_comment(line));
    if (body.empty()) continue;
    auto bar = body.find("|>");
    if (bar == std::string::npos) throw ParseError("expected 't |>p u'", here);
    std::string rest = body.substr(bar + 2);
    size_t sp = 0;
    while (sp < rest.size() && !std::isspace(static_cast<unsigned char>(rest[sp]))) ++sp;
    try {
      Rational p = parse_rational(rest.substr(0, sp));
      out.push_back({parse_term(trim(body.substr(0, bar))), p, parse_term(trim(rest.substr(sp)))});
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), here);
    } catch (const ParseError& e) {
      throw ParseError(std::string("in behaviour line: ") + e.what(), here);
    }
  }
  return out;
}

std::string write_theory(const Theory& t) {
  std::string out;
  if (!t.label().empty()) out += ";; theory " + t.label() + "\n";
  for (const auto& f : t.formulas()) {
    if (const std::string* n = t.note(f)) out += ";; " + *n + "\n";
    out += tl::to_string(f) + "\n";
  }
  return out;
}

Theory read_theory(std::string_view text, SymbolTable& symtab, std::string label) {
  Theory out(std::move(label));
  std::istringstream in{std::string(text)};
  std::string line;
  size_t offset = 0;
  while (std::getline(in, line)) {
    size_t here = offset;
    offset += line.size() + 1;
    std::string body = trim(strip_comment(line));
    if (body.empty()) continue;
    try {
      out.add(parse_formula(body, symtab));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), here + e.pos());
    }
  }
  return out;
}

}  // namespace tl::theory
