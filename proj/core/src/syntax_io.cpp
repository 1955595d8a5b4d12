// Copyright 2026 The trustlogic Authors
// SPDX-License-Identifier: Apache-2.0

#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "trustlogic/syntax.hpp"

namespace tl {
namespace {

enum class Tok { Ident, Lambda, Dot, LParen, RParen, Comma, Bang, Eq, Colon, Arrow, Amp, Tilde, LBrack, RBrack, End };

struct Token {
  Tok kind;
  std::string text;
  size_t pos;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == ';' && i + 1 < s.size() && s[i + 1] == ';') {
      while (i < s.size() && s[i] != '\n') ++i;
      continue;
    }
    size_t start = i;
    auto single = [&](Tok k) {
      out.push_back({k, std::string(1, c), start});
      ++i;
    };
    if (ident_start(c)) {
      while (i < s.size() && ident_char(s[i])) ++i;
      out.push_back({Tok::Ident, std::string(s.substr(start, i - start)), start});
      continue;
    }
    // UTF-8 lambda (U+03BB).
    if (static_cast<unsigned char>(c) == 0xCE && i + 1 < s.size() &&
        static_cast<unsigned char>(s[i + 1]) == 0xBB) {
      out.push_back({Tok::Lambda, "\\", start});
      i += 2;
      continue;
    }
    switch (c) {
      case '\\': single(Tok::Lambda); break;
      case '.': single(Tok::Dot); break;
      case '(': single(Tok::LParen); break;
      case ')': single(Tok::RParen); break;
      case ',': single(Tok::Comma); break;
      case '!': single(Tok::Bang); break;
      case '=': single(Tok::Eq); break;
      case ':': single(Tok::Colon); break;
      case '&': single(Tok::Amp); break;
      case '~': single(Tok::Tilde); break;
      case '[': single(Tok::LBrack); break;
      case ']': single(Tok::RBrack); break;
      case '-':
        if (i + 1 < s.size() && s[i + 1] == '>') {
          out.push_back({Tok::Arrow, "->", start});
          i += 2;
          break;
        }
        throw ParseError("unexpected '-'", start);
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

bool is_keyword(const std::string& s) { return s == "bot" || s == "forall" || s == "exists"; }
bool is_term_ident(const Token& t) {
  return t.kind == Tok::Ident && std::islower(static_cast<unsigned char>(t.text[0])) && !is_keyword(t.text);
}

class Parser {
 public:
  Parser(std::string_view text, SymbolTable* symtab) : toks_(lex(text)), symtab_(symtab) {}

  Term whole_term() {
    Term t = term();
    expect(Tok::End, "end of input");
    return t;
  }

  Formula whole_formula() {
    Formula f = imp();
    expect(Tok::End, "end of input");
    return f;
  }

 private:
  const Token& peek(size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  bool at(Tok k) const { return peek().kind == k; }
  bool at_ident(const char* s) const { return at(Tok::Ident) && peek().text == s; }
  const Token& advance() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  [[noreturn]] void fail(const std::string& what) const {
    const Token& t = peek();
    throw ParseError("expected " + what + ", found " + (t.kind == Tok::End ? "end of input" : "'" + t.text + "'"),
                     t.pos);
  }
  void expect(Tok k, const char* what) {
    if (!at(k)) fail(what);
    advance();
  }

  Var binder() {
    if (!is_term_ident(peek())) fail("variable");
    return names::var(advance().text);
  }

  bool starts_atom() const { return is_term_ident(peek()) || at(Tok::LParen) || at(Tok::Bang); }

  Term term() {
    if (at(Tok::Lambda)) return lambda();
    Term t = atom();
    while (true) {
      if (at(Tok::Lambda)) return Term::app(t, lambda());
      if (!starts_atom()) return t;
      t = Term::app(t, atom());
    }
  }

  Term lambda() {
    expect(Tok::Lambda, "'\\'");
    std::vector<Var> vs{binder()};
    while (!at(Tok::Dot)) vs.push_back(binder());
    advance();
    Term body = term();
    for (auto it = vs.rbegin(); it != vs.rend(); ++it) body = Term::lam(*it, body);
    return body;
  }

  Term atom() {
    if (is_term_ident(peek())) return Term::var(names::var(advance().text));
    if (at(Tok::Bang)) {
      advance();
      return Term::bang(atom());
    }
    if (at(Tok::LParen)) {
      advance();
      Term t = term();
      expect(Tok::RParen, "')'");
      return t;
    }
    fail("term");
  }

  Formula imp() {
    Formula l = conj();
    if (at(Tok::Arrow)) {
      advance();
      return Formula::imp(l, imp());
    }
    return l;
  }

  Formula conj() {
    Formula l = unary();
    while (at(Tok::Amp)) {
      advance();
      l = Formula::conj(l, unary());
    }
    return l;
  }

  Formula unary() {
    if (at(Tok::Tilde)) {
      advance();
      return Formula::neg(unary());
    }
    if (at_ident("forall") || at_ident("exists")) {
      bool ex = peek().text == "exists";
      advance();
      std::vector<Var> vs{binder()};
      while (!at(Tok::Dot)) vs.push_back(binder());
      advance();
      Formula body = unary();
      for (auto it = vs.rbegin(); it != vs.rend(); ++it)
        body = ex ? Formula::exists(*it, body) : Formula::forall(*it, body);
      return body;
    }
    if (at_ident("K") && peek(1).kind == Tok::LBrack) {
      advance();
      advance();
      Agent a = agent();
      expect(Tok::RBrack, "']'");
      return Formula::know(a, unary());
    }
    if (at_ident("T") && peek(1).kind == Tok::LBrack) {
      advance();
      advance();
      Agent a = agent();
      expect(Tok::Comma, "','");
      size_t subj_pos = peek().pos;
      Term t = term();
      expect(Tok::RBrack, "']'");
      Formula body = unary();
      if (!occurs_in(t, body))
        throw ParseError("trust subject " + to_string(t) + " does not occur in " + to_string(body), subj_pos);
      return Formula::trust(a, t, body);
    }
    if (at_ident("bot")) {
      advance();
      return Formula::bot();
    }
    if (auto f = term_led()) return *f;
    if (at(Tok::Ident) && !is_keyword(peek().text)) return predicate();
    if (at(Tok::LParen)) {
      advance();
      Formula f = imp();
      expect(Tok::RParen, "')'");
      return f;
    }
    if (furthest_) throw *furthest_;
    fail("formula");
  }

  // term ':' A  or  term '=' term; backtracks when the prefix is not a term.
  std::optional<Formula> term_led() {
    if (!(starts_atom() || at(Tok::Lambda))) return std::nullopt;
    size_t save = pos_;
    try {
      Term t = term();
      if (at(Tok::Colon)) {
        advance();
        return Formula::just(t, unary());
      }
      if (at(Tok::Eq)) {
        advance();
        return Formula::eq(t, term());
      }
    } catch (const ParseError& e) {
      if (!furthest_ || e.pos() > furthest_->pos()) furthest_ = e;
    }
    pos_ = save;
    return std::nullopt;
  }

  Formula predicate() {
    const Token& name = advance();
    std::vector<Term> args;
    bool upper = std::isupper(static_cast<unsigned char>(name.text[0]));
    if (at(Tok::LParen)) {
      advance();
      if (!at(Tok::RParen)) {
        args.push_back(term());
        while (at(Tok::Comma)) {
          advance();
          args.push_back(term());
        }
      }
      expect(Tok::RParen, "')'");
    } else if (!upper) {
      fail("'(' after predicate " + name.text);
    }
    try {
      PredSym p = symtab_->declare(name.text, args.size());
      return Formula::pred(p, std::move(args));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), name.pos);
    }
  }

  Agent agent() {
    if (!at(Tok::Ident)) fail("agent name");
    return names::agent(advance().text);
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
  SymbolTable* symtab_;
  std::optional<ParseError> furthest_;
};

// 0: top, 1: function position or identity side, 2: argument position.
std::string term_str(const Term& t, int ctx) {
  switch (t.kind()) {
    case Term::Kind::Var: return names::var_name(t.var());
    case Term::Kind::App: {
      std::string s = term_str(t.fn(), 1) + " " + term_str(t.arg(), 2);
      return ctx == 2 ? "(" + s + ")" : s;
    }
    case Term::Kind::Lam: {
      std::string s = "\\" + names::var_name(t.var()) + ". " + term_str(t.body(), 0);
      return ctx >= 1 ? "(" + s + ")" : s;
    }
    case Term::Kind::Bang: return "!" + term_str(t.inner(), 2);
  }
  return "?";
}

// 1: implication level, 2: conjunction level, 3: unary level.
std::string formula_str(const Formula& f, int prec) {
  using K = Formula::Kind;
  auto paren = [](bool p, const std::string& s) { return p ? "(" + s + ")" : s; };
  switch (f.kind()) {
    case K::Bot: return "bot";
    case K::Eq: return term_str(f.lhs(), 1) + " = " + term_str(f.rhs(), 1);
    case K::Pred: {
      std::string name = names::pred_name(f.sym());
      if (f.args().empty()) return std::isupper(static_cast<unsigned char>(name[0])) ? name : name + "()";
      std::string s = name + "(";
      for (size_t i = 0; i < f.args().size(); ++i) s += (i ? ", " : "") + term_str(f.args()[i], 0);
      return s + ")";
    }
    case K::Imp: {
      if (f.right().is(K::Bot)) {
        const Formula& a = f.left();
        if (a.is(K::Forall) && a.body().is(K::Imp) && a.body().right().is(K::Bot))
          return "exists " + names::var_name(a.var()) + ". " + formula_str(a.body().left(), 3);
        return "~" + formula_str(a, 3);
      }
      return paren(prec > 1, formula_str(f.left(), 2) + " -> " + formula_str(f.right(), 1));
    }
    case K::And: return paren(prec > 2, formula_str(f.left(), 2) + " & " + formula_str(f.right(), 3));
    case K::Forall: return "forall " + names::var_name(f.var()) + ". " + formula_str(f.body(), 3);
    case K::K: return "K[" + names::agent_name(f.agent()) + "] " + formula_str(f.body(), 3);
    case K::Just: return term_str(f.term(), 2) + " : " + formula_str(f.body(), 3);
    case K::Trust:
      return "T[" + names::agent_name(f.agent()) + ", " + term_str(f.term(), 0) + "] " + formula_str(f.body(), 3);
  }
  return "?";
}

}  // namespace

Term parse_term(std::string_view text) { return Parser(text, nullptr).whole_term(); }

Formula parse_formula(std::string_view text, SymbolTable& symtab) {
  return Parser(text, &symtab).whole_formula();
}

std::string to_string(const Term& t) { return term_str(t, 0); }
std::string to_string(const Formula& f) { return formula_str(f, 1); }

}  // namespace tl
