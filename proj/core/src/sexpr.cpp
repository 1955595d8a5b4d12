// Copyright 2026 The trustlogic Authors
// SPDX-License-Identifier: Apache-2.0

#include "trustlogic/sexpr.hpp"

#include <cctype>

namespace tl::sexpr {
namespace {

class Reader {
 public:
  explicit Reader(std::string_view s) : s_(s) {}

  std::vector<Node> all() {
    std::vector<Node> out;
    while (skip(), i_ < s_.size()) out.push_back(node());
    return out;
  }

 private:
  void skip() {
    while (i_ < s_.size()) {
      if (std::isspace(static_cast<unsigned char>(s_[i_]))) {
        ++i_;
      } else if (s_[i_] == ';') {
        while (i_ < s_.size() && s_[i_] != '\n') ++i_;
      } else {
        break;
      }
    }
  }

  Node node() {
    skip();
    if (i_ >= s_.size()) throw ParseError("unexpected end of input", i_);
    Node n;
    n.pos = i_;
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      n.kind = Node::Kind::List;
      while (skip(), i_ < s_.size() && s_[i_] != ')') n.items.push_back(node());
      if (i_ >= s_.size()) throw ParseError("unclosed '('", n.pos);
      ++i_;
      return n;
    }
    if (c == ')') throw ParseError("unexpected ')'", i_);
    if (c == '"') {
      ++i_;
      n.kind = Node::Kind::String;
      while (i_ < s_.size() && s_[i_] != '"') {
        if (s_[i_] == '\\' && i_ + 1 < s_.size()) {
          char e = s_[i_ + 1];
          n.text += e == 'n' ? '\n' : e;
          i_ += 2;
        } else {
          n.text += s_[i_++];
        }
      }
      if (i_ >= s_.size()) throw ParseError("unterminated string", n.pos);
      ++i_;
      return n;
    }
    n.kind = Node::Kind::Symbol;
    while (i_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[i_])) && s_[i_] != '(' &&
           s_[i_] != ')' && s_[i_] != '"' && s_[i_] != ';')
      n.text += s_[i_++];
    return n;
  }

  std::string_view s_;
  size_t i_ = 0;
};

}  // namespace

bool Node::headed(std::string_view h) const {
  return is_list() && !items.empty() && items[0].kind == Kind::Symbol && items[0].text == h;
}

const std::string& Node::head() const {
  static const std::string none;
  return is_list() && !items.empty() && items[0].is_atom() ? items[0].text : none;
}

std::vector<Node> parse(std::string_view text) { return Reader(text).all(); }

std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out + "\"";
}

}  // namespace tl::sexpr
