// Copyright 2026 The trustlogic Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "trustlogic/syntax.hpp"

namespace tl::sexpr {

// Atoms are bare symbols or double-quoted strings; lists nest.
struct Node {
  enum class Kind { Symbol, String, List } kind = Kind::List;
  std::string text;
  std::vector<Node> items;
  size_t pos = 0;

  bool is_list() const { return kind == Kind::List; }
  bool is_atom() const { return kind != Kind::List; }
  // List whose first item is the symbol `head`.
  bool headed(std::string_view head) const;
  const std::string& head() const;
};

// Parses every top-level expression. `;;` comments run to end of line.
std::vector<Node> parse(std::string_view text);

std::string quote(std::string_view s);

}  // namespace tl::sexpr
