// Copyright 2026 The trustlogic Authors
// SPDX-License-Identifier: Apache-2.0

#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "trustlogic/syntax.hpp"

namespace tl::names {
namespace {

class Interner {
 public:
  explicit Interner(char prefix) : prefix_(prefix) {}

  uint32_t intern(std::string_view name) {
    std::lock_guard lock(mu_);
    std::string key(name);
    if (auto it = by_name_.find(key); it != by_name_.end()) return it->second;
    uint32_t id;
    if (auto n = indexed(name); n && !named(*n)) {
      id = *n;
    } else {
      while (named(next_)) ++next_;
      id = next_++;
    }
    bind(id, key);
    return id;
  }

  std::string name(uint32_t id) {
    std::lock_guard lock(mu_);
    if (named(id)) return *names_[id];
    std::string base = prefix_ + std::to_string(id);
    std::string cand = base;
    while (by_name_.count(cand)) cand += '\'';
    bind(id, cand);
    return cand;
  }

 private:
  std::optional<uint32_t> indexed(std::string_view name) const {
    if (name.size() < 2 || name[0] != prefix_) return std::nullopt;
    uint64_t n = 0;
    for (char c : name.substr(1)) {
      if (c < '0' || c > '9') return std::nullopt;
      n = n * 10 + static_cast<uint64_t>(c - '0');
      if (n > 1000000) return std::nullopt;
    }
    if (name.size() > 2 && name[1] == '0') return std::nullopt;
    return static_cast<uint32_t>(n);
  }
  bool named(uint32_t id) const { return id < names_.size() && names_[id].has_value(); }
  void bind(uint32_t id, const std::string& s) {
    if (names_.size() <= id) names_.resize(id + 1);
    names_[id] = s;
    by_name_[s] = id;
  }

  char prefix_;
  std::mutex mu_;
  std::unordered_map<std::string, uint32_t> by_name_;
  std::vector<std::optional<std::string>> names_;
  uint32_t next_ = 0;
};

Interner& vars() {
  static Interner i('x');
  return i;
}
Interner& agents() {
  static Interner i('a');
  return i;
}
Interner& preds() {
  static Interner i('P');
  return i;
}

}  // namespace

Var var(std::string_view name) { return Var{vars().intern(name)}; }
Agent agent(std::string_view name) { return Agent{agents().intern(name)}; }
PredSym pred(std::string_view name) { return PredSym{preds().intern(name)}; }
std::string var_name(Var v) { return vars().name(v.id); }
std::string agent_name(Agent a) { return agents().name(a.id); }
std::string pred_name(PredSym p) { return preds().name(p.id); }

}  // namespace tl::names
