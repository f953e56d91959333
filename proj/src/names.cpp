// names.cpp -- interned identifiers, actor names, and run-time values
// SPDX-License-Identifier: MIT
#include "names.h"

#include <cassert>
#include <mutex>
#include <unordered_map>
#include <vector>

namespace actorlab {
namespace {

// Process-wide interner.  Guarded by a mutex: symbol creation is rare
// (parsing, fresh-name allocation) while lookup of already-interned text
// is the common path; contention is not a concern at these rates.
struct Interner {
  std::mutex mu;
  std::unordered_map<std::string, Sym> ids;
  std::vector<std::string> texts;

  Interner() { texts.emplace_back(); /* slot 0 = kNoSym */ }
};

Interner &interner() {
  static Interner table;
  return table;
}

}  // namespace

Sym intern(std::string_view text) {
  Interner &t = interner();
  std::lock_guard<std::mutex> lock(t.mu);
  auto it = t.ids.find(std::string(text));
  if (it != t.ids.end()) return it->second;
  Sym id = static_cast<Sym>(t.texts.size());
  t.texts.emplace_back(text);
  t.ids.emplace(t.texts.back(), id);
  return id;
}

const std::string &sym_text(Sym s) {
  Interner &t = interner();
  std::lock_guard<std::mutex> lock(t.mu);
  assert(s < t.texts.size());
  return t.texts[s];
}

bool sym_less(Sym a, Sym b) {
  if (a == b) return false;
  return sym_text(a) < sym_text(b);
}

Sym root_class() {
  static const Sym s = intern("Root");
  return s;
}

bool actor_less(const ActorName &a, const ActorName &b) {
  if (a.cls != b.cls) return sym_less(a.cls, b.cls);
  return a.index < b.index;
}

ActorName root_actor() { return ActorName{root_class(), kRootIndex}; }

bool is_root(const ActorName &a) {
  return a.cls == root_class() && a.index == kRootIndex;
}

std::string to_string(const ActorName &a) {
  return sym_text(a.cls) + "#" + std::to_string(a.index);
}

std::string to_string(const Value &u) {
  return u.is_var() ? sym_text(u.var) : to_string(u.actor);
}

Sym fresh_var_sym(uint32_t counter) {
  return intern("$" + std::to_string(counter));
}

bool is_fresh_var_spelling(std::string_view text) {
  return !text.empty() && text[0] == '$';
}

}  // namespace actorlab
