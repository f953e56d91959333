// names.h -- interned identifiers, actor names, and run-time values
// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace actorlab {

// Interned identifier.  The calculus has four disjoint name spaces
// (class, method, field, variable); a symbol's space is determined by
// the position it occupies, so one interner serves all four.
using Sym = uint32_t;
inline constexpr Sym kNoSym = 0;

Sym intern(std::string_view text);
const std::string &sym_text(Sym s);

// Order symbols by spelling, not by interning order, so every
// user-visible enumeration is stable across runs.
bool sym_less(Sym a, Sym b);

// The reserved class of the root actor; programs may not declare it.
Sym root_class();
inline constexpr uint32_t kRootIndex = 0;

// Actor names are (class, index) pairs, written "C#k".
struct ActorName {
  Sym cls = kNoSym;
  uint32_t index = 0;

  friend bool operator==(const ActorName &, const ActorName &) = default;
};

// Spelling order: class text, then index.  This is the enumeration
// order of actors in the transition relation.
bool actor_less(const ActorName &a, const ActorName &b);

ActorName root_actor();
bool is_root(const ActorName &a);
std::string to_string(const ActorName &a);

// A value is a variable or an actor name ("terms ranged over by U, V").
struct Value {
  enum class Kind : uint8_t { Var, Actor };
  Kind kind = Kind::Var;
  Sym var = kNoSym;  // valid when kind == Var
  ActorName actor;   // valid when kind == Actor

  static Value of_var(Sym v) {
    Value u;
    u.kind = Kind::Var;
    u.var = v;
    return u;
  }
  static Value of_actor(ActorName a) {
    Value u;
    u.kind = Kind::Actor;
    u.actor = a;
    return u;
  }
  bool is_var() const { return kind == Kind::Var; }
  bool is_actor() const { return kind == Kind::Actor; }

  friend bool operator==(const Value &, const Value &) = default;
};

std::string to_string(const Value &u);

// Run-time fresh variables are spelled "$k"; the parser only accepts
// them in run-time mode, so they can never be captured by source text.
Sym fresh_var_sym(uint32_t counter);
bool is_fresh_var_spelling(std::string_view text);

struct ActorNameHash {
  size_t operator()(const ActorName &a) const {
    return std::hash<uint64_t>{}((uint64_t(a.cls) << 32) | a.index);
  }
};

struct ValueHash {
  size_t operator()(const Value &u) const {
    if (u.is_var()) return std::hash<uint64_t>{}(u.var);
    return ActorNameHash{}(u.actor) * 0x9e3779b97f4a7c15ull;
  }
};

}  // namespace actorlab
