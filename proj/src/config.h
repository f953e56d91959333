// config.h -- run-time configurations: actors, queues, fresh-name allocation
// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ast.h"

namespace actorlab {

// Which transition relation a configuration lives under.
enum class Flavor : uint8_t { Concrete, Decorated, Abstract };

const char *to_string(Flavor f);

// A queued method invocation.  Decorated messages carry the emitter's
// action sequence; abstract messages additionally carry the intended
// target (the actor the emitter addressed, used for `this`).
struct Message {
  Sym method = kNoSym;
  std::vector<Value> args;
  std::vector<uint32_t> sigma;  // decorated / abstract
  bool has_target = false;      // abstract only
  ActorName target;

  friend bool operator==(const Message &, const Message &) = default;
};

// One actor term A ▷ (P, φ, q).  `fields` is positionally aligned with
// the declaring class's field tuple; the root actor has none.  `sigma`
// is the process decoration (empty = ε, i.e. never instantiated).
struct Actor {
  ActorName name;
  ProcP proc;
  std::vector<Value> fields;
  std::vector<Message> queue;
  std::vector<uint32_t> sigma;

  // Processes compare syntactically, not by node identity.
  friend bool operator==(const Actor &a, const Actor &b);
};

// Deterministic fresh-name supply: per-class actor indices plus a global
// counter for run-time variables ("$k").
struct Allocator {
  uint32_t next_var = 0;
  std::map<Sym, uint32_t> next_index;

  ActorName fresh_actor(Sym cls) {
    uint32_t &n = next_index[cls];
    return ActorName{cls, n++};
  }
  Sym fresh_var() { return fresh_var_sym(next_var++); }
  // Make every counter dominate the names already used in a config.
  void cover(const ActorName &a) {
    uint32_t &n = next_index[a.cls];
    if (a.index >= n) n = a.index + 1;
  }

  friend bool operator==(const Allocator &, const Allocator &) = default;
};

struct Config {
  Flavor flavor = Flavor::Concrete;
  std::vector<Actor> actors;  // listing order = creation order
  Allocator alloc;

  const Actor *find(const ActorName &a) const;
  Actor *find(const ActorName &a);
  // Indices into `actors`, sorted by actor name (class text, then index);
  // the enumeration order of the transition relation.
  std::vector<size_t> by_name() const;

  // Configurations are parallel compositions: listing order is immaterial.
  friend bool operator==(const Config &a, const Config &b);
};

// Initial configuration: the root actor alone, holding the main process.
// Decorated and abstract flavors require the stateless fragment and give
// the root the decoration <0>.
Config initial_configuration(const Program &p, Flavor flavor);

std::string to_string(const std::vector<uint32_t> &sigma);  // "0.3.2"; "" = ε

}  // namespace actorlab
