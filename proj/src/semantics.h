// semantics.h -- transition relations: concrete, decorated, and abstract
// SPDX-License-Identifier: MIT
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "config.h"

namespace actorlab {

// Expression evaluation.  Side effects: `new` allocates fresh actors
// (appended to `created`, idle with initialized fields) left-to-right,
// innermost first.  `self` supplies the field state; null for the root.
// Evaluating `this` is an internal fault -- instantiation substitutes it
// away before a body ever runs.
Value evaluate(const ExprP &e, const Actor *self, const ClassDef *self_cls,
               Allocator &alloc, std::vector<Actor> &created, Flavor flavor);

// Transition label of the decorated / abstract semantics: a sequence, or
// a sequence paired with the emitted message m(Ũ, A).
struct Label {
  std::vector<uint32_t> sigma;
  bool has_msg = false;
  Sym method = kNoSym;
  std::vector<Value> args;
  ActorName target;

  friend bool operator==(const Label &, const Label &) = default;
};

std::string to_string(const Label &l);

struct Step {
  const char *rule;  // upd | let | invk-s | invk | inst | match | mmatch |
                     // plus-l | plus-r
  ActorName actor;   // the acting actor
  Label label;       // meaningful for decorated / abstract flavors
  Config next;
};

struct Fault {
  ActorName actor;
  std::string reason;
};

// The complete one-step successor list, in deterministic order: actors
// by name, rules in the fixed order above.  Dynamic faults (invocation
// target not an actor, dequeued message without a matching definition)
// yield error markers instead of transitions.
struct StepResult {
  std::vector<Step> succs;
  std::vector<Fault> errors;
};

StepResult successors(const Config &c, const Program &p);

// Successors contributed by the actor at listing position `idx` alone.
StepResult actor_successors(const Config &c, const Program &p, std::size_t idx);

// No successors and no error markers.
bool is_quiescent(const Config &c, const Program &p);

// Reset all decorations (process sequences to <0>, message sequences to
// ε).  The decision procedures and state-space exploration work on
// decoration-erased configurations, where the action sequences -- which
// otherwise grow without bound -- carry no information.
void erase_decorations(Config &c);

// ----- trace execution -----

enum class Policy : uint8_t { Det, Random, Guided };

// One guided-policy step selector: by successor index, or by acting
// actor and optionally rule (first match wins).
struct Selector {
  int index = -1;
  std::optional<ActorName> actor;
  std::string rule;
};

struct RunOptions {
  Flavor flavor = Flavor::Concrete;
  Policy policy = Policy::Det;
  uint64_t seed = 0;
  long budget = 10000;
  std::vector<Selector> script;
};

struct RunStep {
  size_t step;  // 1-based
  const char *rule;
  ActorName actor;
  Label label;
};

struct RunResult {
  Config final;
  std::string verdict;  // quiescent | error | budget | script-end | script-miss
  std::vector<Fault> faults;  // nonempty iff verdict == "error"
  size_t steps = 0;
};

using RunObserver = std::function<void(const RunStep &, const Config &)>;

RunResult run(const Program &p, const RunOptions &opts,
              const RunObserver &observer = nullptr);

// ----- exhaustive exploration -----

struct ExploreStats {
  uint64_t states = 0;       // distinct states up to fresh-name renaming
  uint64_t transitions = 0;  // edges over those states
  uint64_t depth = 0;        // longest shortest-path distance reached
  uint64_t quiescent = 0;    // terminal states
  uint64_t errors = 0;       // states with error markers
  bool complete = true;      // false when the state budget was exhausted
};

ExploreStats explore(const Program &p, Flavor flavor, uint64_t state_budget);

}  // namespace actorlab
