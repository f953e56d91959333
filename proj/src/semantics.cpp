// semantics.cpp -- transition relations: concrete, decorated, and abstract
// SPDX-License-Identifier: MIT
#include "semantics.h"

#include <algorithm>
#include <cassert>
#include <deque>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "canon.h"
#include "check.h"

namespace actorlab {

Value evaluate(const ExprP &e, const Actor *self, const ClassDef *self_cls,
               Allocator &alloc, std::vector<Actor> &created, Flavor flavor) {
  (void)flavor;  // created actors look the same in every flavor (ε:0)
  switch (e->kind) {
    case ExprKind::Var:
      return Value::of_var(e->name);
    case ExprKind::Actor:
      return Value::of_actor(e->actor);
    case ExprKind::This:
      throw std::logic_error(
          "internal: evaluated 'this' (instantiation substitutes it away)");
    case ExprKind::Field: {
      if (!self || !self_cls)
        throw std::logic_error("internal: field read without a field state");
      int idx = self_cls->field_index(e->name);
      if (idx < 0 || static_cast<size_t>(idx) >= self->fields.size())
        throw std::logic_error("internal: field '" + sym_text(e->name) +
                               "' missing from state");
      return self->fields[static_cast<size_t>(idx)];
    }
    case ExprKind::New: {
      std::vector<Value> init;
      init.reserve(e->args.size());
      for (const ExprP &a : e->args)
        init.push_back(evaluate(a, self, self_cls, alloc, created, flavor));
      Actor fresh;
      fresh.name = alloc.fresh_actor(e->name);
      fresh.proc = nil_proc();
      fresh.fields = std::move(init);
      created.push_back(std::move(fresh));
      return Value::of_actor(created.back().name);
    }
  }
  throw std::logic_error("internal: unknown expression kind");
}

std::string to_string(const Label &l) {
  std::string out = to_string(l.sigma);
  if (l.has_msg) {
    out += '|';
    out += sym_text(l.method);
    out += '(';
    for (size_t i = 0; i < l.args.size(); ++i) {
      if (i) out += ',';
      out += to_string(l.args[i]);
    }
    out += ',';
    out += to_string(l.target);
    out += ')';
  }
  return out;
}

namespace {

std::vector<uint32_t> bumped(const std::vector<uint32_t> &sigma) {
  assert(!sigma.empty() && "undecorated process performed a decorated step");
  std::vector<uint32_t> s = sigma;
  ++s.back();
  return s;
}

// Per-actor successor builder.  One instance per source configuration.
struct Stepper {
  const Config &c;
  const Program &p;
  StepResult &out;
  const bool dec;  // decorations present (decorated or abstract)
  const bool abs;  // abstract delivery

  void fault(const ActorName &who, std::string reason) {
    out.errors.push_back(Fault{who, std::move(reason)});
  }

  // Advance the acting actor's process and decoration in `next`, giving
  // the step label for the decorated flavors.
  Label advance(Config &next, size_t idx, ProcP new_proc) {
    Actor &me = next.actors[idx];
    me.proc = std::move(new_proc);
    Label label;
    if (dec) {
      me.sigma = bumped(c.actors[idx].sigma);
      label.sigma = me.sigma;
    }
    return label;
  }

  void actor_steps(size_t idx) {
    const Actor &self = c.actors[idx];
    if (!self.proc) return;  // wildcard component: no transitions of its own
    const ClassDef *cls =
        is_root(self.name) ? nullptr : p.find_class(self.name.cls);
    const ProcP &proc = self.proc;
    switch (proc->kind) {
      case ProcKind::Nil:
        if (!self.queue.empty()) rule_inst(idx, cls);
        return;
      case ProcKind::Update:
        rule_upd(idx, cls);
        return;
      case ProcKind::Let:
        rule_let(idx, cls);
        return;
      case ProcKind::Invoke:
        rule_invk(idx, cls);
        return;
      case ProcKind::Match:
        rule_match(idx, cls);
        return;
      case ProcKind::Plus: {
        // plus-l, then plus-r
        {
          Config next = c;
          Label l = advance(next, idx, proc->p0);
          out.succs.push_back(
              Step{"plus-l", self.name, std::move(l), std::move(next)});
        }
        {
          Config next = c;
          Label l = advance(next, idx, proc->p1);
          out.succs.push_back(
              Step{"plus-r", self.name, std::move(l), std::move(next)});
        }
        return;
      }
    }
  }

  void rule_upd(size_t idx, const ClassDef *cls) {
    const Actor &self = c.actors[idx];
    const ProcP &proc = self.proc;
    if (!cls) throw std::logic_error("internal: update on the root actor");
    int fidx = cls->field_index(proc->name);
    if (fidx < 0)
      throw std::logic_error("internal: update of undeclared field");
    Config next = c;
    std::vector<Actor> created;
    Value u = evaluate(proc->e0, &self, cls, next.alloc, created, c.flavor);
    next.actors[idx].fields[static_cast<size_t>(fidx)] = u;
    Label l = advance(next, idx, proc->p0);
    for (Actor &a : created) next.actors.push_back(std::move(a));
    out.succs.push_back(Step{"upd", self.name, std::move(l), std::move(next)});
  }

  void rule_let(size_t idx, const ClassDef *cls) {
    const Actor &self = c.actors[idx];
    const ProcP &proc = self.proc;
    Config next = c;
    std::vector<Actor> created;
    Value u = evaluate(proc->e0, &self, cls, next.alloc, created, c.flavor);
    Subst sub{{proc->name, u}};
    Label l = advance(next, idx, substitute(proc->p0, sub, nullptr));
    for (Actor &a : created) next.actors.push_back(std::move(a));
    out.succs.push_back(Step{"let", self.name, std::move(l), std::move(next)});
  }

  void rule_invk(size_t idx, const ClassDef *cls) {
    const Actor &self = c.actors[idx];
    const ProcP &proc = self.proc;
    // Evaluate target, then arguments, left to right; the created actors
    // and the allocator evolution are shared by every delivery choice.
    Allocator alloc2 = c.alloc;
    std::vector<Actor> created;
    Value tv = evaluate(proc->e0, &self, cls, alloc2, created, c.flavor);
    if (!tv.is_actor()) {
      fault(self.name,
            "invocation target is not an actor: " + to_string(tv));
      return;
    }
    std::vector<Value> args;
    args.reserve(proc->args.size());
    for (const ExprP &a : proc->args)
      args.push_back(evaluate(a, &self, cls, alloc2, created, c.flavor));
    const ActorName target = tv.actor;

    auto deliver = [&](size_t rcpt_idx, const char *rule) {
      Config next = c;
      next.alloc = alloc2;
      Label l = advance(next, idx, proc->p0);
      Message m;
      m.method = proc->name;
      m.args = args;
      if (dec) {
        m.sigma = l.sigma;
        l.has_msg = true;
        l.method = proc->name;
        l.args = args;
        l.target = target;
      }
      if (abs) {
        m.has_target = true;
        m.target = target;
      }
      next.actors[rcpt_idx].queue.push_back(std::move(m));
      for (const Actor &a : created) next.actors.push_back(a);
      out.succs.push_back(Step{rule, self.name, std::move(l), std::move(next)});
    };

    if (!abs) {
      // Exact delivery to the addressed actor.
      size_t rcpt = c.actors.size();
      for (size_t j = 0; j < c.actors.size(); ++j)
        if (c.actors[j].name == target) rcpt = j;
      if (rcpt == c.actors.size()) {
        fault(self.name,
              "invocation target " + to_string(target) +
                  " is not in the configuration");
        return;
      }
      deliver(rcpt, rcpt == idx ? "invk-s" : "invk");
    } else {
      // Inexact delivery: any actor of the target's class may receive
      // the message; self-delivery first, then the others by name.
      if (c.actors[idx].name.cls == target.cls) deliver(idx, "invk-s");
      for (size_t j : c.by_name())
        if (j != idx && c.actors[j].name.cls == target.cls)
          deliver(j, "invk");
    }
  }

  void rule_match(size_t idx, const ClassDef *cls) {
    const Actor &self = c.actors[idx];
    const ProcP &proc = self.proc;
    Config next = c;
    std::vector<Actor> created;
    Value u = evaluate(proc->e0, &self, cls, next.alloc, created, c.flavor);
    Value v = evaluate(proc->e1, &self, cls, next.alloc, created, c.flavor);
    bool eq = u == v;
    Label l = advance(next, idx, eq ? proc->p0 : proc->p1);
    for (Actor &a : created) next.actors.push_back(std::move(a));
    out.succs.push_back(Step{eq ? "match" : "mmatch", self.name, std::move(l),
                             std::move(next)});
  }

  void rule_inst(size_t idx, const ClassDef *cls) {
    const Actor &self = c.actors[idx];
    const Message &msg = self.queue.front();
    const MethodDef *def = cls ? cls->find_method(msg.method) : nullptr;
    if (!def) {
      fault(self.name, "no method '" + sym_text(msg.method) + "' in class " +
                           sym_text(self.name.cls));
      return;
    }
    if (def->params.size() != msg.args.size()) {
      fault(self.name,
            "method '" + sym_text(msg.method) + "' expects " +
                std::to_string(def->params.size()) + " argument(s), got " +
                std::to_string(msg.args.size()));
      return;
    }
    if (abs && !msg.has_target)
      throw std::logic_error("internal: abstract message without a target");

    Config next = c;
    Actor &me = next.actors[idx];

    // Free variables of the body beyond the parameters are renamed to
    // fresh ones, in first-occurrence order.
    Subst sub;
    std::unordered_set<Sym> params(def->params.begin(), def->params.end());
    for (const Value &u : free_names(def->body)) {
      if (!u.is_var() || params.count(u.var)) continue;
      sub.emplace(u.var, Value::of_var(next.alloc.fresh_var()));
    }
    for (size_t i = 0; i < def->params.size(); ++i)
      sub[def->params[i]] = msg.args[i];
    Value this_val = Value::of_actor(abs ? msg.target : self.name);

    me.proc = substitute(def->body, sub, &this_val);
    Label label;
    if (dec) {
      me.sigma = msg.sigma;
      me.sigma.push_back(0);
      label.sigma = me.sigma;
    }
    me.queue.erase(me.queue.begin());
    out.succs.push_back(
        Step{"inst", self.name, std::move(label), std::move(next)});
  }
};

}  // namespace

StepResult successors(const Config &c, const Program &p) {
  StepResult result;
  Stepper stepper{c, p, result, c.flavor != Flavor::Concrete,
                  c.flavor == Flavor::Abstract};
  for (size_t idx : c.by_name()) stepper.actor_steps(idx);
  return result;
}

StepResult actor_successors(const Config &c, const Program &p, std::size_t idx) {
  StepResult result;
  Stepper stepper{c, p, result, c.flavor != Flavor::Concrete,
                  c.flavor == Flavor::Abstract};
  stepper.actor_steps(idx);
  return result;
}

bool is_quiescent(const Config &c, const Program &p) {
  StepResult sr = successors(c, p);
  return sr.succs.empty() && sr.errors.empty();
}

void erase_decorations(Config &c) {
  if (c.flavor == Flavor::Concrete) return;
  for (Actor &a : c.actors) {
    a.sigma = {0};
    for (Message &m : a.queue) m.sigma.clear();
  }
}

RunResult run(const Program &p, const RunOptions &opts,
              const RunObserver &observer) {
  RunResult result;
  Config cur = initial_configuration(p, opts.flavor);
  std::mt19937_64 rng(opts.seed);
  const long budget = opts.budget > 0 ? opts.budget : 10000;
  size_t script_pos = 0;

  for (long n = 1;; ++n) {
    StepResult sr = successors(cur, p);
    if (!sr.errors.empty()) {
      result.verdict = "error";
      result.faults = std::move(sr.errors);
      break;
    }
    if (sr.succs.empty()) {
      result.verdict = "quiescent";
      break;
    }
    if (n > budget) {
      result.verdict = "budget";
      break;
    }

    size_t pick = 0;
    if (opts.policy == Policy::Random) {
      pick = std::uniform_int_distribution<size_t>(0, sr.succs.size() - 1)(rng);
    } else if (opts.policy == Policy::Guided) {
      if (script_pos >= opts.script.size()) {
        result.verdict = "script-end";
        break;
      }
      const Selector &sel = opts.script[script_pos++];
      bool found = false;
      if (sel.index >= 0) {
        if (static_cast<size_t>(sel.index) < sr.succs.size()) {
          pick = static_cast<size_t>(sel.index);
          found = true;
        }
      } else if (sel.actor) {
        for (size_t i = 0; i < sr.succs.size(); ++i) {
          if (sr.succs[i].actor == *sel.actor &&
              (sel.rule.empty() || sel.rule == sr.succs[i].rule)) {
            pick = i;
            found = true;
            break;
          }
        }
      }
      if (!found) {
        result.verdict = "script-miss";
        break;
      }
    }

    Step &step = sr.succs[pick];
    cur = std::move(step.next);
    result.steps = static_cast<size_t>(n);
    if (observer)
      observer(RunStep{static_cast<size_t>(n), step.rule, step.actor,
                       std::move(step.label)},
               cur);
  }
  result.final = std::move(cur);
  return result;
}

ExploreStats explore(const Program &p, Flavor flavor, uint64_t state_budget) {
  ExploreStats stats;
  Config init = initial_configuration(p, flavor);
  erase_decorations(init);

  std::unordered_set<std::string> seen;
  std::deque<std::pair<Config, uint64_t>> frontier;
  seen.insert(state_key(init, p));
  frontier.emplace_back(std::move(init), 0);
  stats.states = 1;

  while (!frontier.empty()) {
    auto [cur, depth] = std::move(frontier.front());
    frontier.pop_front();
    stats.depth = std::max(stats.depth, depth);

    StepResult sr = successors(cur, p);
    if (!sr.errors.empty()) {
      ++stats.errors;  // error states are terminal
      continue;
    }
    if (sr.succs.empty()) {
      ++stats.quiescent;
      continue;
    }
    for (Step &s : sr.succs) {
      erase_decorations(s.next);
      ++stats.transitions;
      std::string key = state_key(s.next, p);
      if (!seen.insert(std::move(key)).second) continue;
      if (stats.states >= state_budget) {
        stats.complete = false;
        return stats;
      }
      ++stats.states;
      frontier.emplace_back(std::move(s.next), depth + 1);
    }
  }
  return stats;
}

}  // namespace actorlab
