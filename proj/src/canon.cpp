// canon.cpp -- canonical printers for the renaming equivalences
// SPDX-License-Identifier: MIT
#include "canon.h"

#include <unordered_map>

namespace actorlab {

namespace {

// Stateful canonical printer.  One instance per independently renameable
// term; a configuration key shares one instance across all components.
struct Canon {
  Canon(EquivMode m, const std::vector<Value> *r) : mode(m), rigid(r) {}

  EquivMode mode;
  const std::vector<Value> *rigid;  // values never renamed (main frees)
  std::string out;

  std::unordered_map<Sym, int> var_idx;
  std::unordered_map<ActorName, int, ActorNameHash> actor_idx;
  std::unordered_map<Sym, int> class_ctr;  // Abstract: per-class numbering
  int var_ctr = 0;
  int uni_ctr = 0;  // Query: shared pool for variables and actors
  std::vector<Sym> binders;

  bool is_rigid_var(Sym v) const {
    if (!rigid) return !is_fresh_var_spelling(sym_text(v));
    for (const Value &u : *rigid)
      if (u.is_var() && u.var == v) return true;
    return false;
  }

  void value(const Value &u) {
    if (u.is_var()) {
      const Sym v = u.var;
      for (size_t i = binders.size(); i-- > 0;) {
        if (binders[i] == v) {
          out += 'b';
          out += std::to_string(binders.size() - 1 - i);
          return;
        }
      }
      if (mode != EquivMode::Query && is_rigid_var(v)) {
        out += '\'';
        out += sym_text(v);
        return;
      }
      const char tag = mode == EquivMode::Query ? 'u' : 'v';
      auto [it, fresh] = var_idx.emplace(v, 0);
      if (fresh)
        it->second = mode == EquivMode::Query ? uni_ctr++ : var_ctr++;
      out += tag;
      out += std::to_string(it->second);
      return;
    }
    const ActorName &a = u.actor;
    switch (mode) {
      case EquivMode::Concrete:
        out += to_string(a);
        return;
      case EquivMode::Abstract: {
        auto [it, fresh] = actor_idx.emplace(a, 0);
        if (fresh) it->second = class_ctr[a.cls]++;
        out += sym_text(a.cls);
        out += '@';
        out += std::to_string(it->second);
        return;
      }
      case EquivMode::Query: {
        auto [it, fresh] = actor_idx.emplace(a, 0);
        if (fresh) it->second = uni_ctr++;
        out += 'u';
        out += std::to_string(it->second);
        return;
      }
    }
  }

  void expr(const ExprP &e) {
    switch (e->kind) {
      case ExprKind::Var:
        value(Value::of_var(e->name));
        return;
      case ExprKind::Actor:
        value(Value::of_actor(e->actor));
        return;
      case ExprKind::Field:
        out += '@';
        out += sym_text(e->name);
        return;
      case ExprKind::This:
        out += "this";
        return;
      case ExprKind::New:
        out += "N(";
        out += sym_text(e->name);
        out += ",[";
        for (size_t i = 0; i < e->args.size(); ++i) {
          if (i) out += ',';
          expr(e->args[i]);
        }
        out += "])";
        return;
    }
  }

  void proc(const ProcP &p) {
    if (!p) {  // wildcard component in a reachability target
      out += '*';
      return;
    }
    switch (p->kind) {
      case ProcKind::Nil:
        out += '0';
        return;
      case ProcKind::Update:
        out += "U(";
        out += sym_text(p->name);
        out += ',';
        expr(p->e0);
        out += ';';
        proc(p->p0);
        out += ')';
        return;
      case ProcKind::Let:
        out += "L(";
        expr(p->e0);
        out += ';';
        binders.push_back(p->name);
        proc(p->p0);
        binders.pop_back();
        out += ')';
        return;
      case ProcKind::Invoke:
        out += "I(";
        expr(p->e0);
        out += ',';
        out += sym_text(p->name);
        out += ",[";
        for (size_t i = 0; i < p->args.size(); ++i) {
          if (i) out += ',';
          expr(p->args[i]);
        }
        out += "];";
        proc(p->p0);
        out += ')';
        return;
      case ProcKind::Match:
        out += "M(";
        expr(p->e0);
        out += ',';
        expr(p->e1);
        out += ';';
        proc(p->p0);
        out += ';';
        proc(p->p1);
        out += ')';
        return;
      case ProcKind::Plus:
        out += "+(";
        proc(p->p0);
        out += ';';
        proc(p->p1);
        out += ')';
        return;
    }
  }

  void message(const Message &m) {
    out += sym_text(m.method);
    out += '(';
    for (size_t i = 0; i < m.args.size(); ++i) {
      if (i) out += ',';
      value(m.args[i]);
    }
    out += ')';
    if (mode == EquivMode::Abstract) {
      out += '|';
      out += to_string(m.sigma);
      out += '|';
      out += m.has_target ? sym_text(m.target.cls) : std::string("?");
    }
  }
};

}  // namespace

std::string canonical_process(const ProcP &p, EquivMode mode,
                              const std::vector<Value> *main_free) {
  Canon c{mode, main_free};
  c.proc(p);
  return std::move(c.out);
}

std::string canonical_message(const Message &m, EquivMode mode,
                              const std::vector<Value> *main_free) {
  Canon c{mode, main_free};
  c.message(m);
  return std::move(c.out);
}

bool proc_equiv(const ProcP &a, const ProcP &b, EquivMode mode,
                const std::vector<Value> &main_free) {
  return canonical_process(a, mode, &main_free) ==
         canonical_process(b, mode, &main_free);
}

bool msg_equiv(const Message &a, const Message &b, EquivMode mode,
               const std::vector<Value> &main_free) {
  return canonical_message(a, mode, &main_free) ==
         canonical_message(b, mode, &main_free);
}

std::string config_key(const Config &c, const Program &p, EquivMode mode) {
  Canon canon{mode, &p.main_free};
  canon.out += to_string(c.flavor);
  for (size_t idx : c.by_name()) {
    const Actor &a = c.actors[idx];
    canon.out += "|A(";
    canon.value(Value::of_actor(a.name));
    canon.out += ';';
    canon.out += to_string(a.sigma);
    canon.out += ';';
    canon.proc(a.proc);
    canon.out += ";[";
    for (size_t i = 0; i < a.fields.size(); ++i) {
      if (i) canon.out += ',';
      canon.value(a.fields[i]);
    }
    canon.out += "];[";
    for (size_t i = 0; i < a.queue.size(); ++i) {
      const Message &m = a.queue[i];
      if (i) canon.out += ',';
      canon.out += sym_text(m.method);
      canon.out += '(';
      for (size_t j = 0; j < m.args.size(); ++j) {
        if (j) canon.out += ',';
        canon.value(m.args[j]);
      }
      canon.out += ')';
      canon.out += to_string(m.sigma);
      if (m.has_target) {
        canon.out += '>';
        canon.value(Value::of_actor(m.target));
      }
    }
    canon.out += "])";
  }
  return std::move(canon.out);
}

std::string state_key(const Config &c, const Program &p) {
  return config_key(c, p, EquivMode::Concrete);
}

}  // namespace actorlab
