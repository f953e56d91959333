// ast.cpp -- abstract syntax: constructors, free names, substitution, printing
// SPDX-License-Identifier: MIT
#include "ast.h"

#include <algorithm>
#include <cassert>
#include <unordered_set>

namespace actorlab {

ExprP mk_var(Sym v) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Var;
  e->name = v;
  return e;
}

ExprP mk_field(Sym f) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Field;
  e->name = f;
  return e;
}

ExprP mk_this() {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::This;
  return e;
}

ExprP mk_new(Sym cls, std::vector<ExprP> args) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::New;
  e->name = cls;
  e->args = std::move(args);
  return e;
}

ExprP mk_actor(ActorName a) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Actor;
  e->actor = a;
  return e;
}

ExprP mk_value(const Value &u) {
  return u.is_var() ? mk_var(u.var) : mk_actor(u.actor);
}

ProcP nil_proc() {
  static const ProcP nil = std::make_shared<Proc>();
  return nil;
}

ProcP mk_update(Sym field, ExprP value, ProcP cont) {
  auto p = std::make_shared<Proc>();
  p->kind = ProcKind::Update;
  p->name = field;
  p->e0 = std::move(value);
  p->p0 = std::move(cont);
  return p;
}

ProcP mk_let(Sym var, ExprP value, ProcP body) {
  auto p = std::make_shared<Proc>();
  p->kind = ProcKind::Let;
  p->name = var;
  p->e0 = std::move(value);
  p->p0 = std::move(body);
  return p;
}

ProcP mk_invoke(ExprP target, Sym method, std::vector<ExprP> args, ProcP cont) {
  auto p = std::make_shared<Proc>();
  p->kind = ProcKind::Invoke;
  p->name = method;
  p->e0 = std::move(target);
  p->args = std::move(args);
  p->p0 = std::move(cont);
  return p;
}

ProcP mk_match(ExprP l, ExprP r, ProcP then_p, ProcP else_p) {
  auto p = std::make_shared<Proc>();
  p->kind = ProcKind::Match;
  p->e0 = std::move(l);
  p->e1 = std::move(r);
  p->p0 = std::move(then_p);
  p->p1 = std::move(else_p);
  return p;
}

ProcP mk_plus(ProcP l, ProcP r) {
  auto p = std::make_shared<Proc>();
  p->kind = ProcKind::Plus;
  p->p0 = std::move(l);
  p->p1 = std::move(r);
  return p;
}

const MethodDef *ClassDef::find_method(Sym m) const {
  for (const MethodDef &d : methods)
    if (d.name == m) return &d;
  return nullptr;
}

int ClassDef::field_index(Sym f) const {
  for (size_t i = 0; i < fields.size(); ++i)
    if (fields[i] == f) return static_cast<int>(i);
  return -1;
}

const ClassDef *Program::find_class(Sym c) const {
  auto it = class_index_.find(c);
  if (it == class_index_.end()) return nullptr;
  return &classes[it->second];
}

bool Program::is_main_free(const Value &u) const {
  return std::find(main_free.begin(), main_free.end(), u) != main_free.end();
}

void Program::rebuild_index() {
  class_index_.clear();
  for (size_t i = 0; i < classes.size(); ++i)
    class_index_.emplace(classes[i].name, i);
  main_free = main ? free_names(main) : std::vector<Value>{};
}

// ----- free names -----

namespace {

struct FreeWalk {
  std::vector<Value> out;
  std::unordered_set<Value, ValueHash> seen;
  // Multiset of shadowing binders currently in scope.
  std::unordered_map<Sym, int> bound;

  void hit(const Value &u) {
    if (u.is_var()) {
      auto it = bound.find(u.var);
      if (it != bound.end() && it->second > 0) return;
    }
    if (seen.insert(u).second) out.push_back(u);
  }

  void expr(const ExprP &e) {
    if (!e) return;
    switch (e->kind) {
      case ExprKind::Var:
        hit(Value::of_var(e->name));
        break;
      case ExprKind::Actor:
        hit(Value::of_actor(e->actor));
        break;
      case ExprKind::New:
        for (const ExprP &a : e->args) expr(a);
        break;
      case ExprKind::Field:
      case ExprKind::This:
        break;  // fields and `this` are not names
    }
  }

  void proc(const ProcP &p) {
    if (!p) return;
    switch (p->kind) {
      case ProcKind::Nil:
        break;
      case ProcKind::Update:
        expr(p->e0);
        proc(p->p0);
        break;
      case ProcKind::Let:
        expr(p->e0);
        ++bound[p->name];
        proc(p->p0);
        --bound[p->name];
        break;
      case ProcKind::Invoke:
        expr(p->e0);
        for (const ExprP &a : p->args) expr(a);
        proc(p->p0);
        break;
      case ProcKind::Match:
        expr(p->e0);
        expr(p->e1);
        proc(p->p0);
        proc(p->p1);
        break;
      case ProcKind::Plus:
        proc(p->p0);
        proc(p->p1);
        break;
    }
  }
};

}  // namespace

std::vector<Value> free_names(const ProcP &p) {
  FreeWalk w;
  w.proc(p);
  return w.out;
}

std::vector<Value> free_names(const ExprP &e) {
  FreeWalk w;
  w.expr(e);
  return w.out;
}

bool has_free(const ProcP &p, const Value &u) {
  for (const Value &v : free_names(p))
    if (v == u) return true;
  return false;
}

// ----- substitution -----

namespace {

bool expr_mentions_this(const ExprP &e) {
  if (!e) return false;
  if (e->kind == ExprKind::This) return true;
  if (e->kind == ExprKind::New)
    for (const ExprP &a : e->args)
      if (expr_mentions_this(a)) return true;
  return false;
}

bool proc_mentions_this(const ProcP &p) {
  if (!p) return false;
  switch (p->kind) {
    case ProcKind::Nil:
      return false;
    case ProcKind::Update:
      return expr_mentions_this(p->e0) || proc_mentions_this(p->p0);
    case ProcKind::Let:
      return expr_mentions_this(p->e0) || proc_mentions_this(p->p0);
    case ProcKind::Invoke:
      if (expr_mentions_this(p->e0)) return true;
      for (const ExprP &a : p->args)
        if (expr_mentions_this(a)) return true;
      return proc_mentions_this(p->p0);
    case ProcKind::Match:
      return expr_mentions_this(p->e0) || expr_mentions_this(p->e1) ||
             proc_mentions_this(p->p0) || proc_mentions_this(p->p1);
    case ProcKind::Plus:
      return proc_mentions_this(p->p0) || proc_mentions_this(p->p1);
  }
  return false;
}

ExprP subst_expr(const ExprP &e, const Subst &sub, const Value *this_val,
                 bool &changed) {
  if (!e) return e;
  switch (e->kind) {
    case ExprKind::Var: {
      auto it = sub.find(e->name);
      if (it == sub.end()) return e;
      changed = true;
      return mk_value(it->second);
    }
    case ExprKind::This:
      if (!this_val) return e;
      changed = true;
      return mk_value(*this_val);
    case ExprKind::New: {
      bool any = false;
      std::vector<ExprP> args;
      args.reserve(e->args.size());
      for (const ExprP &a : e->args) args.push_back(subst_expr(a, sub, this_val, any));
      if (!any) return e;
      changed = true;
      return mk_new(e->name, std::move(args));
    }
    case ExprKind::Field:
    case ExprKind::Actor:
      return e;
  }
  return e;
}

ProcP subst_proc(const ProcP &p, const Subst &sub, const Value *this_val,
                 bool &changed);

// Pick the binder name used under `sub`: rename to a primed copy when a
// substituted value could be captured.
ProcP subst_let(const Proc &let, const Subst &sub, const Value *this_val,
                bool &changed) {
  Subst inner = sub;
  inner.erase(let.name);

  std::vector<Value> body_free = free_names(let.p0);
  auto body_has = [&](Sym v) {
    for (const Value &u : body_free)
      if (u.is_var() && u.var == v) return true;
    return false;
  };

  // Variables that can flow into the body through `inner` or `this`.
  std::unordered_set<Sym> incoming;
  for (const auto &[dom, val] : inner)
    if (val.is_var() && body_has(dom)) incoming.insert(val.var);
  if (this_val && this_val->is_var() && proc_mentions_this(let.p0))
    incoming.insert(this_val->var);

  Sym binder = let.name;
  if (incoming.count(binder)) {
    // Primed copies until fresh w.r.t. everything in sight.
    std::unordered_set<Sym> avoid = incoming;
    for (const Value &u : body_free)
      if (u.is_var()) avoid.insert(u.var);
    for (const auto &[dom, val] : inner) {
      avoid.insert(dom);
      (void)val;
    }
    std::string text = sym_text(binder);
    do {
      text += '\'';
      binder = intern(text);
    } while (avoid.count(binder));
    inner.emplace(let.name, Value::of_var(binder));
    changed = true;
  }

  bool any = false;
  ExprP value = subst_expr(let.e0, sub, this_val, any);
  ProcP body = inner.empty() && !this_val
                   ? let.p0
                   : subst_proc(let.p0, inner, this_val, any);
  if (!any && binder == let.name) return nullptr;  // caller keeps original
  changed = true;
  return mk_let(binder, std::move(value), std::move(body));
}

ProcP subst_proc(const ProcP &p, const Subst &sub, const Value *this_val,
                 bool &changed) {
  if (!p) return p;
  switch (p->kind) {
    case ProcKind::Nil:
      return p;
    case ProcKind::Update: {
      bool any = false;
      ExprP v = subst_expr(p->e0, sub, this_val, any);
      ProcP c = subst_proc(p->p0, sub, this_val, any);
      if (!any) return p;
      changed = true;
      return mk_update(p->name, std::move(v), std::move(c));
    }
    case ProcKind::Let: {
      ProcP out = subst_let(*p, sub, this_val, changed);
      return out ? out : p;
    }
    case ProcKind::Invoke: {
      bool any = false;
      ExprP t = subst_expr(p->e0, sub, this_val, any);
      std::vector<ExprP> args;
      args.reserve(p->args.size());
      for (const ExprP &a : p->args) args.push_back(subst_expr(a, sub, this_val, any));
      ProcP c = subst_proc(p->p0, sub, this_val, any);
      if (!any) return p;
      changed = true;
      return mk_invoke(std::move(t), p->name, std::move(args), std::move(c));
    }
    case ProcKind::Match: {
      bool any = false;
      ExprP l = subst_expr(p->e0, sub, this_val, any);
      ExprP r = subst_expr(p->e1, sub, this_val, any);
      ProcP t = subst_proc(p->p0, sub, this_val, any);
      ProcP e = subst_proc(p->p1, sub, this_val, any);
      if (!any) return p;
      changed = true;
      return mk_match(std::move(l), std::move(r), std::move(t), std::move(e));
    }
    case ProcKind::Plus: {
      bool any = false;
      ProcP l = subst_proc(p->p0, sub, this_val, any);
      ProcP r = subst_proc(p->p1, sub, this_val, any);
      if (!any) return p;
      changed = true;
      return mk_plus(std::move(l), std::move(r));
    }
  }
  return p;
}

}  // namespace

ProcP substitute(const ProcP &p, const Subst &sub, const Value *this_val) {
  if (sub.empty() && !this_val) return p;
  bool changed = false;
  return subst_proc(p, sub, this_val, changed);
}

ExprP substitute(const ExprP &e, const Subst &sub, const Value *this_val) {
  if (sub.empty() && !this_val) return e;
  bool changed = false;
  return subst_expr(e, sub, this_val, changed);
}

// ----- invocation-target desugaring -----

ProcP desugar_invoke_targets(const ProcP &p) {
  if (!p) return p;
  switch (p->kind) {
    case ProcKind::Nil:
      return p;
    case ProcKind::Update: {
      ProcP c = desugar_invoke_targets(p->p0);
      return c == p->p0 ? p : mk_update(p->name, p->e0, std::move(c));
    }
    case ProcKind::Let: {
      ProcP b = desugar_invoke_targets(p->p0);
      return b == p->p0 ? p : mk_let(p->name, p->e0, std::move(b));
    }
    case ProcKind::Invoke: {
      ProcP c = desugar_invoke_targets(p->p0);
      bool lift =
          p->e0->kind == ExprKind::Field || p->e0->kind == ExprKind::New;
      if (!lift) {
        return c == p->p0 ? p : mk_invoke(p->e0, p->name, p->args, std::move(c));
      }
      // Binder must not capture a name used by the arguments or the
      // continuation; primed copies of `x` until clear.
      std::unordered_set<Sym> avoid;
      for (const ExprP &a : p->args)
        for (const Value &u : free_names(a))
          if (u.is_var()) avoid.insert(u.var);
      for (const Value &u : free_names(c))
        if (u.is_var()) avoid.insert(u.var);
      std::string text = "x";
      Sym binder = intern(text);
      while (avoid.count(binder)) {
        text += '\'';
        binder = intern(text);
      }
      return mk_let(binder, p->e0,
                    mk_invoke(mk_var(binder), p->name, p->args, std::move(c)));
    }
    case ProcKind::Match: {
      ProcP t = desugar_invoke_targets(p->p0);
      ProcP e = desugar_invoke_targets(p->p1);
      if (t == p->p0 && e == p->p1) return p;
      return mk_match(p->e0, p->e1, std::move(t), std::move(e));
    }
    case ProcKind::Plus: {
      ProcP l = desugar_invoke_targets(p->p0);
      ProcP r = desugar_invoke_targets(p->p1);
      if (l == p->p0 && r == p->p1) return p;
      return mk_plus(std::move(l), std::move(r));
    }
  }
  return p;
}

// ----- alpha-equality -----

namespace {

struct AlphaCtx {
  // Binder -> de Bruijn level, with shadowing handled by saving the
  // previous entry around each scope.
  std::unordered_map<Sym, int> left, right;
  int next_level = 0;
};

bool alpha_expr(const ExprP &a, const ExprP &b, const AlphaCtx &ctx) {
  if (!a || !b) return a == b;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case ExprKind::Var: {
      auto la = ctx.left.find(a->name);
      auto lb = ctx.right.find(b->name);
      bool ba = la != ctx.left.end();
      bool bb = lb != ctx.right.end();
      if (ba != bb) return false;
      return ba ? la->second == lb->second : a->name == b->name;
    }
    case ExprKind::Field:
      return a->name == b->name;
    case ExprKind::This:
      return true;
    case ExprKind::New: {
      if (a->name != b->name || a->args.size() != b->args.size()) return false;
      for (size_t i = 0; i < a->args.size(); ++i)
        if (!alpha_expr(a->args[i], b->args[i], ctx)) return false;
      return true;
    }
    case ExprKind::Actor:
      return a->actor == b->actor;
  }
  return false;
}

bool alpha_proc(const ProcP &p, const ProcP &q, AlphaCtx &ctx) {
  if (!p || !q) return p == q;
  if (p->kind != q->kind) return false;
  switch (p->kind) {
    case ProcKind::Nil:
      return true;
    case ProcKind::Update:
      return p->name == q->name && alpha_expr(p->e0, q->e0, ctx) &&
             alpha_proc(p->p0, q->p0, ctx);
    case ProcKind::Let: {
      if (!alpha_expr(p->e0, q->e0, ctx)) return false;
      int level = ctx.next_level++;
      auto restore = [](std::unordered_map<Sym, int> &m, Sym k,
                        std::optional<int> old) {
        if (old)
          m[k] = *old;
        else
          m.erase(k);
      };
      std::optional<int> ol, orr;
      if (auto it = ctx.left.find(p->name); it != ctx.left.end()) ol = it->second;
      if (auto it = ctx.right.find(q->name); it != ctx.right.end())
        orr = it->second;
      ctx.left[p->name] = level;
      ctx.right[q->name] = level;
      bool ok = alpha_proc(p->p0, q->p0, ctx);
      restore(ctx.left, p->name, ol);
      restore(ctx.right, q->name, orr);
      --ctx.next_level;
      return ok;
    }
    case ProcKind::Invoke: {
      if (p->name != q->name || p->args.size() != q->args.size()) return false;
      if (!alpha_expr(p->e0, q->e0, ctx)) return false;
      for (size_t i = 0; i < p->args.size(); ++i)
        if (!alpha_expr(p->args[i], q->args[i], ctx)) return false;
      return alpha_proc(p->p0, q->p0, ctx);
    }
    case ProcKind::Match:
      return alpha_expr(p->e0, q->e0, ctx) && alpha_expr(p->e1, q->e1, ctx) &&
             alpha_proc(p->p0, q->p0, ctx) && alpha_proc(p->p1, q->p1, ctx);
    case ProcKind::Plus:
      return alpha_proc(p->p0, q->p0, ctx) && alpha_proc(p->p1, q->p1, ctx);
  }
  return false;
}

}  // namespace

bool alpha_equal(const ProcP &p, const ProcP &q) {
  AlphaCtx ctx;
  return alpha_proc(p, q, ctx);
}

bool alpha_equal(const ExprP &a, const ExprP &b) {
  AlphaCtx ctx;
  return alpha_expr(a, b, ctx);
}

bool structural_equal(const ExprP &a, const ExprP &b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind) return false;
  switch (a->kind) {
    case ExprKind::Var:
    case ExprKind::Field:
      return a->name == b->name;
    case ExprKind::This:
      return true;
    case ExprKind::Actor:
      return a->actor == b->actor;
    case ExprKind::New:
      break;
  }
  if (a->name != b->name || a->args.size() != b->args.size()) return false;
  for (size_t i = 0; i < a->args.size(); ++i)
    if (!structural_equal(a->args[i], b->args[i])) return false;
  return true;
}

bool structural_equal(const ProcP &p, const ProcP &q) {
  if (p == q) return true;
  if (!p || !q || p->kind != q->kind) return false;
  if (p->name != q->name || p->args.size() != q->args.size()) return false;
  if (!structural_equal(p->e0, q->e0) || !structural_equal(p->e1, q->e1))
    return false;
  for (size_t i = 0; i < p->args.size(); ++i)
    if (!structural_equal(p->args[i], q->args[i])) return false;
  return structural_equal(p->p0, q->p0) && structural_equal(p->p1, q->p1);
}

// ----- printing -----

namespace {

void print_expr(const ExprP &e, std::string &out) {
  switch (e->kind) {
    case ExprKind::Var:
      out += sym_text(e->name);
      break;
    case ExprKind::Field:
      out += '@';
      out += sym_text(e->name);
      break;
    case ExprKind::This:
      out += "this";
      break;
    case ExprKind::New: {
      out += "new ";
      out += sym_text(e->name);
      out += '(';
      for (size_t i = 0; i < e->args.size(); ++i) {
        if (i) out += ", ";
        print_expr(e->args[i], out);
      }
      out += ')';
      break;
    }
    case ExprKind::Actor:
      out += to_string(e->actor);
      break;
  }
}

// Would a trailing `else` be grabbed by something inside p?
bool swallows_else(const ProcP &p) {
  if (!p) return false;
  switch (p->kind) {
    case ProcKind::Nil:
      return false;
    case ProcKind::Update:
    case ProcKind::Let:
      return swallows_else(p->p0);
    case ProcKind::Invoke:
      return p->p0 && p->p0->kind != ProcKind::Nil && swallows_else(p->p0);
    case ProcKind::Match:
      return (!p->p1 || p->p1->kind == ProcKind::Nil) ? true
                                                      : swallows_else(p->p1);
    case ProcKind::Plus:
      return false;  // printed parenthesized in branch positions
  }
  return false;
}

void print_proc(const ProcP &p, std::string &out, bool allow_plus);

// Branch / continuation positions admit a single prefix term.
void print_prefix(const ProcP &p, std::string &out, bool guard_else) {
  bool parens = p->kind == ProcKind::Plus ||
                (guard_else && swallows_else(p));
  if (parens) out += '(';
  print_proc(p, out, /*allow_plus=*/p->kind == ProcKind::Plus);
  if (parens) out += ')';
}

void print_proc(const ProcP &p, std::string &out, bool allow_plus) {
  switch (p->kind) {
    case ProcKind::Nil:
      out += '0';
      break;
    case ProcKind::Update:
      out += '@';
      out += sym_text(p->name);
      out += " <- ";
      print_expr(p->e0, out);
      out += " . ";
      print_prefix(p->p0, out, false);
      break;
    case ProcKind::Let:
      out += "let ";
      out += sym_text(p->name);
      out += " = ";
      print_expr(p->e0, out);
      out += " in ";
      print_prefix(p->p0, out, false);
      break;
    case ProcKind::Invoke: {
      print_expr(p->e0, out);
      out += '!';
      out += sym_text(p->name);
      out += '(';
      for (size_t i = 0; i < p->args.size(); ++i) {
        if (i) out += ", ";
        print_expr(p->args[i], out);
      }
      out += ')';
      if (p->p0 && p->p0->kind != ProcKind::Nil) {
        out += " . ";
        print_prefix(p->p0, out, false);
      }
      break;
    }
    case ProcKind::Match: {
      out += "if ";
      print_expr(p->e0, out);
      out += " = ";
      print_expr(p->e1, out);
      out += " then ";
      bool with_else = p->p1 && p->p1->kind != ProcKind::Nil;
      print_prefix(p->p0, out, /*guard_else=*/with_else);
      if (with_else) {
        out += " else ";
        print_prefix(p->p1, out, false);
      }
      break;
    }
    case ProcKind::Plus: {
      if (!allow_plus) out += '(';
      // Left-associated chains print flat; anything else keeps parens.
      if (p->p0->kind == ProcKind::Plus) {
        print_proc(p->p0, out, true);
      } else {
        print_prefix(p->p0, out, false);
      }
      out += " + ";
      print_prefix(p->p1, out, false);
      if (!allow_plus) out += ')';
      break;
    }
  }
}

}  // namespace

std::string to_string(const ExprP &e) {
  std::string out;
  print_expr(e, out);
  return out;
}

std::string to_string(const ProcP &p) {
  std::string out;
  print_proc(p, out, /*allow_plus=*/true);
  return out;
}

std::string to_string(const Program &prog) {
  std::string out;
  for (const ClassDef &c : prog.classes) {
    out += "class ";
    out += sym_text(c.name);
    out += '(';
    for (size_t i = 0; i < c.fields.size(); ++i) {
      if (i) out += ", ";
      out += sym_text(c.fields[i]);
    }
    out += ") {\n";
    for (const MethodDef &m : c.methods) {
      out += "  def ";
      out += sym_text(m.name);
      out += '(';
      for (size_t i = 0; i < m.params.size(); ++i) {
        if (i) out += ", ";
        out += sym_text(m.params[i]);
      }
      out += ") = ";
      out += to_string(m.body);
      out += '\n';
    }
    out += "}\n";
  }
  out += "main { ";
  out += to_string(prog.main);
  out += " }\n";
  return out;
}

}  // namespace actorlab
