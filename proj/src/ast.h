// ast.h -- abstract syntax for programs, processes, and expressions
// SPDX-License-Identifier: MIT
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "names.h"

namespace actorlab {

// Expressions.  ActorLit never appears in parsed source; it arises by
// substitution at run time.
enum class ExprKind : uint8_t { Var, Field, This, New, Actor };

struct Expr;
using ExprP = std::shared_ptr<const Expr>;

struct Expr {
  ExprKind kind = ExprKind::Var;
  Sym name = kNoSym;        // Var: variable, Field: field, New: class
  ActorName actor;          // Actor
  std::vector<ExprP> args;  // New: field initializers
};

ExprP mk_var(Sym v);
ExprP mk_field(Sym f);
ExprP mk_this();
ExprP mk_new(Sym cls, std::vector<ExprP> args);
ExprP mk_actor(ActorName a);
ExprP mk_value(const Value &u);

// Processes.  Invoke always carries a continuation (Nil when the source
// omits it), so every suffix of a body is itself a process.
enum class ProcKind : uint8_t { Nil, Update, Let, Invoke, Match, Plus };

struct Proc;
using ProcP = std::shared_ptr<const Proc>;

struct Proc {
  ProcKind kind = ProcKind::Nil;
  Sym name = kNoSym;        // Update: field, Let: variable, Invoke: method
  ExprP e0;                 // Update/Let value, Invoke target, Match left
  ExprP e1;                 // Match right
  std::vector<ExprP> args;  // Invoke arguments
  ProcP p0;                 // continuation / then-branch / left summand
  ProcP p1;                 // else-branch / right summand
};

ProcP nil_proc();
ProcP mk_update(Sym field, ExprP value, ProcP cont);
ProcP mk_let(Sym var, ExprP value, ProcP body);
ProcP mk_invoke(ExprP target, Sym method, std::vector<ExprP> args, ProcP cont);
ProcP mk_match(ExprP l, ExprP r, ProcP then_p, ProcP else_p);
ProcP mk_plus(ProcP l, ProcP r);

struct MethodDef {
  Sym name = kNoSym;
  std::vector<Sym> params;
  ProcP body;
};

struct ClassDef {
  Sym name = kNoSym;
  std::vector<Sym> fields;
  std::vector<MethodDef> methods;

  const MethodDef *find_method(Sym m) const;
  int field_index(Sym f) const;  // -1 when absent
};

struct Program {
  std::vector<ClassDef> classes;
  ProcP main;

  // Free names of main in first-occurrence order; these are the global
  // names that every equivalence treats as rigid.
  std::vector<Value> main_free;

  const ClassDef *find_class(Sym c) const;
  bool is_main_free(const Value &u) const;

  void rebuild_index();  // recompute lookup tables and main_free

 private:
  std::unordered_map<Sym, size_t> class_index_;
};

// Free names of a process / expression in first-occurrence order
// (pre-order walk).  Includes free variables and actor literals;
// `this` and field names are not names in this sense.
std::vector<Value> free_names(const ProcP &p);
std::vector<Value> free_names(const ExprP &e);
bool has_free(const ProcP &p, const Value &u);

// Simultaneous capture-avoiding substitution of values for variables,
// with optional replacement of `this`.  Clashing binders are renamed to
// primed copies (x, x', x'', ...), deterministically.
using Subst = std::unordered_map<Sym, Value>;
ProcP substitute(const ProcP &p, const Subst &sub, const Value *this_val);
ExprP substitute(const ExprP &e, const Subst &sub, const Value *this_val);

// Alpha-equality (bound names ignored, free names literal).
bool alpha_equal(const ProcP &p, const ProcP &q);
bool alpha_equal(const ExprP &a, const ExprP &b);

// Exact syntactic equality, binder names included.
bool structural_equal(const ProcP &p, const ProcP &q);
bool structural_equal(const ExprP &a, const ExprP &b);

// Lift field-read and `new` invocation targets into a binding let, per the
// shorthand E!m(Ẽ).P = let x = E in x!m(Ẽ).P.  A running invocation's
// target is then always a variable or an actor name.
ProcP desugar_invoke_targets(const ProcP &p);

// Surface-syntax printers; parse(print(x)) == x up to alpha.
std::string to_string(const ExprP &e);
std::string to_string(const ProcP &p);
std::string to_string(const Program &p);

}  // namespace actorlab
