// check.cpp -- program well-formedness and fragment classification
// SPDX-License-Identifier: MIT
#include "check.h"

#include <unordered_set>

#include "parser.h"

namespace actorlab {

namespace {

struct Checker {
  const Program &prog;
  std::vector<Diagnostic> diags;

  void error(std::string message) {
    diags.push_back(Diagnostic{0, 0, std::move(message)});
  }

  void check_expr(const ExprP &e, const ClassDef *cls, bool in_method) {
    if (!e) return;
    switch (e->kind) {
      case ExprKind::Var:
        break;
      case ExprKind::Field:
        if (!cls) {
          error("field '@" + sym_text(e->name) +
                "' read in main (the root actor has no fields)");
        } else if (cls->field_index(e->name) < 0) {
          error("field '@" + sym_text(e->name) + "' is not a field of class " +
                sym_text(cls->name));
        }
        break;
      case ExprKind::This:
        if (!in_method) error("'this' may only appear inside method bodies");
        break;
      case ExprKind::New: {
        const ClassDef *target = prog.find_class(e->name);
        if (!target) {
          error("unknown class '" + sym_text(e->name) + "'");
        } else if (target->fields.size() != e->args.size()) {
          error("new " + sym_text(e->name) + ": expected " +
                std::to_string(target->fields.size()) + " argument(s), got " +
                std::to_string(e->args.size()));
        }
        for (const ExprP &a : e->args) check_expr(a, cls, in_method);
        break;
      }
      case ExprKind::Actor:
        error("actor literals cannot appear in programs");
        break;
    }
  }

  void check_proc(const ProcP &p, const ClassDef *cls, bool in_method) {
    if (!p) return;
    switch (p->kind) {
      case ProcKind::Nil:
        return;
      case ProcKind::Update:
        if (!cls) {
          error("field '@" + sym_text(p->name) +
                "' updated in main (the root actor has no fields)");
        } else if (cls->field_index(p->name) < 0) {
          error("field '@" + sym_text(p->name) + "' is not a field of class " +
                sym_text(cls->name));
        }
        check_expr(p->e0, cls, in_method);
        check_proc(p->p0, cls, in_method);
        return;
      case ProcKind::Let:
        check_expr(p->e0, cls, in_method);
        check_proc(p->p0, cls, in_method);
        return;
      case ProcKind::Invoke:
        check_expr(p->e0, cls, in_method);
        for (const ExprP &a : p->args) check_expr(a, cls, in_method);
        check_proc(p->p0, cls, in_method);
        return;
      case ProcKind::Match:
        check_expr(p->e0, cls, in_method);
        check_expr(p->e1, cls, in_method);
        check_proc(p->p0, cls, in_method);
        check_proc(p->p1, cls, in_method);
        return;
      case ProcKind::Plus:
        check_proc(p->p0, cls, in_method);
        check_proc(p->p1, cls, in_method);
        return;
    }
  }

  void run() {
    std::unordered_set<Sym> class_names;
    for (const ClassDef &c : prog.classes) {
      if (c.name == root_class())
        error("class name 'Root' is reserved for the root actor");
      if (!class_names.insert(c.name).second)
        error("duplicate class '" + sym_text(c.name) + "'");
      std::unordered_set<Sym> fields;
      for (Sym f : c.fields)
        if (!fields.insert(f).second)
          error("duplicate field '" + sym_text(f) + "' in class " +
                sym_text(c.name));
      std::unordered_set<Sym> methods;
      for (const MethodDef &m : c.methods) {
        if (!methods.insert(m.name).second)
          error("duplicate method '" + sym_text(m.name) + "' in class " +
                sym_text(c.name));
        std::unordered_set<Sym> params;
        for (Sym x : m.params)
          if (!params.insert(x).second)
            error("duplicate parameter '" + sym_text(x) + "' in " +
                  sym_text(c.name) + "." + sym_text(m.name));
        check_proc(m.body, &c, /*in_method=*/true);
      }
    }
    check_proc(prog.main, nullptr, /*in_method=*/false);
  }
};

}  // namespace

std::vector<Diagnostic> check_well_formed(const Program &p) {
  Checker checker{p, {}};
  checker.run();
  return std::move(checker.diags);
}

namespace {

bool expr_has_new(const ExprP &e) {
  if (!e) return false;
  if (e->kind == ExprKind::New) return true;
  for (const ExprP &a : e->args)
    if (expr_has_new(a)) return true;
  return false;
}

// Does the process contain an Update node / a New expression anywhere?
void scan_proc(const ProcP &p, bool &has_update, bool &has_new) {
  if (!p) return;
  if (p->kind == ProcKind::Update) has_update = true;
  for (const ExprP &e : {p->e0, p->e1})
    if (expr_has_new(e)) has_new = true;
  for (const ExprP &e : p->args)
    if (expr_has_new(e)) has_new = true;
  scan_proc(p->p0, has_update, has_new);
  scan_proc(p->p1, has_update, has_new);
}

}  // namespace

FragmentInfo classify(const Program &p) {
  FragmentInfo info;
  bool method_new = false, method_update = false, any_field = false;
  for (const ClassDef &c : p.classes) {
    if (!c.fields.empty()) any_field = true;
    for (const MethodDef &m : c.methods)
      scan_proc(m.body, method_update, method_new);
  }
  info.ba = !method_new;
  info.ro = !method_update;
  info.sl = !any_field;
  return info;
}

DeciderKind decider_for(const FragmentInfo &f) {
  // The stateless decider is checked first: a program can be both
  // stateless and read-only/bounded, and the stateless procedures cover
  // unbounded actor creation.
  if (f.sl) return DeciderKind::Stateless;
  if (f.ro && f.ba) return DeciderKind::ReadOnlyBounded;
  return DeciderKind::Inapplicable;
}

}  // namespace actorlab
