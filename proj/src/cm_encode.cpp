// cm_encode.cpp -- code generation for the two compilation targets
// SPDX-License-Identifier: MIT
#include "cm_encode.h"

#include <stdexcept>

namespace actorlab {

namespace {

std::string stm(int i) { return "stm" + std::to_string(i); }

// Instruction body for the field-writing target, used inside Ctrl.run's
// dispatch; pc/tt/ff are run's parameters.
std::string instr_ba(const CmInstr &in, int i) {
  switch (in.kind) {
    case CmInstr::Kind::Inc:
      return "@r" + std::to_string(in.reg) + "!inc(@" + stm(i + 1) +
             ", tt, ff)";
    case CmInstr::Kind::DecJump:
      return "@r" + std::to_string(in.reg) + "!decjump(@" + stm(i + 1) +
             ", @" + stm(in.target) + ", tt, ff)";
    case CmInstr::Kind::Halt:
      return "this!halt()";
  }
  return {};
}

// Instruction body for the read-only target; registers are stacks of R
// cells threaded through `next`, empty stack = the free name nil.
std::string instr_ro(const CmInstr &in, int i) {
  const std::string r = "r" + std::to_string(in.reg);
  const std::string other = in.reg == 1 ? "r2" : "r1";
  switch (in.kind) {
    case CmInstr::Kind::Inc: {
      std::string grown = "new R(" + r + ")";
      std::string a1 = in.reg == 1 ? grown : "r1";
      std::string a2 = in.reg == 2 ? grown : "r2";
      return "this!run(" + a1 + ", " + a2 + ", @" + stm(i + 1) + ")";
    }
    case CmInstr::Kind::DecJump:
      return "if " + r + " = @nil then this!run(r1, r2, @" + stm(in.target) +
             ") else " + r + "!dec" + std::to_string(in.reg) + "(this, " +
             other + ", @" + stm(i + 1) + ")";
    case CmInstr::Kind::Halt:
      return "0";
  }
  return {};
}

std::string dispatch(const CounterMachine &m,
                     std::string (*instr)(const CmInstr &, int)) {
  std::string out;
  const int n = static_cast<int>(m.instrs.size());
  for (int i = 1; i <= n; ++i)
    out += "if pc = @" + stm(i) + " then " +
           instr(m.instrs[static_cast<size_t>(i - 1)], i) + " else ";
  out += '0';
  return out;
}

std::string stm_fields(int n) {
  std::string out;
  for (int i = 1; i <= n; ++i) {
    if (i > 1) out += ", ";
    out += stm(i);
  }
  return out;
}

std::string stm_args(int n) {
  std::string out;
  for (int i = 1; i <= n; ++i) {
    if (i > 1) out += ", ";
    out += 'x' + std::to_string(i);
  }
  return out;
}

std::string generate_ba(const CounterMachine &m) {
  const int n = static_cast<int>(m.instrs.size());
  std::string src;
  src +=
      "class R(dec, ctr, loop, stop) {\n"
      "  def item(tt, ff) = if @stop = ff then "
      "(if @dec = ff then this!item(tt, ff) else @dec <- ff . 0)\n"
      "  def inc(pc, tt, ff) = if @stop = ff then "
      "@loop <- ff . this!item(tt, ff) . @ctr!run(pc, tt, ff)\n"
      "  def decjump(pc, pc2, tt, ff) = if @stop = ff then "
      "@loop <- ff . @dec <- tt . this!checkzero(pc, pc2, tt, ff)\n"
      "  def checkzero(pc, pc2, tt, ff) = if @stop = ff then "
      "@loop <- ff . (if @dec = tt then @ctr!run(pc2, tt, ff) . @dec <- ff . 0 "
      "else @ctr!run(pc, tt, ff))\n"
      "  def init(tt, ff, c) = @dec <- ff . @ctr <- c . @loop <- ff . "
      "@stop <- ff . this!bottom(tt, ff)\n"
      "  def bottom(tt, ff) = if @loop = ff then "
      "@loop <- tt . this!bottom(tt, ff) else @stop <- tt . 0\n"
      "}\n";
  src += "class Ctrl(" + stm_fields(n) + ", r1, r2) {\n";
  src += "  def run(pc, tt, ff) = " + dispatch(m, instr_ba) + "\n";
  src +=
      "  def init() = @r1!init(tt, ff, this) . @r2!init(tt, ff, this) . "
      "this!run(@" +
      stm(1) + ", tt, ff)\n";
  src += "  def halt() = 0\n}\n";
  src += "main { let x = new Ctrl(" + stm_args(n) +
         ", new R(_, _, _, _), new R(_, _, _, _)) in x!init() }\n";
  return src;
}

std::string generate_ro(const CounterMachine &m) {
  const int n = static_cast<int>(m.instrs.size());
  std::string src;
  src +=
      "class R(next) {\n"
      "  def dec1(ctrl, r, stm) = ctrl!run(@next, r, stm)\n"
      "  def dec2(ctrl, r, stm) = ctrl!run(r, @next, stm)\n"
      "}\n";
  src += "class Ctrl(" + stm_fields(n) + ", nil) {\n";
  src += "  def run(r1, r2, pc) = " + dispatch(m, instr_ro) + "\n}\n";
  src += "main { let x = new Ctrl(" + stm_args(n) +
         ", nil) in x!run(nil, nil, x1) }\n";
  return src;
}

}  // namespace

CmCompileResult compile_cm(const CounterMachine &m, CmTarget target) {
  CmCompileResult result;
  const int n = static_cast<int>(m.instrs.size());
  for (int i = 1; i <= n; ++i) {
    const CmInstr &in = m.instrs[static_cast<size_t>(i - 1)];
    if (in.kind != CmInstr::Kind::Halt && i + 1 > n)
      result.diagnostics.push_back(
          Diagnostic{i, 1, "instruction " + std::to_string(i) +
                               " falls through past the program"});
    if (in.kind == CmInstr::Kind::DecJump && (in.target < 1 || in.target > n))
      result.diagnostics.push_back(
          Diagnostic{i, 1, "jump target " + std::to_string(in.target) +
                               " outside 1.." + std::to_string(n)});
  }
  if (!result.diagnostics.empty()) return result;

  std::string src =
      target == CmTarget::Ba ? generate_ba(m) : generate_ro(m);
  ParseResult parsed = parse_program(src);
  if (!parsed.program)
    throw std::logic_error("internal: generated program failed to parse: " +
                           (parsed.diagnostics.empty()
                                ? std::string("?")
                                : to_string(parsed.diagnostics.front())));
  result.compiled = CompiledCm{std::move(*parsed.program), std::move(src)};
  return result;
}

Config encode_cm_state_ba(const CompiledCm &cc, const CounterMachine &m,
                          const CmState &s) {
  const Program &p = cc.program;
  const int n = static_cast<int>(m.instrs.size());
  const ClassDef *ctrl_cls = p.find_class(intern("Ctrl"));
  const ClassDef *reg_cls = p.find_class(intern("R"));
  if (!ctrl_cls || !reg_cls || static_cast<int>(p.main_free.size()) != n + 1)
    throw std::invalid_argument("not a Ba-compiled machine program");

  const ActorName ctrl{intern("Ctrl"), 0};
  const ActorName reg1{intern("R"), 0};
  const ActorName reg2{intern("R"), 1};
  const Value ctrl_val = Value::of_actor(ctrl);

  Config c;
  c.flavor = Flavor::Concrete;
  c.alloc.cover(root_actor());
  c.alloc.cover(ctrl);
  c.alloc.cover(reg1);
  c.alloc.cover(reg2);
  const Value tt = Value::of_var(c.alloc.fresh_var());
  const Value ff = Value::of_var(c.alloc.fresh_var());

  Actor root;
  root.name = root_actor();
  root.proc = nil_proc();
  c.actors.push_back(std::move(root));

  auto reg_actor = [&](ActorName name, int64_t v) {
    Actor a;
    a.name = name;
    a.proc = nil_proc();
    if (v == kCmBottom) {
      // purged register: dec=ff, ctr, loop=tt, stop=tt; empty queue
      a.fields = {ff, ctrl_val, tt, tt};
    } else {
      a.fields = {ff, ctrl_val, ff, ff};
      Message sentinel;
      sentinel.method = intern("bottom");
      sentinel.args = {tt, ff};
      a.queue.push_back(std::move(sentinel));
      for (int64_t k = 0; k < v; ++k) {
        Message item;
        item.method = intern("item");
        item.args = {tt, ff};
        a.queue.push_back(std::move(item));
      }
    }
    return a;
  };
  c.actors.push_back(reg_actor(reg1, s.v1));
  c.actors.push_back(reg_actor(reg2, s.v2));

  Actor cactor;
  cactor.name = ctrl;
  cactor.fields = std::vector<Value>(p.main_free.begin(),
                                     p.main_free.begin() + n);
  cactor.fields.push_back(Value::of_actor(reg1));
  cactor.fields.push_back(Value::of_actor(reg2));
  if (s.pc == 0) {
    cactor.proc = nil_proc();
  } else {
    if (s.pc < 1 || s.pc > n)
      throw std::invalid_argument("machine state pc outside the program");
    const MethodDef *run = ctrl_cls->find_method(intern("run"));
    Subst sub{{intern("pc"), p.main_free[static_cast<size_t>(s.pc - 1)]},
              {intern("tt"), tt},
              {intern("ff"), ff}};
    ProcP body = substitute(run->body, sub, &ctrl_val);
    for (int i = 1; i < s.pc; ++i) body = body->p1;  // skip earlier guards
    if (body->kind != ProcKind::Match)
      throw std::logic_error("internal: unexpected dispatch shape");
    cactor.proc = body->p0;
  }
  c.actors.push_back(std::move(cactor));
  return c;
}

}  // namespace actorlab
