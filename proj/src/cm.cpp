// cm.cpp -- counter machine parsing and operational semantics
// SPDX-License-Identifier: MIT
#include "cm.h"

#include <charconv>
#include <random>

namespace actorlab {

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::optional<int> parse_int(std::string_view tok) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) return std::nullopt;
  return v;
}

}  // namespace

CmParseResult parse_cm(std::string_view text) {
  CmParseResult result;
  CounterMachine m;
  auto fail = [&](int line, std::string msg) {
    result.diagnostics.push_back(Diagnostic{line, 1, std::move(msg)});
  };

  int lineno = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++lineno;
    if (size_t h = line.find('#'); h != std::string_view::npos)
      line = line.substr(0, h);
    std::vector<std::string_view> toks = tokenize(line);
    if (toks.empty()) continue;

    // `k:` may be glued to or separated from the mnemonic.
    std::string_view head = toks[0];
    if (head.empty() || head.back() != ':') {
      fail(lineno, "expected 'k:' instruction label");
      continue;
    }
    std::optional<int> k = parse_int(head.substr(0, head.size() - 1));
    if (!k || *k != static_cast<int>(m.instrs.size()) + 1) {
      fail(lineno, "instruction labels must be 1, 2, ... in order");
      continue;
    }
    if (toks.size() < 2) {
      fail(lineno, "missing instruction");
      continue;
    }
    std::string_view op = toks[1];
    CmInstr instr;
    if (op == "INC") {
      instr.kind = CmInstr::Kind::Inc;
      std::optional<int> r = toks.size() == 3 ? parse_int(toks[2]) : std::nullopt;
      if (!r || (*r != 1 && *r != 2)) {
        fail(lineno, "INC needs a register 1 or 2");
        continue;
      }
      instr.reg = *r;
    } else if (op == "DECJ") {
      instr.kind = CmInstr::Kind::DecJump;
      std::optional<int> r = toks.size() == 4 ? parse_int(toks[2]) : std::nullopt;
      std::optional<int> l = toks.size() == 4 ? parse_int(toks[3]) : std::nullopt;
      if (!r || (*r != 1 && *r != 2) || !l || *l < 0) {
        fail(lineno, "DECJ needs a register 1 or 2 and a jump label");
        continue;
      }
      instr.reg = *r;
      instr.target = *l;
    } else if (op == "HALT") {
      if (toks.size() != 2) {
        fail(lineno, "HALT takes no operands");
        continue;
      }
      instr.kind = CmInstr::Kind::Halt;
    } else {
      fail(lineno, "unknown instruction '" + std::string(op) + "'");
      continue;
    }
    m.instrs.push_back(instr);
  }

  const int n = static_cast<int>(m.instrs.size());
  if (n == 0) fail(lineno, "empty machine");
  for (int i = 1; i <= n; ++i) {
    const CmInstr &in = m.instrs[static_cast<size_t>(i - 1)];
    if (in.kind == CmInstr::Kind::DecJump && in.target > n)
      fail(i, "jump target " + std::to_string(in.target) + " out of range");
  }
  if (result.diagnostics.empty()) result.machine = std::move(m);
  return result;
}

std::string to_string(const CounterMachine &m) {
  std::string out;
  for (size_t i = 0; i < m.instrs.size(); ++i) {
    const CmInstr &in = m.instrs[i];
    out += std::to_string(i + 1);
    out += ": ";
    switch (in.kind) {
      case CmInstr::Kind::Inc:
        out += "INC ";
        out += std::to_string(in.reg);
        break;
      case CmInstr::Kind::DecJump:
        out += "DECJ ";
        out += std::to_string(in.reg);
        out += ' ';
        out += std::to_string(in.target);
        break;
      case CmInstr::Kind::Halt:
        out += "HALT";
        break;
    }
    out += '\n';
  }
  return out;
}

std::vector<CmState> cm_successors(const CounterMachine &m, const CmState &s) {
  std::vector<CmState> out;
  if (s.pc < 1 || s.pc > static_cast<int>(m.instrs.size())) return out;
  const CmInstr &in = m.instrs[static_cast<size_t>(s.pc - 1)];

  if (in.kind != CmInstr::Kind::Halt) {
    const int64_t v = in.reg == 1 ? s.v1 : s.v2;
    CmState t = s;
    int64_t *tv = in.reg == 1 ? &t.v1 : &t.v2;
    if (v == kCmBottom) {
      t.pc = 0;  // touched a lost register: implicit Halt
    } else if (in.kind == CmInstr::Kind::Inc) {
      *tv = v + 1;
      t.pc = s.pc + 1;
    } else if (v == 0) {
      t.pc = in.target;
    } else {
      *tv = v - 1;
      t.pc = s.pc + 1;
    }
    out.push_back(t);
  }

  if (m.faulty) {
    if (s.v1 != kCmBottom)
      out.push_back(CmState{s.pc, kCmBottom, s.v2});
    if (s.v2 != kCmBottom)
      out.push_back(CmState{s.pc, s.v1, kCmBottom});
    if (s.v1 != kCmBottom && s.v2 != kCmBottom)
      out.push_back(CmState{s.pc, kCmBottom, kCmBottom});
  }
  return out;
}

CmRun cm_run(const CounterMachine &m, uint64_t seed, unsigned budget) {
  CmRun run;
  std::mt19937_64 rng(seed);
  CmState cur;
  run.steps.push_back(cur);
  for (unsigned i = 0; i < budget; ++i) {
    std::vector<CmState> succs = cm_successors(m, cur);
    if (succs.empty()) {
      run.halted = true;
      return run;
    }
    size_t pick =
        succs.size() == 1
            ? 0
            : std::uniform_int_distribution<size_t>(0, succs.size() - 1)(rng);
    cur = succs[pick];
    run.steps.push_back(cur);
  }
  run.halted = cm_successors(m, cur).empty();
  return run;
}

}  // namespace actorlab
