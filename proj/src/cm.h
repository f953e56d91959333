// cm.h -- two-counter machines, exact and lossy (fault-prone) semantics
// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "parser.h"

namespace actorlab {

struct CmInstr {
  enum class Kind : uint8_t { Inc, DecJump, Halt };
  Kind kind = Kind::Halt;
  int reg = 0;     // 1 or 2
  int target = 0;  // DecJump: jump destination when the register is zero
};

struct CounterMachine {
  std::vector<CmInstr> instrs;  // 1-indexed via instrs[i-1]
  bool faulty = false;          // registers may spontaneously lose their value
};

// A register holding kCmBottom has lost its value.  pc 0 (or past the
// program) halts; in faulty mode, pc 0 is the implicit Halt reached by
// touching a lost register.
constexpr int64_t kCmBottom = -1;

struct CmState {
  int pc = 1;
  int64_t v1 = 0, v2 = 0;
  bool operator==(const CmState &) const = default;
};

// Text format: one instruction per line, `k: INC r`, `k: DECJ r l`,
// `k: HALT`, with k the 1-based position; blank and `#` lines skipped.
struct CmParseResult {
  std::optional<CounterMachine> machine;
  std::vector<Diagnostic> diagnostics;
};
CmParseResult parse_cm(std::string_view text);
std::string to_string(const CounterMachine &m);

// Successor states: the instruction step plus, in faulty mode, the
// spontaneous faults (each live register, and both at once).
std::vector<CmState> cm_successors(const CounterMachine &m, const CmState &s);

struct CmRun {
  std::vector<CmState> steps;  // visited states, initial (1,0,0) first
  bool halted = false;         // reached a state with no successors
};
// Random walk from (1,0,0); exact machines are deterministic, so the
// seed only matters in faulty mode.
CmRun cm_run(const CounterMachine &m, uint64_t seed, unsigned budget);

}  // namespace actorlab
