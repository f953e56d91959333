// cm_encode.h -- counter machines compiled into actor programs
// SPDX-License-Identifier: MIT
#pragma once

#include <optional>
#include <string>

#include "cm.h"
#include "config.h"

namespace actorlab {

enum class CmTarget : uint8_t {
  Ba,  // bounded actors, field-writing registers (faulty machines)
  Ro,  // read-only bodies, linked-list registers (exact machines)
};

struct CompiledCm {
  Program program;     // parsed and checked
  std::string source;  // surface text of the same program
};

// Compilation requires every Inc/DecJump at position i to fall through
// to an existing instruction i+1 and every jump target to lie in 1..n.
struct CmCompileResult {
  std::optional<CompiledCm> compiled;
  std::vector<Diagnostic> diagnostics;
};
CmCompileResult compile_cm(const CounterMachine &m, CmTarget target);

// Alignment configuration of machine state s inside the Ba-compiled
// program: the controller holds the dispatched instruction body, each
// live register cycles its sentinel plus one queued item per unit.
Config encode_cm_state_ba(const CompiledCm &cc, const CounterMachine &m,
                          const CmState &s);

}  // namespace actorlab
