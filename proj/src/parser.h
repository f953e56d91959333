// parser.h -- lexer and recursive-descent parser for the surface syntax
// SPDX-License-Identifier: MIT
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ast.h"

namespace actorlab {

struct Diagnostic {
  int line = 0;
  int col = 0;
  std::string message;
};

std::string to_string(const Diagnostic &d);

struct ParseResult {
  std::optional<Program> program;  // set iff diagnostics is empty
  std::vector<Diagnostic> diagnostics;
  bool syntax_error = false;  // true: lexical/syntax; false: well-formedness
};

// Parse and well-formedness-check a whole program.  Static mode: actor
// literals ("C#k") and run-time variables ("$k") are rejected.
ParseResult parse_program(std::string_view text);

// Parse a single process term.  runtime = true admits actor literals and
// run-time variables; used for configurations and reachability queries.
struct ProcResult {
  ProcP proc;  // null iff diagnostics is nonempty
  std::vector<Diagnostic> diagnostics;
};
ProcResult parse_process_text(std::string_view text, bool runtime);

// Parse a single value ("x", "$3", "C#5").
std::optional<Value> parse_value_text(std::string_view text);

}  // namespace actorlab
