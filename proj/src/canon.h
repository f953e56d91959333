// canon.h -- canonical forms deciding the renaming equivalences
// SPDX-License-Identifier: MIT
#pragma once

#include <string>
#include <vector>

#include "ast.h"
#include "config.h"

namespace actorlab {

// Which names a consistent renaming may change.
enum class EquivMode : uint8_t {
  Concrete,  // variables (main-frees rigid); actor names rigid
  Abstract,  // variables (main-frees rigid); actor names within their class
  Query,     // variables and actor names freely, in one shared pool
};

// Canonical strings: two terms are related by the mode's equivalence iff
// their canonical strings are equal.  Bound variables are numbered by
// scope depth, renameable free names by first occurrence.
//
// Passing main_free == nullptr switches to the standalone rigidity rule:
// a variable is rigid unless it is a run-time fresh name ("$k").  On
// reachable configurations the free spellings are exactly the main frees
// plus fresh names, so both rules agree there.
std::string canonical_process(const ProcP &p, EquivMode mode,
                              const std::vector<Value> *main_free);
std::string canonical_message(const Message &m, EquivMode mode,
                              const std::vector<Value> *main_free);

bool proc_equiv(const ProcP &a, const ProcP &b, EquivMode mode,
                const std::vector<Value> &main_free);
// Abstract message equivalence additionally requires identical
// decorations and class-equal intended targets.
bool msg_equiv(const Message &a, const Message &b, EquivMode mode,
               const std::vector<Value> &main_free);

// Configuration identity under the mode's renaming equivalence: actors
// visited in name order (listing order is immaterial — configurations
// are parallel compositions), one shared renaming across the whole
// configuration, decorations literal.  The allocator is ignored: it is
// determined by the actors listed, up to variable freshness, which the
// renaming absorbs.  Equal keys imply mutual domination.
std::string config_key(const Config &c, const Program &p, EquivMode mode);

// State identity for exploration: config_key under the concrete renaming
// (actor names and main-frees literal).
std::string state_key(const Config &c, const Program &p);

}  // namespace actorlab
