// predbasis.h -- finite predecessor bases for backward reachability
// SPDX-License-Identifier: MIT
#pragma once

#include <vector>

#include "canon.h"
#include "config.h"

namespace actorlab {

// A body or main-process suffix prepared for matching: parameters, free
// variables, and peeled let-binders are replaced by numbered hole
// variables (spelled "?k", which the surface lexer cannot produce).
// cls == kNoSym marks suffixes of the main process.
struct SuffixPattern {
  Sym cls = kNoSym;
  ProcP pattern;
};

std::vector<SuffixPattern> suffix_patterns(const Program &p);

bool is_hole_var(Sym v);

// Finite basis of the predecessors of the upward closure of `s`: every
// element takes one verified step into ^s, and every reachable
// configuration one step away from ^s dominates some element.
// Candidates instantiate method-body suffixes (main suffixes for the
// root) with argument tuples over the actor names of `s`, the main-free
// variables, and canonical fresh names; Abstract mode also extends `s`
// with one extra acting or receiving actor per insertion point.  Input
// and output are decoration-erased; null actor processes in `s` act as
// wildcards (any process).  Mode must match the flavor of `s`.
std::vector<Config> pred_basis(const Config &s, const Program &p,
                               EquivMode mode);

}  // namespace actorlab
