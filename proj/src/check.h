// check.h -- program well-formedness and fragment classification
// SPDX-License-Identifier: MIT
#pragma once

#include <vector>

#include "ast.h"

namespace actorlab {

struct Diagnostic;

// The static conditions: unambiguous definitions, `new` arities match
// field tuples, fields used within their declaring class only, `this`
// confined to method bodies, the root class name reserved.
std::vector<Diagnostic> check_well_formed(const Program &p);

struct FragmentInfo {
  bool ba = false;  // bounded actors: `new` only in main
  bool ro = false;  // read-only: no field updates
  bool sl = false;  // stateless: no fields at all (implies ro)
};

FragmentInfo classify(const Program &p);

// Decision procedures run on the stateless fragment (abstract semantics)
// or on the read-only bounded-actors fragment (concrete semantics).
enum class DeciderKind { Stateless, ReadOnlyBounded, Inapplicable };
DeciderKind decider_for(const FragmentInfo &f);

}  // namespace actorlab
