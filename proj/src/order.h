// order.h -- well-quasi-orders on queues and configurations
// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <vector>

#include "canon.h"
#include "config.h"

namespace actorlab {

// Higman subword embedding of q into r modulo message equivalence,
// computed by a greedy earliest-match scan (complete for any
// compatibility relation by the usual exchange argument).
bool queue_embeds(const std::vector<Message> &q, const std::vector<Message> &r,
                  EquivMode mode, const std::vector<Value> &main_free);

// Configuration domination.
//  - Concrete: both sides list the same actors; componentwise literal
//    fields, equivalent processes, embedded queues.
//  - Abstract: an order-respecting per-class injection of a's actors into
//    b's (actors ordered by class, then index); matched pairs need
//    equivalent processes and embedded queues; b may list extra actors.
// The allocator and process decorations never participate.
// Mode must be Concrete or Abstract.
bool config_leq(const Config &a, const Config &b, EquivMode mode,
                const Program &p);

// Standalone variant for configurations without their program: variables
// spelled "$k" are renameable, all others rigid (the two rules agree on
// reachable configurations).
bool config_leq(const Config &a, const Config &b, EquivMode mode);

// Counting helpers for the finiteness bound on renaming classes: the
// number of equivalence classes of κ-value tuples over an ℓ-name pool.
uint64_t bell_number(unsigned n);
uint64_t renaming_bound(unsigned kappa, unsigned ell);

}  // namespace actorlab
