// json_io.h -- JSON serialization for configurations, traces, statistics
// SPDX-License-Identifier: MIT
#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "cm.h"
#include "config.h"
#include "parser.h"
#include "semantics.h"

namespace actorlab {

// Configuration schema:
//   {"flavor": "concrete" | "decorated" | "abstract",
//    "actors": [{"name": "C#0", "process": <surface text>,
//                "fields": [<value>...],
//                "queue": [{"method": "m", "args": [<value>...],
//                           "sigma": [0,1]?, "target": "C#1"?}],
//                "sigma": [0]?}...],
//    "allocator": {"vars": n, "classes": {"C": k, ...}}?}
// Values are printed as "x", "$3", or "C#5".  A missing allocator is
// reconstructed from the names in use.
std::string config_to_json(const Config &c, int indent = -1);

struct ConfigParseResult {
  std::optional<Config> config;
  std::vector<Diagnostic> diagnostics;
};
ConfigParseResult config_from_json(std::string_view text);

// 64-bit FNV-1a over the literal serialization, 16 hex digits.
std::string config_digest(const Config &c);

// One line per step: {"step": n, "rule": tag, "actor": "C#k",
// "config-digest": hash}, plus "label" under the decorated flavors and
// the full "config" on request.
std::string trace_line_json(const RunStep &step, const Config &after,
                            bool full);

std::string explore_stats_json(const ExploreStats &st);

// {"steps": [[pc, v1, v2]...], "halted": bool}; a lost register is -1.
std::string cm_trace_json(const CmRun &run);

}  // namespace actorlab
