// json_io.cpp -- JSON serialization for configurations and traces
// SPDX-License-Identifier: MIT
#include "json_io.h"

#include <algorithm>
#include <cstdio>

#include <json.hpp>

namespace actorlab {

namespace {

using Json = nlohmann::ordered_json;

Json value_array(const std::vector<Value> &vs) {
  Json arr = Json::array();
  for (const Value &v : vs) arr.push_back(to_string(v));
  return arr;
}

Json message_json(const Message &m) {
  Json jm;
  jm["method"] = sym_text(m.method);
  jm["args"] = value_array(m.args);
  if (!m.sigma.empty()) jm["sigma"] = m.sigma;
  if (m.has_target) jm["target"] = to_string(m.target);
  return jm;
}

}  // namespace

std::string config_to_json(const Config &c, int indent) {
  Json j;
  j["flavor"] = to_string(c.flavor);
  Json actors = Json::array();
  for (const Actor &a : c.actors) {
    Json ja;
    ja["name"] = to_string(a.name);
    ja["process"] = to_string(a.proc);
    ja["fields"] = value_array(a.fields);
    Json queue = Json::array();
    for (const Message &m : a.queue) queue.push_back(message_json(m));
    ja["queue"] = std::move(queue);
    if (!a.sigma.empty()) ja["sigma"] = a.sigma;
    actors.push_back(std::move(ja));
  }
  j["actors"] = std::move(actors);
  Json alloc;
  alloc["vars"] = c.alloc.next_var;
  Json classes = Json::object();
  std::vector<std::pair<std::string, uint32_t>> sorted;
  for (const auto &[cls, n] : c.alloc.next_index)
    sorted.emplace_back(sym_text(cls), n);
  std::sort(sorted.begin(), sorted.end());
  for (const auto &[name, n] : sorted) classes[name] = n;
  alloc["classes"] = std::move(classes);
  j["allocator"] = std::move(alloc);
  return j.dump(indent);
}

namespace {

struct Loader {
  std::vector<Diagnostic> diags;

  void fail(const std::string &where, const std::string &msg) {
    diags.push_back(Diagnostic{0, 0, where + ": " + msg});
  }

  std::optional<std::vector<uint32_t>> sigma_of(const Json &j,
                                                const std::string &where) {
    if (!j.is_array()) {
      fail(where, "decoration must be an array of numbers");
      return std::nullopt;
    }
    std::vector<uint32_t> out;
    for (const Json &e : j) {
      if (!e.is_number_unsigned()) {
        fail(where, "decoration entries must be non-negative integers");
        return std::nullopt;
      }
      out.push_back(e.get<uint32_t>());
    }
    return out;
  }

  std::optional<Value> value_of(const Json &j, const std::string &where) {
    if (!j.is_string()) {
      fail(where, "values must be strings");
      return std::nullopt;
    }
    std::optional<Value> v = parse_value_text(j.get<std::string>());
    if (!v) fail(where, "not a value: '" + j.get<std::string>() + "'");
    return v;
  }

  std::optional<ActorName> actor_of(const Json &j, const std::string &where) {
    std::optional<Value> v = value_of(j, where);
    if (!v) return std::nullopt;
    if (!v->is_actor()) {
      fail(where, "expected an actor name like 'C#0'");
      return std::nullopt;
    }
    return v->actor;
  }
};

// Largest "$k" spelling among the free variables in sight, for
// reconstructing the variable counter.
void cover_vars(const std::vector<Value> &vs, uint32_t &next_var) {
  for (const Value &v : vs) {
    if (!v.is_var()) continue;
    const std::string text = sym_text(v.var);
    if (!is_fresh_var_spelling(text)) continue;
    const uint32_t k = static_cast<uint32_t>(std::stoul(text.substr(1)));
    if (k >= next_var) next_var = k + 1;
  }
}

}  // namespace

ConfigParseResult config_from_json(std::string_view text) {
  ConfigParseResult result;
  Loader ld;
  Json j = Json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) {
    ld.fail("config", "invalid JSON");
    result.diagnostics = std::move(ld.diags);
    return result;
  }
  if (!j.is_object() || !j.contains("actors") || !j["actors"].is_array()) {
    ld.fail("config", "expected an object with an \"actors\" array");
    result.diagnostics = std::move(ld.diags);
    return result;
  }

  Config c;
  if (j.contains("flavor")) {
    const std::string f = j["flavor"].is_string() ? j["flavor"].get<std::string>() : "";
    if (f == "concrete")
      c.flavor = Flavor::Concrete;
    else if (f == "decorated")
      c.flavor = Flavor::Decorated;
    else if (f == "abstract")
      c.flavor = Flavor::Abstract;
    else
      ld.fail("flavor", "must be concrete, decorated, or abstract");
  }
  const bool decorated = c.flavor != Flavor::Concrete;

  size_t idx = 0;
  for (const Json &ja : j["actors"]) {
    const std::string where = "actors[" + std::to_string(idx++) + "]";
    if (!ja.is_object()) {
      ld.fail(where, "actor entries must be objects");
      continue;
    }
    Actor a;
    if (std::optional<ActorName> name =
            ja.contains("name") ? ld.actor_of(ja["name"], where + ".name")
                                : std::nullopt) {
      a.name = *name;
    } else {
      if (!ja.contains("name")) ld.fail(where, "missing \"name\"");
      continue;
    }
    if (c.find(a.name)) ld.fail(where, "duplicate actor " + to_string(a.name));

    a.proc = nil_proc();
    if (ja.contains("process")) {
      if (!ja["process"].is_string()) {
        ld.fail(where + ".process", "must be a string");
      } else {
        ProcResult pr =
            parse_process_text(ja["process"].get<std::string>(), true);
        for (const Diagnostic &d : pr.diagnostics)
          ld.fail(where + ".process", d.message);
        if (pr.proc) a.proc = pr.proc;
      }
    }
    if (ja.contains("fields") && ja["fields"].is_array()) {
      size_t fi = 0;
      for (const Json &jf : ja["fields"]) {
        if (std::optional<Value> v = ld.value_of(
                jf, where + ".fields[" + std::to_string(fi++) + "]"))
          a.fields.push_back(*v);
      }
    }
    if (ja.contains("queue") && ja["queue"].is_array()) {
      size_t mi = 0;
      for (const Json &jm : ja["queue"]) {
        const std::string mwhere =
            where + ".queue[" + std::to_string(mi++) + "]";
        if (!jm.is_object() || !jm.contains("method") ||
            !jm["method"].is_string()) {
          ld.fail(mwhere, "messages need a \"method\" string");
          continue;
        }
        Message m;
        m.method = intern(jm["method"].get<std::string>());
        if (jm.contains("args") && jm["args"].is_array()) {
          size_t ai = 0;
          for (const Json &jv : jm["args"]) {
            if (std::optional<Value> v = ld.value_of(
                    jv, mwhere + ".args[" + std::to_string(ai++) + "]"))
              m.args.push_back(*v);
          }
        }
        if (jm.contains("sigma")) {
          if (!decorated)
            ld.fail(mwhere, "decorations require a decorated flavor");
          else if (auto s = ld.sigma_of(jm["sigma"], mwhere + ".sigma"))
            m.sigma = *s;
        }
        if (jm.contains("target")) {
          if (c.flavor != Flavor::Abstract)
            ld.fail(mwhere, "message targets require the abstract flavor");
          else if (std::optional<ActorName> t =
                       ld.actor_of(jm["target"], mwhere + ".target")) {
            m.has_target = true;
            m.target = *t;
            if (t->cls != a.name.cls)
              ld.fail(mwhere,
                      "intended target must share the holder's class");
          }
        } else if (c.flavor == Flavor::Abstract) {
          ld.fail(mwhere, "abstract messages need an intended target");
        }
        a.queue.push_back(std::move(m));
      }
    }
    if (ja.contains("sigma")) {
      if (!decorated)
        ld.fail(where, "decorations require a decorated flavor");
      else if (auto s = ld.sigma_of(ja["sigma"], where + ".sigma"))
        a.sigma = *s;
    }
    c.actors.push_back(std::move(a));
  }

  if (j.contains("allocator")) {
    const Json &al = j["allocator"];
    if (!al.is_object()) {
      ld.fail("allocator", "must be an object");
    } else {
      if (al.contains("vars") && al["vars"].is_number_unsigned())
        c.alloc.next_var = al["vars"].get<uint32_t>();
      if (al.contains("classes") && al["classes"].is_object())
        for (const auto &[cls, n] : al["classes"].items()) {
          if (n.is_number_unsigned())
            c.alloc.next_index[intern(cls)] = n.get<uint32_t>();
          else
            ld.fail("allocator.classes", "counters must be non-negative");
        }
    }
  }
  // Names in use always dominate the counters.
  for (const Actor &a : c.actors) {
    c.alloc.cover(a.name);
    cover_vars(a.fields, c.alloc.next_var);
    cover_vars(free_names(a.proc), c.alloc.next_var);
    for (const Message &m : a.queue) cover_vars(m.args, c.alloc.next_var);
  }

  result.diagnostics = std::move(ld.diags);
  if (result.diagnostics.empty()) result.config = std::move(c);
  return result;
}

std::string config_digest(const Config &c) {
  const std::string s = config_to_json(c);
  uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

std::string trace_line_json(const RunStep &step, const Config &after,
                            bool full) {
  Json j;
  j["step"] = step.step;
  j["rule"] = step.rule;
  j["actor"] = to_string(step.actor);
  if (!step.label.sigma.empty() || step.label.has_msg)
    j["label"] = to_string(step.label);
  j["config-digest"] = config_digest(after);
  if (full) j["config"] = Json::parse(config_to_json(after));
  return j.dump();
}

std::string explore_stats_json(const ExploreStats &st) {
  Json j;
  j["states"] = st.states;
  j["transitions"] = st.transitions;
  j["depth"] = st.depth;
  j["quiescent"] = st.quiescent;
  j["errors"] = st.errors;
  j["complete"] = st.complete;
  return j.dump();
}

std::string cm_trace_json(const CmRun &run) {
  Json j;
  Json steps = Json::array();
  for (const CmState &s : run.steps)
    steps.push_back(Json::array({s.pc, s.v1, s.v2}));
  j["steps"] = std::move(steps);
  j["halted"] = run.halted;
  return j.dump();
}

}  // namespace actorlab
