// config.cpp -- run-time configurations and fresh-name allocation
// SPDX-License-Identifier: MIT
#include "config.h"

#include <algorithm>
#include <stdexcept>

#include "check.h"

namespace actorlab {

const char *to_string(Flavor f) {
  switch (f) {
    case Flavor::Concrete:
      return "concrete";
    case Flavor::Decorated:
      return "decorated";
    case Flavor::Abstract:
      return "abstract";
  }
  return "?";
}

const Actor *Config::find(const ActorName &a) const {
  for (const Actor &t : actors)
    if (t.name == a) return &t;
  return nullptr;
}

Actor *Config::find(const ActorName &a) {
  for (Actor &t : actors)
    if (t.name == a) return &t;
  return nullptr;
}

std::vector<size_t> Config::by_name() const {
  std::vector<size_t> order(actors.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return actor_less(actors[a].name, actors[b].name);
  });
  return order;
}

bool operator==(const Actor &a, const Actor &b) {
  return a.name == b.name && a.fields == b.fields && a.queue == b.queue &&
         a.sigma == b.sigma && structural_equal(a.proc, b.proc);
}

bool operator==(const Config &a, const Config &b) {
  if (a.flavor != b.flavor || !(a.alloc == b.alloc) ||
      a.actors.size() != b.actors.size())
    return false;
  std::vector<size_t> oa = a.by_name(), ob = b.by_name();
  for (size_t i = 0; i < oa.size(); ++i)
    if (!(a.actors[oa[i]] == b.actors[ob[i]])) return false;
  return true;
}

Config initial_configuration(const Program &p, Flavor flavor) {
  if (flavor != Flavor::Concrete && !classify(p).sl)
    throw std::invalid_argument(
        "decorated and abstract semantics require the stateless fragment");
  Config c;
  c.flavor = flavor;
  Actor root;
  root.name = root_actor();
  root.proc = p.main;
  if (flavor != Flavor::Concrete) root.sigma = {0};
  c.actors.push_back(std::move(root));
  c.alloc.cover(root_actor());
  return c;
}

std::string to_string(const std::vector<uint32_t> &sigma) {
  std::string out;
  for (size_t i = 0; i < sigma.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(sigma[i]);
  }
  return out;
}

}  // namespace actorlab
