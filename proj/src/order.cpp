// order.cpp -- queue embedding, configuration domination, counting bounds
// SPDX-License-Identifier: MIT
#include "order.h"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace actorlab {

namespace {

bool embeds(const std::vector<Message> &q, const std::vector<Message> &r,
            EquivMode mode, const std::vector<Value> *mf) {
  if (q.size() > r.size()) return false;
  std::vector<std::string> rkeys;
  rkeys.reserve(r.size());
  for (const Message &m : r) rkeys.push_back(canonical_message(m, mode, mf));
  size_t j = 0;
  for (const Message &m : q) {
    const std::string key = canonical_message(m, mode, mf);
    while (j < rkeys.size() && rkeys[j] != key) ++j;
    if (j == rkeys.size()) return false;
    ++j;
  }
  return true;
}

// A null process is a wildcard component (reachability targets only): it
// is dominated by any process on the right.
bool proc_below(const ProcP &x, const ProcP &y, EquivMode mode,
                const std::vector<Value> *mf) {
  if (!x) return true;
  if (!y) return false;
  return canonical_process(x, mode, mf) == canonical_process(y, mode, mf);
}

bool concrete_leq(const Config &a, const Config &b,
                  const std::vector<Value> *mf) {
  if (a.actors.size() != b.actors.size()) return false;
  for (const Actor &x : a.actors) {
    const Actor *y = b.find(x.name);
    if (!y) return false;
    if (x.fields != y->fields) return false;
    if (!proc_below(x.proc, y->proc, EquivMode::Concrete, mf)) return false;
    if (!embeds(x.queue, y->queue, EquivMode::Concrete, mf)) return false;
  }
  return true;
}

// Actors of one class, in index order.
std::map<Sym, std::vector<const Actor *>, bool (*)(Sym, Sym)> by_class(
    const Config &c) {
  std::map<Sym, std::vector<const Actor *>, bool (*)(Sym, Sym)> out(sym_less);
  for (const Actor &a : c.actors) out[a.name.cls].push_back(&a);
  for (auto &[cls, list] : out)
    std::sort(list.begin(), list.end(), [](const Actor *x, const Actor *y) {
      return x->name.index < y->name.index;
    });
  return out;
}

// Augmenting-path step of the bipartite matching: place x_i on some
// compatible y, displacing earlier placements when they can move.
bool augment(const std::vector<std::vector<char>> &ok, size_t i,
             std::vector<int> &owner, std::vector<char> &tried) {
  for (size_t j = 0; j < ok[i].size(); ++j) {
    if (!ok[i][j] || tried[j]) continue;
    tried[j] = 1;
    if (owner[j] < 0 ||
        augment(ok, static_cast<size_t>(owner[j]), owner, tried)) {
      owner[j] = static_cast<int>(i);
      return true;
    }
  }
  return false;
}

bool abstract_leq(const Config &a, const Config &b,
                  const std::vector<Value> *mf) {
  auto la = by_class(a);
  auto lb = by_class(b);
  for (const auto &[cls, xs] : la) {
    auto it = lb.find(cls);
    if (it == lb.end()) return false;
    const std::vector<const Actor *> &ys = it->second;
    if (xs.size() > ys.size()) return false;
    // Same-class actors are unordered (the composition is commutative),
    // so any injection will do: take a maximum bipartite matching.
    std::vector<std::vector<char>> ok(xs.size(),
                                      std::vector<char>(ys.size(), 0));
    for (size_t i = 0; i < xs.size(); ++i)
      for (size_t j = 0; j < ys.size(); ++j)
        ok[i][j] =
            xs[i]->fields == ys[j]->fields &&
            proc_below(xs[i]->proc, ys[j]->proc, EquivMode::Abstract, mf) &&
            embeds(xs[i]->queue, ys[j]->queue, EquivMode::Abstract, mf);
    std::vector<int> owner(ys.size(), -1);
    for (size_t i = 0; i < xs.size(); ++i) {
      std::vector<char> tried(ys.size(), 0);
      if (!augment(ok, i, owner, tried)) return false;
    }
  }
  return true;
}

bool leq(const Config &a, const Config &b, EquivMode mode,
         const std::vector<Value> *mf) {
  switch (mode) {
    case EquivMode::Concrete:
      return concrete_leq(a, b, mf);
    case EquivMode::Abstract:
      return abstract_leq(a, b, mf);
    case EquivMode::Query:
      break;
  }
  throw std::invalid_argument("config_leq: mode must be concrete or abstract");
}

}  // namespace

bool queue_embeds(const std::vector<Message> &q, const std::vector<Message> &r,
                  EquivMode mode, const std::vector<Value> &main_free) {
  return embeds(q, r, mode, &main_free);
}

bool config_leq(const Config &a, const Config &b, EquivMode mode,
                const Program &p) {
  return leq(a, b, mode, &p.main_free);
}

bool config_leq(const Config &a, const Config &b, EquivMode mode) {
  return leq(a, b, mode, nullptr);
}

uint64_t bell_number(unsigned n) {
  // Bell triangle.
  std::vector<uint64_t> row{1};
  for (unsigned i = 1; i <= n; ++i) {
    std::vector<uint64_t> next;
    next.reserve(i + 1);
    next.push_back(row.back());
    for (uint64_t v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

namespace {

uint64_t factorial(unsigned n) {
  uint64_t f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

uint64_t renaming_bound(unsigned kappa, unsigned ell) {
  if (kappa >= ell)
    return (binomial(kappa, ell) * factorial(ell) + 1) * bell_number(kappa);
  return (factorial(ell) / factorial(kappa) + 1) * bell_number(kappa);
}

}  // namespace actorlab
