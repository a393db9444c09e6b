#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ftskit/projection.hh"

namespace oracle {

/// Independent recomputation of the states reachable after a trace: a plain
/// one-state-at-a-time walk over the projected transitions with a
/// (state, position) visited set, instead of the subset construction used by
/// the library. Tau edges keep the position; visible edges must match the
/// next trace action.
inline void naive_walk(const std::vector<ftskit::Transition>& edges, const std::string& state,
                       const ftskit::Trace& t, std::size_t i,
                       std::set<std::pair<std::string, std::size_t>>& visited,
                       std::set<std::string>& out) {
  if (!visited.insert({state, i}).second) return;
  if (i == t.size()) out.insert(state);
  for (const ftskit::Transition& e : edges) {
    if (e.src != state) continue;
    if (e.action.is_tau()) {
      naive_walk(edges, e.dst, t, i, visited, out);
    } else if (i < t.size() && e.action == t[i]) {
      naive_walk(edges, e.dst, t, i + 1, visited, out);
    }
  }
}

inline std::set<std::string> naive_after(const ftskit::FeatureSpec& spec,
                                         const ftskit::Trace& t) {
  std::set<std::pair<std::string, std::size_t>> visited;
  std::set<std::string> out;
  naive_walk(spec.transitions(), spec.initial(), t, 0, visited, out);
  return out;
}

}  // namespace oracle
