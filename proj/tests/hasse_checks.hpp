#pragma once

// Structural checks on a glued Hasse quiver, shared by the unit and
// acceptance tests. Each returns an empty string on success, otherwise a
// description of the first violation.

#include <cstddef>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "signdec/glue.hpp"

namespace signdec::checks {

inline std::string regularity(const GluedHasse& h, int n) {
  std::vector<int> degree(h.nodes.size(), 0);
  for (const HasseArrow& a : h.arrows) {
    ++degree[a.from];
    ++degree[a.to];
  }
  for (std::size_t i = 0; i < degree.size(); ++i) {
    if (degree[i] != n) return "node " + std::to_string(i) + " has degree " + std::to_string(degree[i]);
  }
  return {};
}

inline std::string source_and_sink(const GluedHasse& h) {
  std::vector<int> in(h.nodes.size(), 0);
  std::vector<int> out(h.nodes.size(), 0);
  for (const HasseArrow& a : h.arrows) {
    ++out[a.from];
    ++in[a.to];
  }
  std::vector<std::size_t> sources;
  std::vector<std::size_t> sinks;
  for (std::size_t i = 0; i < h.nodes.size(); ++i) {
    if (in[i] == 0) sources.push_back(i);
    if (out[i] == 0) sinks.push_back(i);
  }
  if (sources.size() != 1) return std::to_string(sources.size()) + " sources";
  if (sinks.size() != 1) return std::to_string(sinks.size()) + " sinks";
  const int n = h.nodes[sources[0]].eps.size();
  if (h.nodes[sources[0]].eps != SignVector::all(n, 1)) return "source is not in the all +1 slice";
  if (h.nodes[sinks[0]].eps != SignVector::all(n, -1)) return "sink is not in the all -1 slice";
  return {};
}

inline std::string distinct_g(const GluedHasse& h) {
  std::set<IntVector> seen;
  for (const StauNode& node : h.nodes) {
    if (!seen.insert(node.g).second) return "repeated g-vector";
  }
  return {};
}

inline std::string sign_law(const GluedHasse& h) {
  for (std::size_t k = 0; k < h.nodes.size(); ++k) {
    const StauNode& node = h.nodes[k];
    for (int i = 1; i <= node.eps.size(); ++i) {
      if (node.g[static_cast<std::size_t>(i - 1)] * node.eps[i] <= 0) {
        return "node " + std::to_string(k) + " breaks the sign law at " + std::to_string(i);
      }
    }
  }
  return {};
}

inline std::string acyclic(const GluedHasse& h) {
  std::vector<int> in(h.nodes.size(), 0);
  std::vector<std::vector<std::size_t>> adj(h.nodes.size());
  for (const HasseArrow& a : h.arrows) {
    adj[a.from].push_back(a.to);
    ++in[a.to];
  }
  std::queue<std::size_t> ready;
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (in[i] == 0) ready.push(i);
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    const std::size_t u = ready.front();
    ready.pop();
    ++removed;
    for (std::size_t w : adj[u]) {
      if (--in[w] == 0) ready.push(w);
    }
  }
  return removed == h.nodes.size() ? std::string{} : "directed cycle";
}

inline std::string all(const GluedHasse& h, int n) {
  for (const std::string& r : {regularity(h, n), source_and_sink(h), distinct_g(h), sign_law(h), acyclic(h)}) {
    if (!r.empty()) return r;
  }
  return {};
}

}  // namespace signdec::checks
