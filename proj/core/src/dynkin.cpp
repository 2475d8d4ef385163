#include "signdec/dynkin.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace signdec {

std::string DynkinType::name() const {
  switch (family) {
    case DynkinFamily::A: return "A" + std::to_string(rank);
    case DynkinFamily::BC: return "BC" + std::to_string(rank);
    case DynkinFamily::D: return "D" + std::to_string(rank);
    case DynkinFamily::E6: return "E6";
    case DynkinFamily::E7: return "E7";
    case DynkinFamily::E8: return "E8";
    case DynkinFamily::F4: return "F4";
    case DynkinFamily::G2: return "G2";
    case DynkinFamily::NonDynkin: break;
  }
  return "non-Dynkin";
}

namespace {

using Adjacency = std::vector<std::vector<int>>;

Adjacency adjacency(const ValuedGraph& g) {
  Adjacency adj(static_cast<std::size_t>(g.n) + 1);
  for (const ValuedEdge& e : g.edges) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  return adj;
}

bool connected(const ValuedGraph& g, const Adjacency& adj) {
  std::vector<bool> seen(static_cast<std::size_t>(g.n) + 1, false);
  std::vector<int> stack{1};
  seen[1] = true;
  int visited = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++visited;
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        stack.push_back(w);
      }
    }
  }
  return visited == g.n;
}

int degree(const Adjacency& adj, int v) { return static_cast<int>(adj[static_cast<std::size_t>(v)].size()); }

// Vertices on the arm leaving `center` through `first`, excluding the center.
int arm_length(const Adjacency& adj, int center, int first) {
  int prev = center;
  int cur = first;
  int len = 1;
  while (degree(adj, cur) == 2) {
    const auto& nb = adj[static_cast<std::size_t>(cur)];
    int next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
    ++len;
  }
  return len;
}

DynkinType classify_simply_laced_tree(const ValuedGraph& g, const Adjacency& adj) {
  const DynkinType non{DynkinFamily::NonDynkin, g.n};
  std::vector<int> branch;
  for (int v = 1; v <= g.n; ++v) {
    const int d = degree(adj, v);
    if (d > 3) return non;
    if (d == 3) branch.push_back(v);
  }
  if (branch.empty()) return {DynkinFamily::A, g.n};
  if (branch.size() > 1) return non;

  const int center = branch.front();
  std::vector<int> arms;
  for (int w : adj[static_cast<std::size_t>(center)]) arms.push_back(arm_length(adj, center, w));
  std::sort(arms.begin(), arms.end());
  const int p = arms[0], q = arms[1], r = arms[2];
  if (p == 1 && q == 1) return {DynkinFamily::D, g.n};
  if (p == 1 && q == 2) {
    if (r == 2) return {DynkinFamily::E6, 6};
    if (r == 3) return {DynkinFamily::E7, 7};
    if (r == 4) return {DynkinFamily::E8, 8};
  }
  return non;
}

}  // namespace

DynkinType classify(const ValuedGraph& g) {
  if (g.n < 1) throw std::invalid_argument("classify: empty graph");
  const Adjacency adj = adjacency(g);
  if (!connected(g, adj)) throw std::invalid_argument("classify: graph is disconnected");

  const DynkinType non{DynkinFamily::NonDynkin, g.n};
  if (g.n == 1) return {DynkinFamily::A, 1};
  if (static_cast<int>(g.edges.size()) != g.n - 1) return non;  // connected, so a cycle exists

  std::vector<const ValuedEdge*> valued;
  for (const ValuedEdge& e : g.edges) {
    if (e.val_lo == 1 && e.val_hi == 1) continue;
    if (e.val_lo != 1 || e.val_hi > 3) return non;
    valued.push_back(&e);
  }
  if (valued.empty()) return classify_simply_laced_tree(g, adj);
  if (valued.size() > 1) return non;

  const ValuedEdge& e = *valued.front();
  if (e.val_hi == 3) return g.n == 2 ? DynkinType{DynkinFamily::G2, 2} : non;

  for (int v = 1; v <= g.n; ++v) {
    if (degree(adj, v) > 2) return non;
  }
  if (degree(adj, e.u) == 1 || degree(adj, e.v) == 1) return {DynkinFamily::BC, g.n};
  if (g.n == 4) return {DynkinFamily::F4, 4};
  return non;
}

BigCount catalan(unsigned n) { return binomial(2 * n, n) / (n + 1); }

BigCount d_series_count(unsigned n) {
  if (n < 2) throw std::invalid_argument("d_series_count: n must be >= 2");
  BigCount numerator = BigCount(3 * n - 4) * binomial(2 * n - 2, n - 2);
  const BigCount denominator = 2 * n - 2;
  if (numerator % denominator != 0) throw std::logic_error("D-series count is not integral");
  return numerator / denominator;
}

Count tilting_count(const DynkinType& t) {
  const auto n = static_cast<unsigned>(t.rank);
  switch (t.family) {
    case DynkinFamily::A: return catalan(n);
    case DynkinFamily::BC: return binomial(2 * n - 1, n - 1);
    case DynkinFamily::D: return d_series_count(n);
    case DynkinFamily::E6: return 418;
    case DynkinFamily::E7: return 2431;
    case DynkinFamily::E8: return 17342;
    case DynkinFamily::F4: return 66;
    case DynkinFamily::G2: return 5;
    case DynkinFamily::NonDynkin: break;
  }
  return Count::infinite();
}

Count tilting_count(const ValuedGraph& g) {
  std::vector<Arrow> arrows;
  for (const ValuedEdge& e : g.edges) arrows.push_back({e.u, e.v, {e.val_lo, e.val_hi}});
  Count total = 1;
  for (const Component& c : components(ValuedQuiver(g.n, std::move(arrows)))) {
    total *= tilting_count(classify(underlying_graph(c.quiver)));
    if (total.is_infinite()) break;
  }
  return total;
}

}  // namespace signdec
