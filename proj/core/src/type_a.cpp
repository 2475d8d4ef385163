#include "signdec/type_a.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "signdec/dynkin.hpp"
#include "signdec/errors.hpp"

namespace signdec {

namespace {

std::string vertex_list(std::span<const int> vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(vs[i]);
  }
  return out + "}";
}

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

// Rank over Q by Gaussian elimination with exact rationals.
int exact_rank(const std::vector<std::vector<std::int64_t>>& input) {
  using Rational = boost::multiprecision::cpp_rational;
  std::vector<std::vector<Rational>> rows;
  for (const auto& r : input) rows.emplace_back(r.begin(), r.end());
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const Rational factor = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= factor * rows[rank][k];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

bool in_support(const IntervalModule& m, int v) {
  return std::binary_search(m.support.begin(), m.support.end(), v);
}

}  // namespace

std::strong_ordering operator<=>(const IntervalModule& a, const IntervalModule& b) {
  if (a.support.empty() || b.support.empty()) return a.support <=> b.support;
  if (auto c = a.min_vertex() <=> b.min_vertex(); c != 0) return c;
  if (auto c = a.support.size() <=> b.support.size(); c != 0) return c;
  return a.support <=> b.support;
}

PathQuiver PathQuiver::from_quiver(const ValuedQuiver& q) {
  std::vector<int> all(static_cast<std::size_t>(q.size()));
  for (int v = 1; v <= q.size(); ++v) all[idx(v - 1)] = v;
  return from_quiver(q, all);
}

PathQuiver PathQuiver::from_quiver(const ValuedQuiver& q, std::span<const int> vertices) {
  PathQuiver p;
  p.ambient_n_ = q.size();
  p.vertices_.assign(vertices.begin(), vertices.end());
  if (!std::is_sorted(p.vertices_.begin(), p.vertices_.end()) ||
      std::adjacent_find(p.vertices_.begin(), p.vertices_.end()) != p.vertices_.end()) {
    throw std::invalid_argument("PathQuiver: vertex list must be sorted and distinct");
  }

  const ValuedQuiver sub = induced_subquiver(q, p.vertices_);
  for (const Arrow& a : sub.arrows()) {
    const int s = p.vertices_[idx(a.src - 1)];
    const int t = p.vertices_[idx(a.tgt - 1)];
    if (a.is_loop()) throw UnsupportedComponent("loop at vertex " + std::to_string(s));
    if (!a.val.simply_laced()) {
      throw UnsupportedComponent("valued arrow " + std::to_string(s) + "->" + std::to_string(t));
    }
    if (sub.has_arrow(a.tgt, a.src)) {
      throw UnsupportedComponent("2-cycle between " + std::to_string(s) + " and " + std::to_string(t));
    }
    p.edges_.emplace_back(s, t);
  }
  std::sort(p.edges_.begin(), p.edges_.end());

  for (const Component& c : components(sub)) {
    std::vector<int> global;
    for (int local : c.vertices) global.push_back(p.vertices_[idx(local - 1)]);
    const DynkinType type = classify(underlying_graph(c.quiver));
    if (!type.is_simply_laced_a()) {
      throw UnsupportedComponent("component " + vertex_list(global) + " has type " + type.name());
    }
    // Walk the path from its smallest endpoint.
    std::map<int, std::vector<int>> adj;
    for (int v : global) adj[v];
    for (const auto& [s, t] : p.edges_) {
      if (adj.count(s) && adj.count(t)) {
        adj[s].push_back(t);
        adj[t].push_back(s);
      }
    }
    int start = global.front();
    for (int v : global) {
      if (adj[v].size() <= 1) {
        start = v;
        break;
      }
    }
    std::vector<int> path{start};
    int prev = 0;
    int cur = start;
    while (true) {
      int next = 0;
      for (int w : adj[cur]) {
        if (w != prev) next = w;
      }
      if (next == 0) break;
      path.push_back(next);
      prev = cur;
      cur = next;
    }
    p.paths_.push_back(std::move(path));
  }
  return p;
}

PathQuiver PathQuiver::without_vertex(int v) const {
  if (!contains(v)) throw std::invalid_argument("without_vertex: vertex not present");
  std::vector<Arrow> arrows;
  for (const auto& [s, t] : edges_) arrows.push_back({s, t, {}});
  std::vector<int> rest;
  std::copy_if(vertices_.begin(), vertices_.end(), std::back_inserter(rest), [v](int w) { return w != v; });
  return from_quiver(ValuedQuiver(ambient_n_, std::move(arrows)), rest);
}

bool PathQuiver::contains(int v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }

void check_interval(const PathQuiver& p, const IntervalModule& m) {
  if (m.support.empty()) throw std::invalid_argument("interval module with empty support");
  for (const auto& path : p.paths()) {
    auto first = std::find(path.begin(), path.end(), m.min_vertex());
    if (first == path.end()) continue;
    // The support must be a contiguous run of this path containing min_vertex.
    auto lo = first;
    while (lo != path.begin() && in_support(m, *(lo - 1))) --lo;
    auto hi = first;
    while (hi != path.end() && in_support(m, *hi)) ++hi;
    if (static_cast<std::size_t>(hi - lo) == m.support.size()) return;
    break;
  }
  throw std::invalid_argument("support " + vertex_list(m.support) + " is not an interval of the quiver");
}

IntVector dimension_vector(const PathQuiver& p, const IntervalModule& m) {
  IntVector c(idx(p.ambient_size()), 0);
  for (int v : m.support) c[idx(v - 1)] = 1;
  return c;
}

IntVector dimension_vector(const PathQuiver& p, const TiltingModule& t) {
  IntVector c(idx(p.ambient_size()), 0);
  for (const IntervalModule& m : t.summands) {
    for (int v : m.support) c[idx(v - 1)] += 1;
  }
  return c;
}

std::vector<IntervalModule> indecomposables(const PathQuiver& p) {
  std::vector<IntervalModule> out;
  for (const auto& path : p.paths()) {
    for (std::size_t i = 0; i < path.size(); ++i) {
      for (std::size_t j = i; j < path.size(); ++j) {
        std::vector<int> support(path.begin() + static_cast<std::ptrdiff_t>(i),
                                 path.begin() + static_cast<std::ptrdiff_t>(j) + 1);
        std::sort(support.begin(), support.end());
        out.push_back({std::move(support)});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int hom_dim(const PathQuiver& p, const IntervalModule& m, const IntervalModule& n) {
  check_interval(p, m);
  check_interval(p, n);
  bool any = false;
  for (int v : m.support) any = any || in_support(n, v);
  if (!any) return 0;
  for (const auto& [s, t] : p.edges()) {
    const bool s_in = in_support(m, s) && in_support(n, s);
    const bool t_in = in_support(m, t) && in_support(n, t);
    // Image of M must be a quotient: predecessors inside M stay in.
    if (t_in && !s_in && in_support(m, s)) return 0;
    // Image in N must be a submodule: successors inside N stay in.
    if (s_in && !t_in && in_support(n, t)) return 0;
  }
  return 1;
}

int hom_dim_linear(const PathQuiver& p, const IntervalModule& m, const IntervalModule& n) {
  check_interval(p, m);
  check_interval(p, n);
  // One unknown per vertex where both stalks are nonzero.
  std::map<int, std::size_t> unknown;
  for (int v : m.support) {
    if (in_support(n, v)) unknown.emplace(v, unknown.size());
  }
  if (unknown.empty()) return 0;

  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& [s, t] : p.edges()) {
    // N_a f_s - f_t M_a : M_s -> N_t, nontrivial only if both spaces are.
    if (!in_support(m, s) || !in_support(n, t)) continue;
    std::vector<std::int64_t> row(unknown.size(), 0);
    const std::int64_t n_arrow = in_support(n, s) ? 1 : 0;
    const std::int64_t m_arrow = in_support(m, t) ? 1 : 0;
    if (auto it = unknown.find(s); it != unknown.end()) row[it->second] += n_arrow;
    if (auto it = unknown.find(t); it != unknown.end()) row[it->second] -= m_arrow;
    if (std::any_of(row.begin(), row.end(), [](std::int64_t x) { return x != 0; })) rows.push_back(std::move(row));
  }
  return static_cast<int>(unknown.size()) - exact_rank(rows);
}

std::int64_t euler_form(const PathQuiver& p, const IntVector& x, const IntVector& y) {
  if (x.size() != idx(p.ambient_size()) || y.size() != x.size()) {
    throw std::invalid_argument("euler_form: length mismatch");
  }
  std::int64_t total = 0;
  for (std::size_t v = 0; v < x.size(); ++v) total += x[v] * y[v];
  for (const auto& [s, t] : p.edges()) total -= x[idx(s - 1)] * y[idx(t - 1)];
  return total;
}

int ext_dim(const PathQuiver& p, const IntervalModule& m, const IntervalModule& n) {
  const std::int64_t ext =
      hom_dim(p, m, n) - euler_form(p, dimension_vector(p, m), dimension_vector(p, n));
  if (ext < 0) throw std::logic_error("ext_dim: negative Ext dimension");
  return static_cast<int>(ext);
}

namespace {

// Enumerates maximal cliques of the compatibility graph (Bron-Kerbosch with
// pivoting); every one of them must have `size` elements.
void maximal_cliques(const std::vector<std::vector<bool>>& compatible, std::vector<std::size_t>& clique,
                     std::vector<std::size_t> candidates, std::vector<std::size_t> excluded, std::size_t size,
                     std::vector<std::vector<std::size_t>>& out) {
  if (candidates.empty()) {
    if (excluded.empty()) {
      if (clique.size() != size) throw std::logic_error("maximal rigid module of the wrong size");
      out.push_back(clique);
    }
    return;
  }
  std::size_t pivot = candidates.front();
  std::size_t best = 0;
  for (const auto* set : {&candidates, &excluded}) {
    for (std::size_t u : *set) {
      std::size_t deg = 0;
      for (std::size_t w : candidates) deg += compatible[u][w] ? 1 : 0;
      if (deg >= best) {
        best = deg;
        pivot = u;
      }
    }
  }
  const std::vector<std::size_t> branch = [&] {
    std::vector<std::size_t> b;
    for (std::size_t v : candidates) {
      if (!compatible[pivot][v]) b.push_back(v);
    }
    return b;
  }();
  for (std::size_t v : branch) {
    std::vector<std::size_t> next_cand, next_excl;
    for (std::size_t w : candidates) {
      if (w != v && compatible[v][w]) next_cand.push_back(w);
    }
    for (std::size_t w : excluded) {
      if (compatible[v][w]) next_excl.push_back(w);
    }
    clique.push_back(v);
    maximal_cliques(compatible, clique, std::move(next_cand), std::move(next_excl), size, out);
    clique.pop_back();
    candidates.erase(std::find(candidates.begin(), candidates.end(), v));
    excluded.push_back(v);
  }
}

std::vector<std::vector<IntervalModule>> component_tilting_sets(const PathQuiver& p, const std::vector<int>& path) {
  PathQuiver single = PathQuiver::from_quiver(
      ValuedQuiver(p.ambient_size(), [&] {
        std::vector<Arrow> arrows;
        for (const auto& [s, t] : p.edges()) arrows.push_back({s, t, {}});
        return arrows;
      }()),
      [&] {
        std::vector<int> vs = path;
        std::sort(vs.begin(), vs.end());
        return vs;
      }());
  const std::vector<IntervalModule> ind = indecomposables(single);
  const std::size_t k = ind.size();
  std::vector<std::vector<bool>> compatible(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const bool ok = ext_dim(single, ind[i], ind[j]) == 0 && ext_dim(single, ind[j], ind[i]) == 0;
      compatible[i][j] = compatible[j][i] = ok;
    }
  }
  std::vector<std::size_t> all(k);
  for (std::size_t i = 0; i < k; ++i) all[i] = i;
  std::vector<std::vector<std::size_t>> cliques;
  std::vector<std::size_t> clique;
  maximal_cliques(compatible, clique, all, {}, path.size(), cliques);

  std::vector<std::vector<IntervalModule>> out;
  out.reserve(cliques.size());
  for (const auto& c : cliques) {
    std::vector<IntervalModule> mods;
    for (std::size_t i : c) mods.push_back(ind[i]);
    std::sort(mods.begin(), mods.end());
    out.push_back(std::move(mods));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<TiltingModule> tilting_modules(const PathQuiver& p) {
  std::vector<TiltingModule> result{TiltingModule{}};
  for (const auto& path : p.paths()) {
    const auto sets = component_tilting_sets(p, path);
    std::vector<TiltingModule> next;
    next.reserve(result.size() * sets.size());
    for (const TiltingModule& partial : result) {
      for (const auto& s : sets) {
        TiltingModule t = partial;
        t.summands.insert(t.summands.end(), s.begin(), s.end());
        next.push_back(std::move(t));
      }
    }
    result = std::move(next);
  }
  for (TiltingModule& t : result) std::sort(t.summands.begin(), t.summands.end());
  std::sort(result.begin(), result.end());
  return result;
}

bool fac_contains(const PathQuiver& p, const TiltingModule& t, const IntervalModule& x) {
  return std::all_of(t.summands.begin(), t.summands.end(),
                     [&](const IntervalModule& s) { return ext_dim(p, s, x) == 0; });
}

TiltHasse tilt_hasse(const PathQuiver& p) {
  TiltHasse h{tilting_modules(p), {}};
  // Pair up tilting modules through their almost complete summands.
  std::map<std::vector<IntervalModule>, std::vector<std::pair<std::size_t, IntervalModule>>> by_complement;
  for (std::size_t t = 0; t < h.modules.size(); ++t) {
    const auto& summands = h.modules[t].summands;
    for (std::size_t s = 0; s < summands.size(); ++s) {
      std::vector<IntervalModule> rest;
      for (std::size_t r = 0; r < summands.size(); ++r) {
        if (r != s) rest.push_back(summands[r]);
      }
      by_complement[std::move(rest)].emplace_back(t, summands[s]);
    }
  }
  for (const auto& [rest, group] : by_complement) {
    if (group.size() == 1) continue;
    if (group.size() > 2) throw std::logic_error("almost complete tilting module with > 2 complements");
    const auto& [t1, x] = group[0];
    const auto& [t2, y] = group[1];
    const bool y_in_t1 = fac_contains(p, h.modules[t1], y);
    const bool x_in_t2 = fac_contains(p, h.modules[t2], x);
    if (y_in_t1 == x_in_t2) throw std::logic_error("mutation pair with incomparable Fac");
    h.arrows.emplace_back(y_in_t1 ? t1 : t2, y_in_t1 ? t2 : t1);
  }
  std::sort(h.arrows.begin(), h.arrows.end());
  return h;
}

TiltingModule bongartz_complete(const PathQuiver& p, std::span<const IntervalModule> u, int v) {
  if (!p.contains(v)) throw std::invalid_argument("bongartz_complete: vertex not in quiver");
  if (static_cast<int>(u.size()) != p.vertex_count() - 1) {
    throw std::invalid_argument("bongartz_complete: expected vertex_count - 1 summands");
  }
  for (const IntervalModule& m : u) {
    check_interval(p, m);
    if (in_support(m, v)) throw std::invalid_argument("bongartz_complete: summand supported at the deleted vertex");
    for (const IntervalModule& w : u) {
      if (ext_dim(p, m, w) != 0) throw std::invalid_argument("bongartz_complete: summands are not rigid");
    }
  }
  std::vector<IntervalModule> complements;
  for (const IntervalModule& x : indecomposables(p)) {
    if (std::find(u.begin(), u.end(), x) != u.end()) continue;
    const bool rigid = std::all_of(u.begin(), u.end(), [&](const IntervalModule& m) {
      return ext_dim(p, m, x) == 0 && ext_dim(p, x, m) == 0;
    });
    if (rigid) complements.push_back(x);
  }
  if (complements.size() != 1) {
    throw std::logic_error("bongartz_complete: found " + std::to_string(complements.size()) +
                           " complements, expected exactly one");
  }
  TiltingModule t{{u.begin(), u.end()}};
  t.summands.push_back(complements.front());
  std::sort(t.summands.begin(), t.summands.end());
  return t;
}

}  // namespace signdec
