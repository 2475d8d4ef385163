#include <doctest.h>

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

#include "oracles.hpp"
#include "signdec/dynkin.hpp"
#include "signdec/errors.hpp"
#include "signdec/type_a.hpp"

using namespace signdec;

namespace {

IntervalModule iv(std::vector<int> support) { return {std::move(support)}; }

PathQuiver path_quiver(int m, std::uint32_t orientation) {
  return PathQuiver::from_quiver(oracle::oriented_path(m, orientation));
}

int ext_linear(const PathQuiver& p, const IntervalModule& a, const IntervalModule& b) {
  return hom_dim_linear(p, a, b) -
         static_cast<int>(euler_form(p, dimension_vector(p, a), dimension_vector(p, b)));
}

// Every size-m subset of indecomposables with all Ext^1 vanishing, using the
// linear-system Hom.
std::vector<TiltingModule> brute_tilting(const PathQuiver& p) {
  const auto ind = indecomposables(p);
  const std::size_t k = ind.size();
  const auto m = static_cast<std::size_t>(p.vertex_count());
  std::vector<std::vector<bool>> ok(k, std::vector<bool>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) ok[i][j] = ext_linear(p, ind[i], ind[j]) == 0;
  }
  std::vector<TiltingModule> out;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (pick.size() == m) {
      TiltingModule t;
      for (std::size_t i : pick) t.summands.push_back(ind[i]);
      std::sort(t.summands.begin(), t.summands.end());
      out.push_back(std::move(t));
      return;
    }
    for (std::size_t i = from; i < k; ++i) {
      bool fits = ok[i][i];
      for (std::size_t j : pick) fits = fits && ok[i][j] && ok[j][i];
      if (!fits) continue;
      pick.push_back(i);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

// Fac T as the set of indecomposables X with Ext^1(T, X) = 0.
std::set<std::vector<int>> fac_set(const PathQuiver& p, const TiltingModule& t) {
  std::set<std::vector<int>> out;
  for (const IntervalModule& x : indecomposables(p)) {
    bool in = true;
    for (const IntervalModule& s : t.summands) in = in && ext_linear(p, s, x) == 0;
    if (in) out.insert(x.support);
  }
  return out;
}

// Cover relations of the poset ordered by reverse inclusion of Fac.
std::vector<std::pair<std::size_t, std::size_t>> fac_covers(const PathQuiver& p,
                                                            const std::vector<TiltingModule>& mods) {
  std::vector<std::set<std::vector<int>>> fac;
  for (const auto& t : mods) fac.push_back(fac_set(p, t));
  auto above = [&](std::size_t a, std::size_t b) {
    return a != b && fac[a] != fac[b] && std::includes(fac[a].begin(), fac[a].end(), fac[b].begin(), fac[b].end());
  };
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t a = 0; a < mods.size(); ++a) {
    for (std::size_t b = 0; b < mods.size(); ++b) {
      if (!above(a, b)) continue;
      bool cover = true;
      for (std::size_t c = 0; c < mods.size() && cover; ++c) cover = !(above(a, c) && above(c, b));
      if (cover) covers.emplace_back(a, b);
    }
  }
  std::sort(covers.begin(), covers.end());
  return covers;
}

// Projective (succ = true) or injective indecomposables: reachability closures.
TiltingModule closures(const PathQuiver& p, bool succ) {
  TiltingModule t;
  for (int v : p.vertices()) {
    std::set<int> seen{v};
    std::queue<int> todo;
    todo.push(v);
    while (!todo.empty()) {
      const int u = todo.front();
      todo.pop();
      for (const auto& [s, w] : p.edges()) {
        const int from = succ ? s : w;
        const int to = succ ? w : s;
        if (from == u && seen.insert(to).second) todo.push(to);
      }
    }
    t.summands.push_back(iv({seen.begin(), seen.end()}));
  }
  std::sort(t.summands.begin(), t.summands.end());
  return t;
}

}  // namespace

TEST_CASE("path quiver construction") {
  const PathQuiver p = PathQuiver::from_quiver(ValuedQuiver(4, {{2, 1, {}}, {3, 2, {}}}));
  REQUIRE(p.paths().size() == 2);
  CHECK(p.paths()[0] == std::vector<int>{1, 2, 3});
  CHECK(p.paths()[1] == std::vector<int>{4});
  CHECK(p.edges() == std::vector<std::pair<int, int>>{{2, 1}, {3, 2}});
  const PathQuiver cut = p.without_vertex(2);
  CHECK(cut.vertices() == std::vector<int>{1, 3, 4});
  CHECK(cut.edges().empty());
  CHECK(cut.ambient_size() == 4);
  CHECK_FALSE(cut.contains(2));

  CHECK_THROWS_AS(PathQuiver::from_quiver(ValuedQuiver(1, {{1, 1, {}}})), UnsupportedComponent);
  CHECK_THROWS_AS(PathQuiver::from_quiver(ValuedQuiver(2, {{1, 2, {1, 2}}})), UnsupportedComponent);
  CHECK_THROWS_AS(PathQuiver::from_quiver(ValuedQuiver(4, {{1, 2, {}}, {1, 3, {}}, {1, 4, {}}})),
                  UnsupportedComponent);
  CHECK_THROWS_AS(PathQuiver::from_quiver(oracle::three_cycle()), UnsupportedComponent);
  CHECK_THROWS_AS(check_interval(p, iv({1, 3})), std::invalid_argument);
  CHECK_THROWS_AS(check_interval(p, iv({3, 4})), std::invalid_argument);
  CHECK_NOTHROW(check_interval(p, iv({2, 3})));
}

TEST_CASE("hom and ext on A2") {
  const PathQuiver p = path_quiver(2, 0);  // 1 -> 2
  CHECK(hom_dim(p, iv({1, 2}), iv({2})) == 0);
  CHECK(hom_dim(p, iv({2}), iv({1, 2})) == 1);
  CHECK(hom_dim(p, iv({1, 2}), iv({1})) == 1);
  CHECK(hom_dim(p, iv({1}), iv({2})) == 0);
  CHECK(ext_dim(p, iv({1}), iv({2})) == 1);
  CHECK(ext_dim(p, iv({2}), iv({1})) == 0);
  CHECK(euler_form(p, {1, 0}, {0, 1}) == -1);
  CHECK(indecomposables(p).size() == 3);
}

TEST_CASE("combinatorial hom agrees with the linear system on all paths up to 5 vertices") {
  for (int m = 1; m <= 5; ++m) {
    for (std::uint32_t o = 0; o < (1U << (m - 1)); ++o) {
      const PathQuiver p = path_quiver(m, o);
      const auto ind = indecomposables(p);
      CHECK(ind.size() == static_cast<std::size_t>(m * (m + 1) / 2));
      for (const auto& a : ind) {
        for (const auto& b : ind) {
          CHECK(hom_dim(p, a, b) == hom_dim_linear(p, a, b));
          CHECK(ext_dim(p, a, b) >= 0);
        }
        CHECK(hom_dim(p, a, a) == 1);
        CHECK(ext_dim(p, a, a) == 0);
      }
    }
  }
}

TEST_CASE("tilting modules match the brute-force enumeration") {
  for (int m = 1; m <= 5; ++m) {
    for (std::uint32_t o = 0; o < (1U << (m - 1)); ++o) {
      const PathQuiver p = path_quiver(m, o);
      CHECK(tilting_modules(p) == brute_tilting(p));
    }
  }
  const PathQuiver two = PathQuiver::from_quiver(ValuedQuiver(5, {{1, 2, {}}, {4, 3, {}}, {4, 5, {}}}));
  CHECK(tilting_modules(two) == brute_tilting(two));
  CHECK(tilting_modules(two).size() == 10);
}

TEST_CASE("tilting counts are Catalan for every orientation up to 8 vertices") {
  const auto c = oracle::segner_catalan(8);
  for (int m = 1; m <= 8; ++m) {
    for (std::uint32_t o = 0; o < (1U << (m - 1)); ++o) {
      const auto mods = tilting_modules(path_quiver(m, o));
      CHECK(mods.size() == c[static_cast<std::size_t>(m)]);
      for (const auto& t : mods) CHECK(t.summands.size() == static_cast<std::size_t>(m));
    }
  }
  const PathQuiver empty = PathQuiver::from_quiver(ValuedQuiver(2, {}), std::vector<int>{});
  CHECK(tilting_modules(empty).size() == 1);
}

TEST_CASE("tilting poset of A2") {
  const PathQuiver p = path_quiver(2, 0);
  const TiltHasse h = tilt_hasse(p);
  REQUIRE(h.modules.size() == 2);
  CHECK(h.modules[0].summands == std::vector<IntervalModule>{iv({1}), iv({1, 2})});
  CHECK(h.modules[1].summands == std::vector<IntervalModule>{iv({1, 2}), iv({2})});
  CHECK(h.arrows == std::vector<std::pair<std::size_t, std::size_t>>{{1, 0}});
  CHECK(fac_contains(p, h.modules[1], iv({1})));
  CHECK_FALSE(fac_contains(p, h.modules[0], iv({2})));
}

TEST_CASE("tilting poset arrows are the Fac covers") {
  for (int m = 1; m <= 5; ++m) {
    for (std::uint32_t o = 0; o < (1U << (m - 1)); ++o) {
      const PathQuiver p = path_quiver(m, o);
      const TiltHasse h = tilt_hasse(p);
      CHECK(h.arrows == fac_covers(p, h.modules));

      std::vector<int> indeg(h.modules.size(), 0);
      std::vector<int> outdeg(h.modules.size(), 0);
      for (const auto& [a, b] : h.arrows) {
        ++outdeg[a];
        ++indeg[b];
      }
      std::vector<std::size_t> sources;
      std::vector<std::size_t> sinks;
      for (std::size_t i = 0; i < h.modules.size(); ++i) {
        if (indeg[i] == 0) sources.push_back(i);
        if (outdeg[i] == 0) sinks.push_back(i);
      }
      REQUIRE(sources.size() == 1);
      REQUIRE(sinks.size() == 1);
      CHECK(h.modules[sources[0]] == closures(p, true));
      CHECK(h.modules[sinks[0]] == closures(p, false));
    }
  }
}

TEST_CASE("linear A_n tilting poset is connected") {
  const auto c = oracle::segner_catalan(7);
  for (int m = 1; m <= 7; ++m) {
    const TiltHasse h = tilt_hasse(path_quiver(m, 0));
    CHECK(h.modules.size() == c[static_cast<std::size_t>(m)]);
    std::vector<std::vector<std::size_t>> adj(h.modules.size());
    for (const auto& [a, b] : h.arrows) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    std::vector<bool> seen(h.modules.size(), false);
    std::queue<std::size_t> todo;
    todo.push(0);
    seen[0] = true;
    std::size_t reached = 1;
    while (!todo.empty()) {
      const std::size_t u = todo.front();
      todo.pop();
      for (std::size_t w : adj[u]) {
        if (!seen[w]) {
          seen[w] = true;
          ++reached;
          todo.push(w);
        }
      }
    }
    CHECK(reached == h.modules.size());
  }
}

TEST_CASE("bongartz completion") {
  const PathQuiver p = path_quiver(2, 0);
  const std::vector<IntervalModule> u{iv({2})};
  CHECK(bongartz_complete(p, u, 1).summands == std::vector<IntervalModule>{iv({1, 2}), iv({2})});
  const std::vector<IntervalModule> u1{iv({1})};
  CHECK(bongartz_complete(p, u1, 2).summands == std::vector<IntervalModule>{iv({1}), iv({1, 2})});
  CHECK_THROWS_AS(bongartz_complete(p, u, 2), std::invalid_argument);
  CHECK_THROWS_AS(bongartz_complete(p, std::vector<IntervalModule>{}, 1), std::invalid_argument);
}

TEST_CASE("bongartz completion is the unique tilting module extending U") {
  for (int m = 2; m <= 5; ++m) {
    for (std::uint32_t o = 0; o < (1U << (m - 1)); ++o) {
      const PathQuiver p = path_quiver(m, o);
      const auto all = tilting_modules(p);
      for (int v = 1; v <= m; ++v) {
        for (const TiltingModule& u : tilting_modules(p.without_vertex(v))) {
          const TiltingModule t = bongartz_complete(p, u.summands, v);
          int extending = 0;
          for (const TiltingModule& cand : all) {
            extending += std::includes(cand.summands.begin(), cand.summands.end(), u.summands.begin(),
                                       u.summands.end())
                             ? 1
                             : 0;
          }
          CHECK(extending == 1);
          CHECK(std::binary_search(all.begin(), all.end(), t));
        }
      }
    }
  }
}
