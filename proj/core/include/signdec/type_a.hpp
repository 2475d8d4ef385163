#pragma once

// Representation calculus over disjoint unions of simply-laced type-A
// quivers: interval modules, Hom/Ext dimensions, tilting modules, the
// tilting poset and unique completion of non-sincere almost complete
// tilting modules.
//
// Everything is keyed by global vertex ids of an ambient quiver on 1..n, so
// modules over two path quivers that share vertices compare equal exactly
// when their supports do.

#include <compare>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "signdec/matrices.hpp"
#include "signdec/quiver.hpp"

namespace signdec {

class PathQuiver {
 public:
  PathQuiver() = default;

  /// Induced subquiver of `q` on `vertices` (sorted, distinct). Throws
  /// UnsupportedComponent unless every component is a simply-laced path.
  static PathQuiver from_quiver(const ValuedQuiver& q, std::span<const int> vertices);
  static PathQuiver from_quiver(const ValuedQuiver& q);

  PathQuiver without_vertex(int v) const;

  int ambient_size() const { return ambient_n_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  const std::vector<int>& vertices() const { return vertices_; }
  bool contains(int v) const;

  // Vertices of each component in path order, components by minimal vertex.
  const std::vector<std::vector<int>>& paths() const { return paths_; }
  // Directed edges in global ids, sorted.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  friend bool operator==(const PathQuiver&, const PathQuiver&) = default;

 private:
  int ambient_n_ = 0;
  std::vector<int> vertices_;
  std::vector<std::vector<int>> paths_;
  std::vector<std::pair<int, int>> edges_;
};

/// Indecomposable module over a type-A quiver, given by its support.
struct IntervalModule {
  std::vector<int> support;  // sorted global ids

  int min_vertex() const { return support.front(); }

  friend bool operator==(const IntervalModule&, const IntervalModule&) = default;
  // Minimal vertex, then size, then the support itself.
  friend std::strong_ordering operator<=>(const IntervalModule& a, const IntervalModule& b);
};

struct TiltingModule {
  std::vector<IntervalModule> summands;  // sorted

  friend auto operator<=>(const TiltingModule&, const TiltingModule&) = default;
};

// Throws std::invalid_argument if `support` is not an interval of `p`.
void check_interval(const PathQuiver& p, const IntervalModule& m);

IntVector dimension_vector(const PathQuiver& p, const IntervalModule& m);
IntVector dimension_vector(const PathQuiver& p, const TiltingModule& t);

/// Every interval; m(m+1)/2 of them per path of m vertices.
std::vector<IntervalModule> indecomposables(const PathQuiver& p);

/// Hom dimension via the interval criterion: M ∩ N is nonempty, closed under
/// predecessors inside M and under successors inside N.
int hom_dim(const PathQuiver& p, const IntervalModule& m, const IntervalModule& n);

/// Hom dimension from the commutation equations f_j M_a = N_a f_i solved by
/// exact rank computation.
int hom_dim_linear(const PathQuiver& p, const IntervalModule& m, const IntervalModule& n);

std::int64_t euler_form(const PathQuiver& p, const IntVector& x, const IntVector& y);

/// dim Hom(M, N) - <dim M, dim N>. Throws std::logic_error if negative.
int ext_dim(const PathQuiver& p, const IntervalModule& m, const IntervalModule& n);

/// All tilting modules (maximal rigid sets), in sorted order.
std::vector<TiltingModule> tilting_modules(const PathQuiver& p);

/// Ext^1(T_i, X) = 0 for every summand, i.e. X lies in Fac T.
bool fac_contains(const PathQuiver& p, const TiltingModule& t, const IntervalModule& x);

struct TiltHasse {
  std::vector<TiltingModule> modules;                // tilting_modules(p) order
  std::vector<std::pair<std::size_t, std::size_t>> arrows;  // T -> T' when Fac T' ⊊ Fac T
};

TiltHasse tilt_hasse(const PathQuiver& p);

/// The unique tilting module U ⊕ X, where U has vertex_count - 1 rigid
/// summands none of which is supported at `v`.
TiltingModule bongartz_complete(const PathQuiver& p, std::span<const IntervalModule> u, int v);

}  // namespace signdec
