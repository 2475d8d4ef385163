#pragma once

// Valued quivers presenting radical-square-zero algebras.
//
// Vertices are 1-based throughout the library. A quiver carries at most one
// arrow per ordered pair (src, tgt); m parallel unit arrows are stored as a
// single arrow valued (m, m).

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace signdec {

struct Valuation {
  int d_prime = 1;
  int d_dprime = 1;

  Valuation transposed() const { return {d_dprime, d_prime}; }
  bool simply_laced() const { return d_prime == 1 && d_dprime == 1; }

  friend auto operator<=>(const Valuation&, const Valuation&) = default;
};

struct Arrow {
  int src = 0;
  int tgt = 0;
  Valuation val;

  bool is_loop() const { return src == tgt; }

  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

// An arrow as written in input: either a unit arrow (repeatable) or an
// explicitly valued one.
struct RawArrow {
  int src = 0;
  int tgt = 0;
  std::optional<Valuation> val;
};

class ValuedQuiver {
 public:
  ValuedQuiver() = default;

  // Requires 1 <= src, tgt <= n, positive valuations and unique ordered
  // pairs; throws std::invalid_argument otherwise. Arrows are stored sorted.
  ValuedQuiver(int n, std::vector<Arrow> arrows);

  int size() const { return n_; }
  std::span<const Arrow> arrows() const { return arrows_; }

  std::optional<Valuation> valuation(int src, int tgt) const;
  bool has_arrow(int src, int tgt) const { return valuation(src, tgt).has_value(); }
  bool has_loops() const;

  // Arrow set closed under reversal with transposed valuations.
  bool is_symmetric() const;

  int out_degree(int v) const;
  int in_degree(int v) const;

  friend bool operator==(const ValuedQuiver&, const ValuedQuiver&) = default;

 private:
  int n_ = 0;
  std::vector<Arrow> arrows_;
};

/// Sign vector indexing one slice of the sign-decomposition.
class SignVector {
 public:
  SignVector() = default;
  // Every entry must be +1 or -1.
  explicit SignVector(std::vector<int> signs);

  static SignVector all(int n, int sign);

  int size() const { return static_cast<int>(signs_.size()); }
  // 1-based.
  int operator[](int vertex) const { return signs_[static_cast<std::size_t>(vertex - 1)]; }
  const std::vector<int>& values() const { return signs_; }

  SignVector negated() const;
  SignVector flipped(int vertex) const;

  // "(1,-1,1)"
  std::string to_string() const;

  friend auto operator<=>(const SignVector&, const SignVector&) = default;

 private:
  std::vector<int> signs_;
};

struct ValuedEdge {
  int u = 0;  // u < v
  int v = 0;
  int val_lo = 1;  // unordered valuation pair, val_lo <= val_hi
  int val_hi = 1;

  friend auto operator<=>(const ValuedEdge&, const ValuedEdge&) = default;
};

struct ValuedGraph {
  int n = 0;
  std::vector<ValuedEdge> edges;  // sorted by (u, v)

  friend bool operator==(const ValuedGraph&, const ValuedGraph&) = default;
};

struct Component {
  std::vector<int> vertices;  // sorted global ids
  ValuedQuiver quiver;        // induced subquiver relabeled 1..k in `vertices` order
};

/// Merges m parallel unit arrows into one (m, m) arrow. An ordered pair may
/// carry either unit arrows or exactly one explicit valuation, never both.
ValuedQuiver normalize(int n, std::span<const RawArrow> raw);

/// Parses the line-based quiver format:
///   n <count>            exactly once, first non-comment line
///   a <src> <tgt>        unit arrow
///   a <src> <tgt> d' d'' valued arrow
/// '#' starts a comment. Throws ParseError with a 1-based line number.
ValuedQuiver parse_quiver(std::string_view text);

// Inverse of parse_quiver for normalized quivers; unit arrows are written
// without valuation.
std::string format_quiver(const ValuedQuiver& q);

/// Keeps exactly the arrows i -> j with e(i) = +1 and e(j) = -1.
ValuedQuiver gamma_epsilon(const ValuedQuiver& q, const SignVector& e);

ValuedQuiver opposite(const ValuedQuiver& q);

// Induced subquiver on `vertices` (sorted, distinct), relabeled 1..k.
ValuedQuiver induced_subquiver(const ValuedQuiver& q, std::span<const int> vertices);

/// Weakly connected components, ordered by minimal vertex.
std::vector<Component> components(const ValuedQuiver& q);

/// Forgets orientation. Throws std::invalid_argument on loops or 2-cycles.
ValuedGraph underlying_graph(const ValuedQuiver& q);

/// If every vertex is a source, a sink or isolated, returns the sign vector
/// with +1 on sources (and isolated vertices) and -1 on sinks.
std::optional<SignVector> is_rsz_hereditary_bipartite(const ValuedQuiver& q);

// True iff no arrow runs from a -1 vertex to a +1 vertex, i.e. the two-term
// silting complexes in slice e are all tilting.
bool two_term_tilting_predicate(const ValuedQuiver& q, const SignVector& e);

}  // namespace signdec
