#pragma once

// Cartan matrices, sign diagonals, sink reflections and the g-vector /
// dimension-vector transform. Matrices and vectors are 0-based: row/column r
// belongs to vertex r + 1.

#include <cstdint>
#include <span>
#include <vector>

#include "signdec/quiver.hpp"

namespace signdec {

using IntVector = std::vector<std::int64_t>;

class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {}
  IntMatrix(int n, std::initializer_list<std::int64_t> row_major);

  static IntMatrix identity(int n);

  int size() const { return n_; }
  std::int64_t& operator()(int r, int c) { return data_[index(r, c)]; }
  std::int64_t operator()(int r, int c) const { return data_[index(r, c)]; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntVector operator*(const IntMatrix& a, const IntVector& x);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(std::int64_t k, const IntMatrix& a);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(c);
  }

  int n_ = 0;
  std::vector<std::int64_t> data_;
};

/// Column i is e_i + sum over arrows i -> j of d'_{ij} e_j.
/// Throws std::invalid_argument on loops or oriented cycles.
IntMatrix cartan(const ValuedQuiver& q);

IntMatrix b_epsilon(const SignVector& e);

/// Reflection at the sink a: y_a = -x_a + sum_{i -> a} d'_{ia} x_i, other
/// coordinates unchanged. Isolated vertices count as sinks.
IntVector reflect_at(const ValuedQuiver& q, int a, const IntVector& x);

/// Applies reflect_at for every vertex in `sinks`, each of which must be a
/// sink that is not also a source.
IntVector reflect_at_sinks(const ValuedQuiver& q, std::span<const int> sinks, const IntVector& x);

/// cartan(q) * b_epsilon(e), the simultaneous reflection at every vertex with
/// e = -1. `q` must be bipartite and `e` must be +1 on sources and -1 on
/// sinks; isolated vertices may take either sign.
IntMatrix s_epsilon(const ValuedQuiver& q, const SignVector& e);

/// B_e * c.
IntVector g_from_c(const SignVector& e, const IntVector& c);

}  // namespace signdec
