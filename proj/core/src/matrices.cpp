#include "signdec/matrices.hpp"

#include <stdexcept>
#include <string>

namespace signdec {

IntMatrix::IntMatrix(int n, std::initializer_list<std::int64_t> row_major) : IntMatrix(n) {
  if (row_major.size() != data_.size()) throw std::invalid_argument("IntMatrix: wrong entry count");
  std::copy(row_major.begin(), row_major.end(), data_.begin());
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
  IntMatrix out(a.n_);
  for (int r = 0; r < a.n_; ++r) {
    for (int k = 0; k < a.n_; ++k) {
      const std::int64_t v = a(r, k);
      if (v == 0) continue;
      for (int c = 0; c < a.n_; ++c) out(r, c) += v * b(k, c);
    }
  }
  return out;
}

IntVector operator*(const IntMatrix& a, const IntVector& x) {
  if (static_cast<std::size_t>(a.n_) != x.size()) throw std::invalid_argument("vector size mismatch");
  IntVector out(x.size(), 0);
  for (int r = 0; r < a.n_; ++r) {
    for (int c = 0; c < a.n_; ++c) out[static_cast<std::size_t>(r)] += a(r, c) * x[static_cast<std::size_t>(c)];
  }
  return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
  IntMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

IntMatrix operator*(std::int64_t k, const IntMatrix& a) {
  IntMatrix out = a;
  for (auto& v : out.data_) v *= k;
  return out;
}

namespace {

bool has_oriented_cycle(const ValuedQuiver& q) {
  // Kahn's algorithm.
  std::vector<int> indeg(static_cast<std::size_t>(q.size()) + 1, 0);
  for (const Arrow& a : q.arrows()) ++indeg[static_cast<std::size_t>(a.tgt)];
  std::vector<int> ready;
  for (int v = 1; v <= q.size(); ++v) {
    if (indeg[static_cast<std::size_t>(v)] == 0) ready.push_back(v);
  }
  int removed = 0;
  while (!ready.empty()) {
    int v = ready.back();
    ready.pop_back();
    ++removed;
    for (const Arrow& a : q.arrows()) {
      if (a.src == v && --indeg[static_cast<std::size_t>(a.tgt)] == 0) ready.push_back(a.tgt);
    }
  }
  return removed != q.size();
}

bool is_sink(const ValuedQuiver& q, int a) { return q.out_degree(a) == 0; }

}  // namespace

IntMatrix cartan(const ValuedQuiver& q) {
  if (q.has_loops()) throw std::invalid_argument("cartan: quiver has loops");
  if (has_oriented_cycle(q)) throw std::invalid_argument("cartan: quiver has an oriented cycle");
  IntMatrix c = IntMatrix::identity(q.size());
  for (const Arrow& a : q.arrows()) c(a.tgt - 1, a.src - 1) += a.val.d_prime;
  return c;
}

IntMatrix b_epsilon(const SignVector& e) {
  IntMatrix b(e.size());
  for (int i = 1; i <= e.size(); ++i) b(i - 1, i - 1) = e[i];
  return b;
}

IntVector reflect_at(const ValuedQuiver& q, int a, const IntVector& x) {
  if (static_cast<int>(x.size()) != q.size()) throw std::invalid_argument("reflect_at: size mismatch");
  if (a < 1 || a > q.size()) throw std::invalid_argument("reflect_at: vertex out of range");
  if (!is_sink(q, a)) throw std::invalid_argument("reflect_at: vertex " + std::to_string(a) + " is not a sink");
  IntVector y = x;
  std::int64_t ya = -x[static_cast<std::size_t>(a - 1)];
  for (const Arrow& arr : q.arrows()) {
    if (arr.tgt == a) ya += arr.val.d_prime * x[static_cast<std::size_t>(arr.src - 1)];
  }
  y[static_cast<std::size_t>(a - 1)] = ya;
  return y;
}

IntVector reflect_at_sinks(const ValuedQuiver& q, std::span<const int> sinks, const IntVector& x) {
  for (int a : sinks) {
    if (a < 1 || a > q.size() || !is_sink(q, a) || q.in_degree(a) == 0) {
      throw std::invalid_argument("reflect_at_sinks: vertex " + std::to_string(a) +
                                  " is not a sink that is not a source");
    }
  }
  IntVector y = x;
  for (int a : sinks) y = reflect_at(q, a, y);
  return y;
}

IntMatrix s_epsilon(const ValuedQuiver& q, const SignVector& e) {
  if (e.size() != q.size()) throw std::invalid_argument("s_epsilon: sign vector length mismatch");
  if (!is_rsz_hereditary_bipartite(q)) throw std::invalid_argument("s_epsilon: quiver is not bipartite");
  for (int v = 1; v <= q.size(); ++v) {
    if ((q.out_degree(v) > 0 && e[v] != 1) || (q.in_degree(v) > 0 && e[v] != -1)) {
      throw std::invalid_argument("s_epsilon: sign at vertex " + std::to_string(v) +
                                  " disagrees with source/sink structure");
    }
  }
  return cartan(q) * b_epsilon(e);
}

IntVector g_from_c(const SignVector& e, const IntVector& c) {
  if (static_cast<int>(c.size()) != e.size()) throw std::invalid_argument("g_from_c: length mismatch");
  IntVector g = c;
  for (int i = 1; i <= e.size(); ++i) g[static_cast<std::size_t>(i - 1)] *= e[i];
  return g;
}

}  // namespace signdec
