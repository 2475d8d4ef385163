#include "signdec/sign_decomposition.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>
#include <thread>

namespace signdec {

SignVectors::SignVectors(int n) : n_(n) {
  if (n < 1 || n > 62) throw std::invalid_argument("enumerate_signs: n must be in 1..62");
}

SignVector SignVectors::iterator::operator*() const {
  std::vector<int> signs(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) {
    signs[static_cast<std::size_t>(i)] = (index_ >> (n_ - 1 - i)) & 1U ? -1 : 1;
  }
  return SignVector(std::move(signs));
}

SliceSummary describe_slice(const ValuedQuiver& q, const SignVector& e) {
  SliceSummary summary{e, {}, 1, two_term_tilting_predicate(q, e)};
  for (Component& c : components(gamma_epsilon(q, e))) {
    DynkinType type = classify(underlying_graph(c.quiver));
    summary.count *= tilting_count(type);
    summary.components.push_back({std::move(c.vertices), type});
  }
  return summary;
}

std::optional<InfiniteWitness> find_infinite_witness(const ValuedQuiver& q) {
  for (const SignVector& e : enumerate_signs(q.size())) {
    for (Component& c : components(gamma_epsilon(q, e))) {
      DynkinType type = classify(underlying_graph(c.quiver));
      if (!type.is_dynkin()) return InfiniteWitness{e, {std::move(c.vertices), type}};
    }
  }
  return std::nullopt;
}

bool is_tau_tilting_finite(const ValuedQuiver& q) { return !find_infinite_witness(q).has_value(); }

ValuedQuiver separated_quiver(const ValuedQuiver& q) {
  std::vector<Arrow> arrows;
  arrows.reserve(q.arrows().size());
  for (const Arrow& a : q.arrows()) arrows.push_back({a.src, q.size() + a.tgt, a.val});
  return ValuedQuiver(2 * q.size(), std::move(arrows));
}

bool is_tau_tilting_finite_separated(const ValuedQuiver& q) {
  const ValuedQuiver sep = separated_quiver(q);
  const int n = q.size();
  if (n < 1 || n > 62) throw std::invalid_argument("quiver size out of range");
  std::vector<int> chosen(static_cast<std::size_t>(n));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    // Bit i-1 set: keep i^-, else i^+. Vertex lists must be sorted.
    std::vector<int> plus, minus;
    for (int i = 1; i <= n; ++i) {
      if ((mask >> (i - 1)) & 1U) {
        minus.push_back(n + i);
      } else {
        plus.push_back(i);
      }
    }
    plus.insert(plus.end(), minus.begin(), minus.end());
    const ValuedQuiver single = induced_subquiver(sep, plus);
    for (const Component& c : components(single)) {
      if (!classify(underlying_graph(c.quiver)).is_dynkin()) return false;
    }
  }
  return true;
}

Count count_stau_epsilon(const ValuedQuiver& q, const SignVector& e) {
  return tilting_count(underlying_graph(gamma_epsilon(q, e)));
}

Count count_stau(const ValuedQuiver& q) {
  const SignVectors signs = enumerate_signs(q.size());
  const std::uint64_t total = signs.size();
  const std::uint64_t workers =
      std::clamp<std::uint64_t>(std::thread::hardware_concurrency(), 1, std::min<std::uint64_t>(total, 16));

  // Contiguous index blocks keep the reduction in enumerate_signs order.
  std::vector<std::future<Count>> parts;
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t lo = total * w / workers;
    const std::uint64_t hi = total * (w + 1) / workers;
    parts.push_back(std::async(std::launch::async, [&q, &signs, lo, hi] {
      Count partial = 0;
      for (std::uint64_t k = lo; k < hi && partial.is_finite(); ++k) {
        partial += count_stau_epsilon(q, signs.at(k));
      }
      return partial;
    }));
  }
  Count sum = 0;
  for (auto& part : parts) sum += part.get();
  return sum;
}

}  // namespace signdec
