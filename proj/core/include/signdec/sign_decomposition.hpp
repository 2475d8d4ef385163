#pragma once

// Sign-decomposition of support tau-tilting modules over an RSZ algebra:
// slice e contributes the tilting modules of the hereditary algebra whose
// quiver is opposite(gamma_epsilon(Q, e)).

#include <cstdint>
#include <iterator>
#include <optional>
#include <vector>

#include "signdec/count.hpp"
#include "signdec/dynkin.hpp"
#include "signdec/quiver.hpp"

namespace signdec {

/// All 2^n sign vectors in lexicographic order with +1 < -1, starting at
/// all +1. Index k maps to coordinate i = -1 iff bit (n - i) of k is set.
class SignVectors {
 public:
  // Throws std::invalid_argument unless 1 <= n <= 62.
  explicit SignVectors(int n);

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = SignVector;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = SignVector;

    iterator() = default;
    iterator(int n, std::uint64_t index) : n_(n), index_(index) {}

    SignVector operator*() const;
    iterator& operator++() {
      ++index_;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++index_;
      return old;
    }
    friend bool operator==(const iterator&, const iterator&) = default;

   private:
    int n_ = 0;
    std::uint64_t index_ = 0;
  };

  iterator begin() const { return {n_, 0}; }
  iterator end() const { return {n_, std::uint64_t{1} << n_}; }
  std::uint64_t size() const { return std::uint64_t{1} << n_; }
  SignVector at(std::uint64_t index) const { return *iterator(n_, index); }

 private:
  int n_;
};

inline SignVectors enumerate_signs(int n) { return SignVectors(n); }

struct SliceComponent {
  std::vector<int> vertices;  // global ids
  DynkinType type;
};

/// One slice of the decomposition.
struct SliceSummary {
  SignVector eps;
  std::vector<SliceComponent> components;  // components of gamma_epsilon, by minimal vertex
  Count count;
  bool two_term_tilting = false;
};

SliceSummary describe_slice(const ValuedQuiver& q, const SignVector& e);

struct InfiniteWitness {
  SignVector eps;
  SliceComponent component;
};

/// First slice (in enumerate_signs order) with a non-Dynkin component.
std::optional<InfiniteWitness> find_infinite_witness(const ValuedQuiver& q);

/// Checks every gamma_epsilon.
bool is_tau_tilting_finite(const ValuedQuiver& q);

/// Separated quiver on vertices i^+ (= i) and i^- (= n + i) with an arrow
/// i^+ -> j^- for every arrow i -> j.
ValuedQuiver separated_quiver(const ValuedQuiver& q);

/// Checks every maximal single subquiver of the separated quiver instead.
/// Must agree with is_tau_tilting_finite.
bool is_tau_tilting_finite_separated(const ValuedQuiver& q);

Count count_stau_epsilon(const ValuedQuiver& q, const SignVector& e);

/// Sum of count_stau_epsilon over all 2^n slices. Slices are evaluated in
/// parallel and reduced in enumerate_signs order.
Count count_stau(const ValuedQuiver& q);

}  // namespace signdec
