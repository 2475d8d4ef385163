#pragma once

// Classification of connected valued graphs against the Dynkin list, and the
// number of tilting modules of the corresponding hereditary algebras.

#include <string>

#include "signdec/count.hpp"
#include "signdec/quiver.hpp"

namespace signdec {

enum class DynkinFamily { A, BC, D, E6, E7, E8, F4, G2, NonDynkin };

struct DynkinType {
  DynkinFamily family = DynkinFamily::NonDynkin;
  int rank = 0;  // vertex count

  bool is_dynkin() const { return family != DynkinFamily::NonDynkin; }
  bool is_simply_laced_a() const { return family == DynkinFamily::A; }

  // "A3", "BC2", "D5", "E6", "F4", "G2", "non-Dynkin"
  std::string name() const;

  friend bool operator==(const DynkinType&, const DynkinType&) = default;
};

/// B_n and C_n share one family: the unordered valued graph cannot tell them
/// apart and their counts coincide. D-shaped trees on fewer than four
/// vertices come out as type A. Throws std::invalid_argument if `g` is empty
/// or disconnected.
DynkinType classify(const ValuedGraph& g);

BigCount catalan(unsigned n);

// ((3n-4)/(2n-2)) * binom(2n-2, n-2), for n >= 2.
BigCount d_series_count(unsigned n);

/// Number of tilting modules; infinite for NonDynkin.
Count tilting_count(const DynkinType& t);

/// Product of tilting_count over the connected components of `g`; the empty
/// graph counts 1.
Count tilting_count(const ValuedGraph& g);

}  // namespace signdec
