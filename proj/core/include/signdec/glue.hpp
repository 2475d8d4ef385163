#pragma once

// The Hasse quiver of support tau-tilting modules, assembled slice by slice
// from the tilting posets of opposite(gamma_epsilon(Q, e)) and joined by
// gluing arrows across sign flips.

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "signdec/matrices.hpp"
#include "signdec/quiver.hpp"
#include "signdec/type_a.hpp"

namespace signdec {

struct StauNode {
  SignVector eps;
  TiltingModule tilt;  // over opposite(gamma_epsilon(Q, eps))
  IntVector g;         // g_from_c(eps, dimension vector of tilt)

  friend bool operator==(const StauNode&, const StauNode&) = default;
};

enum class ArrowKind { Internal, Gluing };

std::string_view to_string(ArrowKind kind);

struct HasseArrow {
  std::size_t from = 0;
  std::size_t to = 0;
  ArrowKind kind = ArrowKind::Internal;

  friend bool operator==(const HasseArrow&, const HasseArrow&) = default;
};

struct GluedHasse {
  std::vector<StauNode> nodes;
  std::vector<HasseArrow> arrows;
};

/// Quiver whose tilting modules form slice e: opposite(gamma_epsilon(q, e)).
/// Throws UnsupportedComponent (naming e) unless it is a union of
/// simply-laced type-A paths.
PathQuiver slice_quiver(const ValuedQuiver& q, const SignVector& e);

/// Nodes ordered by e in enumerate_signs order, then by tilting module.
std::vector<StauNode> stau_nodes(const ValuedQuiver& q);

/// One arrow per (sign flip e1 -> e2 at vertex i, tilting module U over the
/// slice quiver with i deleted), joining the unique completions of U on both
/// sides.
std::vector<std::pair<StauNode, StauNode>> gluing_arrows(const ValuedQuiver& q);

/// Arrows are listed per slice: internal arrows of the slice, then gluing
/// arrows leaving it by flipped vertex.
GluedHasse glued_hasse(const ValuedQuiver& q);

}  // namespace signdec
