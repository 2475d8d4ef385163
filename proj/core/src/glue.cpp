#include "signdec/glue.hpp"

#include <map>
#include <stdexcept>

#include "signdec/errors.hpp"
#include "signdec/sign_decomposition.hpp"

namespace signdec {

std::string_view to_string(ArrowKind kind) { return kind == ArrowKind::Internal ? "internal" : "gluing"; }

PathQuiver slice_quiver(const ValuedQuiver& q, const SignVector& e) {
  try {
    return PathQuiver::from_quiver(opposite(gamma_epsilon(q, e)));
  } catch (const UnsupportedComponent& err) {
    throw UnsupportedComponent("unsupported component type at eps=" + e.to_string() + ": " + err.what());
  }
}

namespace {

struct SliceNodes {
  SignVector eps;
  PathQuiver quiver;
  TiltHasse hasse;
};

StauNode make_node(const SliceNodes& slice, const TiltingModule& t) {
  return {slice.eps, t, g_from_c(slice.eps, dimension_vector(slice.quiver, t))};
}

std::vector<SliceNodes> all_slices(const ValuedQuiver& q) {
  std::vector<SliceNodes> slices;
  for (const SignVector& e : enumerate_signs(q.size())) {
    PathQuiver p = slice_quiver(q, e);
    TiltHasse h = tilt_hasse(p);
    slices.push_back({e, std::move(p), std::move(h)});
  }
  return slices;
}

struct GluingArrow {
  std::size_t slice_from;
  TiltingModule from;
  std::size_t slice_to;
  TiltingModule to;
};

// Gluing arrows leaving `slices[k]`, by flipped vertex then U.
std::vector<GluingArrow> gluing_from(const std::vector<SliceNodes>& slices, std::size_t k) {
  const SliceNodes& upper = slices[k];
  const int n = upper.eps.size();
  std::vector<GluingArrow> out;
  for (int i = 1; i <= n; ++i) {
    if (upper.eps[i] != 1) continue;
    // Flipping i to -1 sets bit (n - i) of the slice index.
    const std::size_t target = k | (std::size_t{1} << (n - i));
    const SliceNodes& lower = slices[target];
    const PathQuiver deleted = upper.quiver.without_vertex(i);
    if (deleted != lower.quiver.without_vertex(i)) {
      throw std::logic_error("slice quivers disagree away from the flipped vertex");
    }
    for (const TiltingModule& u : tilting_modules(deleted)) {
      out.push_back({k, bongartz_complete(upper.quiver, u.summands, i), target,
                     bongartz_complete(lower.quiver, u.summands, i)});
    }
  }
  return out;
}

}  // namespace

std::vector<StauNode> stau_nodes(const ValuedQuiver& q) {
  std::vector<StauNode> nodes;
  for (const SliceNodes& slice : all_slices(q)) {
    for (const TiltingModule& t : slice.hasse.modules) nodes.push_back(make_node(slice, t));
  }
  return nodes;
}

std::vector<std::pair<StauNode, StauNode>> gluing_arrows(const ValuedQuiver& q) {
  const auto slices = all_slices(q);
  std::vector<std::pair<StauNode, StauNode>> out;
  for (std::size_t k = 0; k < slices.size(); ++k) {
    for (const GluingArrow& a : gluing_from(slices, k)) {
      out.emplace_back(make_node(slices[a.slice_from], a.from), make_node(slices[a.slice_to], a.to));
    }
  }
  return out;
}

GluedHasse glued_hasse(const ValuedQuiver& q) {
  const auto slices = all_slices(q);
  GluedHasse h;
  std::vector<std::size_t> offset;
  std::vector<std::map<TiltingModule, std::size_t>> index(slices.size());
  for (std::size_t k = 0; k < slices.size(); ++k) {
    offset.push_back(h.nodes.size());
    for (const TiltingModule& t : slices[k].hasse.modules) {
      index[k].emplace(t, h.nodes.size());
      h.nodes.push_back(make_node(slices[k], t));
    }
  }
  auto lookup = [&](std::size_t k, const TiltingModule& t) {
    auto it = index[k].find(t);
    if (it == index[k].end()) throw std::logic_error("completion is not a tilting module of its slice");
    return it->second;
  };
  for (std::size_t k = 0; k < slices.size(); ++k) {
    for (const auto& [from, to] : slices[k].hasse.arrows) {
      h.arrows.push_back({offset[k] + from, offset[k] + to, ArrowKind::Internal});
    }
    for (const GluingArrow& a : gluing_from(slices, k)) {
      h.arrows.push_back({lookup(a.slice_from, a.from), lookup(a.slice_to, a.to), ArrowKind::Gluing});
    }
  }
  return h;
}

}  // namespace signdec
