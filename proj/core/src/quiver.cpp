#include "signdec/quiver.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "signdec/errors.hpp"

namespace signdec {

ValuedQuiver::ValuedQuiver(int n, std::vector<Arrow> arrows) : n_(n), arrows_(std::move(arrows)) {
  if (n_ < 0) throw std::invalid_argument("negative vertex count");
  for (const Arrow& a : arrows_) {
    if (a.src < 1 || a.src > n_ || a.tgt < 1 || a.tgt > n_) {
      throw std::invalid_argument("arrow " + std::to_string(a.src) + "->" + std::to_string(a.tgt) +
                                  " out of range 1.." + std::to_string(n_));
    }
    if (a.val.d_prime < 1 || a.val.d_dprime < 1) {
      throw std::invalid_argument("non-positive valuation");
    }
  }
  std::sort(arrows_.begin(), arrows_.end());
  for (std::size_t i = 1; i < arrows_.size(); ++i) {
    if (arrows_[i - 1].src == arrows_[i].src && arrows_[i - 1].tgt == arrows_[i].tgt) {
      throw std::invalid_argument("duplicate arrow " + std::to_string(arrows_[i].src) + "->" +
                                  std::to_string(arrows_[i].tgt));
    }
  }
}

std::optional<Valuation> ValuedQuiver::valuation(int src, int tgt) const {
  auto it = std::lower_bound(arrows_.begin(), arrows_.end(), std::pair{src, tgt},
                             [](const Arrow& a, const std::pair<int, int>& key) {
                               return std::pair{a.src, a.tgt} < key;
                             });
  if (it != arrows_.end() && it->src == src && it->tgt == tgt) return it->val;
  return std::nullopt;
}

bool ValuedQuiver::has_loops() const {
  return std::any_of(arrows_.begin(), arrows_.end(), [](const Arrow& a) { return a.is_loop(); });
}

bool ValuedQuiver::is_symmetric() const {
  return std::all_of(arrows_.begin(), arrows_.end(), [this](const Arrow& a) {
    return valuation(a.tgt, a.src) == a.val.transposed();
  });
}

int ValuedQuiver::out_degree(int v) const {
  return static_cast<int>(
      std::count_if(arrows_.begin(), arrows_.end(), [v](const Arrow& a) { return a.src == v; }));
}

int ValuedQuiver::in_degree(int v) const {
  return static_cast<int>(
      std::count_if(arrows_.begin(), arrows_.end(), [v](const Arrow& a) { return a.tgt == v; }));
}

SignVector::SignVector(std::vector<int> signs) : signs_(std::move(signs)) {
  for (int s : signs_) {
    if (s != 1 && s != -1) throw std::invalid_argument("sign entries must be +1 or -1");
  }
}

SignVector SignVector::all(int n, int sign) {
  return SignVector(std::vector<int>(static_cast<std::size_t>(n), sign));
}

SignVector SignVector::negated() const {
  std::vector<int> out = signs_;
  for (int& s : out) s = -s;
  return SignVector(std::move(out));
}

SignVector SignVector::flipped(int vertex) const {
  std::vector<int> out = signs_;
  out.at(static_cast<std::size_t>(vertex - 1)) *= -1;
  return SignVector(std::move(out));
}

std::string SignVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < signs_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(signs_[i]);
  }
  return out + ")";
}

ValuedQuiver normalize(int n, std::span<const RawArrow> raw) {
  struct Slot {
    int units = 0;
    std::optional<Valuation> explicit_val;
  };
  std::map<std::pair<int, int>, Slot> slots;
  for (const RawArrow& r : raw) {
    Slot& slot = slots[{r.src, r.tgt}];
    const std::string pair = std::to_string(r.src) + "->" + std::to_string(r.tgt);
    if (r.val) {
      if (slot.explicit_val) throw std::invalid_argument("repeated valued arrow " + pair);
      if (slot.units > 0) throw std::invalid_argument("valued arrow mixed with unit arrows " + pair);
      slot.explicit_val = r.val;
    } else {
      if (slot.explicit_val) throw std::invalid_argument("valued arrow mixed with unit arrows " + pair);
      ++slot.units;
    }
  }
  std::vector<Arrow> arrows;
  arrows.reserve(slots.size());
  for (const auto& [key, slot] : slots) {
    Valuation val = slot.explicit_val ? *slot.explicit_val : Valuation{slot.units, slot.units};
    arrows.push_back({key.first, key.second, val});
  }
  return ValuedQuiver(n, std::move(arrows));
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

int parse_int(std::string_view token, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

ValuedQuiver parse_quiver(std::string_view text) {
  std::optional<int> n;
  std::vector<RawArrow> raw;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = split_ws(line);
    if (tokens.empty()) continue;

    if (tokens[0] == "n") {
      if (n) throw ParseError(line_no, "vertex count given twice");
      if (tokens.size() != 2) throw ParseError(line_no, "expected 'n <count>'");
      n = parse_int(tokens[1], line_no);
      if (*n < 1) throw ParseError(line_no, "vertex count must be positive");
    } else if (tokens[0] == "a") {
      if (!n) throw ParseError(line_no, "'n <count>' must precede arrows");
      if (tokens.size() != 3 && tokens.size() != 5) {
        throw ParseError(line_no, "expected 'a <src> <tgt>' or 'a <src> <tgt> <d'> <d''>'");
      }
      RawArrow r{parse_int(tokens[1], line_no), parse_int(tokens[2], line_no), std::nullopt};
      for (int v : {r.src, r.tgt}) {
        if (v < 1 || v > *n) {
          throw ParseError(line_no, "vertex " + std::to_string(v) + " out of range 1.." +
                                        std::to_string(*n));
        }
      }
      if (tokens.size() == 5) {
        Valuation val{parse_int(tokens[3], line_no), parse_int(tokens[4], line_no)};
        if (val.d_prime < 1 || val.d_dprime < 1) throw ParseError(line_no, "non-positive valuation");
        r.val = val;
      }
      raw.push_back(r);
      try {
        // Surface merge conflicts at the offending line.
        (void)normalize(*n, raw);
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
      }
    } else {
      throw ParseError(line_no, "unknown directive '" + std::string(tokens[0]) + "'");
    }
  }
  if (!n) throw ParseError(0, "missing 'n <count>' line");
  return normalize(*n, raw);
}

std::string format_quiver(const ValuedQuiver& q) {
  std::ostringstream out;
  out << "n " << q.size() << '\n';
  for (const Arrow& a : q.arrows()) {
    out << "a " << a.src << ' ' << a.tgt;
    if (!a.val.simply_laced()) out << ' ' << a.val.d_prime << ' ' << a.val.d_dprime;
    out << '\n';
  }
  return out.str();
}

ValuedQuiver gamma_epsilon(const ValuedQuiver& q, const SignVector& e) {
  if (e.size() != q.size()) throw std::invalid_argument("sign vector length mismatch");
  std::vector<Arrow> kept;
  for (const Arrow& a : q.arrows()) {
    if (e[a.src] == 1 && e[a.tgt] == -1) kept.push_back(a);
  }
  return ValuedQuiver(q.size(), std::move(kept));
}

ValuedQuiver opposite(const ValuedQuiver& q) {
  std::vector<Arrow> reversed;
  reversed.reserve(q.arrows().size());
  for (const Arrow& a : q.arrows()) reversed.push_back({a.tgt, a.src, a.val.transposed()});
  return ValuedQuiver(q.size(), std::move(reversed));
}

ValuedQuiver induced_subquiver(const ValuedQuiver& q, std::span<const int> vertices) {
  std::vector<int> local(static_cast<std::size_t>(q.size()) + 1, 0);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    local.at(static_cast<std::size_t>(vertices[i])) = static_cast<int>(i) + 1;
  }
  std::vector<Arrow> arrows;
  for (const Arrow& a : q.arrows()) {
    int s = local[static_cast<std::size_t>(a.src)];
    int t = local[static_cast<std::size_t>(a.tgt)];
    if (s != 0 && t != 0) arrows.push_back({s, t, a.val});
  }
  return ValuedQuiver(static_cast<int>(vertices.size()), std::move(arrows));
}

std::vector<Component> components(const ValuedQuiver& q) {
  // Union-find over 1..n.
  std::vector<int> parent(static_cast<std::size_t>(q.size()) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      auto& p = parent[static_cast<std::size_t>(v)];
      p = parent[static_cast<std::size_t>(p)];
      v = p;
    }
    return v;
  };
  for (const Arrow& a : q.arrows()) {
    int ra = find(a.src);
    int rb = find(a.tgt);
    if (ra != rb) parent[static_cast<std::size_t>(std::max(ra, rb))] = std::min(ra, rb);
  }
  // Roots are minimal vertices, so iterating 1..n yields the required order.
  std::map<int, std::vector<int>> groups;
  for (int v = 1; v <= q.size(); ++v) groups[find(v)].push_back(v);

  std::vector<Component> out;
  out.reserve(groups.size());
  for (auto& [root, verts] : groups) {
    ValuedQuiver sub = induced_subquiver(q, verts);
    out.push_back({std::move(verts), std::move(sub)});
  }
  return out;
}

ValuedGraph underlying_graph(const ValuedQuiver& q) {
  ValuedGraph g{q.size(), {}};
  for (const Arrow& a : q.arrows()) {
    if (a.is_loop()) throw std::invalid_argument("underlying_graph: loop at " + std::to_string(a.src));
    if (q.has_arrow(a.tgt, a.src)) {
      throw std::invalid_argument("underlying_graph: 2-cycle between " + std::to_string(a.src) +
                                  " and " + std::to_string(a.tgt));
    }
    g.edges.push_back({std::min(a.src, a.tgt), std::max(a.src, a.tgt),
                       std::min(a.val.d_prime, a.val.d_dprime),
                       std::max(a.val.d_prime, a.val.d_dprime)});
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

std::optional<SignVector> is_rsz_hereditary_bipartite(const ValuedQuiver& q) {
  std::vector<int> signs(static_cast<std::size_t>(q.size()), 1);
  for (int v = 1; v <= q.size(); ++v) {
    const int out = q.out_degree(v);
    const int in = q.in_degree(v);
    if (out > 0 && in > 0) return std::nullopt;  // includes loops
    if (in > 0) signs[static_cast<std::size_t>(v - 1)] = -1;
  }
  return SignVector(std::move(signs));
}

bool two_term_tilting_predicate(const ValuedQuiver& q, const SignVector& e) {
  if (e.size() != q.size()) throw std::invalid_argument("sign vector length mismatch");
  return std::none_of(q.arrows().begin(), q.arrows().end(),
                      [&](const Arrow& a) { return e[a.src] == -1 && e[a.tgt] == 1; });
}

}  // namespace signdec
