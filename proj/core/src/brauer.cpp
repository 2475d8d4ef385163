#include "signdec/brauer.hpp"

#include <stdexcept>

#include "signdec/dynkin.hpp"

namespace signdec {

std::vector<RawArrow> brauer_line_arrows(int n) {
  if (n < 1) throw std::invalid_argument("Brauer line needs n >= 1");
  std::vector<RawArrow> arrows{{1, 1, std::nullopt}};
  for (int i = 1; i < n; ++i) {
    arrows.push_back({i, i + 1, std::nullopt});
    arrows.push_back({i + 1, i, std::nullopt});
  }
  arrows.push_back({n, n, std::nullopt});
  return arrows;
}

std::vector<RawArrow> brauer_cycle_arrows(int n) {
  if (n < 1) throw std::invalid_argument("Brauer cycle needs n >= 1");
  std::vector<RawArrow> arrows;
  for (int i = 1; i <= n; ++i) {
    const int next = i % n + 1;
    arrows.push_back({i, next, std::nullopt});
    arrows.push_back({next, i, std::nullopt});
  }
  return arrows;
}

ValuedQuiver brauer_line_rsz(int n) { return normalize(n, brauer_line_arrows(n)); }
ValuedQuiver brauer_cycle_rsz(int n) { return normalize(n, brauer_cycle_arrows(n)); }

BigCount line_count(int n) {
  if (n < 1) throw std::invalid_argument("line_count needs n >= 1");
  return binomial(static_cast<unsigned>(2 * n), static_cast<unsigned>(n));
}

BigCount cycle_count(int n) {
  if (n < 1 || n % 2 == 0) {
    throw std::invalid_argument("cycle_count needs odd n >= 1; even cycles are not tau-tilting-finite");
  }
  return BigCount(1) << (2 * n - 1);
}

std::vector<int> line_composition(const SignVector& e) {
  if (e.size() < 1 || e[1] != 1) throw std::invalid_argument("line_composition needs e(1) = +1");
  std::vector<int> parts;
  int last = 0;
  for (int i = 1; i <= e.size(); ++i) {
    if (i == e.size() || e[i] == e[i + 1]) {
      parts.push_back(i - last);
      last = i;
    }
  }
  return parts;
}

CompositionSum composition_sums(int n_max) {
  if (n_max < 1) throw std::invalid_argument("composition_sums needs n_max >= 1");
  CompositionSum p{n_max, std::vector<std::vector<BigCount>>(
                              static_cast<std::size_t>(n_max) + 1,
                              std::vector<BigCount>(static_cast<std::size_t>(n_max) + 1, 0))};
  p.at(0, 0) = 1;
  for (int n = 1; n <= n_max; ++n) {
    p.at(n, 1) = catalan(static_cast<unsigned>(n));
    for (int r = 2; r <= n; ++r) {
      for (int k = 1; k <= n - r + 1; ++k) p.at(n, r) += catalan(static_cast<unsigned>(k)) * p.at(n - k, r - 1);
    }
  }
  return p;
}

namespace {

IdentityCheck check(std::string name, int n, const BigCount& lhs, const BigCount& rhs) {
  return {std::move(name), n, lhs.str(), rhs.str(), lhs == rhs};
}

}  // namespace

std::vector<IdentityCheck> verify_identities(const CompositionSum& table) {
  std::vector<IdentityCheck> out;
  for (int n = 1; n <= table.n_max; ++n) {
    BigCount total = 0, odd = 0, even = 0;
    for (int r = 1; r <= n; ++r) {
      total += table.at(n, r);
      (r % 2 == 1 ? odd : even) += table.at(n, r);
    }
    const auto un = static_cast<unsigned>(n);
    const BigCount c_prev = catalan(un - 1);
    out.push_back(check("total-sum", n, total, binomial(2 * un, un) / 2));
    out.push_back(check("odd-parts", n, odd, n * c_prev));
    out.push_back(check("even-parts", n, even, (n - 1) * c_prev));
  }
  return out;
}

std::vector<IdentityCheck> verify_identities(int n_max) { return verify_identities(composition_sums(n_max)); }

std::vector<IdentityCheck> verify_catalan_identities(int n_max) {
  std::vector<IdentityCheck> out;
  for (int n = 1; n <= n_max; ++n) {
    const auto un = static_cast<unsigned>(n);
    BigCount convolution = 0;
    for (unsigned k = 0; k <= un; ++k) convolution += catalan(k) * catalan(un - k);
    out.push_back(check("catalan-convolution", n, catalan(un + 1), convolution));
    out.push_back(check("catalan-ratio", n, (n + 2) * catalan(un + 1), 2 * (2 * n + 1) * catalan(un)));
    BigCount central = 0;
    for (unsigned t = 0; t <= un; ++t) central += binomial(2 * t, t) * binomial(2 * (un - t), un - t);
    out.push_back(check("central-binomial", n, central, BigCount(1) << (2 * n)));
  }
  return out;
}

}  // namespace signdec
