#pragma once

// Brauer line and Brauer cycle algebras, modeled by their radical-square-zero
// quotients, together with their closed-form counts and the composition-sum
// identities behind them.

#include <string>
#include <vector>

#include "signdec/count.hpp"
#include "signdec/quiver.hpp"

namespace signdec {

/// Arrows a_0 (loop at 1), a_i: i -> i+1, b_i: i+1 -> i, b_n (loop at n);
/// 2n unit arrows in total.
std::vector<RawArrow> brauer_line_arrows(int n);
/// alpha_i: i -> i+1 and beta_i: i+1 -> i with indices mod n.
std::vector<RawArrow> brauer_cycle_arrows(int n);

// normalize() of the arrow lists above. Throw std::invalid_argument for n < 1.
ValuedQuiver brauer_line_rsz(int n);
ValuedQuiver brauer_cycle_rsz(int n);

BigCount line_count(int n);   // binom(2n, n)
BigCount cycle_count(int n);  // 2^(2n-1); n must be odd

/// Parts (b_1, ..., b_r) of n read off a sign vector with e(1) = +1: part
/// boundaries sit after each i with e(i) = e(i+1), and after n.
std::vector<int> line_composition(const SignVector& e);

/// P[n][r]: sum over compositions of n into r positive parts of the product
/// of Catalan numbers of the parts. Indexed 0..n_max in both coordinates.
struct CompositionSum {
  int n_max = 0;
  std::vector<std::vector<BigCount>> table;

  const BigCount& at(int n, int r) const {
    return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(r)];
  }
  BigCount& at(int n, int r) { return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(r)]; }
};

/// P[n][1] = C_n and P[n][r] = sum_k C_k P[n-k][r-1].
CompositionSum composition_sums(int n_max);

struct IdentityCheck {
  std::string name;
  int n = 0;
  std::string lhs;
  std::string rhs;
  bool ok = false;
};

/// For 1 <= n <= table.n_max: sum_r P = binom(2n,n)/2, odd-r sum = n C_{n-1},
/// even-r sum = (n-1) C_{n-1}.
std::vector<IdentityCheck> verify_identities(const CompositionSum& table);
std::vector<IdentityCheck> verify_identities(int n_max);

/// Catalan convolution, the ratio recurrence and the central-binomial
/// convolution sum_t binom(2t,t) binom(2(n-t),n-t) = 4^n, for 1 <= n <= n_max.
std::vector<IdentityCheck> verify_catalan_identities(int n_max);

}  // namespace signdec
