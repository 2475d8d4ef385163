#include <doctest.h>

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "signdec/brauer.hpp"
#include "signdec/sign_decomposition.hpp"

using namespace signdec;

TEST_CASE("sign vectors are enumerated with +1 before -1") {
  std::vector<SignVector> got(enumerate_signs(2).begin(), enumerate_signs(2).end());
  const std::vector<SignVector> want{SignVector({1, 1}), SignVector({1, -1}), SignVector({-1, 1}),
                                     SignVector({-1, -1})};
  CHECK(got == want);
  CHECK(enumerate_signs(3).at(2) == SignVector({1, -1, 1}));
  CHECK(enumerate_signs(3).at(6) == SignVector({-1, -1, 1}));
  CHECK_THROWS_AS(SignVectors(0), std::invalid_argument);
  CHECK_THROWS_AS(SignVectors(63), std::invalid_argument);
}

TEST_CASE("enumeration visits 2^n distinct vectors in increasing order") {
  const SignVectors signs(10);
  CHECK(signs.size() == 1024);
  std::uint64_t visited = 0;
  SignVector prev;
  for (const SignVector& e : signs) {
    if (visited > 0) {
      std::size_t i = 0;
      while (prev.values()[i] == e.values()[i]) ++i;
      CHECK(prev.values()[i] == 1);
      CHECK(e.values()[i] == -1);
    }
    prev = e;
    ++visited;
  }
  CHECK(visited == 1024);
}

TEST_CASE("finiteness examples") {
  CHECK(is_tau_tilting_finite(oracle::three_cycle()));
  CHECK(is_tau_tilting_finite(ValuedQuiver(3, {})));
  CHECK(is_tau_tilting_finite(ValuedQuiver(1, {{1, 1, {}}})));
  CHECK_FALSE(is_tau_tilting_finite(ValuedQuiver(2, {{1, 2, {2, 2}}})));
  CHECK_FALSE(is_tau_tilting_finite(brauer_cycle_rsz(2)));
  CHECK(is_tau_tilting_finite(ValuedQuiver(4, {{1, 2, {}}, {1, 3, {}}, {1, 4, {}}})));
  CHECK_FALSE(is_tau_tilting_finite(ValuedQuiver(5, {{1, 2, {}}, {1, 3, {}}, {1, 4, {}}, {1, 5, {}}})));

  const auto w = find_infinite_witness(brauer_cycle_rsz(2));
  REQUIRE(w.has_value());
  CHECK(w->eps == SignVector({1, -1}));
  CHECK(w->component.vertices == std::vector<int>{1, 2});
  CHECK(w->component.type.family == DynkinFamily::NonDynkin);
  CHECK_FALSE(find_infinite_witness(oracle::three_cycle()).has_value());
}

TEST_CASE("separated quiver") {
  const ValuedQuiver s = separated_quiver(ValuedQuiver(2, {{1, 1, {}}, {1, 2, {1, 2}}}));
  CHECK(s.size() == 4);
  CHECK(s == ValuedQuiver(4, {{1, 3, {}}, {1, 4, {1, 2}}}));
}

TEST_CASE("both finiteness routes agree on random quivers") {
  std::mt19937 rng(23);
  int infinite = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 6;
    const ValuedQuiver q = oracle::random_quiver(rng, n, 0.25 + 0.05 * (trial % 4), 1 + trial % 3);
    const bool finite = is_tau_tilting_finite(q);
    CHECK(finite == is_tau_tilting_finite_separated(q));
    CHECK(finite == count_stau(q).is_finite());
    CHECK(finite == !find_infinite_witness(q).has_value());
    infinite += finite ? 0 : 1;
  }
  CHECK(infinite > 0);
  CHECK(infinite < 300);
}

TEST_CASE("counts") {
  CHECK(count_stau(oracle::three_cycle()) == Count(14));
  CHECK(count_stau(ValuedQuiver(3, {})) == Count(8));
  CHECK(count_stau(ValuedQuiver(1, {})) == Count(2));
  CHECK(count_stau(ValuedQuiver(1, {{1, 1, {}}})) == Count(2));
  CHECK(count_stau(ValuedQuiver(2, {{1, 2, {}}})) == Count(5));
  CHECK(count_stau(ValuedQuiver(2, {{1, 2, {1, 2}}})) == Count(6));
  CHECK(count_stau(ValuedQuiver(2, {{1, 2, {1, 3}}})) == Count(8));
  CHECK(count_stau(brauer_cycle_rsz(2)).is_infinite());
  CHECK(count_stau_epsilon(oracle::three_cycle(), SignVector({1, -1, 1})) == Count(2));
}

TEST_CASE("slice description") {
  const SliceSummary s = describe_slice(oracle::three_cycle(), SignVector({1, -1, 1}));
  REQUIRE(s.components.size() == 2);
  CHECK(s.components[0].vertices == std::vector<int>{1, 2});
  CHECK(s.components[0].type.name() == "A2");
  CHECK(s.components[1].vertices == std::vector<int>{3});
  CHECK(s.components[1].type.name() == "A1");
  CHECK(s.count == Count(2));
  CHECK_FALSE(s.two_term_tilting);
}

TEST_CASE("count_stau is the serial sum over slices") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 60; ++trial) {
    const ValuedQuiver q = oracle::random_quiver(rng, 1 + trial % 7, 0.2, 2);
    Count serial = 0;
    for (const SignVector& e : enumerate_signs(q.size())) serial += count_stau_epsilon(q, e);
    CHECK(count_stau(q) == serial);
  }
}

TEST_CASE("symmetric quivers: e and -e give equal counts, so the e(1) = +1 half is half the total") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 1 + trial % 6;
    const ValuedQuiver base = oracle::random_quiver(rng, n, 0.25, 1);
    std::vector<Arrow> arrows;
    for (const Arrow& a : base.arrows()) {
      if (a.src <= a.tgt) {
        arrows.push_back({a.src, a.tgt, {}});
        if (a.src != a.tgt) arrows.push_back({a.tgt, a.src, {}});
      }
    }
    const ValuedQuiver q(n, arrows);
    Count half = 0;
    for (const SignVector& e : enumerate_signs(n)) {
      CHECK(count_stau_epsilon(q, e) == count_stau_epsilon(q, e.negated()));
      if (e[1] == 1) half += count_stau_epsilon(q, e);
    }
    CHECK(count_stau(q) == half + half);
  }
}
