#include <doctest.h>

#include <stdexcept>

#include "weight.hpp"

using namespace drinfilt;

TEST_CASE("dot action closed form") {
  // w_1 * (0,0,0) = (-1,1,0)
  CHECK(dot_action(WeylWord(2, 1), Weight{0, 0, 0}) == Weight{-1, 1, 0});
  // w_0 is the identity
  Weight lam{3, 1, -2};
  CHECK(dot_action(WeylWord(2, 0), lam) == lam);
  // w_2 * (-2,1,1) = (0,0,0)
  CHECK(dot_action(WeylWord(2, 2), Weight{-2, 1, 1}) == Weight{0, 0, 0});
  CHECK_THROWS_AS(dot_action(WeylWord(2, 1), Weight{0, 0}), std::invalid_argument);
}

TEST_CASE("weyl words") {
  CHECK(WeylWord(3, 0).perm() == Perm::identity(4));
  CHECK(WeylWord(3, 0).length() == 0);
  CHECK(WeylWord(3, 2).length() == 2);
  // w_i moves coordinate 0 to slot i
  Weight chi{9, 1, 2, 3};
  CHECK(WeylWord(3, 2).perm().apply(chi) == Weight{1, 2, 9, 3});
}

TEST_CASE("root data conventions") {
  RootSystem rs(3);
  CHECK(rs.rho() == Weight{0, -1, -2, -3});
  CHECK(rs.simple_root(0) == rs.root(1, 0));
  CHECK(rs.simple_roots().size() == 3);
  CHECK(rs.all_roots().size() == 12);
}

TEST_CASE("bott index") {
  auto a = find_bott_index(2, Weight{0, 0, 0});
  CHECK(a.i0 == 0);
  CHECK(a.kind == BottCase::dominant_regular);
  auto b = find_bott_index(2, Weight{-1, 1, 0});
  CHECK(b.i0 == 1);
  CHECK(b.kind == BottCase::dominant_regular);
  auto c = find_bott_index(2, Weight{0, 1, 0});
  CHECK(c.i0 == 0);
  CHECK(c.kind == BottCase::degenerate);
  CHECK_THROWS_AS(find_bott_index(2, Weight{0, 0, 1}), std::domain_error);
}

TEST_CASE("dominance order") {
  CHECK(dominance_compare(Weight{0, 0, 0}, Weight{-1, 1, 0}) == DominanceOrder::greater);
  Weight mu{2, -1, 0};
  CHECK(dominance_compare(mu, mu) == DominanceOrder::equal);
  CHECK(dominance_compare(Weight{1, -1, 0}, Weight{0, 1, -1}) == DominanceOrder::incomparable);
  CHECK(dominance_compare(Weight{1, 0}, Weight{0, 0}) == DominanceOrder::incomparable);
  CHECK_THROWS_AS(dominance_compare(Weight{1, 0}, Weight{0}), std::invalid_argument);
}

TEST_CASE("degenerate collision is the smallest and unique") {
  for (long long l0 = -3; l0 <= 3; ++l0)
    for (long long l1 = -2; l1 <= 2; ++l1)
      for (long long l2 = -2; l2 <= l1; ++l2) {
        Weight lam{l0, l1, l2};
        BottIndex bi = find_bott_index(2, lam);
        if (bi.kind != BottCase::degenerate) continue;
        int collisions = 0;
        for (int i = 0; i < 2; ++i)
          if (dot_action(WeylWord(2, i), lam) == dot_action(WeylWord(2, i + 1), lam)) {
            ++collisions;
            CHECK(bi.i0 <= i);
          }
        CHECK(collisions == 1);
      }
}
