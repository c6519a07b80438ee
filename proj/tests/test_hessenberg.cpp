#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <set>

#include "hessring/errors.hpp"
#include "hessring/hessenberg.hpp"

using namespace hessring;

TEST_CASE("validation and wire format") {
  CHECK_THROWS_AS(HessFn({2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(HessFn({0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(HessFn({1, 3}), std::invalid_argument);
  CHECK(HessFn::parse("3,3,4,5,6,6").to_string() == "3,3,4,5,6,6");
  CHECK_THROWS_AS(HessFn::parse("3,x"), std::invalid_argument);
}

TEST_CASE("enumerate_hn counts Catalan") {
  CHECK(enumerate_hn(2).size() == 2);
  CHECK(enumerate_hn(3).size() == 5);
  CHECK(enumerate_hn(4).size() == 14);
  for (int n = 1; n <= 6; ++n)
    CHECK(static_cast<long long>(enumerate_hn(n).size()) == catalan(n));

  // Brute force over all monotone dominating sequences at n=4.
  std::set<std::vector<int>> brute;
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b)
      for (int c = 1; c <= 4; ++c)
        for (int d = 1; d <= 4; ++d) {
          std::vector<int> v{a, b, c, d};
          bool ok = true;
          for (int i = 0; i < 4; ++i) ok = ok && v[i] >= i + 1;
          for (int i = 0; i < 3; ++i) ok = ok && v[i + 1] >= v[i];
          if (ok) brute.insert(v);
        }
  std::set<std::vector<int>> enumerated;
  for (const auto& h : enumerate_hn(4)) enumerated.insert(h.values());
  CHECK(brute == enumerated);
}

TEST_CASE("orders") {
  CHECK(subset_order(HessFn({1, 2, 3}), HessFn({3, 3, 3})));
  CHECK(subset_order(HessFn({2, 3, 3}), HessFn({3, 3, 3})));
  CHECK_FALSE(subset_order(HessFn({1, 3, 3}), HessFn({2, 2, 3})));

  CHECK(prec_order(HessFn({2, 3, 3}), HessFn({3, 3, 3})));
  CHECK(prec_order(HessFn({2, 2, 3}), HessFn({1, 3, 3})));
  CHECK_FALSE(prec_order(HessFn({2, 3, 3}), HessFn({2, 3, 3})));

  // prec refines subset.
  for (const auto& h1 : enumerate_hn(4))
    for (const auto& h2 : enumerate_hn(4))
      if (subset_order(h1, h2) && !(h1 == h2)) CHECK(prec_order(h1, h2));
}

TEST_CASE("dimension and negative roots") {
  CHECK(complex_dim(HessFn::parse("3,3,4,5,6,6")) == 6);
  CHECK(complex_dim(HessFn::minimal(5)) == 0);
  CHECK(complex_dim(HessFn::full(5)) == 10);
  CHECK(negative_roots(HessFn({1, 2, 3})).empty());
  CHECK(negative_roots(HessFn({2, 2, 3})) ==
        std::vector<std::pair<int, int>>{{2, 1}});
  CHECK(negative_roots(HessFn::parse("3,3,4,5,6,6")).size() == 6);
  for (const auto& h : enumerate_hn(5))
    CHECK(static_cast<int>(negative_roots(h).size()) == complex_dim(h));
}

TEST_CASE("minimal Hessenberg function h_w") {
  CHECK(minimal_hess(Permutation({1, 2, 3})) == HessFn({1, 2, 3}));
  CHECK(minimal_hess(Permutation({2, 3, 1})) == HessFn({3, 3, 3}));
  CHECK(minimal_hess(Permutation({3, 2, 1})) == HessFn({2, 3, 3}));
  for (int n = 1; n <= 6; ++n)
    CHECK(minimal_hess(Permutation::identity(n)) == HessFn::minimal(n));

  // The RP-max definition and the position formula agree.
  for (int n = 2; n <= 6; ++n)
    for (const auto& w : enumerate_sn(n))
      CHECK(minimal_hess(w) == minimal_hess_via_positions(w));
}

TEST_CASE("D_w(j) empty iff prefix property") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& w : enumerate_sn(n))
      for (int j = 1; j <= n; ++j) {
        int maxv = 0;
        for (int p = 1; p <= j; ++p) maxv = std::max(maxv, w.value_at(p));
        CHECK(d_set(w, j).empty() == (maxv == j));
      }
}

TEST_CASE("fixed points") {
  CHECK(fixed_points(HessFn::full(3)).size() == 6);
  CHECK(fixed_points(HessFn::minimal(4)) ==
        std::vector<Permutation>{Permutation::identity(4)});
  auto fp = fixed_points(HessFn({2, 3, 3}));
  CHECK(fp == std::vector<Permutation>{Permutation({1, 2, 3}), Permutation({1, 3, 2}),
                                       Permutation({2, 1, 3}), Permutation({3, 2, 1})});
  // Peterson case has 2^{n-1} fixed points.
  CHECK(fixed_points(HessFn({2, 3, 4, 4})).size() == 8);
}

TEST_CASE("h_w is the subset-minimum over fixing h") {
  for (int n = 2; n <= 5; ++n) {
    auto hs = enumerate_hn(n);
    for (const auto& w : enumerate_sn(n)) {
      HessFn hw = minimal_hess(w);
      CHECK(is_fixed_point(hw, w));
      for (const auto& h : hs)
        if (is_fixed_point(h, w)) CHECK(subset_order(hw, h));
    }
  }
}

TEST_CASE("corner lemma") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& w : enumerate_sn(n)) {
      HessFn hw = minimal_hess(w);
      for (int j = 1; j <= n - 1; ++j) {
        if (d_set(w, j).empty()) continue;
        bool corner = hw.value_at(j) == w.position_of(w.value_at(j) - 1);
        int prev = (j >= 2) ? hw.value_at(j - 1) : 0;
        CHECK(corner == (prev < hw.value_at(j)));
      }
    }
}

TEST_CASE("split_at") {
  auto [a1, a2] = split_at(HessFn({1, 2, 3}), 1);
  CHECK(a1 == HessFn({1}));
  CHECK(a2 == HessFn({1, 2}));
  auto [b1, b2] = split_at(HessFn({2, 2, 3}), 2);
  CHECK(b1 == HessFn({2, 2}));
  CHECK(b2 == HessFn({1}));
  auto [c1, c2] = split_at(HessFn({1, 3, 3}), 1);
  CHECK(c1 == HessFn({1}));
  CHECK(c2 == HessFn({2, 2}));
  CHECK_THROWS_AS(split_at(HessFn({2, 2, 3}), 1), std::invalid_argument);
}

TEST_CASE("enumeration guards and the override") {
  CHECK_THROWS_AS(enumerate_hn(9), guard_error);
  setenv("HESSRING_GUARD_OVERRIDE", "1", 1);
  CHECK(enumerate_hn(9).size() == 4862);  // Catalan(9)
  unsetenv("HESSRING_GUARD_OVERRIDE");
  CHECK_THROWS_AS(enumerate_hn(9), guard_error);
}

TEST_CASE("incomparability graph") {
  CHECK(incomparability_graph(HessFn::minimal(4)).edges.empty());
  CHECK(incomparability_graph(HessFn::full(4)).edges.size() == 6);
  auto g = incomparability_graph(HessFn({2, 3, 3}));
  CHECK(g.edges == std::vector<std::pair<int, int>>{{2, 1}, {3, 2}});
}
