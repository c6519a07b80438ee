#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hessring/hessenberg.hpp"
#include "hessring/perm.hpp"

using namespace hessring;

TEST_CASE("one-line construction and the w(0)=0 convention") {
  Permutation w({2, 3, 1});
  CHECK(w.value_at(1) == 2);
  CHECK(w.value_at(0) == 0);
  CHECK(w.position_of(0) == 0);
  CHECK(w.position_of(3) == 2);
  CHECK_THROWS_AS(Permutation({1, 1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 1, 2}), std::invalid_argument);
}

TEST_CASE("inverse") {
  CHECK(Permutation({1, 2, 3}).inverse() == Permutation({1, 2, 3}));
  CHECK(Permutation({2, 3, 1}).inverse() == Permutation({3, 1, 2}));
  CHECK(Permutation({3, 1, 2}).inverse() == Permutation({2, 3, 1}));
  for (const auto& w : enumerate_sn(5)) CHECK(w.inverse().inverse() == w);
}

TEST_CASE("n-inversions") {
  CHECK(n_inversions(Permutation({1, 2, 3})).empty());
  CHECK(n_inversions(Permutation({2, 3, 1})) == std::vector<NInversion>{{1, 3}});
  CHECK(n_inversions(Permutation({3, 2, 1})) == std::vector<NInversion>{{1, 2}, {2, 3}});

  // Oracle: exhaustive pair scan.
  for (const auto& w : enumerate_sn(5)) {
    std::vector<NInversion> expected;
    for (int i = 1; i <= 5; ++i)
      for (int j = i + 1; j <= 5; ++j)
        if (w.value_at(i) == w.value_at(j) + 1) expected.push_back({i, j});
    CHECK(n_inversions(w) == expected);
  }
}

TEST_CASE("d_set filtering") {
  Permutation w({1, 3, 2});
  CHECK(d_set(w, 1).empty());
  CHECK(d_set(w, 2) == std::vector<NInversion>{{2, 3}});
  CHECK(d_set(Permutation({3, 2, 1}), 2) == std::vector<NInversion>{{2, 3}});
  CHECK_THROWS_AS(d_set(w, 0), std::out_of_range);
}

TEST_CASE("adjacent_swap") {
  CHECK(Permutation({1, 2, 3}).adjacent_swap(1) == Permutation({2, 1, 3}));
  CHECK(Permutation({2, 3, 1}).adjacent_swap(2) == Permutation({2, 1, 3}));
  CHECK(Permutation({3, 1, 2}).adjacent_swap(2) == Permutation({3, 2, 1}));
  CHECK_THROWS_AS(Permutation({1, 2}).adjacent_swap(2), std::out_of_range);
  for (const auto& w : enumerate_sn(4))
    for (int m = 1; m <= 3; ++m) CHECK(w.adjacent_swap(m).adjacent_swap(m) == w);
}

TEST_CASE("inv_h statistic") {
  for (const auto& w : enumerate_sn(4)) CHECK(inv_h(w, HessFn::minimal(4)) == 0);
  CHECK(inv_h(Permutation({2, 1}), HessFn({2, 2})) == 1);
  CHECK(inv_h(Permutation({3, 2, 1}), HessFn({3, 3, 3})) == 3);

  // Against the full inversion count for the complete Hessenberg function.
  for (const auto& w : enumerate_sn(5)) {
    long long invs = 0;
    for (int i = 1; i <= 5; ++i)
      for (int j = i + 1; j <= 5; ++j)
        if (w.value_at(i) > w.value_at(j)) ++invs;
    CHECK(inv_h(w, HessFn::full(5)) == invs);
  }
}

TEST_CASE("enumerate_sn is lexicographic and complete") {
  CHECK(enumerate_sn(1) == std::vector<Permutation>{Permutation({1})});
  CHECK(enumerate_sn(2) == std::vector<Permutation>{Permutation({1, 2}), Permutation({2, 1})});
  auto s3 = enumerate_sn(3);
  CHECK(s3.size() == 6);
  CHECK(s3.front() == Permutation({1, 2, 3}));
  CHECK(s3.back() == Permutation({3, 2, 1}));
  for (size_t i = 0; i + 1 < s3.size(); ++i) CHECK(s3[i] < s3[i + 1]);
  CHECK_THROWS_AS(enumerate_sn(0), std::invalid_argument);

  for (const auto& w : enumerate_sn(4)) CHECK(enumerate_sn(4)[lex_rank(w)] == w);
}
