#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hessring {

// Position pair (i, j) of an N-inversion: i < j and w(i) = w(j) + 1.
// LP = i, RP = j in the terminology used throughout.
struct NInversion {
  int left;
  int right;
  bool operator==(const NInversion&) const = default;
  auto operator<=>(const NInversion&) const = default;
};

// A permutation of [n] in one-line notation. Positions and values are
// 1-based; the virtual value w(0) = 0 is honored by position_of.
class Permutation {
 public:
  explicit Permutation(std::vector<int> one_line);
  static Permutation identity(int n);

  int size() const { return n_; }
  // w(i) for 1 <= i <= n, with w(0) = 0.
  int value_at(int i) const;
  // w^{-1}(v) for 1 <= v <= n, with w^{-1}(0) = 0.
  int position_of(int v) const;
  const std::vector<int>& one_line() const { return word_; }

  Permutation inverse() const;
  // Composition (this o other)(i) = this(other(i)).
  Permutation compose(const Permutation& other) const;
  // Interchanges w(m) and w(m+1), 1 <= m <= n-1.
  Permutation adjacent_swap(int m) const;
  // Interchanges w(a) and w(b), i.e. right multiplication by (a b).
  Permutation swap_positions(int a, int b) const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

  std::string to_string() const;  // one-line word, e.g. "213"

 private:
  int n_;
  std::vector<int> word_;  // word_[i-1] = w(i)
  std::vector<int> inv_;   // inv_[v-1] = w^{-1}(v)
};

std::vector<NInversion> n_inversions(const Permutation& w);

// D_w(j): N-inversions with LP <= j < RP. Requires 1 <= j <= n.
std::vector<NInversion> d_set(const Permutation& w, int j);

// |{(j,i) : j < i <= h(j), w(j) > w(i)}| for h given as raw values.
// The HessFn overload lives in hessenberg.hpp.
long long inv_h_raw(const Permutation& w, const std::vector<int>& h_values);

// All n! permutations in lexicographic order on one-line words.
// Guarded at n <= 9.
std::vector<Permutation> enumerate_sn(int n);

// Rank of w in the lexicographic enumeration (factorial number system).
long long lex_rank(const Permutation& w);
long long factorial(int n);

}  // namespace hessring
