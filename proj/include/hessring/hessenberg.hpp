#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hessring/perm.hpp"

namespace hessring {

// A Hessenberg function h:[n] -> [n], validated on construction:
// h(i) >= i and h(i+1) >= h(i).
class HessFn {
 public:
  explicit HessFn(std::vector<int> values);
  static HessFn parse(const std::string& csv);  // "3,3,4,5,6,6"
  static HessFn minimal(int n);                 // (1,2,...,n)
  static HessFn full(int n);                    // (n,...,n)

  int size() const { return n_; }
  int value_at(int j) const;  // h(j), 1 <= j <= n
  const std::vector<int>& values() const { return values_; }

  bool operator==(const HessFn&) const = default;
  auto operator<=>(const HessFn&) const = default;

  std::string to_string() const;  // CLI wire format "h1,h2,...,hn"

 private:
  int n_;
  std::vector<int> values_;
};

// Incomparability graph of the natural unit interval order P(h):
// vertices [n], edges {i,j} with j < i <= h(j).
struct IncGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // stored as (i, j) with i > j
};

// All of H_n in lexicographic order; |H_n| = Catalan(n). Guarded at n <= 8.
std::vector<HessFn> enumerate_hn(int n);

// h1 subset h2: h1(j) <= h2(j) for all j.
bool subset_order(const HessFn& h1, const HessFn& h2);

// Reverse-lexicographic refinement: exists m with h1(j) = h2(j) for j > m
// and h1(m) < h2(m). Strict.
bool prec_order(const HessFn& h1, const HessFn& h2);

// sum_j (h(j) - j) = |NR(h)| = dim_C Hess(N,h) = dim_C Hess(S,h).
int complex_dim(const HessFn& h);

// NR(h) = {(i,j) : j < i <= h(j)}, as (i, j) pairs.
std::vector<std::pair<int, int>> negative_roots(const HessFn& h);

// The minimal Hessenberg function h_w: h_w(j) = j when D_w(j) is empty,
// else max RP over D_w(j).
HessFn minimal_hess(const Permutation& w);

// Same value computed from max{w^{-1}(w(p)-1) : p <= j} when D_w(j) is
// nonempty; used to cross-check minimal_hess.
HessFn minimal_hess_via_positions(const Permutation& w);

// Direct criterion: w^{-1}(w(j)-1) <= h(j) for all j.
bool is_fixed_point(const HessFn& h, const Permutation& w);

// {w : w^{-1}(w(j)-1) <= h(j) for all j}. Runs both the inequality
// criterion and the h_w subset h criterion and throws consistency_error
// if they ever disagree. Guarded at n <= 8.
std::vector<Permutation> fixed_points(const HessFn& h);

long long inv_h(const Permutation& w, const HessFn& h);

// Requires h(r) = r. Returns h1 = (h(1),...,h(r)) in H_r and
// h2 = (h(r+1)-r,...,h(n)-r) in H_{n-r}.
std::pair<HessFn, HessFn> split_at(const HessFn& h, int r);

IncGraph incomparability_graph(const HessFn& h);

long long catalan(int n);

}  // namespace hessring
