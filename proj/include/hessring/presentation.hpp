#pragma once

#include <string>
#include <vector>

#include "hessring/graded_linalg.hpp"
#include "hessring/hessenberg.hpp"
#include "hessring/mpoly.hpp"
#include "hessring/perm.hpp"
#include "hessring/unipoly.hpp"

namespace hessring {

// Outcome of an exhaustive identity check: how many cases ran and, on
// failure, a witness describing the first counterexample.
struct CheckOutcome {
  bool pass = true;
  long long cases = 0;
  std::string witness;
  std::string detail;  // informational payload shown by text reports
};

// Memoized polynomial families for a fixed n.
//
// f-family: f_{j,j} = p_j, f_{i,j} = f_{i-1,j-1} + (x_j - x_i - t) f_{i-1,j}
// with f_{*,0} = 0, in Q[x_1..x_n, t] (t is variable index n).
// b-family: b_{j,j} = sum_{k<=j} (u_k - (k-1)t),
// b_{k+1,j} = b_{k,j-1} + u_j b_{k,j} - (u_j + t) b_{k-1,j-1}, in
// Q[u_1..u_n, t].
class Presentation {
 public:
  explicit Presentation(int n);

  int n() const { return n_; }

  // p_i = sum_{k<=i} (x_k - k t); p_0 = 0.
  const Mpoly& p(int i) const;
  const Mpoly& f(int i, int j) const;
  // Closed form sum_{k<=j} x_k prod_{l=j+1}^{i} (x_k - x_l); no t.
  const Mpoly& fcheck(int i, int j) const;
  const Mpoly& b(int k, int j) const;

  // Generators f_{h(j),j} in j-order, ambient (x, t).
  std::vector<Mpoly> ideal_I(const HessFn& h) const;
  // Generators of Ih-check in j-order, ambient x only (nvars = n).
  std::vector<Mpoly> ideal_Icheck(const HessFn& h) const;
  // beta_i = i - |{k : h(k) < i}| for i in [n].
  static std::vector<int> mbirika_betas(const HessFn& h);
  // Mbirika's truncated-symmetric ideal: h_{beta_i}(x_i..x_n) in i-order
  // n..1, ambient x only.
  std::vector<Mpoly> ideal_J(const HessFn& h) const;

  // f_{i,j}(w) in Q[t], computed by the fixed-point recursion
  // f_{j,j}(w) = sum (w(k)-k) t, f_{i,j}(w) = f_{i-1,j-1}(w) +
  // (w(j)-w(i)-1)t f_{i-1,j}(w), and cross-checked against substituting
  // x_k -> w(k) t into the memoized f_{i,j}. Throws consistency_error on
  // disagreement.
  UniPoly eval_f_at(const Permutation& w, int i, int j) const;

  // f_{h(j),j}(w) = 0 for every S-fixed point w and every j, and
  // f_{i,j}(w) = 0 for all i >= h(j). n <= 6.
  CheckOutcome fixed_point_vanishing(const HessFn& h) const;

  // Writes f_{i,j}, i >= h(j), as an explicit polynomial combination of
  // the ideal generators f_{h(j'),j'} and verifies the combination by
  // exact expansion.
  CheckOutcome ideal_membership_check(const HessFn& h) const;

 private:
  std::vector<Mpoly> express_in_ideal(const HessFn& h, int i, int j) const;
  void require_pair(int i, int j) const;

  int n_;
  std::vector<Mpoly> p_;                    // p_[i], 0..n
  std::vector<std::vector<Mpoly>> f_;       // f_[i][j], 1-based slots
  std::vector<std::vector<Mpoly>> fcheck_;  // same shape
  std::vector<std::vector<Mpoly>> b_;       // b_[k][j]
};

// prod_j (1 + s^2 + ... + s^{2(h(j)-j)}), the Hilbert series of the
// ordinary cohomology ring.
UniPoly hilbert_closed_form(const HessFn& h);

// Exhaustive check of f_{i,j}(w') = f_{i,j}(w) for w' the m-swap of w,
// over all w in S_n, m in [n-1], i >= j with i != m, j != m. n <= 5.
CheckOutcome swap_stability_check(int n);

// f_{i,j}(w) = sum_{k=j}^{i} (-1)^{i-k} e_{i-k}(w(j+1)..w(i)) t^{i-k}
// b_{k,j} at u_r = (w(r)-1)t, exhaustively. n <= 5.
CheckOutcome appendix_identity_check(int n);

// b_{k,j} is a symmetric polynomial in u_1..u_j, all n >= k >= j >= 1.
CheckOutcome b_symmetry_check(int n);

// The power-sum transition for the full flag: with P_q the q-th power sum
// of x_1..x_n,
//   fcheck(n, n+1-j) = sum_{i=0}^{j-1} (-1)^i e_i(x_{n+2-j}..x_n) P_{j-i}
// for all j in [n]; unitriangular over the power sums. n <= 6.
CheckOutcome powersum_transition_check(int n);

// f_{j+1,j} = f_{j,j-1} + (-p_{j-1} + 2 p_j - p_{j+1} - 2t) p_j as raw
// polynomials for j in [n-1]; for j = n-1 additionally the p_n -> 0
// variant differs from f_{n,n-1} by exactly p_{n-1} p_n (so it holds in
// the quotient by f_{n,n}). n <= 6.
CheckOutcome peterson_reduction_check(int n);

}  // namespace hessring
