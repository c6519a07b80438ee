#pragma once

#include <vector>

#include "hessring/hessenberg.hpp"
#include "hessring/mpoly.hpp"
#include "hessring/perm.hpp"
#include "hessring/presentation.hpp"
#include "hessring/unipoly.hpp"

namespace hessring {

// One edge of the moment graph of Hess(S,h): w -- w(j i) for j < i <= h(j),
// labeled by the root t_{w(j)} - t_{w(i)}. Vertices are lex ranks into
// enumerate_sn(n); each unordered edge is listed once with from < to.
struct GkmEdge {
  long long from;
  long long to;
  int pos_j;
  int pos_i;
  Mpoly label;
};

class GkmGraph {
 public:
  explicit GkmGraph(const HessFn& h);  // guard n <= 7

  int n() const { return h_.size(); }
  const HessFn& h() const { return h_; }
  const std::vector<Permutation>& vertices() const { return vertices_; }
  const std::vector<GkmEdge>& edges() const { return edges_; }

 private:
  HessFn h_;
  std::vector<Permutation> vertices_;
  std::vector<GkmEdge> edges_;
};

// An assignment w -> polynomial in t_1..t_n for every w in S_n,
// indexed by lex rank.
class GkmClass {
 public:
  GkmClass(const HessFn& h, std::vector<Mpoly> values);
  static GkmClass zero(const HessFn& h);
  static GkmClass one(const HessFn& h);

  int n() const { return h_.size(); }
  const HessFn& h() const { return h_; }
  const Mpoly& at(const Permutation& w) const;
  const Mpoly& at_rank(size_t r) const { return values_[r]; }
  size_t size() const { return values_.size(); }

  // Pointwise ring operations (localization image is a product ring).
  GkmClass operator+(const GkmClass& o) const;
  GkmClass operator-(const GkmClass& o) const;
  GkmClass operator*(const GkmClass& o) const;
  GkmClass scaled(const Rational& c) const;
  bool operator==(const GkmClass& o) const;

  // True iff every component is homogeneous of one common degree
  // (components may be zero); that degree is written to degree_out.
  bool common_degree(int& degree_out) const;

 private:
  HessFn h_;
  std::vector<Mpoly> values_;
};

// hat-tau_i with localization t_{w(i)}.
GkmClass chern_class(int i, const HessFn& h);
// The constant class with value t_i everywhere.
GkmClass constant_class(int i, const HessFn& h);
// g_{j,k}: prod_{l=j+1}^{h(j)} (t_k - t_{w(l)}) when k is among
// w(1)..w(j), else 0.
GkmClass g_class(int j, int k, const HessFn& h);
// Pointwise prod_i (hat-tau_i)^{exps[i-1]}.
GkmClass chern_monomial(const std::vector<int>& exps, const HessFn& h);

// alpha(w) - alpha(w') divisible by the label, over every edge.
bool satisfies_gkm(const GkmGraph& graph, const GkmClass& c);

// Tymoczko action (v . alpha)(w) = v . alpha(v^{-1} w), with v permuting
// the t variables on coefficients.
GkmClass tymoczko_act(const Permutation& v, const GkmClass& c);

// e_w = prod_{(i,j) in NR(h)} (t_{w(j)} - t_{w(i)}).
Mpoly euler_class(const Permutation& w, const HessFn& h);

// sum_w alpha(w)/e_w, computed exactly over the Vandermonde common
// denominator. Requires components homogeneous of a common degree and
// n <= 6. Throws std::domain_error when the sum fails to clear to a
// polynomial (the input is then not a cohomology class).
Mpoly abbv_integral(const GkmClass& c);

// Pointwise check of fcheck(h(j), j)(t_{w(1)},..,t_{w(n)}) =
// sum_k t_k g_{j,k}(w), all w. n <= 6.
CheckOutcome fcheck_gkm_identity(const HessFn& h, int j);

// sum_w q^{inv_h(w)}. Validated elsewhere against the chromatic route;
// the paving only promises some affine cell structure, so this statistic
// is cross-checked, not assumed.
UniPoly poincare_polynomial(const HessFn& h);  // guard n <= 7

// Dimension of the space of locally constant GKM classes fixed by the
// whole Tymoczko action (expected: 1, spanned by the identity class).
long long degree_zero_invariant_dimension(const HessFn& h);

}  // namespace hessring
