#pragma once

#include <map>
#include <vector>

#include "hessring/mpoly.hpp"
#include "hessring/unipoly.hpp"

namespace hessring {

// All monomials of the given total exponent sum, descending in the
// monomial order (so index 0 is the largest monomial of the degree).
std::vector<Monomial> monomials_of_total(int nvars, int k);
long long monomial_count(int nvars, int k);

// One graded piece of Q[x_1..x_n]/(gens): the span of {m*g} of the given
// (even) degree brought to row-echelon form over the monomial basis.
class GradedPiece {
 public:
  GradedPiece(const std::vector<Mpoly>& gens, int nvars, int degree);

  int degree() const { return degree_; }
  long long quotient_dim() const;
  long long span_rank() const { return rank_; }

  // Normal form of a homogeneous polynomial of this degree modulo the
  // span: the residue supported on standard monomials. Exact.
  Mpoly normal_form(const Mpoly& p) const;
  // Standard monomials (those not leading any echelon row); a basis of
  // the quotient piece, descending in monomial order.
  std::vector<Monomial> standard_monomials() const;

 private:
  // Rank accumulation runs fraction-free over primitive integer rows;
  // normal forms reduce rationally against the same basis.
  using ZRow = std::vector<std::pair<int, Integer>>;
  using QRow = std::vector<std::pair<int, Rational>>;
  ZRow zreduce(ZRow r) const;
  bool insert(ZRow r);
  static void make_primitive(ZRow& r);

  int nvars_;
  int degree_;
  std::vector<Monomial> monomials_;  // descending; column i = monomials_[i]
  std::map<Monomial, int> index_;
  std::vector<ZRow> rows_;        // primitive echelon rows, positive lead
  std::vector<int> lead_to_row_;  // column -> row index or -1
  long long rank_ = 0;
};

// dim_Q of (Q[x_1..x_n]/(gens)) in the given degree. Generators must be
// homogeneous of positive degree; degree must be even and >= 0.
long long quotient_graded_dim(const std::vector<Mpoly>& gens, int nvars, int degree);

// Sum of quotient_graded_dim values through top_degree, as a polynomial
// in s (even powers only).
UniPoly hilbert_series(const std::vector<Mpoly>& gens, int nvars, int top_degree);

// Series of the full polynomial ring truncated at top_degree.
UniPoly polynomial_ring_series(int nvars, int top_degree);

// Truncated expansion of prod_k (1 - s^{deg g_k}) / (1 - s^2)^nvars.
UniPoly complete_intersection_series(const std::vector<int>& gen_degrees, int nvars,
                                     int top_degree);

// Hilbert criterion: the quotient series equals the complete-intersection
// product through D = sum of generator degrees (through D+2 when the
// number of generators equals nvars).
bool is_regular_sequence(const std::vector<Mpoly>& gens, int nvars);

}  // namespace hessring
