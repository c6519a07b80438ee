#pragma once

#include <map>
#include <string>
#include <vector>

#include "hessring/hessenberg.hpp"
#include "hessring/mpoly.hpp"
#include "hessring/unipoly.hpp"

namespace hessring {

// Weakly decreasing positive parts.
struct Partition {
  std::vector<int> parts;

  int sum() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
  }
  int length() const { return static_cast<int>(parts.size()); }
  Partition conjugate() const;
  bool operator==(const Partition&) const = default;
  std::string to_string() const;  // "[3,1,1]"
};

// Orders partitions descending-lexicographically: (n) first, (1^n) last.
// Descending lex refines dominance, which is what the triangular Schur
// solve needs.
struct PartitionDescLex {
  bool operator()(const Partition& a, const Partition& b) const {
    return a.parts > b.parts;
  }
};

std::vector<Partition> partitions_of(int n);  // descending lex
void validate_partition(const Partition& p);

// n! / prod(hooks): the number of standard Young tableaux of shape lambda,
// i.e. the dimension of the S_n-irreducible.
long long hook_dim(const Partition& lambda);

enum class SymBasis { MonomialSym, Schur };

// Homogeneous degree-n symmetric function in n variables with
// polynomial-in-t coefficients, stored in monomial-symmetric or Schur
// coordinates.
struct SymFn {
  int n = 0;
  SymBasis basis = SymBasis::MonomialSym;
  std::map<Partition, UniPoly, PartitionDescLex> coords;

  const UniPoly& coeff(const Partition& p) const;
  bool operator==(const SymFn& o) const {
    return n == o.n && basis == o.basis && coords == o.coords;
  }
};

// Schur polynomial in nvars variables via the Jacobi-Trudi determinant
// det(h_{lambda_i - i + j}).
Mpoly schur_poly(const Partition& lambda, int nvars);

// Monomial-symmetric coordinates of a degree-n symmetric polynomial in
// n variables; validates symmetry.
SymFn to_monomial_coords(const Mpoly& p, int n);

// Unitriangular solve against the Schur-to-monomial (Kostka) matrix.
SymFn expand_in_schur(const SymFn& f);

// omega(s_lambda) = s_{lambda*}; input must be in Schur coordinates.
SymFn omega(const SymFn& f);

// X_G(x,t) over proper colorings [n] -> [n], collected into
// monomial-symmetric coordinates. Validates that the result is symmetric.
// Guard: n <= 7.
SymFn chromatic_qsym(const IncGraph& g, int nvars);

// Number of proper colorings with the given number of colors.
long long proper_coloring_count(const IncGraph& g, int colors);

// prod_j (1 + t + ... + t^{h(j)-j}): the Shareshian-Wachs coefficient of
// s_{1^n} in X_G.
UniPoly sw_trivial_coeff(const HessFn& h);

// Betti numbers of Hess(S,h) through the proven Shareshian-Wachs formula:
// dim H^{2j} = sum_lambda [t^j] c_lambda * hook_dim(lambda) where
// omega X_G = sum c_lambda(t) s_lambda. Guard: n <= 6.
UniPoly betti_from_xg(const HessFn& h);

}  // namespace hessring
