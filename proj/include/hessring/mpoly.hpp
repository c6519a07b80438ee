#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hessring/rational.hpp"
#include "hessring/unipoly.hpp"

namespace hessring {

// Exponent vector of a monomial. Ordered by graded lexicographic order
// with earlier variables larger (x_1 > x_2 > ... > x_n > t); every variable
// has degree 2, so the grading of a monomial is 2 * total().
struct Monomial {
  std::vector<int> exps;

  int total() const {
    int s = 0;
    for (int e : exps) s += e;
    return s;
  }
  bool operator==(const Monomial&) const = default;
  bool operator<(const Monomial& o) const {
    int a = total(), b = o.total();
    if (a != b) return a < b;
    return exps < o.exps;  // lexicographic; larger leading exponent = larger monomial
  }
};

// Sparse multivariate polynomial over exact rationals. The class itself is
// variable-name agnostic; the usual ambient contexts are (x_1..x_n, t),
// (t_1..t_n) and (u_1..u_n, t), selected by a VarNames at display time.
class Mpoly {
 public:
  explicit Mpoly(int nvars) : nvars_(nvars) {}
  static Mpoly constant(int nvars, const Rational& c);
  static Mpoly variable(int nvars, int index);  // 0-based

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  void add_term(Monomial m, const Rational& c);
  Rational coeff(const Monomial& m) const;

  Mpoly operator+(const Mpoly& o) const;
  Mpoly operator-(const Mpoly& o) const;
  Mpoly operator*(const Mpoly& o) const;
  Mpoly operator-() const;
  Mpoly& operator+=(const Mpoly& o);
  Mpoly& operator-=(const Mpoly& o);
  bool operator==(const Mpoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  Mpoly scaled(const Rational& c) const;

  // Graded degree (2 per exponent unit); -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;

  // Ring-homomorphic substitution; assignment[i] (when present) replaces
  // variable i, all other variables map to themselves.
  Mpoly substitute(const std::vector<std::optional<Mpoly>>& assignment) const;
  Mpoly set_var(int index, const Mpoly& value) const;
  Mpoly set_var_zero(int index) const;
  Rational eval(const std::vector<Rational>& point) const;

  // Image under variable i -> scale[i] * t, as a univariate polynomial in t.
  UniPoly collapse_linear(const std::vector<Rational>& scale) const;

  // Exponents of variables a and b exchanged in every term.
  Mpoly swap_vars(int a, int b) const;
  // Variable i -> variable target[i] (target a permutation of 0..nvars-1).
  Mpoly permute_vars(const std::vector<int>& target) const;

  // Appends fresh variables (exponent 0) on the right.
  Mpoly extended(int new_nvars) const;
  // Drops trailing variables; throws if any of them occurs.
  Mpoly restricted(int new_nvars) const;

  // Exact division by (v_a - v_b); quotient and remainder via synthetic
  // division in v_a. divisible_by tests remainder == 0 by substitution.
  bool divisible_by_var_difference(int a, int b) const;
  std::pair<Mpoly, Mpoly> divide_by_var_difference(int a, int b) const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  int nvars_;
  std::map<Monomial, Rational> terms_;
};

// Display name sets: x1..xn,t / t1..tn / u1..un,t / s.
std::vector<std::string> names_xt(int n);
std::vector<std::string> names_t(int n);
std::vector<std::string> names_ut(int n);

// The named symmetric polynomials in the listed variable indices
// (0-based, within an ambient ring of nvars variables). Conventions:
// e_0 = h_0 = 1, e_{-1} = 0, e_k = 0 for k > |vars|.
Mpoly elementary(int nvars, int k, const std::vector<int>& vars);
Mpoly power_sum(int nvars, int k, const std::vector<int>& vars);
Mpoly complete_h(int nvars, int k, const std::vector<int>& vars);

// Newton's identity -sum_{r=1}^{q-1} (-1)^r e_r p_{q-r} = (-1)^q q e_q + p_q
// checked symbolically in m variables.
bool newton_check(int q, int m);

// Invariance under every adjacent transposition of the listed variables.
bool is_symmetric_in(const Mpoly& p, const std::vector<int>& vars);

}  // namespace hessring
