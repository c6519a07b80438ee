#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hessring/mpoly.hpp"
#include "hessring/unipoly.hpp"

using namespace hessring;

namespace {

Mpoly random_poly(std::mt19937& rng, int nvars, int max_terms, int max_exp) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> exp(0, max_exp);
  std::uniform_int_distribution<int> coeff(-5, 5);
  Mpoly p(nvars);
  int k = nterms(rng);
  for (int t = 0; t < k; ++t) {
    Monomial m{std::vector<int>(nvars, 0)};
    for (int v = 0; v < nvars; ++v) m.exps[v] = exp(rng);
    p.add_term(std::move(m), coeff(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("basic arithmetic and grading") {
  const int V = 3;  // x1, x2, t
  Mpoly x1 = Mpoly::variable(V, 0), x2 = Mpoly::variable(V, 1), t = Mpoly::variable(V, 2);
  CHECK((x1 * x1).degree() == 4);
  CHECK(((x1 - x2) + (x2 - t)) == (x1 - t));
  CHECK((Mpoly(V) * x1).is_zero());
  CHECK((x1 - x1).is_zero());
  CHECK((x1 + x2).is_homogeneous());
  CHECK_FALSE((x1 + Mpoly::constant(V, 1)).is_homogeneous());
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    Mpoly a = random_poly(rng, 3, 4, 3);
    Mpoly b = random_poly(rng, 3, 4, 3);
    Mpoly c = random_poly(rng, 3, 4, 3);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("substitution") {
  const int V = 2;  // x1, t
  Mpoly p1 = Mpoly::variable(V, 0) - Mpoly::variable(V, 1);  // x1 - t
  CHECK(p1.set_var(0, Mpoly::variable(V, 1)).is_zero());

  const int W = 3;
  Mpoly x1x2 = Mpoly::variable(W, 0) * Mpoly::variable(W, 1);
  Mpoly subbed = x1x2.set_var(0, Mpoly::constant(W, 2)).set_var(1, Mpoly::constant(W, 3));
  CHECK(subbed == Mpoly::constant(W, 6));

  CHECK(x1x2.eval({Rational(2), Rational(3), Rational(0)}) == 6);
}

TEST_CASE("collapse_linear sends x_i to scale_i t") {
  const int V = 3;
  Mpoly p = Mpoly::variable(V, 0) * Mpoly::variable(V, 1) - Mpoly::variable(V, 2);
  // x1 -> 2t, x2 -> 3t, third var is t itself.
  UniPoly u = p.collapse_linear({Rational(2), Rational(3), Rational(1)});
  CHECK(u == UniPoly({Rational(0), Rational(-1), Rational(6)}));
}

TEST_CASE("symmetric polynomial generators") {
  const int V = 3;
  std::vector<int> all{0, 1, 2};
  CHECK(elementary(V, 0, all) == Mpoly::constant(V, 1));
  CHECK(elementary(V, -1, all).is_zero());
  CHECK(elementary(V, 4, all).is_zero());
  Mpoly e2 = elementary(V, 2, all);
  Mpoly x1 = Mpoly::variable(V, 0), x2 = Mpoly::variable(V, 1), x3 = Mpoly::variable(V, 2);
  CHECK(e2 == x1 * x2 + x1 * x3 + x2 * x3);
  CHECK(power_sum(V, 2, {0, 1}) == x1 * x1 + x2 * x2);
  CHECK(complete_h(V, 2, {0, 1}) == x1 * x1 + x1 * x2 + x2 * x2);
  CHECK(complete_h(V, 0, all) == Mpoly::constant(V, 1));
  CHECK(is_symmetric_in(e2, all));
  CHECK_FALSE(is_symmetric_in(x1 - x2, {0, 1}));
}

TEST_CASE("newton identity") {
  for (int m = 1; m <= 5; ++m)
    for (int q = 1; q <= m; ++q) CHECK(newton_check(q, m));
  CHECK(newton_check(2, 2));
  CHECK(newton_check(3, 4));
  // Also beyond the variable count, where e_q vanishes.
  CHECK(newton_check(4, 2));
}

TEST_CASE("division by a variable difference") {
  const int V = 3;
  Mpoly t1 = Mpoly::variable(V, 0), t2 = Mpoly::variable(V, 1), t3 = Mpoly::variable(V, 2);
  Mpoly p = (t1 - t2) * (t1 - t3) * (t2 - t3);
  CHECK(p.divisible_by_var_difference(0, 1));
  auto [q, r] = p.divide_by_var_difference(0, 1);
  CHECK(r.is_zero());
  CHECK(q * (t1 - t2) == p);
  Mpoly bad = t1 * t1 + t2;
  CHECK_FALSE(bad.divisible_by_var_difference(0, 1));
  auto [q2, r2] = bad.divide_by_var_difference(0, 1);
  CHECK(q2 * (t1 - t2) + r2 == bad);
  CHECK_FALSE(r2.is_zero());
}

TEST_CASE("display format") {
  const int V = 3;  // x1, x2, t
  Mpoly x1 = Mpoly::variable(V, 0), x2 = Mpoly::variable(V, 1), t = Mpoly::variable(V, 2);
  Mpoly p = x1 * x1 - x1 * x2 - x1 * t;
  CHECK(p.to_string(names_xt(2)) == "x1^2 - x1*x2 - x1*t");
  CHECK(Mpoly(V).to_string(names_xt(2)) == "0");
  Mpoly q = x1.scaled(Rational(1, 2)) + Mpoly::constant(V, -3);
  CHECK(q.to_string(names_xt(2)) == "1/2*x1 - 3");
}

TEST_CASE("unipoly basics") {
  UniPoly p({Rational(1), Rational(0), Rational(2)});
  CHECK(p.degree() == 2);
  CHECK(p.to_string("s") == "1 + 2*s^2");
  CHECK(p.eval(2) == 9);
  CHECK((p * UniPoly::constant(0)).is_zero());
  CHECK(p.compose_power(2) == UniPoly({Rational(1), Rational(0), Rational(0), Rational(0), Rational(2)}));
  UniPoly q = UniPoly::monomial(3) - UniPoly::monomial(3);
  CHECK(q.is_zero());
  CHECK(q.degree() == -1);
}
