#include "hessring/presentation.hpp"

#include <stdexcept>

#include "hessring/errors.hpp"

namespace hessring {

namespace {

// Elementary symmetric value e_k of a list of integers.
Rational elementary_of_values(const std::vector<int>& values, int k) {
  if (k < 0) return Rational(0);
  if (k == 0) return Rational(1);
  if (k > static_cast<int>(values.size())) return Rational(0);
  // DP over prefixes: adding v sends e_j to e_j + v e_{j-1}.
  std::vector<Rational> e(k + 1, Rational(0));
  e[0] = 1;
  for (size_t idx = 0; idx < values.size(); ++idx)
    for (int j = std::min<int>(k, static_cast<int>(idx) + 1); j >= 1; --j)
      e[j] += Rational(values[idx]) * e[j - 1];
  return e[k];
}

}  // namespace

Presentation::Presentation(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("Presentation: n must be positive");
  const int V = n + 1;  // x_1..x_n, t
  const int tvar = n;

  p_.assign(n + 1, Mpoly(V));
  for (int i = 1; i <= n; ++i) {
    Mpoly q = p_[i - 1];
    q += Mpoly::variable(V, i - 1);
    q -= Mpoly::variable(V, tvar).scaled(i);
    p_[i] = std::move(q);
  }

  f_.assign(n + 1, std::vector<Mpoly>(n + 1, Mpoly(V)));
  for (int j = 1; j <= n; ++j) f_[j][j] = p_[j];
  for (int d = 1; d <= n - 1; ++d) {
    for (int j = 1; j + d <= n; ++j) {
      const int i = j + d;
      Mpoly factor = Mpoly::variable(V, j - 1) - Mpoly::variable(V, i - 1) -
                     Mpoly::variable(V, tvar);
      Mpoly prev = (j >= 2) ? f_[i - 1][j - 1] : Mpoly(V);  // f_{*,0} = 0
      f_[i][j] = prev + factor * f_[i - 1][j];
    }
  }

  fcheck_.assign(n + 1, std::vector<Mpoly>(n + 1, Mpoly(V)));
  for (int j = 1; j <= n; ++j) {
    for (int i = j; i <= n; ++i) {
      Mpoly sum(V);
      for (int k = 1; k <= j; ++k) {
        Mpoly term = Mpoly::variable(V, k - 1);
        for (int l = j + 1; l <= i; ++l)
          term = term * (Mpoly::variable(V, k - 1) - Mpoly::variable(V, l - 1));
        sum += term;
      }
      fcheck_[i][j] = std::move(sum);
    }
  }

  // b-family in Q[u_1..u_n, t]; same arity, u_i at index i-1, t at n.
  b_.assign(n + 1, std::vector<Mpoly>(n + 1, Mpoly(V)));
  for (int j = 1; j <= n; ++j) {
    Mpoly q(V);
    for (int k = 1; k <= j; ++k) {
      q += Mpoly::variable(V, k - 1);
      q -= Mpoly::variable(V, tvar).scaled(k - 1);
    }
    b_[j][j] = std::move(q);
  }
  for (int j = 1; j <= n; ++j) {
    for (int k = j; k + 1 <= n; ++k) {
      const Mpoly uj = Mpoly::variable(V, j - 1);
      const Mpoly t = Mpoly::variable(V, tvar);
      Mpoly prev_col = (j >= 2) ? b_[k][j - 1] : Mpoly(V);
      Mpoly prev_diag = (j >= 2 && k - 1 >= j - 1) ? b_[k - 1][j - 1] : Mpoly(V);
      b_[k + 1][j] = prev_col + uj * b_[k][j] - (uj + t) * prev_diag;
    }
  }
}

void Presentation::require_pair(int i, int j) const {
  if (!(1 <= j && j <= i && i <= n_))
    throw std::out_of_range("Presentation: need n >= i >= j >= 1");
}

const Mpoly& Presentation::p(int i) const {
  if (i < 0 || i > n_) throw std::out_of_range("Presentation::p");
  return p_[i];
}

const Mpoly& Presentation::f(int i, int j) const {
  require_pair(i, j);
  return f_[i][j];
}

const Mpoly& Presentation::fcheck(int i, int j) const {
  require_pair(i, j);
  return fcheck_[i][j];
}

const Mpoly& Presentation::b(int k, int j) const {
  require_pair(k, j);
  return b_[k][j];
}

std::vector<Mpoly> Presentation::ideal_I(const HessFn& h) const {
  if (h.size() != n_) throw std::invalid_argument("ideal_I: size mismatch");
  std::vector<Mpoly> gens;
  for (int j = 1; j <= n_; ++j) gens.push_back(f(h.value_at(j), j));
  return gens;
}

std::vector<Mpoly> Presentation::ideal_Icheck(const HessFn& h) const {
  if (h.size() != n_) throw std::invalid_argument("ideal_Icheck: size mismatch");
  std::vector<Mpoly> gens;
  for (int j = 1; j <= n_; ++j) gens.push_back(fcheck(h.value_at(j), j).restricted(n_));
  return gens;
}

std::vector<int> Presentation::mbirika_betas(const HessFn& h) {
  const int n = h.size();
  std::vector<int> betas(n);
  for (int i = 1; i <= n; ++i) {
    int below = 0;
    for (int k = 1; k <= n; ++k)
      if (h.value_at(k) < i) ++below;
    betas[i - 1] = i - below;
  }
  return betas;
}

std::vector<Mpoly> Presentation::ideal_J(const HessFn& h) const {
  if (h.size() != n_) throw std::invalid_argument("ideal_J: size mismatch");
  auto betas = mbirika_betas(h);
  std::vector<Mpoly> gens;
  for (int i = n_; i >= 1; --i) {
    std::vector<int> vars;
    for (int k = i; k <= n_; ++k) vars.push_back(k - 1);
    gens.push_back(complete_h(n_, betas[i - 1], vars));
  }
  return gens;
}

UniPoly Presentation::eval_f_at(const Permutation& w, int i, int j) const {
  require_pair(i, j);
  if (w.size() != n_) throw std::invalid_argument("eval_f_at: size mismatch");

  // Route 1: recursion in Q[t].
  std::vector<std::vector<UniPoly>> val(i + 1, std::vector<UniPoly>(i + 1));
  for (int jj = 1; jj <= i; ++jj) {
    long long s = 0;
    for (int k = 1; k <= jj; ++k) s += w.value_at(k) - k;
    val[jj][jj] = UniPoly::monomial(1, to_rational(s));
  }
  for (int d = 1; d <= i - 1; ++d) {
    for (int jj = 1; jj + d <= i; ++jj) {
      const int ii = jj + d;
      UniPoly prev = (jj >= 2) ? val[ii - 1][jj - 1] : UniPoly();
      Rational c(w.value_at(jj) - w.value_at(ii) - 1);
      val[ii][jj] = prev + (UniPoly::monomial(1, c) * val[ii - 1][jj]);
    }
  }
  UniPoly via_recursion = val[i][j];

  // Route 2: substitution x_k -> w(k) t into the memoized polynomial.
  std::vector<Rational> scale(n_ + 1);
  for (int k = 1; k <= n_; ++k) scale[k - 1] = Rational(w.value_at(k));
  scale[n_] = 1;
  UniPoly via_substitution = f(i, j).collapse_linear(scale);

  if (!(via_recursion == via_substitution))
    throw consistency_error("eval_f_at: recursion and substitution disagree at w=" +
                            w.to_string() + " (i,j)=(" + std::to_string(i) + "," +
                            std::to_string(j) + ")");
  return via_recursion;
}

CheckOutcome Presentation::fixed_point_vanishing(const HessFn& h) const {
  check_guard(n_ <= 6, "fixed_point_vanishing: n > 6");
  CheckOutcome out;
  for (const auto& w : fixed_points(h)) {
    for (int j = 1; j <= n_; ++j) {
      for (int i = h.value_at(j); i <= n_; ++i) {
        ++out.cases;
        if (!eval_f_at(w, i, j).is_zero()) {
          out.pass = false;
          out.witness = "h=" + h.to_string() + " w=" + w.to_string() + " (i,j)=(" +
                        std::to_string(i) + "," + std::to_string(j) + ")";
          return out;
        }
      }
    }
  }
  return out;
}

std::vector<Mpoly> Presentation::express_in_ideal(const HessFn& h, int i, int j) const {
  const int V = n_ + 1;
  std::vector<Mpoly> combo(n_, Mpoly(V));
  if (j == 0) return combo;
  if (i == h.value_at(j)) {
    combo[j - 1] = Mpoly::constant(V, 1);
    return combo;
  }
  // i > h(j): f_{i,j} = f_{i-1,j-1} + (x_j - x_i - t) f_{i-1,j}
  auto left = express_in_ideal(h, i - 1, j - 1);
  auto right = express_in_ideal(h, i - 1, j);
  Mpoly factor = Mpoly::variable(V, j - 1) - Mpoly::variable(V, i - 1) -
                 Mpoly::variable(V, n_);
  for (int k = 0; k < n_; ++k) combo[k] = left[k] + factor * right[k];
  return combo;
}

CheckOutcome Presentation::ideal_membership_check(const HessFn& h) const {
  if (h.size() != n_) throw std::invalid_argument("ideal_membership_check: size mismatch");
  CheckOutcome out;
  auto gens = ideal_I(h);
  for (int j = 1; j <= n_; ++j) {
    for (int i = h.value_at(j); i <= n_; ++i) {
      ++out.cases;
      auto combo = express_in_ideal(h, i, j);
      Mpoly acc(n_ + 1);
      for (int k = 0; k < n_; ++k) acc += combo[k] * gens[k];
      if (!(acc == f(i, j))) {
        out.pass = false;
        out.witness = "h=" + h.to_string() + " (i,j)=(" + std::to_string(i) + "," +
                      std::to_string(j) + ")";
        return out;
      }
    }
  }
  return out;
}

UniPoly hilbert_closed_form(const HessFn& h) {
  UniPoly prod = UniPoly::constant(1);
  for (int j = 1; j <= h.size(); ++j) {
    std::vector<Rational> factor(2 * (h.value_at(j) - j) + 1, Rational(0));
    for (int k = 0; k <= h.value_at(j) - j; ++k) factor[2 * k] = 1;
    prod *= UniPoly(std::move(factor));
  }
  return prod;
}

CheckOutcome swap_stability_check(int n) {
  check_guard(n <= 5, "swap_stability_check: n > 5");
  Presentation pres(n);
  CheckOutcome out;
  for (const auto& w : enumerate_sn(n)) {
    for (int m = 1; m <= n - 1; ++m) {
      const Permutation ws = w.adjacent_swap(m);
      for (int j = 1; j <= n; ++j) {
        if (j == m) continue;
        for (int i = j; i <= n; ++i) {
          if (i == m) continue;
          ++out.cases;
          if (!(pres.eval_f_at(w, i, j) == pres.eval_f_at(ws, i, j))) {
            out.pass = false;
            out.witness = "w=" + w.to_string() + " m=" + std::to_string(m) + " (i,j)=(" +
                          std::to_string(i) + "," + std::to_string(j) + ")";
            return out;
          }
        }
      }
    }
  }
  return out;
}

CheckOutcome appendix_identity_check(int n) {
  check_guard(n <= 5, "appendix_identity_check: n > 5");
  Presentation pres(n);
  CheckOutcome out;
  for (const auto& w : enumerate_sn(n)) {
    std::vector<Rational> uscale(n + 1);
    for (int r = 1; r <= n; ++r) uscale[r - 1] = Rational(w.value_at(r) - 1);
    uscale[n] = 1;
    for (int j = 1; j <= n; ++j) {
      for (int i = j; i <= n; ++i) {
        ++out.cases;
        UniPoly rhs;
        for (int k = j; k <= i; ++k) {
          std::vector<int> window;
          for (int l = j + 1; l <= i; ++l) window.push_back(w.value_at(l));
          Rational e = elementary_of_values(window, i - k);
          if ((i - k) % 2 != 0) e = -e;
          UniPoly bval = pres.b(k, j).collapse_linear(uscale);
          rhs += UniPoly::monomial(i - k, e) * bval;
        }
        if (!(pres.eval_f_at(w, i, j) == rhs)) {
          out.pass = false;
          out.witness = "w=" + w.to_string() + " (i,j)=(" + std::to_string(i) + "," +
                        std::to_string(j) + ")";
          return out;
        }
      }
    }
  }
  return out;
}

CheckOutcome b_symmetry_check(int n) {
  check_guard(n <= 5, "b_symmetry_check: n > 5");
  Presentation pres(n);
  CheckOutcome out;
  for (int j = 1; j <= n; ++j) {
    std::vector<int> uvars;
    for (int r = 1; r <= j; ++r) uvars.push_back(r - 1);
    for (int k = j; k <= n; ++k) {
      ++out.cases;
      if (!is_symmetric_in(pres.b(k, j), uvars)) {
        out.pass = false;
        out.witness = "(k,j)=(" + std::to_string(k) + "," + std::to_string(j) + ")";
        return out;
      }
      // b_{k,j} depends only on u_1..u_j and t.
      for (int r = j + 1; r <= n; ++r) {
        if (!(pres.b(k, j).set_var_zero(r - 1) == pres.b(k, j))) {
          out.pass = false;
          out.witness = "(k,j)=(" + std::to_string(k) + "," + std::to_string(j) +
                        ") depends on u" + std::to_string(r);
          return out;
        }
      }
    }
  }
  return out;
}

CheckOutcome powersum_transition_check(int n) {
  check_guard(n <= 6, "powersum_transition_check: n > 6");
  Presentation pres(n);
  CheckOutcome out;
  std::vector<int> all_vars;
  for (int k = 0; k < n; ++k) all_vars.push_back(k);
  for (int j = 1; j <= n; ++j) {
    ++out.cases;
    // LHS: the generator of degree j in the list for the full flag.
    Mpoly lhs = pres.fcheck(n, n + 1 - j).restricted(n);
    Mpoly rhs(n);
    for (int i = 0; i <= j - 1; ++i) {
      std::vector<int> tail;
      for (int l = n + 2 - j; l <= n; ++l) tail.push_back(l - 1);
      Mpoly e = elementary(n, i, tail);
      if (i % 2 != 0) e = -e;
      rhs += e * power_sum(n, j - i, all_vars);
    }
    if (!(lhs == rhs)) {
      out.pass = false;
      out.witness = "j=" + std::to_string(j);
      return out;
    }
  }
  return out;
}

CheckOutcome peterson_reduction_check(int n) {
  check_guard(n <= 6, "peterson_reduction_check: n > 6");
  Presentation pres(n);
  const int V = n + 1;
  const Mpoly two_t = Mpoly::variable(V, n).scaled(2);
  CheckOutcome out;
  for (int j = 1; j <= n - 1; ++j) {
    ++out.cases;
    Mpoly bracket = pres.p(j).scaled(2) - pres.p(j - 1) - pres.p(j + 1) - two_t;
    Mpoly prev = (j >= 2) ? pres.f(j, j - 1) : Mpoly(V);
    Mpoly rhs = prev + bracket * pres.p(j);
    if (!(pres.f(j + 1, j) == rhs)) {
      out.pass = false;
      out.witness = "j=" + std::to_string(j);
      return out;
    }
  }
  // The quotient-convention variant at j = n-1: dropping p_n changes the
  // right-hand side by exactly p_{n-1} p_n, a multiple of f_{n,n}.
  if (n >= 2) {
    ++out.cases;
    const int j = n - 1;
    Mpoly bracket = pres.p(j).scaled(2) - pres.p(j - 1) - two_t;  // p_n -> 0
    Mpoly prev = (j >= 2) ? pres.f(j, j - 1) : Mpoly(V);
    Mpoly rhs = prev + bracket * pres.p(j);
    if (!(rhs - pres.f(n, n - 1) == pres.p(n - 1) * pres.p(n))) {
      out.pass = false;
      out.witness = "quotient variant at j=" + std::to_string(j);
    }
  }
  return out;
}

}  // namespace hessring
