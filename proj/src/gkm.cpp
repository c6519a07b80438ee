#include "hessring/gkm.hpp"

#include <numeric>
#include <stdexcept>

#include "hessring/errors.hpp"

namespace hessring {

GkmGraph::GkmGraph(const HessFn& h) : h_(h) {
  check_guard(h.size() <= 7, "GkmGraph: n > 7");
  const int n = h.size();
  vertices_ = enumerate_sn(n);
  for (long long r = 0; r < static_cast<long long>(vertices_.size()); ++r) {
    const Permutation& w = vertices_[r];
    for (int j = 1; j <= n; ++j) {
      for (int i = j + 1; i <= h.value_at(j); ++i) {
        const Permutation ws = w.swap_positions(j, i);
        long long r2 = lex_rank(ws);
        if (r2 < r) continue;  // each unordered edge once
        Mpoly label = Mpoly::variable(n, w.value_at(j) - 1) -
                      Mpoly::variable(n, w.value_at(i) - 1);
        edges_.push_back(GkmEdge{r, r2, j, i, std::move(label)});
      }
    }
  }
}

GkmClass::GkmClass(const HessFn& h, std::vector<Mpoly> values)
    : h_(h), values_(std::move(values)) {
  if (static_cast<long long>(values_.size()) != factorial(h.size()))
    throw std::invalid_argument("GkmClass: need one value per permutation");
  for (const auto& v : values_)
    if (v.nvars() != h.size())
      throw std::invalid_argument("GkmClass: values must live in Q[t_1..t_n]");
}

GkmClass GkmClass::zero(const HessFn& h) {
  return GkmClass(h, std::vector<Mpoly>(factorial(h.size()), Mpoly(h.size())));
}

GkmClass GkmClass::one(const HessFn& h) {
  return GkmClass(
      h, std::vector<Mpoly>(factorial(h.size()), Mpoly::constant(h.size(), 1)));
}

const Mpoly& GkmClass::at(const Permutation& w) const { return values_[lex_rank(w)]; }

GkmClass GkmClass::operator+(const GkmClass& o) const {
  if (!(h_ == o.h_)) throw std::invalid_argument("GkmClass: h mismatch");
  std::vector<Mpoly> v;
  v.reserve(values_.size());
  for (size_t i = 0; i < values_.size(); ++i) v.push_back(values_[i] + o.values_[i]);
  return GkmClass(h_, std::move(v));
}

GkmClass GkmClass::operator-(const GkmClass& o) const {
  if (!(h_ == o.h_)) throw std::invalid_argument("GkmClass: h mismatch");
  std::vector<Mpoly> v;
  v.reserve(values_.size());
  for (size_t i = 0; i < values_.size(); ++i) v.push_back(values_[i] - o.values_[i]);
  return GkmClass(h_, std::move(v));
}

GkmClass GkmClass::operator*(const GkmClass& o) const {
  if (!(h_ == o.h_)) throw std::invalid_argument("GkmClass: h mismatch");
  std::vector<Mpoly> v;
  v.reserve(values_.size());
  for (size_t i = 0; i < values_.size(); ++i) v.push_back(values_[i] * o.values_[i]);
  return GkmClass(h_, std::move(v));
}

GkmClass GkmClass::scaled(const Rational& c) const {
  std::vector<Mpoly> v;
  v.reserve(values_.size());
  for (const auto& p : values_) v.push_back(p.scaled(c));
  return GkmClass(h_, std::move(v));
}

bool GkmClass::operator==(const GkmClass& o) const {
  return h_ == o.h_ && values_ == o.values_;
}

bool GkmClass::common_degree(int& degree_out) const {
  int deg = -1;
  for (const auto& p : values_) {
    if (p.is_zero()) continue;
    if (!p.is_homogeneous()) return false;
    if (deg == -1) deg = p.degree();
    if (p.degree() != deg) return false;
  }
  degree_out = deg;  // -1 when identically zero
  return true;
}

GkmClass chern_class(int i, const HessFn& h) {
  const int n = h.size();
  if (i < 1 || i > n) throw std::out_of_range("chern_class: index");
  std::vector<Mpoly> vals;
  for (const auto& w : enumerate_sn(n))
    vals.push_back(Mpoly::variable(n, w.value_at(i) - 1));
  return GkmClass(h, std::move(vals));
}

GkmClass constant_class(int i, const HessFn& h) {
  const int n = h.size();
  if (i < 1 || i > n) throw std::out_of_range("constant_class: index");
  std::vector<Mpoly> vals(factorial(n), Mpoly::variable(n, i - 1));
  return GkmClass(h, std::move(vals));
}

GkmClass g_class(int j, int k, const HessFn& h) {
  const int n = h.size();
  if (j < 1 || j > n || k < 1 || k > n) throw std::out_of_range("g_class: index");
  std::vector<Mpoly> vals;
  for (const auto& w : enumerate_sn(n)) {
    if (w.position_of(k) > j) {
      vals.push_back(Mpoly(n));
      continue;
    }
    Mpoly prod = Mpoly::constant(n, 1);
    for (int l = j + 1; l <= h.value_at(j); ++l)
      prod = prod * (Mpoly::variable(n, k - 1) - Mpoly::variable(n, w.value_at(l) - 1));
    vals.push_back(std::move(prod));
  }
  return GkmClass(h, std::move(vals));
}

GkmClass chern_monomial(const std::vector<int>& exps, const HessFn& h) {
  const int n = h.size();
  if (static_cast<int>(exps.size()) != n)
    throw std::invalid_argument("chern_monomial: arity mismatch");
  std::vector<Mpoly> vals;
  for (const auto& w : enumerate_sn(n)) {
    Monomial m{std::vector<int>(n, 0)};
    for (int i = 1; i <= n; ++i) m.exps[w.value_at(i) - 1] += exps[i - 1];
    Mpoly p(n);
    p.add_term(std::move(m), 1);
    vals.push_back(std::move(p));
  }
  return GkmClass(h, std::move(vals));
}

bool satisfies_gkm(const GkmGraph& graph, const GkmClass& c) {
  if (!(graph.h() == c.h())) throw std::invalid_argument("satisfies_gkm: h mismatch");
  for (const auto& e : graph.edges()) {
    const Permutation& w = graph.vertices()[e.from];
    Mpoly diff = c.at_rank(e.from) - c.at_rank(e.to);
    if (diff.is_zero()) continue;
    int a = w.value_at(e.pos_j) - 1;
    int b = w.value_at(e.pos_i) - 1;
    if (!diff.divisible_by_var_difference(a, b)) return false;
  }
  return true;
}

GkmClass tymoczko_act(const Permutation& v, const GkmClass& c) {
  const int n = c.n();
  if (v.size() != n) throw std::invalid_argument("tymoczko_act: size mismatch");
  const Permutation vinv = v.inverse();
  std::vector<int> target(n);
  for (int i = 1; i <= n; ++i) target[i - 1] = v.value_at(i) - 1;
  std::vector<Mpoly> vals;
  for (const auto& w : enumerate_sn(n))
    vals.push_back(c.at(vinv.compose(w)).permute_vars(target));
  return GkmClass(c.h(), std::move(vals));
}

Mpoly euler_class(const Permutation& w, const HessFn& h) {
  const int n = h.size();
  if (w.size() != n) throw std::invalid_argument("euler_class: size mismatch");
  Mpoly prod = Mpoly::constant(n, 1);
  for (const auto& [i, j] : negative_roots(h))
    prod = prod * (Mpoly::variable(n, w.value_at(j) - 1) -
                   Mpoly::variable(n, w.value_at(i) - 1));
  return prod;
}

Mpoly abbv_integral(const GkmClass& c) {
  const int n = c.n();
  check_guard(n <= 6, "abbv_integral: n > 6");
  int deg;
  if (!c.common_degree(deg))
    throw std::invalid_argument("abbv_integral: components not of one degree");
  const HessFn& h = c.h();
  const auto roots = negative_roots(h);

  // Every e_w divides the Vandermonde: within one e_w each unordered value
  // pair occurs exactly once. Sum over the common denominator V and clear.
  Mpoly vandermonde = Mpoly::constant(n, 1);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      vandermonde = vandermonde * (Mpoly::variable(n, a) - Mpoly::variable(n, b));

  Mpoly numerator(n);
  const auto perms = enumerate_sn(n);
  for (size_t r = 0; r < perms.size(); ++r) {
    const Mpoly& alpha = c.at_rank(r);
    if (alpha.is_zero()) continue;
    const Permutation& w = perms[r];
    std::vector<std::vector<bool>> used(n, std::vector<bool>(n, false));
    int sign = 1;
    for (const auto& [i, j] : roots) {
      int a = w.value_at(j) - 1, b = w.value_at(i) - 1;
      if (a > b) {
        std::swap(a, b);
        sign = -sign;
      }
      if (used[a][b]) throw consistency_error("abbv_integral: repeated root form");
      used[a][b] = true;
    }
    Mpoly cofactor = Mpoly::constant(n, 1);
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (!used[a][b])
          cofactor = cofactor * (Mpoly::variable(n, a) - Mpoly::variable(n, b));
    numerator += (alpha * cofactor).scaled(sign);
  }

  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      auto [q, rem] = numerator.divide_by_var_difference(a, b);
      if (!rem.is_zero())
        throw std::domain_error("abbv_integral: sum does not clear to a polynomial");
      numerator = std::move(q);
    }
  }
  return numerator;
}

CheckOutcome fcheck_gkm_identity(const HessFn& h, int j) {
  const int n = h.size();
  check_guard(n <= 6, "fcheck_gkm_identity: n > 6");
  if (j < 1 || j > n) throw std::out_of_range("fcheck_gkm_identity: j");
  Presentation pres(n);
  Mpoly fc = pres.fcheck(h.value_at(j), j).restricted(n);
  std::vector<GkmClass> g;
  for (int k = 1; k <= n; ++k) g.push_back(g_class(j, k, h));
  CheckOutcome out;
  for (const auto& w : enumerate_sn(n)) {
    ++out.cases;
    std::vector<int> target(n);
    for (int k = 1; k <= n; ++k) target[k - 1] = w.value_at(k) - 1;
    Mpoly lhs = fc.permute_vars(target);  // x_k -> t_{w(k)}
    Mpoly rhs(n);
    for (int k = 1; k <= n; ++k) rhs += Mpoly::variable(n, k - 1) * g[k - 1].at(w);
    if (!(lhs == rhs)) {
      out.pass = false;
      out.witness = "h=" + h.to_string() + " j=" + std::to_string(j) + " w=" + w.to_string();
      return out;
    }
  }
  return out;
}

UniPoly poincare_polynomial(const HessFn& h) {
  check_guard(h.size() <= 7, "poincare_polynomial: n > 7");
  std::vector<Rational> coeffs(complex_dim(h) + 1, Rational(0));
  for (const auto& w : enumerate_sn(h.size())) coeffs[inv_h(w, h)] += 1;
  return UniPoly(std::move(coeffs));
}

long long degree_zero_invariant_dimension(const HessFn& h) {
  const int n = h.size();
  check_guard(n <= 6, "degree_zero_invariant_dimension: n > 6");
  const auto perms = enumerate_sn(n);
  std::vector<long long> parent(perms.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](long long x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](long long a, long long b) { parent[find(a)] = find(b); };

  // Locally constant classes: the GKM condition forces equality across
  // edges; invariance forces alpha(w) = alpha(v^{-1} w) for all v.
  GkmGraph graph(h);
  for (const auto& e : graph.edges()) unite(e.from, e.to);
  for (int m = 1; m <= n - 1; ++m) {
    Permutation s = Permutation::identity(n).adjacent_swap(m);
    for (size_t r = 0; r < perms.size(); ++r)
      unite(static_cast<long long>(r), lex_rank(s.compose(perms[r])));
  }
  long long components = 0;
  for (size_t r = 0; r < perms.size(); ++r)
    if (find(r) == static_cast<long long>(r)) ++components;
  return components;
}

}  // namespace hessring
