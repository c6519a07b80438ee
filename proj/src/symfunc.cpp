#include "hessring/symfunc.hpp"

#include <algorithm>
#include <stdexcept>

#include "hessring/errors.hpp"
#include "hessring/perm.hpp"

namespace hessring {

Partition Partition::conjugate() const {
  std::vector<int> conj;
  if (parts.empty()) return Partition{};
  conj.resize(parts[0], 0);
  for (int p : parts)
    for (int c = 0; c < p; ++c) ++conj[c];
  return Partition{std::move(conj)};
}

std::string Partition::to_string() const {
  std::string s = "[";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i]);
  }
  return s + "]";
}

void validate_partition(const Partition& p) {
  for (size_t i = 0; i < p.parts.size(); ++i) {
    if (p.parts[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
    if (i && p.parts[i] > p.parts[i - 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      out.push_back(Partition{cur});
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

long long hook_dim(const Partition& lambda) {
  validate_partition(lambda);
  const int n = lambda.sum();
  const Partition conj = lambda.conjugate();
  Integer num = 1;
  for (int k = 2; k <= n; ++k) num *= k;
  Integer den = 1;
  for (int r = 0; r < lambda.length(); ++r)
    for (int c = 0; c < lambda.parts[r]; ++c)
      den *= (lambda.parts[r] - c) + (conj.parts[c] - r) - 1;
  Integer q = num / den;
  if (q * den != num) throw consistency_error("hook_dim: non-integer hook quotient");
  return q.get_si();
}

const UniPoly& SymFn::coeff(const Partition& p) const {
  static const UniPoly zero;
  auto it = coords.find(p);
  return it == coords.end() ? zero : it->second;
}

Mpoly schur_poly(const Partition& lambda, int nvars) {
  validate_partition(lambda);
  const int l = lambda.length();
  if (l > nvars)
    throw std::invalid_argument("schur_poly: more parts than variables");
  std::vector<int> all_vars(nvars);
  for (int i = 0; i < nvars; ++i) all_vars[i] = i;

  // Jacobi-Trudi: row i, column j holds h_{lambda_i - i + j} (1-based).
  std::vector<std::vector<Mpoly>> m(l, std::vector<Mpoly>(l, Mpoly(nvars)));
  for (int i = 1; i <= l; ++i)
    for (int j = 1; j <= l; ++j)
      m[i - 1][j - 1] = complete_h(nvars, lambda.parts[i - 1] - i + j, all_vars);

  Mpoly det(nvars);
  std::vector<int> sigma(l);
  for (int i = 0; i < l; ++i) sigma[i] = i;
  do {
    int inversions = 0;
    for (int i = 0; i < l; ++i)
      for (int j = i + 1; j < l; ++j)
        if (sigma[i] > sigma[j]) ++inversions;
    Mpoly prod = Mpoly::constant(nvars, 1);
    for (int i = 0; i < l; ++i) prod = prod * m[i][sigma[i]];
    det += (inversions % 2 == 0) ? prod : -prod;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return det;
}

SymFn to_monomial_coords(const Mpoly& p, int n) {
  if (p.nvars() != n) throw std::invalid_argument("to_monomial_coords: arity mismatch");
  for (int c = 0; c + 1 < n; ++c)
    if (!(p.swap_vars(c, c + 1) == p))
      throw std::invalid_argument("to_monomial_coords: polynomial is not symmetric");
  SymFn f;
  f.n = n;
  f.basis = SymBasis::MonomialSym;
  for (const auto& lambda : partitions_of(n)) {
    if (lambda.length() > n) continue;
    Monomial mono{std::vector<int>(n, 0)};
    for (int i = 0; i < lambda.length(); ++i) mono.exps[i] = lambda.parts[i];
    Rational c = p.coeff(mono);
    if (c != 0) f.coords[lambda] = UniPoly::constant(c);
  }
  return f;
}

SymFn expand_in_schur(const SymFn& f) {
  if (f.basis != SymBasis::MonomialSym)
    throw std::invalid_argument("expand_in_schur: input must be in monomial coordinates");
  const int n = f.n;
  const auto lambdas = partitions_of(n);

  // Kostka numbers from the Schur polynomials themselves: K[l][m] is the
  // coefficient of the dominant monomial x^mu in s_lambda.
  std::vector<std::vector<Rational>> kostka(lambdas.size(),
                                            std::vector<Rational>(lambdas.size(), 0));
  for (size_t li = 0; li < lambdas.size(); ++li) {
    Mpoly s = schur_poly(lambdas[li], n);
    for (size_t mi = 0; mi < lambdas.size(); ++mi) {
      Monomial mono{std::vector<int>(n, 0)};
      for (int i = 0; i < lambdas[mi].length(); ++i) mono.exps[i] = lambdas[mi].parts[i];
      kostka[li][mi] = s.coeff(mono);
    }
  }

  // Descending lex refines dominance, so K is unitriangular in this order;
  // solve from the top.
  std::vector<UniPoly> c(lambdas.size());
  for (size_t mi = 0; mi < lambdas.size(); ++mi) {
    UniPoly acc = f.coeff(lambdas[mi]);
    for (size_t li = 0; li < mi; ++li)
      acc = acc - c[li].scaled(kostka[li][mi]);
    if (kostka[mi][mi] != 1) throw consistency_error("expand_in_schur: Kostka diagonal != 1");
    c[mi] = std::move(acc);
  }

  SymFn out;
  out.n = n;
  out.basis = SymBasis::Schur;
  for (size_t i = 0; i < lambdas.size(); ++i)
    if (!c[i].is_zero()) out.coords[lambdas[i]] = std::move(c[i]);
  return out;
}

SymFn omega(const SymFn& f) {
  if (f.basis != SymBasis::Schur)
    throw std::invalid_argument("omega: input must be in Schur coordinates");
  SymFn out;
  out.n = f.n;
  out.basis = SymBasis::Schur;
  for (const auto& [lambda, c] : f.coords) out.coords[lambda.conjugate()] = c;
  return out;
}

namespace {

// Iterates all colorings [n] -> [colors]; calls sink(coloring) on proper ones.
template <typename Sink>
void for_each_proper_coloring(const IncGraph& g, int colors, Sink&& sink) {
  std::vector<int> kappa(g.n, 1);  // colors are 1-based
  while (true) {
    bool proper = true;
    for (const auto& [i, j] : g.edges) {
      if (kappa[i - 1] == kappa[j - 1]) {
        proper = false;
        break;
      }
    }
    if (proper) sink(kappa);
    int pos = g.n - 1;
    while (pos >= 0 && kappa[pos] == colors) --pos;
    if (pos < 0) break;
    ++kappa[pos];
    for (int k = pos + 1; k < g.n; ++k) kappa[k] = 1;
  }
}

}  // namespace

SymFn chromatic_qsym(const IncGraph& g, int nvars) {
  if (nvars != g.n)
    throw std::invalid_argument("chromatic_qsym: need n colors/variables for degree n");
  check_guard(g.n <= 7, "chromatic_qsym: n > 7");
  const int n = g.n;

  std::map<std::vector<int>, UniPoly> expansion;  // exponent vector -> coeff in t
  for_each_proper_coloring(g, n, [&](const std::vector<int>& kappa) {
    int asc = 0;
    for (const auto& [i, j] : g.edges)
      if (kappa[j - 1] < kappa[i - 1]) ++asc;  // edges carry i > j
    std::vector<int> exps(n, 0);
    for (int v = 0; v < n; ++v) ++exps[kappa[v] - 1];
    expansion[std::move(exps)] += UniPoly::monomial(asc);
  });

  // The coefficients must assemble to a symmetric function; check
  // invariance under adjacent color transpositions.
  for (int c = 0; c + 1 < n; ++c) {
    std::map<std::vector<int>, UniPoly> swapped;
    for (const auto& [exps, coeff] : expansion) {
      std::vector<int> e(exps);
      std::swap(e[c], e[c + 1]);
      swapped[std::move(e)] = coeff;
    }
    if (!(swapped == expansion))
      throw std::domain_error(
          "chromatic_qsym: coefficients are not symmetric; the graph is not the "
          "incomparability graph of a natural unit interval order");
  }

  SymFn f;
  f.n = n;
  f.basis = SymBasis::MonomialSym;
  for (const auto& lambda : partitions_of(n)) {
    if (lambda.length() > n) continue;
    std::vector<int> exps(n, 0);
    for (int i = 0; i < lambda.length(); ++i) exps[i] = lambda.parts[i];
    auto it = expansion.find(exps);
    if (it != expansion.end() && !it->second.is_zero()) f.coords[lambda] = it->second;
  }
  return f;
}

long long proper_coloring_count(const IncGraph& g, int colors) {
  long long count = 0;
  for_each_proper_coloring(g, colors, [&](const std::vector<int>&) { ++count; });
  return count;
}

UniPoly sw_trivial_coeff(const HessFn& h) {
  UniPoly prod = UniPoly::constant(1);
  for (int j = 1; j <= h.size(); ++j) {
    std::vector<Rational> factor(h.value_at(j) - j + 1, Rational(1));
    prod *= UniPoly(std::move(factor));
  }
  return prod;
}

UniPoly betti_from_xg(const HessFn& h) {
  check_guard(h.size() <= 6, "betti_from_xg: n > 6");
  SymFn x = chromatic_qsym(incomparability_graph(h), h.size());
  SymFn w = omega(expand_in_schur(x));
  std::vector<Rational> dims(complex_dim(h) + 1, Rational(0));
  for (const auto& [lambda, c] : w.coords) {
    if (!c.all_coeffs_nonneg_integers())
      throw consistency_error("betti_from_xg: negative or non-integer Schur coefficient");
    long long fdim = hook_dim(lambda);
    for (int j = 0; j <= c.degree(); ++j) {
      if (j >= static_cast<int>(dims.size())) dims.resize(j + 1, Rational(0));
      dims[j] += c.coeff(j) * to_rational(fdim);
    }
  }
  return UniPoly(std::move(dims));
}

}  // namespace hessring
