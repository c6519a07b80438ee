#include "hessring/graded_linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "hessring/errors.hpp"

namespace hessring {

namespace {

void check_gens(const std::vector<Mpoly>& gens, int nvars) {
  for (const auto& g : gens) {
    if (g.nvars() != nvars) throw std::invalid_argument("graded_linalg: ambient mismatch");
    if (g.is_zero()) continue;
    if (!g.is_homogeneous())
      throw std::invalid_argument("graded_linalg: non-homogeneous generator");
  }
}

}  // namespace

long long monomial_count(int nvars, int k) {
  // C(k + nvars - 1, nvars - 1)
  long long c = 1;
  for (int i = 1; i <= nvars - 1; ++i) c = c * (k + i) / i;
  return c;
}

std::vector<Monomial> monomials_of_total(int nvars, int k) {
  std::vector<Monomial> out;
  std::vector<int> cur(nvars, 0);
  auto rec = [&](auto&& self, int pos, int rest) -> void {
    if (pos == nvars - 1) {
      cur[pos] = rest;
      out.push_back(Monomial{cur});
      return;
    }
    for (int e = rest; e >= 0; --e) {
      cur[pos] = e;
      self(self, pos + 1, rest - e);
    }
  };
  if (nvars == 0) {
    if (k == 0) out.push_back(Monomial{{}});
    return out;
  }
  rec(rec, 0, k);
  return out;
}

GradedPiece::GradedPiece(const std::vector<Mpoly>& gens, int nvars, int degree)
    : nvars_(nvars), degree_(degree) {
  if (degree < 0 || degree % 2 != 0)
    throw std::invalid_argument("GradedPiece: degree must be even and >= 0");
  check_gens(gens, nvars);
  const int k = degree / 2;
  check_guard(monomial_count(nvars, k) <= 1000000,
              "GradedPiece: monomial count exceeds 10^6");
  monomials_ = monomials_of_total(nvars, k);
  lead_to_row_.assign(monomials_.size(), -1);

  for (size_t i = 0; i < monomials_.size(); ++i)
    index_.emplace(monomials_[i], static_cast<int>(i));

  const long long full = static_cast<long long>(monomials_.size());
  // Sparse generators first: one-term pivots keep later reductions cheap.
  std::vector<const Mpoly*> ordered;
  for (const auto& g : gens) ordered.push_back(&g);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const Mpoly* a, const Mpoly* b) {
                     return a->term_count() < b->term_count();
                   });
  for (const Mpoly* gp : ordered) {
    const Mpoly& g = *gp;
    if (rank_ == full) return;  // span is everything already
    if (g.is_zero()) continue;
    const int dg = g.degree() / 2;
    if (dg > k) continue;

    // Clear denominators of g once; shifts reuse the integer template.
    Integer lcm = 1;
    for (const auto& [m, c] : g.terms()) {
      Integer den = c.get_den();
      lcm = lcm / gcd(lcm, den) * den;
    }
    std::vector<std::pair<Monomial, Integer>> gterms;
    for (const auto& [m, c] : g.terms())
      gterms.emplace_back(m, Integer(c.get_num() * (lcm / c.get_den())));

    for (const auto& shift : monomials_of_total(nvars_, k - dg)) {
      ZRow row;
      row.reserve(gterms.size());
      for (const auto& [m, c] : gterms) {
        Monomial prod{m.exps};
        for (int i = 0; i < nvars_; ++i) prod.exps[i] += shift.exps[i];
        row.emplace_back(index_.at(prod), c);
      }
      std::sort(row.begin(), row.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      insert(std::move(row));
      if (rank_ == full) return;
    }
  }
}

void GradedPiece::make_primitive(ZRow& r) {
  if (r.empty()) return;
  Integer g = 0;
  for (const auto& [col, c] : r) {
    g = gcd(g, c);
    if (g == 1) break;
  }
  if (r.front().second < 0) g = -g;
  if (g != 1)
    for (auto& [col, c] : r) c /= g;
}

GradedPiece::ZRow GradedPiece::zreduce(ZRow r) const {
  while (!r.empty()) {
    int basis = lead_to_row_[r.front().first];
    if (basis < 0) return r;
    const ZRow& b = rows_[basis];
    // Fraction-free: r := b_lead * r - r_lead * b; the lead cancels.
    const Integer bl = b.front().second;
    const Integer rl = r.front().second;
    ZRow merged;
    merged.reserve(r.size() + b.size());
    size_t i = 0, j = 0;
    while (i < r.size() || j < b.size()) {
      if (j == b.size() || (i < r.size() && r[i].first < b[j].first)) {
        merged.emplace_back(r[i].first, Integer(bl * r[i].second));
        ++i;
      } else if (i == r.size() || b[j].first < r[i].first) {
        merged.emplace_back(b[j].first, Integer(-rl * b[j].second));
        ++j;
      } else {
        Integer c = bl * r[i].second - rl * b[j].second;
        if (c != 0) merged.emplace_back(r[i].first, std::move(c));
        ++i;
        ++j;
      }
    }
    r = std::move(merged);
    make_primitive(r);
  }
  return r;
}

bool GradedPiece::insert(ZRow r) {
  make_primitive(r);
  r = zreduce(std::move(r));
  if (r.empty()) return false;
  lead_to_row_[r.front().first] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(r));
  ++rank_;
  return true;
}

long long GradedPiece::quotient_dim() const {
  return static_cast<long long>(monomials_.size()) - rank_;
}

Mpoly GradedPiece::normal_form(const Mpoly& p) const {
  if (p.is_zero()) return Mpoly(nvars_);
  if (p.degree() != degree_)
    throw std::invalid_argument("GradedPiece::normal_form: degree mismatch");
  QRow r;
  for (const auto& [m, c] : p.terms()) {
    auto it = index_.find(m);
    if (it == index_.end())
      throw std::invalid_argument("GradedPiece: polynomial not homogeneous of this degree");
    r.emplace_back(it->second, c);
  }
  std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  // Rational reduction against the integer echelon rows keeps the residue
  // exactly equal to p modulo the span.
  while (!r.empty()) {
    int basis = lead_to_row_[r.front().first];
    if (basis < 0) break;
    const ZRow& b = rows_[basis];
    const Rational factor = r.front().second / Rational(b.front().second);
    QRow merged;
    merged.reserve(r.size() + b.size());
    size_t i = 0, j = 0;
    while (i < r.size() || j < b.size()) {
      if (j == b.size() || (i < r.size() && r[i].first < b[j].first)) {
        merged.push_back(r[i++]);
      } else if (i == r.size() || b[j].first < r[i].first) {
        merged.emplace_back(b[j].first, Rational(-factor * b[j].second));
        ++j;
      } else {
        Rational c = r[i].second - factor * b[j].second;
        if (c != 0) merged.emplace_back(r[i].first, std::move(c));
        ++i;
        ++j;
      }
    }
    r = std::move(merged);
  }
  if (r.empty()) return Mpoly(nvars_);
  // The loop stops once the lead sits on a standard monomial. Later
  // entries can still occupy pivot columns, and eliminating those never
  // touches columns before them, so peel the lead and reduce the tail.
  Mpoly residue(nvars_);
  residue.add_term(monomials_[r.front().first], r.front().second);
  Mpoly rest(nvars_);
  for (size_t i = 1; i < r.size(); ++i) rest.add_term(monomials_[r[i].first], r[i].second);
  if (rest.is_zero()) return residue;
  return residue + normal_form(rest);
}

std::vector<Monomial> GradedPiece::standard_monomials() const {
  std::vector<Monomial> out;
  for (size_t i = 0; i < monomials_.size(); ++i)
    if (lead_to_row_[i] < 0) out.push_back(monomials_[i]);
  return out;
}

long long quotient_graded_dim(const std::vector<Mpoly>& gens, int nvars, int degree) {
  return GradedPiece(gens, nvars, degree).quotient_dim();
}

UniPoly hilbert_series(const std::vector<Mpoly>& gens, int nvars, int top_degree) {
  if (top_degree < 0 || top_degree % 2 != 0)
    throw std::invalid_argument("hilbert_series: top_degree must be even and >= 0");
  std::vector<Rational> coeffs(top_degree + 1, Rational(0));
  for (int d = 0; d <= top_degree; d += 2)
    coeffs[d] = to_rational(quotient_graded_dim(gens, nvars, d));
  return UniPoly(std::move(coeffs));
}

UniPoly polynomial_ring_series(int nvars, int top_degree) {
  std::vector<Rational> coeffs(top_degree + 1, Rational(0));
  for (int d = 0; d <= top_degree; d += 2) coeffs[d] = to_rational(monomial_count(nvars, d / 2));
  return UniPoly(std::move(coeffs));
}

UniPoly complete_intersection_series(const std::vector<int>& gen_degrees, int nvars,
                                     int top_degree) {
  UniPoly numerator = UniPoly::constant(1);
  for (int d : gen_degrees)
    numerator *= UniPoly::constant(1) - UniPoly::monomial(d);
  UniPoly series = numerator * polynomial_ring_series(nvars, top_degree);
  std::vector<Rational> coeffs(series.coeffs());
  if (static_cast<int>(coeffs.size()) > top_degree + 1) coeffs.resize(top_degree + 1);
  return UniPoly(std::move(coeffs));
}

bool is_regular_sequence(const std::vector<Mpoly>& gens, int nvars) {
  check_gens(gens, nvars);
  std::vector<int> degs;
  int total = 0;
  for (const auto& g : gens) {
    if (g.is_zero() || g.degree() <= 0)
      throw std::invalid_argument("is_regular_sequence: generators must have positive degree");
    degs.push_back(g.degree());
    total += g.degree();
  }
  int top = total;
  if (static_cast<int>(gens.size()) == nvars) top += 2;
  UniPoly expected = complete_intersection_series(degs, nvars, top);
  for (int d = 0; d <= top; d += 2)
    if (to_rational(quotient_graded_dim(gens, nvars, d)) != expected.coeff(d)) return false;
  return true;
}

}  // namespace hessring
