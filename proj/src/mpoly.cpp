#include "hessring/mpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace hessring {

Mpoly Mpoly::constant(int nvars, const Rational& c) {
  Mpoly p(nvars);
  p.add_term(Monomial{std::vector<int>(nvars, 0)}, c);
  return p;
}

Mpoly Mpoly::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw std::out_of_range("Mpoly::variable");
  Mpoly p(nvars);
  Monomial m{std::vector<int>(nvars, 0)};
  m.exps[index] = 1;
  p.add_term(std::move(m), 1);
  return p;
}

void Mpoly::add_term(Monomial m, const Rational& c) {
  if (c == 0) return;
  if (static_cast<int>(m.exps.size()) != nvars_)
    throw std::invalid_argument("Mpoly::add_term: exponent arity mismatch");
  auto [it, inserted] = terms_.try_emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational Mpoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Mpoly Mpoly::operator+(const Mpoly& o) const {
  Mpoly r(*this);
  r += o;
  return r;
}

Mpoly& Mpoly::operator+=(const Mpoly& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("Mpoly: ambient mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Mpoly Mpoly::operator-(const Mpoly& o) const {
  Mpoly r(*this);
  r -= o;
  return r;
}

Mpoly& Mpoly::operator-=(const Mpoly& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("Mpoly: ambient mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Mpoly Mpoly::operator-() const {
  Mpoly r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Mpoly Mpoly::operator*(const Mpoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("Mpoly: ambient mismatch");
  Mpoly r(nvars_);
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      Monomial m{m1.exps};
      for (int i = 0; i < nvars_; ++i) m.exps[i] += m2.exps[i];
      r.add_term(std::move(m), c1 * c2);
    }
  }
  return r;
}

Mpoly Mpoly::scaled(const Rational& c) const {
  Mpoly r(nvars_);
  if (c == 0) return r;
  for (const auto& [m, coeff] : terms_) r.terms_.emplace(m, coeff * c);
  return r;
}

int Mpoly::degree() const {
  if (terms_.empty()) return -1;
  return 2 * terms_.rbegin()->first.total();
}

bool Mpoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int t = terms_.begin()->first.total();
  return terms_.rbegin()->first.total() == t;
}

Mpoly Mpoly::substitute(const std::vector<std::optional<Mpoly>>& assignment) const {
  if (static_cast<int>(assignment.size()) != nvars_)
    throw std::invalid_argument("Mpoly::substitute: assignment arity mismatch");
  Mpoly out(nvars_);
  for (const auto& [m, c] : terms_) {
    Mpoly term = Mpoly::constant(nvars_, c);
    Monomial passthrough{std::vector<int>(nvars_, 0)};
    for (int i = 0; i < nvars_; ++i) {
      if (m.exps[i] == 0) continue;
      if (assignment[i]) {
        for (int e = 0; e < m.exps[i]; ++e) term = term * *assignment[i];
      } else {
        passthrough.exps[i] = m.exps[i];
      }
    }
    Mpoly shift(nvars_);
    shift.add_term(std::move(passthrough), 1);
    out += term * shift;
  }
  return out;
}

Mpoly Mpoly::set_var(int index, const Mpoly& value) const {
  std::vector<std::optional<Mpoly>> a(nvars_);
  a[index] = value;
  return substitute(a);
}

Mpoly Mpoly::set_var_zero(int index) const {
  Mpoly out(nvars_);
  for (const auto& [m, c] : terms_)
    if (m.exps[index] == 0) out.terms_.emplace(m, c);
  return out;
}

Rational Mpoly::eval(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw std::invalid_argument("Mpoly::eval: point arity mismatch");
  Rational acc(0);
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (int i = 0; i < nvars_; ++i)
      for (int e = 0; e < m.exps[i]; ++e) v *= point[i];
    acc += v;
  }
  return acc;
}

UniPoly Mpoly::collapse_linear(const std::vector<Rational>& scale) const {
  if (static_cast<int>(scale.size()) != nvars_)
    throw std::invalid_argument("Mpoly::collapse_linear: scale arity mismatch");
  std::vector<Rational> coeffs;
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (int i = 0; i < nvars_; ++i)
      for (int e = 0; e < m.exps[i]; ++e) v *= scale[i];
    int power = m.total();
    if (static_cast<int>(coeffs.size()) <= power) coeffs.resize(power + 1, Rational(0));
    coeffs[power] += v;
  }
  return UniPoly(std::move(coeffs));
}

Mpoly Mpoly::swap_vars(int a, int b) const {
  Mpoly out(nvars_);
  for (const auto& [m, c] : terms_) {
    Monomial sw{m.exps};
    std::swap(sw.exps[a], sw.exps[b]);
    out.add_term(std::move(sw), c);
  }
  return out;
}

Mpoly Mpoly::permute_vars(const std::vector<int>& target) const {
  if (static_cast<int>(target.size()) != nvars_)
    throw std::invalid_argument("Mpoly::permute_vars: arity mismatch");
  Mpoly out(nvars_);
  for (const auto& [m, c] : terms_) {
    Monomial im{std::vector<int>(nvars_, 0)};
    for (int i = 0; i < nvars_; ++i) im.exps[target[i]] += m.exps[i];
    out.add_term(std::move(im), c);
  }
  return out;
}

Mpoly Mpoly::extended(int new_nvars) const {
  if (new_nvars < nvars_) throw std::invalid_argument("Mpoly::extended: shrinking");
  Mpoly out(new_nvars);
  for (const auto& [m, c] : terms_) {
    Monomial em{m.exps};
    em.exps.resize(new_nvars, 0);
    out.terms_.emplace(std::move(em), c);
  }
  return out;
}

Mpoly Mpoly::restricted(int new_nvars) const {
  if (new_nvars > nvars_) throw std::invalid_argument("Mpoly::restricted: growing");
  Mpoly out(new_nvars);
  for (const auto& [m, c] : terms_) {
    for (int i = new_nvars; i < nvars_; ++i)
      if (m.exps[i] != 0)
        throw std::invalid_argument("Mpoly::restricted: dropped variable occurs");
    Monomial rm{std::vector<int>(m.exps.begin(), m.exps.begin() + new_nvars)};
    out.terms_.emplace(std::move(rm), c);
  }
  return out;
}

bool Mpoly::divisible_by_var_difference(int a, int b) const {
  return set_var(a, Mpoly::variable(nvars_, b)).is_zero();
}

std::pair<Mpoly, Mpoly> Mpoly::divide_by_var_difference(int a, int b) const {
  // Synthetic division in v_a by (v_a - v_b): with p = sum_k c_k v_a^k,
  // q_{k-1} = c_k + v_b * q_k from the top down, remainder c_0 + v_b * q_0.
  int dmax = 0;
  for (const auto& [m, c] : terms_) dmax = std::max(dmax, m.exps[a]);
  std::vector<Mpoly> ck(dmax + 1, Mpoly(nvars_));
  for (const auto& [m, c] : terms_) {
    Monomial stripped{m.exps};
    int k = stripped.exps[a];
    stripped.exps[a] = 0;
    ck[k].add_term(std::move(stripped), c);
  }
  const Mpoly vb = Mpoly::variable(nvars_, b);
  const Mpoly va = Mpoly::variable(nvars_, a);
  Mpoly quotient(nvars_);
  Mpoly carry(nvars_);  // q_k while descending
  for (int k = dmax; k >= 1; --k) {
    carry = ck[k] + vb * carry;
    Mpoly power = Mpoly::constant(nvars_, 1);
    for (int e = 0; e < k - 1; ++e) power = power * va;
    quotient += carry * power;
  }
  Mpoly remainder = ck[0] + vb * carry;
  return {std::move(quotient), std::move(remainder)};
}

std::string Mpoly::to_string(const std::vector<std::string>& names) const {
  if (static_cast<int>(names.size()) != nvars_)
    throw std::invalid_argument("Mpoly::to_string: name arity mismatch");
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational a = c > 0 ? c : Rational(-c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string factors;
    for (int i = 0; i < nvars_; ++i) {
      if (m.exps[i] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += names[i];
      if (m.exps[i] > 1) factors += "^" + std::to_string(m.exps[i]);
    }
    if (factors.empty()) {
      out += a.get_str();
    } else {
      if (a != 1) out += a.get_str() + "*";
      out += factors;
    }
  }
  return out;
}

std::vector<std::string> names_xt(int n) {
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
  v.push_back("t");
  return v;
}

std::vector<std::string> names_t(int n) {
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back("t" + std::to_string(i));
  return v;
}

std::vector<std::string> names_ut(int n) {
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back("u" + std::to_string(i));
  v.push_back("t");
  return v;
}

Mpoly elementary(int nvars, int k, const std::vector<int>& vars) {
  if (k < 0) return Mpoly(nvars);  // e_{-1} = 0
  if (k == 0) return Mpoly::constant(nvars, 1);
  const int m = static_cast<int>(vars.size());
  if (k > m) return Mpoly(nvars);
  Mpoly out(nvars);
  std::vector<int> pick(k);
  auto rec = [&](auto&& self, int start, int depth) -> void {
    if (depth == k) {
      Monomial mono{std::vector<int>(nvars, 0)};
      for (int idx : pick) mono.exps[idx] = 1;
      out.add_term(std::move(mono), 1);
      return;
    }
    for (int i = start; i < m; ++i) {
      pick[depth] = vars[i];
      self(self, i + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
  return out;
}

Mpoly power_sum(int nvars, int k, const std::vector<int>& vars) {
  if (k < 0) throw std::invalid_argument("power_sum: negative degree");
  if (k == 0) return Mpoly::constant(nvars, static_cast<int>(vars.size()));
  Mpoly out(nvars);
  for (int idx : vars) {
    Monomial m{std::vector<int>(nvars, 0)};
    m.exps[idx] = k;
    out.add_term(std::move(m), 1);
  }
  return out;
}

Mpoly complete_h(int nvars, int k, const std::vector<int>& vars) {
  if (k < 0) return Mpoly(nvars);
  if (k == 0) return Mpoly::constant(nvars, 1);
  Mpoly out(nvars);
  const int m = static_cast<int>(vars.size());
  if (m == 0) return out;
  // Weakly increasing index tuples of length k.
  std::vector<int> pick(k, 0);
  while (true) {
    Monomial mono{std::vector<int>(nvars, 0)};
    for (int p : pick) mono.exps[vars[p]] += 1;
    out.add_term(std::move(mono), 1);
    int pos = k - 1;
    while (pos >= 0 && pick[pos] == m - 1) --pos;
    if (pos < 0) break;
    int v = pick[pos] + 1;
    for (int i = pos; i < k; ++i) pick[i] = v;
  }
  return out;
}

bool newton_check(int q, int m) {
  if (q < 1 || m < 1) throw std::invalid_argument("newton_check: q, m must be positive");
  std::vector<int> vars(m);
  for (int i = 0; i < m; ++i) vars[i] = i;
  Mpoly lhs(m);
  for (int r = 1; r <= q - 1; ++r) {
    Rational sign((r % 2 == 0) ? -1 : 1);  // -(-1)^r
    lhs += (elementary(m, r, vars) * power_sum(m, q - r, vars)).scaled(sign);
  }
  Rational sign_q((q % 2 == 0) ? 1 : -1);
  Mpoly rhs = elementary(m, q, vars).scaled(sign_q * q) + power_sum(m, q, vars);
  return lhs == rhs;
}

bool is_symmetric_in(const Mpoly& p, const std::vector<int>& vars) {
  for (size_t i = 0; i + 1 < vars.size(); ++i)
    if (!(p.swap_vars(vars[i], vars[i + 1]) == p)) return false;
  return true;
}

}  // namespace hessring
