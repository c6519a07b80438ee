#include "hessring/hessenberg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "hessring/errors.hpp"

namespace hessring {

HessFn::HessFn(std::vector<int> values)
    : n_(static_cast<int>(values.size())), values_(std::move(values)) {
  if (n_ == 0) throw std::invalid_argument("HessFn: empty value list");
  for (int i = 1; i <= n_; ++i) {
    if (values_[i - 1] < i || values_[i - 1] > n_)
      throw std::invalid_argument("HessFn: needs i <= h(i) <= n at i=" + std::to_string(i));
    if (i < n_ && values_[i] < values_[i - 1])
      throw std::invalid_argument("HessFn: not nondecreasing at i=" + std::to_string(i));
  }
}

HessFn HessFn::parse(const std::string& csv) {
  std::vector<int> vals;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    int v = std::stoi(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("HessFn::parse: bad token '" + item + "'");
    vals.push_back(v);
  }
  return HessFn(std::move(vals));
}

HessFn HessFn::minimal(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  return HessFn(std::move(v));
}

HessFn HessFn::full(int n) { return HessFn(std::vector<int>(n, n)); }

int HessFn::value_at(int j) const {
  if (j < 1 || j > n_) throw std::out_of_range("HessFn::value_at");
  return values_[j - 1];
}

std::string HessFn::to_string() const {
  std::string s;
  for (int i = 0; i < n_; ++i) {
    if (i) s += ',';
    s += std::to_string(values_[i]);
  }
  return s;
}

std::vector<HessFn> enumerate_hn(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_hn: n must be positive");
  check_guard(n <= 8, "enumerate_hn: n > 8 (set HESSRING_GUARD_OVERRIDE to lift)");
  std::vector<HessFn> out;
  std::vector<int> cur(n);
  // Odometer over nondecreasing dominating sequences, lexicographic.
  auto rec = [&](auto&& self, int j) -> void {
    if (j == n) {
      out.push_back(HessFn(cur));
      return;
    }
    int lo = std::max(j + 1, j == 0 ? 1 : cur[j - 1]);
    for (int v = lo; v <= n; ++v) {
      cur[j] = v;
      self(self, j + 1);
    }
  };
  rec(rec, 0);
  return out;
}

bool subset_order(const HessFn& h1, const HessFn& h2) {
  if (h1.size() != h2.size()) throw std::invalid_argument("subset_order: size mismatch");
  for (int j = 1; j <= h1.size(); ++j)
    if (h1.value_at(j) > h2.value_at(j)) return false;
  return true;
}

bool prec_order(const HessFn& h1, const HessFn& h2) {
  if (h1.size() != h2.size()) throw std::invalid_argument("prec_order: size mismatch");
  for (int m = h1.size(); m >= 1; --m) {
    if (h1.value_at(m) == h2.value_at(m)) continue;
    return h1.value_at(m) < h2.value_at(m);
  }
  return false;  // equal: strict order
}

int complex_dim(const HessFn& h) {
  int d = 0;
  for (int j = 1; j <= h.size(); ++j) d += h.value_at(j) - j;
  return d;
}

std::vector<std::pair<int, int>> negative_roots(const HessFn& h) {
  std::vector<std::pair<int, int>> out;
  for (int j = 1; j <= h.size(); ++j)
    for (int i = j + 1; i <= h.value_at(j); ++i) out.emplace_back(i, j);
  return out;
}

HessFn minimal_hess(const Permutation& w) {
  const int n = w.size();
  std::vector<int> vals(n);
  for (int j = 1; j <= n; ++j) {
    auto d = d_set(w, j);
    int v = j;
    for (const auto& p : d) v = std::max(v, p.right);
    vals[j - 1] = v;
  }
  return HessFn(std::move(vals));
}

HessFn minimal_hess_via_positions(const Permutation& w) {
  const int n = w.size();
  std::vector<int> vals(n);
  for (int j = 1; j <= n; ++j) {
    if (d_set(w, j).empty()) {
      vals[j - 1] = j;
      continue;
    }
    int v = 0;
    for (int p = 1; p <= j; ++p) v = std::max(v, w.position_of(w.value_at(p) - 1));
    vals[j - 1] = v;
  }
  return HessFn(std::move(vals));
}

bool is_fixed_point(const HessFn& h, const Permutation& w) {
  if (h.size() != w.size()) throw std::invalid_argument("is_fixed_point: size mismatch");
  for (int j = 1; j <= h.size(); ++j)
    if (w.position_of(w.value_at(j) - 1) > h.value_at(j)) return false;
  return true;
}

std::vector<Permutation> fixed_points(const HessFn& h) {
  check_guard(h.size() <= 8, "fixed_points: n > 8 (set HESSRING_GUARD_OVERRIDE to lift)");
  std::vector<Permutation> out;
  for (const auto& w : enumerate_sn(h.size())) {
    bool direct = is_fixed_point(h, w);
    bool via_hw = subset_order(minimal_hess(w), h);
    if (direct != via_hw)
      throw consistency_error("fixed_points: criteria disagree at h=" + h.to_string() +
                              " w=" + w.to_string());
    if (direct) out.push_back(w);
  }
  return out;
}

long long inv_h(const Permutation& w, const HessFn& h) { return inv_h_raw(w, h.values()); }

std::pair<HessFn, HessFn> split_at(const HessFn& h, int r) {
  if (r < 1 || r > h.size()) throw std::out_of_range("split_at: r out of range");
  if (h.value_at(r) != r) throw std::invalid_argument("split_at: requires h(r) = r");
  std::vector<int> v1(h.values().begin(), h.values().begin() + r);
  std::vector<int> v2;
  for (int j = r + 1; j <= h.size(); ++j) v2.push_back(h.value_at(j) - r);
  return {HessFn(std::move(v1)), HessFn(std::move(v2))};
}

IncGraph incomparability_graph(const HessFn& h) {
  IncGraph g;
  g.n = h.size();
  g.edges = negative_roots(h);
  return g;
}

long long catalan(int n) {
  long long c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

}  // namespace hessring
