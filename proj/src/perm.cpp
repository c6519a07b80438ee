#include "hessring/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "hessring/errors.hpp"

namespace hessring {

Permutation::Permutation(std::vector<int> one_line)
    : n_(static_cast<int>(one_line.size())), word_(std::move(one_line)), inv_(n_, 0) {
  std::vector<bool> seen(n_, false);
  for (int i = 0; i < n_; ++i) {
    int v = word_[i];
    if (v < 1 || v > n_ || seen[v - 1])
      throw std::invalid_argument("Permutation: word is not a bijection on [n]");
    seen[v - 1] = true;
    inv_[v - 1] = i + 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

int Permutation::value_at(int i) const {
  if (i == 0) return 0;
  if (i < 1 || i > n_) throw std::out_of_range("Permutation::value_at");
  return word_[i - 1];
}

int Permutation::position_of(int v) const {
  if (v == 0) return 0;  // the w(0) = 0 convention
  if (v < 1 || v > n_) throw std::out_of_range("Permutation::position_of");
  return inv_[v - 1];
}

Permutation Permutation::inverse() const {
  return Permutation(inv_);
}

Permutation Permutation::compose(const Permutation& other) const {
  if (n_ != other.n_) throw std::invalid_argument("Permutation::compose: size mismatch");
  std::vector<int> w(n_);
  for (int i = 1; i <= n_; ++i) w[i - 1] = value_at(other.value_at(i));
  return Permutation(std::move(w));
}

Permutation Permutation::adjacent_swap(int m) const {
  if (m < 1 || m >= n_) throw std::out_of_range("adjacent_swap: m out of range");
  return swap_positions(m, m + 1);
}

Permutation Permutation::swap_positions(int a, int b) const {
  if (a < 1 || a > n_ || b < 1 || b > n_)
    throw std::out_of_range("swap_positions: position out of range");
  std::vector<int> w(word_);
  std::swap(w[a - 1], w[b - 1]);
  return Permutation(std::move(w));
}

std::string Permutation::to_string() const {
  std::string s;
  for (int v : word_) s += std::to_string(v);
  return s;
}

std::vector<NInversion> n_inversions(const Permutation& w) {
  std::vector<NInversion> out;
  const int n = w.size();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (w.value_at(i) == w.value_at(j) + 1) out.push_back({i, j});
  return out;
}

std::vector<NInversion> d_set(const Permutation& w, int j) {
  if (j < 1 || j > w.size()) throw std::out_of_range("d_set: j out of range");
  std::vector<NInversion> out;
  for (const auto& p : n_inversions(w))
    if (p.left <= j && j < p.right) out.push_back(p);
  return out;
}

long long inv_h_raw(const Permutation& w, const std::vector<int>& h_values) {
  if (static_cast<int>(h_values.size()) != w.size())
    throw std::invalid_argument("inv_h: size mismatch");
  long long count = 0;
  for (int j = 1; j <= w.size(); ++j)
    for (int i = j + 1; i <= h_values[j - 1]; ++i)
      if (w.value_at(j) > w.value_at(i)) ++count;
  return count;
}

std::vector<Permutation> enumerate_sn(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_sn: n must be positive");
  check_guard(n <= 9, "enumerate_sn: n > 9 (set HESSRING_GUARD_OVERRIDE to lift)");
  std::vector<int> word(n);
  std::iota(word.begin(), word.end(), 1);
  std::vector<Permutation> out;
  out.reserve(static_cast<size_t>(factorial(n)));
  do {
    out.emplace_back(word);
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

long long factorial(int n) {
  long long f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

long long lex_rank(const Permutation& w) {
  const int n = w.size();
  long long rank = 0;
  for (int i = 1; i <= n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j <= n; ++j)
      if (w.value_at(j) < w.value_at(i)) ++smaller;
    rank += smaller * factorial(n - i);
  }
  return rank;
}

}  // namespace hessring
