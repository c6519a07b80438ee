#pragma once

#include <string>
#include <vector>

#include "hessring/rational.hpp"

namespace hessring {

// Dense univariate polynomial with exact rational coefficients.
// coeffs[k] is the coefficient of the k-th power of the formal parameter
// (s for Hilbert series, t for fixed-point values and q-analogues).
// Trailing zeros are always trimmed, so degree() == coeffs.size()-1.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  static UniPoly constant(const Rational& c);
  static UniPoly monomial(int power, const Rational& c = 1);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for 0
  const Rational& coeff(int k) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
  bool operator==(const UniPoly& o) const { return coeffs_ == o.coeffs_; }

  UniPoly scaled(const Rational& c) const;
  Rational eval(const Rational& x) const;
  // p(x^k): spreads coefficients; used for the t = s^2 substitution.
  UniPoly compose_power(int k) const;

  bool all_coeffs_nonneg_integers() const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace hessring
