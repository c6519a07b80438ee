#pragma once

#include <gmpxx.h>
#include <string>

namespace hessring {

// Exact rational coefficients. All arithmetic in this project is exact;
// there is no floating point anywhere.
using Rational = mpq_class;
using Integer = mpz_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

// gmpxx has no long long overloads; funnel wide integers through long.
inline Rational to_rational(long long v) { return Rational(static_cast<long>(v)); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// True iff q is the square of a rational. A canonical fraction p/q is a
// square exactly when p >= 0 and both p and q are perfect integer squares.
inline bool is_rational_square(const Rational& q) {
  if (q < 0) return false;
  return mpz_perfect_square_p(q.get_num().get_mpz_t()) != 0 &&
         mpz_perfect_square_p(q.get_den().get_mpz_t()) != 0;
}

}  // namespace hessring
