// Exact scalar types. GMP supplies the arbitrary-precision integers and
// canonicalized rationals; everything downstream assumes denominators are
// positive and fractions are reduced, which mpq_class guarantees.
#pragma once

#include <gmpxx.h>

#include <string>

namespace gring {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

// Requires is_integral(q).
inline Integer as_integer(const Rational& q) { return q.get_num(); }

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline std::string to_string(const Rational& q) {
    if (is_integral(q)) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Floor/ceil of num/den as exact integers (den > 0 not required).
inline Integer floor_div(const Integer& num, const Integer& den) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

inline Integer ceil_div(const Integer& num, const Integer& den) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

inline Integer floor_rat(const Rational& q) { return floor_div(q.get_num(), q.get_den()); }
inline Integer ceil_rat(const Rational& q) { return ceil_div(q.get_num(), q.get_den()); }

// Non-negative remainder of a mod m, m > 0.
inline Integer mod_floor(const Integer& a, const Integer& m) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

} // namespace gring
