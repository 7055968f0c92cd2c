// Exact arithmetic in cyclotomic fields Q(zeta_n).
//
// An element is held as its canonical power-basis representation at a fixed
// conductor n: phi(n) rational coefficients, the remainder of the defining
// polynomial mod Phi_n. Two equal elements at the same conductor therefore
// have identical coefficient lists. Mixed-conductor operations lift both
// operands to the lcm conductor; nothing is reduced to a smaller field unless
// asked for.
#pragma once

#include <vector>

#include "gring/numtheory.hpp"
#include "gring/rational.hpp"

namespace gring {

class Cyc {
public:
    // Zero at conductor 1.
    Cyc();

    static Cyc from_rational(const Rational& q);
    static Cyc from_rational(long q) { return from_rational(Rational(q)); }

    // zeta_n^j, any integer j (reduced mod n); n >= 1.
    static Cyc root_of_unity(long n, long j);

    // From a power-basis polynomial at conductor n (any degree; reduced here).
    static Cyc from_coeffs(long n, std::vector<Rational> coeffs);

    long conductor() const { return n_; }

    // Canonical coefficients, length phi(conductor()).
    const std::vector<Rational>& coeffs() const { return c_; }

    // Representation of the same element at conductor m; m must be a
    // multiple of conductor().
    Cyc lifted(long m) const;

    bool is_zero() const;
    bool is_rational() const;
    // Requires is_rational().
    Rational rational_value() const;

    // True if the element lies in Q(zeta_m) (checked via Galois invariance).
    bool lies_in(long m) const;

    // Field trace to Q taken over Q(zeta_conductor()).
    Rational trace_to_rationals() const;

    // zeta -> zeta^d for gcd(d, conductor()) = 1; d may be negative.
    // Throws NonCoprimeAutomorphism otherwise.
    Cyc galois_apply(long d) const;

    Cyc operator-() const;
    friend Cyc operator+(const Cyc& a, const Cyc& b);
    friend Cyc operator-(const Cyc& a, const Cyc& b);
    friend Cyc operator*(const Cyc& a, const Cyc& b);
    friend bool operator==(const Cyc& a, const Cyc& b);
    friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

    // Diagnostic form, e.g. "1-z6" at conductor 6.
    std::string str() const;

private:
    long n_;
    std::vector<Rational> c_; // size euler_phi(n_)
};

// Tr over Q(zeta_n) of zeta_n^j: mu(m) * phi(n) / phi(m) with m = n/gcd(j,n).
long root_trace(long n, long j);

inline Rational trace_to_rationals(const Cyc& x) { return x.trace_to_rationals(); }
inline Cyc galois_apply(const Cyc& x, long d) { return x.galois_apply(d); }

} // namespace gring
