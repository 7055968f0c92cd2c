// Elementary number theory over machine integers: factorization, phi, mu,
// divisors, and integer cyclotomic polynomials. Arguments are small (class
// orders, conductors), so trial division is plenty.
#pragma once

#include <cstdint>
#include <vector>

#include "gring/errors.hpp"

namespace gring {

// (prime, exponent) pairs, primes ascending.
std::vector<std::pair<long, int>> factorize(long n);

// Moebius function; n >= 1.
int mobius(long n);

// Euler totient; n >= 1.
long euler_phi(long n);

// Divisors of n in ascending order; n >= 1.
std::vector<long> divisors(long n);

// Coefficients of the n-th cyclotomic polynomial, constant term first,
// degree phi(n). Integer coefficients; results are cached.
const std::vector<long>& cyclotomic_polynomial(long n);

inline long gcd_long(long a, long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline long lcm_long(long a, long b) { return a / gcd_long(a, b) * b; }

} // namespace gring
