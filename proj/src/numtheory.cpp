#include "gring/numtheory.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace gring {

std::vector<std::pair<long, int>> factorize(long n) {
    if (n < 1) throw DomainError("factorize: argument must be positive");
    std::vector<std::pair<long, int>> out;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

int mobius(long n) {
    if (n < 1) throw DomainError("mobius: argument must be positive");
    int sign = 1;
    for (const auto& [p, e] : factorize(n)) {
        (void)p;
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

long euler_phi(long n) {
    if (n < 1) throw DomainError("euler_phi: argument must be positive");
    long r = n;
    for (const auto& [p, e] : factorize(n)) {
        (void)e;
        r -= r / p;
    }
    return r;
}

std::vector<long> divisors(long n) {
    if (n < 1) throw DomainError("divisors: argument must be positive");
    std::vector<long> out{1};
    for (const auto& [p, e] : factorize(n)) {
        const size_t base = out.size();
        long pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Exact division of integer polynomials, quotient = num / den. den monic.
std::vector<long> poly_div_exact(std::vector<long> num, const std::vector<long>& den) {
    std::vector<long> q(num.size() - den.size() + 1, 0);
    for (size_t i = q.size(); i-- > 0;) {
        long c = num[i + den.size() - 1];
        q[i] = c;
        if (c == 0) continue;
        for (size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    return q;
}

std::vector<long> compute_cyclotomic(long n) {
    // Phi_n = (x^n - 1) / prod of Phi_d over proper divisors d.
    std::vector<long> poly(n + 1, 0);
    poly[0] = -1;
    poly[n] = 1;
    for (long d : divisors(n)) {
        if (d == n) continue;
        poly = poly_div_exact(std::move(poly), cyclotomic_polynomial(d));
    }
    return poly;
}

} // namespace

const std::vector<long>& cyclotomic_polynomial(long n) {
    if (n < 1) throw DomainError("cyclotomic_polynomial: argument must be positive");
    static std::map<long, std::vector<long>> cache;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    std::vector<long> value = compute_cyclotomic(n);
    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(n, std::move(value)).first->second;
}

} // namespace gring
