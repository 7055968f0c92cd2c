#include "gring/cyclotomic.hpp"

#include <sstream>

namespace gring {

namespace {

// Remainder of p mod Phi_n, in place; result truncated to phi(n) coefficients.
std::vector<Rational> reduce_mod_cyclotomic(std::vector<Rational> p, long n) {
    const std::vector<long>& phi_poly = cyclotomic_polynomial(n);
    const size_t deg = phi_poly.size() - 1; // = euler_phi(n), monic
    for (size_t i = p.size(); i-- > deg;) {
        Rational c = p[i];
        if (c == 0) continue;
        p[i] = 0;
        for (size_t j = 0; j < deg; ++j) p[i - deg + j] -= c * phi_poly[j];
    }
    p.resize(deg);
    return p;
}

long mod_pos(long j, long n) {
    long r = j % n;
    return r < 0 ? r + n : r;
}

} // namespace

Cyc::Cyc() : n_(1), c_{Rational(0)} {}

Cyc Cyc::from_rational(const Rational& q) {
    Cyc x;
    x.c_[0] = q;
    return x;
}

Cyc Cyc::root_of_unity(long n, long j) {
    if (n < 1) throw DomainError("root_of_unity: conductor must be positive");
    j = mod_pos(j, n);
    std::vector<Rational> p(j + 1, Rational(0));
    p[j] = 1;
    return from_coeffs(n, std::move(p));
}

Cyc Cyc::from_coeffs(long n, std::vector<Rational> coeffs) {
    if (n < 1) throw DomainError("from_coeffs: conductor must be positive");
    const size_t deg = static_cast<size_t>(euler_phi(n));
    Cyc x;
    x.n_ = n;
    if (coeffs.size() < deg)
        coeffs.resize(deg, Rational(0));
    else if (coeffs.size() > deg)
        coeffs = reduce_mod_cyclotomic(std::move(coeffs), n);
    x.c_ = std::move(coeffs);
    return x;
}

Cyc Cyc::lifted(long m) const {
    if (m == n_) return *this;
    if (m < 1 || m % n_ != 0) throw DomainError("lifted: target must be a multiple of the conductor");
    // zeta_n = zeta_m^(m/n); substitute and reduce.
    const long step = m / n_;
    std::vector<Rational> p(static_cast<size_t>((c_.size() - 1) * step + 1), Rational(0));
    for (size_t j = 0; j < c_.size(); ++j) p[j * step] = c_[j];
    return from_coeffs(m, std::move(p));
}

bool Cyc::is_zero() const {
    for (const auto& c : c_)
        if (c != 0) return false;
    return true;
}

bool Cyc::is_rational() const {
    for (size_t j = 1; j < c_.size(); ++j)
        if (c_[j] != 0) return false;
    return true;
}

Rational Cyc::rational_value() const {
    if (!is_rational()) throw DomainError("rational_value: element is not rational: " + str());
    return c_[0];
}

bool Cyc::lies_in(long m) const {
    if (m < 1) throw DomainError("lies_in: conductor must be positive");
    const long g = gcd_long(m, n_);
    // Invariance under Gal(Q(zeta_n)/Q(zeta_g)) = { zeta -> zeta^d : d = 1 mod g }.
    for (long d = 1; d < n_; ++d) {
        if (gcd_long(d, n_) != 1 || d % g != 1 % g) continue;
        if (galois_apply(d) != *this) return false;
    }
    return true;
}

Rational Cyc::trace_to_rationals() const {
    Rational t(0);
    for (size_t j = 0; j < c_.size(); ++j)
        if (c_[j] != 0) t += c_[j] * root_trace(n_, static_cast<long>(j));
    return t;
}

Cyc Cyc::galois_apply(long d) const {
    const long dd = mod_pos(d, n_);
    if (gcd_long(dd == 0 ? n_ : dd, n_) != 1)
        throw NonCoprimeAutomorphism("galois_apply: exponent " + std::to_string(d) +
                                     " is not coprime to conductor " + std::to_string(n_));
    std::vector<Rational> p(n_, Rational(0));
    for (size_t j = 0; j < c_.size(); ++j) p[(j * dd) % n_] += c_[j];
    return from_coeffs(n_, std::move(p));
}

Cyc Cyc::operator-() const {
    Cyc x = *this;
    for (auto& c : x.c_) c = -c;
    return x;
}

Cyc operator+(const Cyc& a, const Cyc& b) {
    const long n = lcm_long(a.n_, b.n_);
    Cyc x = a.lifted(n);
    const Cyc y = b.lifted(n);
    for (size_t j = 0; j < x.c_.size(); ++j) x.c_[j] += y.c_[j];
    return x;
}

Cyc operator-(const Cyc& a, const Cyc& b) { return a + (-b); }

Cyc operator*(const Cyc& a, const Cyc& b) {
    const long n = lcm_long(a.n_, b.n_);
    const Cyc x = a.lifted(n);
    const Cyc y = b.lifted(n);
    std::vector<Rational> p(2 * x.c_.size(), Rational(0));
    for (size_t i = 0; i < x.c_.size(); ++i) {
        if (x.c_[i] == 0) continue;
        for (size_t j = 0; j < y.c_.size(); ++j) {
            if (y.c_[j] == 0) continue;
            p[i + j] += x.c_[i] * y.c_[j];
        }
    }
    return Cyc::from_coeffs(n, std::move(p));
}

bool operator==(const Cyc& a, const Cyc& b) {
    const long n = lcm_long(a.n_, b.n_);
    return a.lifted(n).c_ == b.lifted(n).c_;
}

std::string Cyc::str() const {
    std::ostringstream os;
    bool any = false;
    for (size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        if (any && c_[j] > 0) os << "+";
        if (j == 0) {
            os << to_string(c_[j]);
        } else {
            if (c_[j] == -1)
                os << "-";
            else if (c_[j] != 1)
                os << to_string(c_[j]) << "*";
            os << "z" << n_;
            if (j > 1) os << "^" << j;
        }
        any = true;
    }
    if (!any) os << "0";
    return os.str();
}

long root_trace(long n, long j) {
    if (n < 1) throw DomainError("root_trace: conductor must be positive");
    const long m = n / gcd_long(j % n, n); // order of zeta_n^j
    return mobius(m) * (euler_phi(n) / euler_phi(m));
}

} // namespace gring
