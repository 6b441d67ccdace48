#include "hopfint/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace hopfint {

namespace {

int poly_degree(const Poly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) out[i + j] += a[i] * b[j];
    }
    poly_trim(out);
    return out;
}

// Division with remainder; the divisor need not be monic. Exactness is the
// caller's concern.
void poly_divrem(const Poly& num, const Poly& den, Poly& quot, Poly& rem) {
    const int dd = poly_degree(den);
    if (dd < 0) throw std::invalid_argument("polynomial division by zero");
    rem = num;
    poly_trim(rem);
    quot.assign(rem.size() > den.size() ? rem.size() - den.size() + 1 : 1, Rational(0));
    const Rational& lead = den[dd];
    int dr = poly_degree(rem);
    while (dr >= dd) {
        Rational c = rem[dr] / lead;
        const int shift = dr - dd;
        quot[shift] = c;
        for (int i = 0; i <= dd; ++i) rem[i + shift] -= c * den[i];
        poly_trim(rem);
        dr = poly_degree(rem);
    }
    poly_trim(quot);
}

Poly poly_div_exact(const Poly& num, const Poly& den) {
    Poly q, r;
    poly_divrem(num, den, q, r);
    if (!r.empty()) throw std::logic_error("inexact polynomial division");
    return q;
}

const Poly& cached_cyclotomic(int n) {
    static std::map<int, Poly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    return cache.emplace(n, cyclotomic_polynomial(n)).first->second;
}

std::vector<Rational> reduce_mod_cyclotomic(int n, Poly p) {
    const Poly& phi = cached_cyclotomic(n);
    const int deg = static_cast<int>(phi.size()) - 1;
    Poly q, r;
    poly_divrem(p, phi, q, r);
    r.resize(deg, Rational(0));
    return r;
}

}  // namespace

int euler_phi(int n) {
    if (n < 1) throw std::invalid_argument("euler_phi: n must be positive");
    int result = n;
    int m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

Poly cyclotomic_polynomial(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
    if (n == 1) return {Rational(-1), Rational(1)};  // x - 1
    Poly num(n + 1, Rational(0));
    num[0] = -1;
    num[n] = 1;  // x^n - 1
    Poly den{Rational(1)};
    for (int d = 1; d < n; ++d)
        if (n % d == 0) den = poly_mul(den, cyclotomic_polynomial(d));
    return poly_div_exact(num, den);
}

CycScalar::CycScalar() : conductor_(1), coeffs_{Rational(0)} {}

CycScalar::CycScalar(int conductor, std::vector<Rational> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {}

CycScalar CycScalar::zero(int conductor) {
    return CycScalar(conductor, std::vector<Rational>(euler_phi(conductor), Rational(0)));
}

CycScalar CycScalar::one(int conductor) { return from_rational(conductor, Rational(1)); }

CycScalar CycScalar::from_rational(int conductor, const Rational& value) {
    std::vector<Rational> c(euler_phi(conductor), Rational(0));
    c[0] = value;
    return CycScalar(conductor, std::move(c));
}

CycScalar CycScalar::from_integer(int conductor, long long value) {
    return from_rational(conductor, Rational(value));
}

CycScalar CycScalar::from_coeffs(int conductor, std::vector<Rational> coeffs) {
    if (static_cast<int>(coeffs.size()) != euler_phi(conductor))
        throw std::invalid_argument("from_coeffs: expected deg Phi_n coefficients");
    return CycScalar(conductor, std::move(coeffs));
}

CycScalar CycScalar::root_of_unity(int conductor) {
    if (conductor < 1) throw std::invalid_argument("root_of_unity: conductor must be positive");
    return CycScalar(conductor, reduce_mod_cyclotomic(conductor, Poly{Rational(0), Rational(1)}));
}

bool CycScalar::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CycScalar::is_one() const {
    if (coeffs_[0] != 1) return false;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

bool CycScalar::is_rational(Rational* out) const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    if (out) *out = coeffs_[0];
    return true;
}

CycScalar CycScalar::operator-() const {
    std::vector<Rational> c(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = -coeffs_[i];
    return CycScalar(conductor_, std::move(c));
}

namespace {
void require_same_conductor(const CycScalar& a, const CycScalar& b) {
    if (a.conductor() != b.conductor())
        throw std::invalid_argument("conductor mismatch: " + std::to_string(a.conductor()) +
                                    " vs " + std::to_string(b.conductor()));
}
}  // namespace

CycScalar& CycScalar::operator+=(const CycScalar& rhs) {
    require_same_conductor(*this, rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& rhs) {
    require_same_conductor(*this, rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

CycScalar& CycScalar::operator*=(const CycScalar& rhs) {
    require_same_conductor(*this, rhs);
    if (coeffs_.size() == 1) {  // conductor 1 or 2: plain rational arithmetic
        coeffs_[0] *= rhs.coeffs_[0];
        return *this;
    }
    coeffs_ = reduce_mod_cyclotomic(conductor_, poly_mul(coeffs_, rhs.coeffs_));
    return *this;
}

CycScalar CycScalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    if (coeffs_.size() == 1)
        return CycScalar(conductor_, {Rational(1) / coeffs_[0]});
    // Extended Euclid on (a, Phi_n): Phi_n is irreducible over Q, so the gcd
    // is a unit and the Bezout coefficient of a is the inverse.
    Poly r0 = coeffs_;
    Poly r1 = cached_cyclotomic(conductor_);
    poly_trim(r0);
    Poly s0{Rational(1)};
    Poly s1{};
    while (true) {
        const int d1 = poly_degree(r1);
        if (d1 < 0) break;
        Poly q, r;
        poly_divrem(r0, r1, q, r);
        Poly s = s0;
        Poly qs = poly_mul(q, s1);
        s.resize(std::max(s.size(), qs.size()), Rational(0));
        for (std::size_t i = 0; i < qs.size(); ++i) s[i] -= qs[i];
        poly_trim(s);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    // r0 = gcd = s0 * a + t * Phi_n, a nonzero constant.
    if (poly_degree(r0) != 0) throw std::logic_error("cyclotomic polynomial not coprime to element");
    const Rational g = r0[0];
    for (auto& c : s0) c /= g;
    return CycScalar(conductor_, reduce_mod_cyclotomic(conductor_, s0));
}

CycScalar CycScalar::pow(long long k) const {
    if (k < 0) return inverse().pow(-k);
    CycScalar acc = CycScalar::one(conductor_);
    CycScalar base = *this;
    unsigned long long e = static_cast<unsigned long long>(k);
    while (e > 0) {
        if (e & 1ULL) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

CycScalar embed(const CycScalar& a, int conductor) {
    const int d = a.conductor();
    if (d == conductor) return a;
    if (conductor % d != 0)
        throw std::invalid_argument("embed: source conductor must divide target");
    const CycScalar image = CycScalar::root_of_unity(conductor).pow(conductor / d);
    CycScalar acc = CycScalar::zero(conductor);
    CycScalar p = CycScalar::one(conductor);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i] != 0) acc += CycScalar::from_rational(conductor, a.coeffs()[i]) * p;
        if (i + 1 < a.coeffs().size()) p *= image;
    }
    return acc;
}

std::string scalar_to_string(const CycScalar& a) {
    std::string out;
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (i) out += ',';
        out += rational_to_string(a.coeffs()[i]);
    }
    return out;
}

CycScalar parse_scalar(int conductor, const std::string& s) {
    std::vector<Rational> coeffs;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) coeffs.push_back(parse_rational(tok));
    // Short lists are zero-padded, so "1" reads as the rational 1 at any
    // conductor; exports always write the full-length canonical form.
    if (coeffs.empty() || static_cast<int>(coeffs.size()) > euler_phi(conductor))
        throw std::invalid_argument("parse_scalar: expected 1.." + std::to_string(euler_phi(conductor)) +
                                    " coefficients for conductor " + std::to_string(conductor));
    coeffs.resize(euler_phi(conductor), Rational(0));
    return CycScalar::from_coeffs(conductor, std::move(coeffs));
}

}  // namespace hopfint
