#pragma once

#include "hopfint/rational.hpp"

#include <string>
#include <vector>

namespace hopfint {

// Exact arithmetic in the cyclotomic field Q(w) where w is a primitive
// n-th root of unity. Elements are represented by their unique residue
// modulo the n-th cyclotomic polynomial Phi_n, so equality of field
// values is coefficient-wise equality of representations. n = 1 gives
// plain Q (Phi_1 = x - 1, so a single coefficient).

/// Coefficients of a dense polynomial over Q, degree 0 first.
using Poly = std::vector<Rational>;

int euler_phi(int n);

/// Phi_n, monic of degree phi(n), by exact division of x^n - 1 by the
/// product of Phi_d over proper divisors d of n.
Poly cyclotomic_polynomial(int n);

class CycScalar {
  public:
    /// Zero of Q (conductor 1).
    CycScalar();

    static CycScalar zero(int conductor);
    static CycScalar one(int conductor);
    static CycScalar from_rational(int conductor, const Rational& value);
    static CycScalar from_integer(int conductor, long long value);
    /// Validates the coefficient count against deg Phi_n, then reduces nothing:
    /// the caller supplies the canonical residue directly.
    static CycScalar from_coeffs(int conductor, std::vector<Rational> coeffs);
    /// The class of x, i.e. a primitive conductor-th root of unity.
    static CycScalar root_of_unity(int conductor);

    int conductor() const { return conductor_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    /// The value as a rational if it lies in Q (coeffs above degree 0 vanish).
    bool is_rational(Rational* out = nullptr) const;

    CycScalar operator-() const;
    CycScalar& operator+=(const CycScalar& rhs);
    CycScalar& operator-=(const CycScalar& rhs);
    CycScalar& operator*=(const CycScalar& rhs);

    friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
    friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }
    friend CycScalar operator*(CycScalar a, const CycScalar& b) { return a *= b; }
    friend CycScalar operator/(const CycScalar& a, const CycScalar& b) { return a * b.inverse(); }

    /// Field inverse via the extended Euclidean algorithm against Phi_n.
    /// Throws std::domain_error on zero.
    CycScalar inverse() const;
    CycScalar pow(long long k) const;

    friend bool operator==(const CycScalar& a, const CycScalar& b) {
        return a.conductor_ == b.conductor_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const CycScalar& a, const CycScalar& b) { return !(a == b); }

  private:
    CycScalar(int conductor, std::vector<Rational> coeffs);

    int conductor_;
    std::vector<Rational> coeffs_;  // length deg Phi_n, reduced mod Phi_n
};

/// Primitive n-th root of unity.
inline CycScalar omega(int n) { return CycScalar::root_of_unity(n); }

inline bool is_zero(const CycScalar& a) { return a.is_zero(); }

/// Embeds Q(w_d) into Q(w_n) for d | n via w_d -> w_n^(n/d).
CycScalar embed(const CycScalar& a, int conductor);

/// Coefficient list "c0,c1,...": each "p" or "p/q".
std::string scalar_to_string(const CycScalar& a);
/// Inverse of scalar_to_string at a given conductor.
CycScalar parse_scalar(int conductor, const std::string& s);

}  // namespace hopfint
