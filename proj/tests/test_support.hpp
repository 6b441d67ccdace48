#pragma once

#include "hopfint/taft.hpp"

#include <map>
#include <random>

namespace hopfint::testing {

// Construction runs the full axiom suite, so cache the builds per binary.
inline const TaftAlgebra& taft(int n) {
    static std::map<int, TaftAlgebra> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_taft(n)).first;
    return it->second;
}

inline std::shared_ptr<const HopfAlgebra> cyclic(int n) {
    static std::map<int, std::shared_ptr<const HopfAlgebra>> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, group_algebra(n)).first;
    return it->second;
}

// Engine output is portable across platforms; distributions are not, so
// draw by modulo.
inline long long rand_int(std::mt19937_64& rng, long long lo, long long hi) {
    return lo + static_cast<long long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

inline CycScalar rand_scalar(std::mt19937_64& rng, int conductor) {
    std::vector<Rational> coeffs;
    for (int i = 0; i < euler_phi(conductor); ++i)
        coeffs.emplace_back(rand_int(rng, -3, 3), rand_int(rng, 1, 3));
    return CycScalar::from_coeffs(conductor, std::move(coeffs));
}

inline Vec rand_vec(std::mt19937_64& rng, int dim, int conductor) {
    Vec v = zero_vec(dim, conductor);
    for (auto& c : v) c = CycScalar::from_integer(conductor, rand_int(rng, -3, 3));
    return v;
}

inline Vec rand_nonzero_vec(std::mt19937_64& rng, int dim, int conductor) {
    while (true) {
        Vec v = rand_vec(rng, dim, conductor);
        if (!is_zero_vec(v)) return v;
    }
}

}  // namespace hopfint::testing
