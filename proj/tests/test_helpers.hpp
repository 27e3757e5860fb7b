#pragma once

// Deterministic generators shared by the test binaries. Everything draws
// from RandomSource so test runs are bit-identical across platforms.

#include <cmath>
#include <numbers>
#include <vector>

#include "nonortho/codec.hpp"
#include "nonortho/sampler.hpp"

namespace testutil {

using nonortho::Codeword;
using nonortho::Complex;
using nonortho::RandomSource;
using nonortho::StateVector;

inline double normal(RandomSource& rng) {
    double u1 = rng.next_unit();
    while (u1 <= 0.0) {
        u1 = rng.next_unit();
    }
    const double u2 = rng.next_unit();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

inline StateVector random_state(int n, RandomSource& rng) {
    StateVector v(n);
    for (int i = 0; i < v.dim(); ++i) {
        v[i] = Complex{normal(rng), normal(rng)};
    }
    const double norm = v.norm();
    for (int i = 0; i < v.dim(); ++i) {
        v[i] /= norm;
    }
    return v;
}

inline Codeword random_codeword(int n, RandomSource& rng) {
    std::vector<std::uint8_t> packed(static_cast<std::size_t>(n));
    for (auto& pv : packed) {
        pv = static_cast<std::uint8_t>(rng.next_below(4));
    }
    return Codeword(n, std::move(packed));
}

inline double fidelity(const Codeword& target, const StateVector& v) {
    return std::norm(nonortho::inner(target, v));
}

}  // namespace testutil
