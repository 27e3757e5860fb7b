#include "nonortho/grover.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "nonortho/errors.hpp"

namespace nonortho {

OracleSpec reflection_oracle(const Codeword& target) {
    return ReflectionAboutCodeword{target};
}

OracleSpec diagonal_oracle(const Codeword& target) {
    return DiagonalSignFlip{target.support()};
}

namespace {

StateVector apply_reflection(const ReflectionAboutCodeword& o, const StateVector& v) {
    const Codeword& s = o.target;
    if (s.n() != v.n()) {
        throw std::invalid_argument("oracle and state dimensions do not match");
    }
    // rank-one update: v - 2 <l_s|v> |l_s>
    const Complex c = inner(s, v);
    StateVector out = v;
    const Complex delta = 2.0 * c * s.amplitude();
    for (int alpha = 0; alpha < s.n(); ++alpha) {
        out[flat_index(s.support_at(alpha))] -= delta;
    }
    return out;
}

StateVector apply_diagonal(const DiagonalSignFlip& o, const StateVector& v) {
    if (o.targets.empty()) {
        throw std::invalid_argument("diagonal oracle has an empty target set");
    }
    std::vector<int> flats;
    flats.reserve(o.targets.size());
    for (const BasisIndex& b : o.targets) {
        if (b.alpha < 0 || b.alpha >= v.n() || (b.p & ~1) || (b.q & ~1)) {
            throw std::invalid_argument("oracle target outside the state space");
        }
        flats.push_back(flat_index(b));
    }
    std::sort(flats.begin(), flats.end());
    if (std::adjacent_find(flats.begin(), flats.end()) != flats.end()) {
        throw std::invalid_argument("diagonal oracle target set has duplicates");
    }
    StateVector out = v;
    for (int f : flats) {
        out[f] = -out[f];
    }
    return out;
}

}  // namespace

StateVector oracle_apply(const OracleSpec& oracle, const StateVector& v) {
    return std::visit(
        [&](const auto& o) {
            using T = std::decay_t<decltype(o)>;
            if constexpr (std::is_same_v<T, ReflectionAboutCodeword>) {
                return apply_reflection(o, v);
            } else {
                return apply_diagonal(o, v);
            }
        },
        oracle);
}

StateVector diffusion_apply(int n, const StateVector& v) {
    if (v.n() != n) {
        throw std::invalid_argument("diffusion and state dimensions do not match");
    }
    // 2 <L|v> |L> - v, with |L> uniform: a rank-one update off the mean
    Complex sum{0.0, 0.0};
    for (int i = 0; i < v.dim(); ++i) {
        sum += v[i];
    }
    const Complex mean = sum / static_cast<double>(v.dim());
    StateVector out(n);
    for (int i = 0; i < v.dim(); ++i) {
        out[i] = 2.0 * mean - v[i];
    }
    return out;
}

StateVector grover_step(const OracleSpec& oracle, const StateVector& v) {
    return diffusion_apply(v.n(), oracle_apply(oracle, v));
}

StateVector single_shot_search(int n, const Codeword& s) {
    if (s.n() != n) {
        throw std::invalid_argument("target codeword has mismatched n");
    }
    return grover_step(reflection_oracle(s), build_list(n));
}

int standard_optimal_iterations(std::uint64_t n_states, std::uint64_t n_targets) {
    if (n_targets == 0 || n_states == 0 || n_targets > n_states) {
        throw std::invalid_argument("need 1 <= targets <= states");
    }
    const double theta =
        std::asin(std::sqrt(static_cast<double>(n_targets) / static_cast<double>(n_states)));
    return static_cast<int>(std::floor(std::numbers::pi / (4.0 * theta)));
}

namespace {

void validate_standard(const StandardSearchProblem& p) {
    if (p.num_bits < 1) {
        throw std::invalid_argument("standard search needs at least one bit");
    }
    if (p.num_bits > kStandardBitsGuard) {
        throw GuardError("standard baseline is guarded at 16 bits");
    }
    if (p.targets.empty()) {
        throw std::invalid_argument("standard search needs at least one target");
    }
    const std::uint64_t n_states = std::uint64_t{1} << p.num_bits;
    std::vector<std::uint64_t> sorted = p.targets;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("standard search targets must be distinct");
    }
    if (sorted.back() >= n_states) {
        throw std::invalid_argument("standard search target out of range");
    }
}

}  // namespace

StandardSearchOutcome standard_grover_search(const StandardSearchProblem& p, int iterations) {
    validate_standard(p);
    if (iterations < 0) {
        throw std::invalid_argument("iteration count must be nonnegative");
    }
    const std::size_t n_states = std::size_t{1} << p.num_bits;
    std::vector<Complex> state(n_states, Complex{1.0 / std::sqrt(static_cast<double>(n_states)), 0.0});

    for (int k = 0; k < iterations; ++k) {
        for (std::uint64_t t : p.targets) {
            state[static_cast<std::size_t>(t)] = -state[static_cast<std::size_t>(t)];
        }
        Complex sum{0.0, 0.0};
        for (const Complex& a : state) {
            sum += a;
        }
        const Complex mean = sum / static_cast<double>(n_states);
        for (Complex& a : state) {
            a = 2.0 * mean - a;
        }
    }

    // squared projection onto the equal superposition of the targets
    Complex onto{0.0, 0.0};
    for (std::uint64_t t : p.targets) {
        onto += state[static_cast<std::size_t>(t)];
    }
    const double success = std::norm(onto) / static_cast<double>(p.targets.size());
    return StandardSearchOutcome{std::move(state), iterations, success};
}

StandardSearchOutcome standard_grover_search(const StandardSearchProblem& p) {
    validate_standard(p);
    const std::uint64_t n_states = std::uint64_t{1} << p.num_bits;
    return standard_grover_search(p, standard_optimal_iterations(n_states, p.targets.size()));
}

}  // namespace nonortho
