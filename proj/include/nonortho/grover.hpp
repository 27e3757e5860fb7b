#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "nonortho/codec.hpp"

namespace nonortho {

/// Oracle as a reflection about the target codeword: v -> v - 2<l_s|v>|l_s>.
/// Has off-diagonal matrix elements.
struct ReflectionAboutCodeword {
    Codeword target;
};

/// Oracle as a diagonal sign flip on a set of basis states. For a codeword
/// target the set is exactly its n-element support.
struct DiagonalSignFlip {
    std::vector<BasisIndex> targets;  // sorted, unique
};

using OracleSpec = std::variant<ReflectionAboutCodeword, DiagonalSignFlip>;

OracleSpec reflection_oracle(const Codeword& target);
OracleSpec diagonal_oracle(const Codeword& target);

/// Applies the oracle. Both variants are involutions and preserve the norm;
/// on the plane spanned by |l_s> and |l_s_perp> they act identically.
StateVector oracle_apply(const OracleSpec& oracle, const StateVector& v);

/// Inversion about the average: v -> 2<L|v>|L> - v. The sign is fixed so
/// that one search step lands on +|l_s| with no global phase.
StateVector diffusion_apply(int n, const StateVector& v);

/// One search step: oracle first, then diffusion.
StateVector grover_step(const OracleSpec& oracle, const StateVector& v);

/// Builds the list and applies a single step with the reflection oracle.
/// The output has unit fidelity with |l_s> because <L|l_s> = 1/2.
StateVector single_shot_search(int n, const Codeword& s);

// ---------------------------------------------------------------------------
// Standard engine over the full 2^{num_bits} space, for comparison tables.

inline constexpr int kStandardBitsGuard = 16;

struct StandardSearchProblem {
    int num_bits = 0;                    // search space size 2^num_bits
    std::vector<std::uint64_t> targets;  // distinct marked states
};

struct StandardSearchOutcome {
    std::vector<Complex> state;
    int iterations = 0;
    double success_probability = 0.0;  // squared projection onto the target superposition
};

/// floor(pi / (4 theta)) with theta = arcsin(sqrt(M/N)).
int standard_optimal_iterations(std::uint64_t n_states, std::uint64_t n_targets);

/// Runs the given number of oracle + inversion-about-average iterations on
/// the dense state vector. Guarded at num_bits <= 16.
StandardSearchOutcome standard_grover_search(const StandardSearchProblem& p, int iterations);

/// Runs the optimal number of iterations.
StandardSearchOutcome standard_grover_search(const StandardSearchProblem& p);

}  // namespace nonortho
