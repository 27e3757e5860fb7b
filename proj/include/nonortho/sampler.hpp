#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "nonortho/codec.hpp"

namespace nonortho {

/// Deterministic pseudo-random source: std::mt19937_64 seeded directly with
/// the 64-bit seed; unit draws take the top 53 bits of one engine output.
/// Identical seeds reproduce identical streams bit-exactly on any platform.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1) with 53 random mantissa bits.
    double next_unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound). Rejection-free scaling; fine for the
    /// tiny bounds used here.
    int next_below(int bound);

    /// Deterministic per-trial seed: one splitmix64 step on
    /// master + (index+1) * golden-gamma. Trial results are therefore
    /// independent of how trials are partitioned across workers.
    static std::uint64_t derive(std::uint64_t master_seed, std::uint64_t index);

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

struct MeasurementSample {
    BasisIndex basis;
    int trial_index = 1;
};

/// Accumulated decoding state: one observed bit pair per subspace index.
struct DecoderState {
    int n = 0;
    std::vector<std::optional<std::uint8_t>> collected;  // per alpha, packed (p,q)
    int runs = 0;
    bool conflict = false;

    int collected_count() const;
    bool complete() const { return collected_count() == n; }
};

/// One projective measurement in the {|alpha>|p,q>} basis, sampled by the
/// Born rule via inverse CDF over the 4n-entry probability table.
/// Throws std::invalid_argument if the state norm deviates from 1 by more
/// than 1e-8.
MeasurementSample measure(const StateVector& v, RandomSource& rng, int trial_index = 1);

/// Repeatedly measures v, recording the bit pair seen for each subspace
/// index. Stops when all n subspaces have reported (complete), when two
/// samples disagree on one subspace (conflict: v was not a codeword state),
/// or when max_runs is exhausted (reported via the incomplete state).
DecoderState collect_until_complete(const StateVector& v, int n, RandomSource& rng, int max_runs);

/// The unique bit string whose encoding matches the collected pairs.
/// Throws std::invalid_argument if the state is incomplete or conflicted.
BitString reconstruct(const DecoderState& d);

/// Exact coupon-collector expectation of the number of runs: n * H_n.
double expected_runs(int n);

/// ceil(50 * n * H_n); completion failure odds are negligible at desk scale
/// while adversarial (non-codeword) inputs still terminate.
int default_max_runs(int n);

}  // namespace nonortho
