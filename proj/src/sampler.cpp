#include "nonortho/sampler.hpp"

#include <cmath>
#include <stdexcept>

namespace nonortho {

int RandomSource::next_below(int bound) {
    if (bound < 1) {
        throw std::invalid_argument("next_below requires a positive bound");
    }
    const int v = static_cast<int>(next_unit() * static_cast<double>(bound));
    return v < bound ? v : bound - 1;
}

std::uint64_t RandomSource::derive(std::uint64_t master_seed, std::uint64_t index) {
    // splitmix64 output function on the state master + (index+1) * gamma
    std::uint64_t z = master_seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

int DecoderState::collected_count() const {
    int count = 0;
    for (const auto& slot : collected) {
        if (slot.has_value()) {
            ++count;
        }
    }
    return count;
}

MeasurementSample measure(const StateVector& v, RandomSource& rng, int trial_index) {
    const double total = v.norm_squared();
    if (std::abs(std::sqrt(total) - 1.0) > kNormTol) {
        throw std::invalid_argument("measure requires a normalized state");
    }
    // inverse CDF over the 4n-entry probability table
    const double u = rng.next_unit() * total;
    double acc = 0.0;
    int last_positive = 0;
    for (int i = 0; i < v.dim(); ++i) {
        const double p = std::norm(v[i]);
        if (p > 0.0) {
            last_positive = i;
        }
        acc += p;
        if (u < acc) {
            return MeasurementSample{basis_from_flat(i), trial_index};
        }
    }
    // rounding residue: land on the last state carrying probability
    return MeasurementSample{basis_from_flat(last_positive), trial_index};
}

DecoderState collect_until_complete(const StateVector& v, int n, RandomSource& rng, int max_runs) {
    if (v.n() != n) {
        throw std::invalid_argument("state and decoder dimensions do not match");
    }
    if (max_runs < 1) {
        throw std::invalid_argument("max_runs must be positive");
    }
    DecoderState d;
    d.n = n;
    d.collected.assign(static_cast<std::size_t>(n), std::nullopt);
    int distinct = 0;
    while (d.runs < max_runs) {
        ++d.runs;
        const MeasurementSample s = measure(v, rng, d.runs);
        auto& slot = d.collected[static_cast<std::size_t>(s.basis.alpha)];
        const auto pv = static_cast<std::uint8_t>(pack_pair(s.basis.p, s.basis.q));
        if (!slot.has_value()) {
            slot = pv;
            if (++distinct == n) {
                break;
            }
        } else if (*slot != pv) {
            d.conflict = true;
            break;
        }
    }
    return d;
}

BitString reconstruct(const DecoderState& d) {
    if (d.conflict) {
        throw std::invalid_argument("cannot reconstruct from a conflicted decoder state");
    }
    if (!d.complete()) {
        throw std::invalid_argument("cannot reconstruct from an incomplete decoder state");
    }
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(2 * d.n));
    for (int alpha = 0; alpha < d.n; ++alpha) {
        const int v = *d.collected[static_cast<std::size_t>(alpha)];
        bits[static_cast<std::size_t>(2 * alpha)] = static_cast<std::uint8_t>(pair_p(v));
        bits[static_cast<std::size_t>(2 * alpha + 1)] = static_cast<std::uint8_t>(pair_q(v));
    }
    return BitString(std::move(bits));
}

double expected_runs(int n) {
    if (n < 1) {
        throw std::invalid_argument("expected_runs requires n >= 1");
    }
    double harmonic = 0.0;
    for (int k = n; k >= 1; --k) {
        harmonic += 1.0 / static_cast<double>(k);
    }
    return static_cast<double>(n) * harmonic;
}

int default_max_runs(int n) {
    return static_cast<int>(std::ceil(50.0 * expected_runs(n)));
}

}  // namespace nonortho
