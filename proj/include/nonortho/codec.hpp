#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "nonortho/bitstring.hpp"

namespace nonortho {

using Complex = std::complex<double>;

inline constexpr double kAmplitudeTol = 1e-10;
inline constexpr double kUnitaryTol = 1e-12;
inline constexpr double kNormTol = 1e-8;

/// One of the 4n orthogonal basis states of the encoding space: subspace
/// index alpha in [0, n) plus a bit pair (p, q).
struct BasisIndex {
    int alpha = 0;
    int p = 0;
    int q = 0;

    friend auto operator<=>(const BasisIndex&, const BasisIndex&) = default;
};

inline int pack_pair(int p, int q) { return p * 2 + q; }
inline int pair_p(int value) { return (value >> 1) & 1; }
inline int pair_q(int value) { return value & 1; }

/// Flat position of a basis state in a 4n-entry amplitude array, ordered by
/// (alpha, p, q).
inline int flat_index(const BasisIndex& b) { return b.alpha * 4 + pack_pair(b.p, b.q); }
inline BasisIndex basis_from_flat(int index) {
    return BasisIndex{index / 4, pair_p(index & 3), pair_q(index & 3)};
}

/// Encoded state of one 2n-bit string: a uniform superposition of n basis
/// states, one bit pair per subspace, each with amplitude 1/sqrt(n).
class Codeword {
public:
    Codeword(int n, std::vector<std::uint8_t> packed_pairs);

    int n() const { return n_; }
    int pair_value(int alpha) const { return packed_[static_cast<std::size_t>(alpha)]; }
    BasisIndex support_at(int alpha) const {
        const int v = pair_value(alpha);
        return BasisIndex{alpha, pair_p(v), pair_q(v)};
    }
    std::vector<BasisIndex> support() const;
    double amplitude() const;  // 1/sqrt(n)

    friend bool operator==(const Codeword&, const Codeword&) = default;
    // pair-wise lexicographic order == lexicographic order of decoded bits
    friend auto operator<=>(const Codeword&, const Codeword&) = default;

private:
    int n_;
    std::vector<std::uint8_t> packed_;  // one packed (p,q) per alpha
};

/// Dense complex amplitudes over the 4n basis states, ordered by flat index.
class StateVector {
public:
    explicit StateVector(int n);  // all-zero amplitudes
    StateVector(int n, std::vector<Complex> amplitudes);

    int n() const { return n_; }
    int dim() const { return 4 * n_; }

    Complex& operator[](int flat) { return amps_[static_cast<std::size_t>(flat)]; }
    const Complex& operator[](int flat) const { return amps_[static_cast<std::size_t>(flat)]; }
    Complex at(const BasisIndex& b) const { return amps_[static_cast<std::size_t>(flat_index(b))]; }

    const std::vector<Complex>& amplitudes() const { return amps_; }
    double norm_squared() const;
    double norm() const;
    bool is_normalized(double tol = kAmplitudeTol) const;

    friend bool operator==(const StateVector&, const StateVector&) = default;

private:
    int n_;
    std::vector<Complex> amps_;
};

/// Maximum absolute amplitude difference; the distance used by the
/// tolerance checks throughout.
double max_abs_diff(const StateVector& a, const StateVector& b);

Codeword encode(const BitString& bits);
BitString decode_codeword(const Codeword& cw);

/// Codeword for the 2n-bit string with unsigned value `value`.
Codeword codeword_from_index(std::uint64_t value, int n);

/// Materializes the codeword as a dense state vector.
StateVector codeword_state(const Codeword& cw);

/// Uniform superposition over all 4n basis states, amplitude 1/sqrt(4n).
/// Equals the normalized sum of all 2^{2n} codeword states.
StateVector build_list(int n);

/// Uniform superposition over the 3n basis states outside the support of s,
/// amplitude 1/sqrt(3n). Together with the codeword it reconstitutes the
/// list: (1/2)|l_s> + (sqrt(3)/2)|l_s_perp> = |L>.
StateVector orthogonal_complement(const Codeword& s);

/// Hermitian inner product <a|b> (conjugation on the left argument).
/// Throws std::invalid_argument on mismatched n.
Complex inner(const StateVector& a, const StateVector& b);
Complex inner(const Codeword& a, const StateVector& b);
Complex inner(const StateVector& a, const Codeword& b);
Complex inner(const Codeword& a, const Codeword& b);

/// <l_a|l_b> as the exact rational k/n, k = number of subspaces where the
/// two codewords carry the same bit pair.
double codeword_overlap(const Codeword& a, const Codeword& b);

/// Number of codewords (over all 2^{2n} encodable strings) whose support
/// contains the given basis state: the other n-1 subspaces range over their
/// four pair values independently, so the count is 4^{n-1}.
std::uint64_t codeword_multiplicity(const BasisIndex& b, int n);

}  // namespace nonortho
