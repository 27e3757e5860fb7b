#include "nonortho/codec.hpp"

#include <cmath>
#include <stdexcept>

namespace nonortho {

namespace {

void require_same_n(int a, int b) {
    if (a != b) {
        throw std::invalid_argument("operands live in different spaces (mismatched n)");
    }
}

void require_valid_basis(const BasisIndex& b, int n) {
    if (b.alpha < 0 || b.alpha >= n || (b.p != 0 && b.p != 1) || (b.q != 0 && b.q != 1)) {
        throw std::invalid_argument("basis index out of range");
    }
}

}  // namespace

Codeword::Codeword(int n, std::vector<std::uint8_t> packed_pairs)
    : n_(n), packed_(std::move(packed_pairs)) {
    if (n_ < 1) {
        throw std::invalid_argument("codeword requires n >= 1");
    }
    if (packed_.size() != static_cast<std::size_t>(n_)) {
        throw std::invalid_argument("codeword needs exactly one pair per subspace");
    }
    for (std::uint8_t v : packed_) {
        if (v > 3) {
            throw std::invalid_argument("packed pair value out of range");
        }
    }
}

std::vector<BasisIndex> Codeword::support() const {
    std::vector<BasisIndex> out;
    out.reserve(static_cast<std::size_t>(n_));
    for (int alpha = 0; alpha < n_; ++alpha) {
        out.push_back(support_at(alpha));
    }
    return out;
}

double Codeword::amplitude() const { return 1.0 / std::sqrt(static_cast<double>(n_)); }

StateVector::StateVector(int n) : n_(n) {
    if (n_ < 1) {
        throw std::invalid_argument("state vector requires n >= 1");
    }
    amps_.assign(static_cast<std::size_t>(4 * n_), Complex{0.0, 0.0});
}

StateVector::StateVector(int n, std::vector<Complex> amplitudes)
    : n_(n), amps_(std::move(amplitudes)) {
    if (n_ < 1) {
        throw std::invalid_argument("state vector requires n >= 1");
    }
    if (amps_.size() != static_cast<std::size_t>(4 * n_)) {
        throw std::invalid_argument("state vector needs exactly 4n amplitudes");
    }
}

double StateVector::norm_squared() const {
    double total = 0.0;
    for (const Complex& a : amps_) {
        total += std::norm(a);
    }
    return total;
}

double StateVector::norm() const { return std::sqrt(norm_squared()); }

bool StateVector::is_normalized(double tol) const { return std::abs(norm_squared() - 1.0) <= tol; }

double max_abs_diff(const StateVector& a, const StateVector& b) {
    require_same_n(a.n(), b.n());
    double worst = 0.0;
    for (int i = 0; i < a.dim(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

Codeword encode(const BitString& bits) {
    const int n = bits.pair_count();
    std::vector<std::uint8_t> packed(static_cast<std::size_t>(n));
    for (int alpha = 0; alpha < n; ++alpha) {
        packed[static_cast<std::size_t>(alpha)] =
            static_cast<std::uint8_t>(pack_pair(bits.bit(2 * alpha), bits.bit(2 * alpha + 1)));
    }
    return Codeword(n, std::move(packed));
}

BitString decode_codeword(const Codeword& cw) {
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(2 * cw.n()));
    for (int alpha = 0; alpha < cw.n(); ++alpha) {
        const int v = cw.pair_value(alpha);
        bits[static_cast<std::size_t>(2 * alpha)] = static_cast<std::uint8_t>(pair_p(v));
        bits[static_cast<std::size_t>(2 * alpha + 1)] = static_cast<std::uint8_t>(pair_q(v));
    }
    return BitString(std::move(bits));
}

Codeword codeword_from_index(std::uint64_t value, int n) {
    return encode(bitstring_from_index(value, n));
}

StateVector codeword_state(const Codeword& cw) {
    StateVector v(cw.n());
    const double amp = cw.amplitude();
    for (int alpha = 0; alpha < cw.n(); ++alpha) {
        v[flat_index(cw.support_at(alpha))] = Complex{amp, 0.0};
    }
    return v;
}

StateVector build_list(int n) {
    if (n < 1) {
        throw std::invalid_argument("build_list requires n >= 1");
    }
    StateVector v(n);
    const double amp = 1.0 / std::sqrt(static_cast<double>(4 * n));
    for (int i = 0; i < v.dim(); ++i) {
        v[i] = Complex{amp, 0.0};
    }
    return v;
}

StateVector orthogonal_complement(const Codeword& s) {
    const int n = s.n();
    StateVector v(n);
    const double amp = 1.0 / std::sqrt(static_cast<double>(3 * n));
    for (int i = 0; i < v.dim(); ++i) {
        v[i] = Complex{amp, 0.0};
    }
    for (int alpha = 0; alpha < n; ++alpha) {
        v[flat_index(s.support_at(alpha))] = Complex{0.0, 0.0};
    }
    return v;
}

Complex inner(const StateVector& a, const StateVector& b) {
    require_same_n(a.n(), b.n());
    Complex acc{0.0, 0.0};
    for (int i = 0; i < a.dim(); ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

Complex inner(const Codeword& a, const StateVector& b) {
    require_same_n(a.n(), b.n());
    // <l_a|b> = (1/sqrt(n)) * sum of b over the support of a
    Complex acc{0.0, 0.0};
    for (int alpha = 0; alpha < a.n(); ++alpha) {
        acc += b[flat_index(a.support_at(alpha))];
    }
    return acc * a.amplitude();
}

Complex inner(const StateVector& a, const Codeword& b) {
    return std::conj(inner(b, a));
}

Complex inner(const Codeword& a, const Codeword& b) {
    return Complex{codeword_overlap(a, b), 0.0};
}

double codeword_overlap(const Codeword& a, const Codeword& b) {
    require_same_n(a.n(), b.n());
    int agreeing = 0;
    for (int alpha = 0; alpha < a.n(); ++alpha) {
        if (a.pair_value(alpha) == b.pair_value(alpha)) {
            ++agreeing;
        }
    }
    return static_cast<double>(agreeing) / static_cast<double>(a.n());
}

std::uint64_t codeword_multiplicity(const BasisIndex& b, int n) {
    if (n < 1) {
        throw std::invalid_argument("codeword_multiplicity requires n >= 1");
    }
    if (n > 32) {
        throw std::overflow_error("4^{n-1} exceeds the 64-bit range");
    }
    require_valid_basis(b, n);
    return std::uint64_t{1} << (2 * (n - 1));
}

}  // namespace nonortho
