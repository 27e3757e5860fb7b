#pragma once

#include <array>
#include <optional>
#include <vector>

#include "nonortho/codec.hpp"

namespace nonortho {

/// Four pairwise-orthogonal codewords whose supports partition the 4n basis
/// states; their equal superposition (weight 1/2 each) reproduces the list.
struct OrthogonalDecomposition {
    std::array<Codeword, 4> members;  // sorted by decoded bit string

    friend bool operator==(const OrthogonalDecomposition&, const OrthogonalDecomposition&) = default;
    friend auto operator<=>(const OrthogonalDecomposition&, const OrthogonalDecomposition&) = default;
};

/// Verifies the three decomposition invariants: pairwise orthogonality
/// (overlap within 1e-12 of zero), exact support partition, and the
/// superposition identity within 1e-10.
bool check_decomposition(const OrthogonalDecomposition& d);

inline constexpr int kDecompositionGuardN = 4;

/// All decompositions of the n-list into four orthogonal codewords, sorted
/// lexicographically by their members' decoded bit strings. Combinatorial
/// enumeration, guarded at n <= 4. There are (4!)^{n-1} of them.
std::vector<OrthogonalDecomposition> enumerate_decompositions(int n);

/// Same, filtered to decompositions that contain the given codeword.
std::vector<OrthogonalDecomposition> enumerate_decompositions(int n, const Codeword& containing);

}  // namespace nonortho
