#include "nonortho/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nonortho/errors.hpp"

namespace nonortho {

bool check_decomposition(const OrthogonalDecomposition& d) {
    const int n = d.members[0].n();
    for (const Codeword& m : d.members) {
        if (m.n() != n) {
            return false;
        }
    }
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            if (std::abs(codeword_overlap(d.members[i], d.members[j])) > kUnitaryTol) {
                return false;
            }
        }
    }
    // exact support partition of all 4n basis states
    std::vector<int> seen(static_cast<std::size_t>(4 * n), 0);
    for (const Codeword& m : d.members) {
        for (int alpha = 0; alpha < n; ++alpha) {
            seen[static_cast<std::size_t>(flat_index(m.support_at(alpha)))] += 1;
        }
    }
    for (int count : seen) {
        if (count != 1) {
            return false;
        }
    }
    // equal superposition (weight 1/2 each) reproduces the list
    StateVector sum(n);
    for (const Codeword& m : d.members) {
        const StateVector ms = codeword_state(m);
        for (int i = 0; i < sum.dim(); ++i) {
            sum[i] += 0.5 * ms[i];
        }
    }
    return max_abs_diff(sum, build_list(n)) <= kAmplitudeTol;
}

std::vector<OrthogonalDecomposition> enumerate_decompositions(int n) {
    if (n < 1) {
        throw std::invalid_argument("enumerate_decompositions requires n >= 1");
    }
    if (n > kDecompositionGuardN) {
        throw GuardError("decomposition enumeration is guarded at n <= 4");
    }

    // A decomposition assigns, per subspace alpha, a bijection from the four
    // members to the four pair values. Fixing the alpha=0 assignment to the
    // identity labels each member by its first pair, which both picks one
    // representative per unordered set and leaves the members sorted by
    // decoded bit string. The remaining n-1 subspaces range over all 4!
    // permutations each.
    std::array<std::array<std::uint8_t, 4>, 24> perms{};
    {
        std::array<std::uint8_t, 4> p{0, 1, 2, 3};
        int k = 0;
        do {
            perms[static_cast<std::size_t>(k++)] = p;
        } while (std::next_permutation(p.begin(), p.end()));
    }

    std::vector<OrthogonalDecomposition> out;
    std::vector<int> choice(static_cast<std::size_t>(n), 0);  // choice[0] unused
    while (true) {
        std::array<std::vector<std::uint8_t>, 4> pairs;
        for (auto& pv : pairs) {
            pv.resize(static_cast<std::size_t>(n));
        }
        for (int member = 0; member < 4; ++member) {
            pairs[static_cast<std::size_t>(member)][0] = static_cast<std::uint8_t>(member);
            for (int alpha = 1; alpha < n; ++alpha) {
                const auto& perm = perms[static_cast<std::size_t>(choice[static_cast<std::size_t>(alpha)])];
                pairs[static_cast<std::size_t>(member)][static_cast<std::size_t>(alpha)] =
                    perm[static_cast<std::size_t>(member)];
            }
        }
        out.push_back(OrthogonalDecomposition{{Codeword(n, std::move(pairs[0])),
                                               Codeword(n, std::move(pairs[1])),
                                               Codeword(n, std::move(pairs[2])),
                                               Codeword(n, std::move(pairs[3]))}});

        int alpha = n - 1;
        while (alpha >= 1 && choice[static_cast<std::size_t>(alpha)] == 23) {
            choice[static_cast<std::size_t>(alpha)] = 0;
            --alpha;
        }
        if (alpha < 1) {
            break;
        }
        ++choice[static_cast<std::size_t>(alpha)];
    }

    std::sort(out.begin(), out.end());
    return out;
}

std::vector<OrthogonalDecomposition> enumerate_decompositions(int n, const Codeword& containing) {
    if (containing.n() != n) {
        throw std::invalid_argument("containing codeword has mismatched n");
    }
    std::vector<OrthogonalDecomposition> all = enumerate_decompositions(n);
    std::vector<OrthogonalDecomposition> out;
    for (const auto& d : all) {
        if (std::find(d.members.begin(), d.members.end(), containing) != d.members.end()) {
            out.push_back(d);
        }
    }
    return out;
}

}  // namespace nonortho
