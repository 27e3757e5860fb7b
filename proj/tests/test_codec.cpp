#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "nonortho/codec.hpp"
#include "nonortho/decomposition.hpp"
#include "nonortho/errors.hpp"
#include "test_helpers.hpp"

using namespace nonortho;

namespace {

// support sets as flat-index sets, for the brute-force oracles below
std::set<int> support_flats(const Codeword& cw) {
    std::set<int> out;
    for (const BasisIndex& b : cw.support()) {
        out.insert(flat_index(b));
    }
    return out;
}

}  // namespace

TEST_CASE("encode matches the worked n=2 examples") {
    // "0000" -> (|000> + |100>)/sqrt(2)
    const Codeword a = encode(BitString::parse("0000"));
    CHECK(a.n() == 2);
    CHECK(a.support_at(0) == BasisIndex{0, 0, 0});
    CHECK(a.support_at(1) == BasisIndex{1, 0, 0});
    CHECK(a.amplitude() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));

    // "0110" -> (|001> + |110>)/sqrt(2)
    const Codeword b = encode(BitString::parse("0110"));
    CHECK(b.support_at(0) == BasisIndex{0, 0, 1});
    CHECK(b.support_at(1) == BasisIndex{1, 1, 0});

    // "0011" -> (|000> + |111>)/sqrt(2)
    const Codeword c = encode(BitString::parse("0011"));
    CHECK(c.support_at(0) == BasisIndex{0, 0, 0});
    CHECK(c.support_at(1) == BasisIndex{1, 1, 1});
}

TEST_CASE("encode rejects empty input") {
    CHECK_THROWS_AS(BitString::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(BitString(std::vector<std::uint8_t>{}), std::invalid_argument);
}

TEST_CASE("pad_left prepends a single zero") {
    CHECK(pad_left("110") == BitString::parse("0110"));
    CHECK(pad_left("1") == BitString::parse("01"));
    CHECK(pad_left("01010") == BitString::parse("001010"));
    CHECK_THROWS_AS(pad_left(""), std::invalid_argument);
    CHECK_THROWS_AS(pad_left("0110"), std::invalid_argument);  // already even
}

TEST_CASE("decode_codeword inverts encode") {
    const Codeword cw = encode(BitString::parse("0110"));
    CHECK(decode_codeword(cw).str() == "0110");

    // exhaustive round trip at n = 2 and n = 3
    for (int n = 2; n <= 3; ++n) {
        for (std::uint64_t i = 0; i < (std::uint64_t{1} << (2 * n)); ++i) {
            const BitString bits = bitstring_from_index(i, n);
            CHECK(decode_codeword(encode(bits)) == bits);
        }
    }

    // all-zero pairs decode to the all-zero string
    const Codeword zeros(3, {0, 0, 0});
    CHECK(decode_codeword(zeros).str() == "000000");

    // random sampling up to n = 10
    RandomSource rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + rng.next_below(10);
        const Codeword cw2 = testutil::random_codeword(n, rng);
        CHECK(encode(decode_codeword(cw2)) == cw2);
    }
}

TEST_CASE("build_list is uniform and equals the normalized codeword sum") {
    CHECK_THROWS_AS(build_list(0), std::invalid_argument);

    const StateVector l1 = build_list(1);
    for (int i = 0; i < 4; ++i) {
        CHECK(l1[i].real() == doctest::Approx(0.5).epsilon(1e-14));
    }

    const StateVector l2 = build_list(2);
    for (int i = 0; i < 8; ++i) {
        CHECK(l2[i].real() == doctest::Approx(1.0 / std::sqrt(8.0)).epsilon(1e-14));
    }

    // brute force: sum all 2^{2n} codeword vectors, check the norm is
    // 2^{2n-1} and the normalized sum reproduces the list
    for (int n = 1; n <= 3; ++n) {
        StateVector sum(n);
        for (std::uint64_t i = 0; i < (std::uint64_t{1} << (2 * n)); ++i) {
            const StateVector cws = codeword_state(codeword_from_index(i, n));
            for (int k = 0; k < sum.dim(); ++k) {
                sum[k] += cws[k];
            }
        }
        const double sqrt_eta = std::pow(2.0, 2 * n - 1);
        CHECK(sum.norm() == doctest::Approx(sqrt_eta).epsilon(1e-12));
        for (int k = 0; k < sum.dim(); ++k) {
            sum[k] /= sqrt_eta;
        }
        CHECK(max_abs_diff(sum, build_list(n)) < 1e-10);
    }
}

TEST_CASE("inner products follow the agreeing-pair rule") {
    // <L|l_s> = 1/2 for every s, n = 1..8 spot plus exhaustive small n
    for (int n = 1; n <= 3; ++n) {
        const StateVector list = build_list(n);
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << (2 * n)); ++s) {
            const Complex ip = inner(list, codeword_state(codeword_from_index(s, n)));
            CHECK(std::abs(ip - Complex{0.5, 0.0}) < 1e-12);
        }
    }
    RandomSource rng(7);
    for (int n = 4; n <= 8; ++n) {
        const Codeword s = testutil::random_codeword(n, rng);
        CHECK(std::abs(inner(build_list(n), s) - Complex{0.5, 0.0}) < 1e-12);
    }

    // normalization
    const Codeword c = encode(BitString::parse("0110"));
    CHECK(inner(c, c) == Complex{1.0, 0.0});
    CHECK(std::abs(inner(codeword_state(c), codeword_state(c)) - Complex{1.0, 0.0}) < 1e-12);

    // worked example: one agreeing pair of two
    const double ov = codeword_overlap(encode(BitString::parse("0000")),
                                       encode(BitString::parse("0011")));
    CHECK(ov == 0.5);

    // brute force at n <= 3: overlap is k/n with k counted directly, and
    // distinct codewords never exceed 1 - 1/n
    for (int n = 1; n <= 3; ++n) {
        const std::uint64_t total = std::uint64_t{1} << (2 * n);
        for (std::uint64_t i = 0; i < total; ++i) {
            for (std::uint64_t j = 0; j < total; ++j) {
                const Codeword a = codeword_from_index(i, n);
                const Codeword b = codeword_from_index(j, n);
                int agreeing = 0;
                for (int alpha = 0; alpha < n; ++alpha) {
                    if (a.pair_value(alpha) == b.pair_value(alpha)) {
                        ++agreeing;
                    }
                }
                const double expected = static_cast<double>(agreeing) / n;
                CHECK(codeword_overlap(a, b) == expected);
                CHECK(std::abs(inner(codeword_state(a), codeword_state(b)).real() - expected) <
                      1e-12);
                if (i != j) {
                    CHECK(agreeing <= n - 1);
                }
            }
        }
    }

    CHECK_THROWS_AS(inner(build_list(2), build_list(3)), std::invalid_argument);
    CHECK_THROWS_AS(codeword_overlap(encode(BitString::parse("00")),
                                     encode(BitString::parse("0000"))),
                    std::invalid_argument);
}

TEST_CASE("orthogonal_complement reconstitutes the list") {
    // n=1, s=(0,0): (|0;01> + |0;10> + |0;11>)/sqrt(3)
    const Codeword s1(1, {0});
    const StateVector perp1 = orthogonal_complement(s1);
    CHECK(std::abs(perp1[0]) == 0.0);
    for (int i = 1; i < 4; ++i) {
        CHECK(perp1[i].real() == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
    }

    for (int n = 1; n <= 4; ++n) {
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << (2 * n)); ++s) {
            const Codeword cw = codeword_from_index(s, n);
            const StateVector perp = orthogonal_complement(cw);
            CHECK(std::abs(inner(cw, perp)) < 1e-12);
            CHECK(perp.is_normalized(1e-12));

            // (1/2)|l_s> + (sqrt(3)/2)|l_s_perp> = |L>
            StateVector combo(n);
            const StateVector cs = codeword_state(cw);
            for (int k = 0; k < combo.dim(); ++k) {
                combo[k] = 0.5 * cs[k] + (std::sqrt(3.0) / 2.0) * perp[k];
            }
            CHECK(max_abs_diff(combo, build_list(n)) < 1e-10);
        }
    }
}

TEST_CASE("codeword_multiplicity equals the brute-force count") {
    for (int n = 1; n <= 3; ++n) {
        const std::uint64_t total = std::uint64_t{1} << (2 * n);
        for (int flat = 0; flat < 4 * n; ++flat) {
            const BasisIndex b = basis_from_flat(flat);
            std::uint64_t count = 0;
            for (std::uint64_t i = 0; i < total; ++i) {
                const Codeword cw = codeword_from_index(i, n);
                if (cw.pair_value(b.alpha) == pack_pair(b.p, b.q)) {
                    ++count;
                }
            }
            CHECK(count == codeword_multiplicity(b, n));
            CHECK(count == (std::uint64_t{1} << (2 * (n - 1))));
        }
    }
    CHECK(codeword_multiplicity(BasisIndex{0, 0, 0}, 1) == 1);
    CHECK(codeword_multiplicity(BasisIndex{3, 1, 0}, 4) == 64);
    CHECK_THROWS_AS(codeword_multiplicity(BasisIndex{5, 0, 0}, 2), std::invalid_argument);
}

TEST_CASE("decompositions partition the basis and rebuild the list") {
    // n=1: the four singleton basis states form the only decomposition
    const auto one = enumerate_decompositions(1);
    REQUIRE(one.size() == 1);
    CHECK(check_decomposition(one[0]));
    for (int member = 0; member < 4; ++member) {
        CHECK(one[0].members[static_cast<std::size_t>(member)].pair_value(0) == member);
    }

    // independent oracle at n=2: test every 4-subset of the 16 codewords for
    // pairwise-disjoint supports covering all 8 basis states
    std::vector<Codeword> all;
    for (std::uint64_t i = 0; i < 16; ++i) {
        all.push_back(codeword_from_index(i, 2));
    }
    std::vector<std::array<int, 4>> brute;
    for (int a = 0; a < 16; ++a) {
        for (int b = a + 1; b < 16; ++b) {
            if (codeword_overlap(all[a], all[b]) != 0.0) continue;
            for (int c = b + 1; c < 16; ++c) {
                if (codeword_overlap(all[a], all[c]) != 0.0 ||
                    codeword_overlap(all[b], all[c]) != 0.0)
                    continue;
                for (int d = c + 1; d < 16; ++d) {
                    if (codeword_overlap(all[a], all[d]) != 0.0 ||
                        codeword_overlap(all[b], all[d]) != 0.0 ||
                        codeword_overlap(all[c], all[d]) != 0.0)
                        continue;
                    std::set<int> cover;
                    for (int idx : {a, b, c, d}) {
                        const auto flats = support_flats(all[static_cast<std::size_t>(idx)]);
                        cover.insert(flats.begin(), flats.end());
                    }
                    if (cover.size() == 8) {
                        brute.push_back({a, b, c, d});
                    }
                }
            }
        }
    }
    CHECK(brute.size() == 24);

    const auto two = enumerate_decompositions(2);
    CHECK(two.size() == brute.size());
    CHECK(std::is_sorted(two.begin(), two.end()));
    for (const auto& d : two) {
        CHECK(check_decomposition(d));
        CHECK(std::is_sorted(d.members.begin(), d.members.end()));
    }

    // counts at larger n follow the same per-subspace permutation
    // structure, and every returned decomposition satisfies the invariants
    const auto three = enumerate_decompositions(3);
    CHECK(three.size() == 576);
    for (const auto& d : three) {
        CHECK(check_decomposition(d));
    }
    CHECK(enumerate_decompositions(4).size() == 13824);  // guard boundary

    // filtering: the worked four-state set contains encode("0000")
    const Codeword target = encode(BitString::parse("0000"));
    const auto containing = enumerate_decompositions(2, target);
    CHECK(containing.size() == 6);
    const OrthogonalDecomposition expected{{encode(BitString::parse("0000")),
                                            encode(BitString::parse("0101")),
                                            encode(BitString::parse("1010")),
                                            encode(BitString::parse("1111"))}};
    CHECK(std::find(containing.begin(), containing.end(), expected) != containing.end());
    CHECK(std::find(two.begin(), two.end(), expected) != two.end());
    for (const auto& d : containing) {
        CHECK(std::find(d.members.begin(), d.members.end(), target) != d.members.end());
    }

    CHECK_THROWS_AS(enumerate_decompositions(5), GuardError);
    CHECK_THROWS_AS(enumerate_decompositions(0), std::invalid_argument);
}

TEST_CASE("state vector construction and validation") {
    CHECK_THROWS_AS(StateVector(0), std::invalid_argument);
    CHECK_THROWS_AS(StateVector(2, std::vector<Complex>(5)), std::invalid_argument);
    CHECK_THROWS_AS(Codeword(2, {0}), std::invalid_argument);
    CHECK_THROWS_AS(Codeword(1, {4}), std::invalid_argument);

    const StateVector list = build_list(6);
    CHECK(list.is_normalized());
    CHECK(list.dim() == 24);
    CHECK(list.at(BasisIndex{5, 1, 1}).real() ==
          doctest::Approx(1.0 / std::sqrt(24.0)).epsilon(1e-14));
}

TEST_CASE("flat index ordering follows (alpha, p, q)") {
    int flat = 0;
    for (int alpha = 0; alpha < 3; ++alpha) {
        for (int p = 0; p < 2; ++p) {
            for (int q = 0; q < 2; ++q) {
                CHECK(flat_index(BasisIndex{alpha, p, q}) == flat);
                CHECK(basis_from_flat(flat) == BasisIndex{alpha, p, q});
                ++flat;
            }
        }
    }
}
