#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hodge/filtration.hpp"
#include "support.hpp"

using namespace hodge;
using namespace testsupport;

namespace {

// direct sum of Jordan blocks J_k (e_j -> e_{j+1})
CMat jordan(const std::vector<int>& sizes) {
    int n = 0;
    for (int s : sizes) n += s;
    CMat m(n, n);
    int off = 0;
    for (int s : sizes) {
        for (int j = 0; j + 1 < s; ++j) m(off + j + 1, off + j) = 1;
        off += s;
    }
    return m;
}

// weight of e_j in a string of length s starting at the top: d + s - 1 - 2j
std::map<int, int> expectedGr(const std::vector<int>& sizes, int d) {
    std::map<int, int> g;
    for (int s : sizes)
        for (int j = 0; j < s; ++j) g[d + s - 1 - 2 * j]++;
    return g;
}

} // namespace

TEST_CASE("single Jordan block") {
    CMat n = jordan({3});
    auto W = weightFiltration(n, 2);
    CHECK(W.at(-1).dim() == 0);
    CHECK(W.at(0).dim() == 1);
    CHECK(W.at(1).dim() == 1);
    CHECK(W.at(2).dim() == 2);
    CHECK(W.at(4).dim() == 3);
    CHECK(W.jumps() == std::vector<int>{0, 2, 4});
    CHECK(checkWeightAxioms(W, n, 2).ok);
}

TEST_CASE("zero endomorphism is pure") {
    auto W = weightFiltration(CMat(3, 3), 1);
    CHECK(W.at(0).dim() == 0);
    CHECK(W.at(1).dim() == 3);
    CHECK(checkWeightAxioms(W, CMat(3, 3), 1).ok);
}

TEST_CASE("rejects non-nilpotent input") {
    CHECK_THROWS_AS(weightFiltration(CMat::identity(2), 0), ContractError);
}

TEST_CASE("axiom checker detects a bad filtration") {
    CMat n = jordan({2});
    IncreasingFiltration W(2);
    W.set(0, Subspace::full(2)); // pure of weight 0 is wrong for a nonzero N
    CHECK_FALSE(checkWeightAxioms(W, n, 0).ok);
    IncreasingFiltration shifted = weightFiltration(n, 0).shifted(1);
    CHECK_FALSE(checkWeightAxioms(shifted, n, 0).ok);
}

TEST_CASE("graded pieces and induced map") {
    CMat n = jordan({3, 1});
    auto W = weightFiltration(n, 0);
    auto g2 = gradedPiece(W, 2), g0 = gradedPiece(W, 0), gm2 = gradedPiece(W, -2);
    CHECK(g2.dim() == 1);
    CHECK(g0.dim() == 2);
    CHECK(gm2.dim() == 1);
    CHECK(rank(inducedMap(matPow(n, 2), g2, gm2)) == 1);
    CHECK(inducedMap(n, g0, gm2).rows() == 1);
    CHECK_THROWS(inducedMap(CMat::identity(4), g2, g0));
}

TEST_CASE("property: random nilpotents conjugated from Jordan form") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<int> sizes;
        int n = 0;
        while (n < 6) {
            int s = 1 + rng() % 4;
            sizes.push_back(s);
            n += s;
        }
        int d = static_cast<int>(rng() % 5) - 2;
        CMat g = randomInvertible(rng, n, trial % 2 == 0);
        CMat N = g * jordan(sizes) * inverse(g);
        auto W = weightFiltration(N, d);
        auto rep = checkWeightAxioms(W, N, d);
        CHECK(rep.ok);
        for (auto [k, m] : expectedGr(sizes, d)) CHECK(gradedPiece(W, k).dim() == m);
        CHECK(weightFiltration(-N, d) == W);
        CHECK(weightFiltration(N, d + 1) == W.shifted(1));
        // transport along g
        auto W0 = weightFiltration(jordan(sizes), d);
        for (int k = d - 6; k <= d + 6; ++k) CHECK(W.at(k) == image(g, W0.at(k)));
        // a rational N has a conjugation-stable weight filtration
        if (isRational(N))
            for (int k : W.jumps()) CHECK(W.at(k).conj() == W.at(k));
    }
}
