#ifndef HODGE_TEST_SUPPORT_HPP
#define HODGE_TEST_SUPPORT_HPP

#include "hodge/matrix.hpp"

#include <random>

namespace testsupport {

using namespace hodge;

inline Rat smallRat(std::mt19937& rng, int range = 3) {
    std::uniform_int_distribution<int> num(-range, range), den(1, 3);
    Rat r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

inline Gauss smallGauss(std::mt19937& rng, int range = 3, bool real = false) {
    if (real) return Gauss(smallRat(rng, range));
    return Gauss(smallRat(rng, range), smallRat(rng, range));
}

inline CMat randomMat(std::mt19937& rng, int r, int c, int range = 3, bool real = false) {
    CMat m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = smallGauss(rng, range, real);
    return m;
}

// rank-deficient product of random factors
inline CMat randomRankMat(std::mt19937& rng, int r, int c, int k) {
    return randomMat(rng, r, k) * randomMat(rng, k, c);
}

inline CMat randomInvertible(std::mt19937& rng, int n, bool real = false) {
    while (true) {
        CMat m = randomMat(rng, n, n, 2, real);
        if (rank(m) == n) return m;
    }
}

inline CMat randomHermitian(std::mt19937& rng, int n) {
    CMat a = randomMat(rng, n, n);
    return a + a.adjoint();
}

} // namespace testsupport

#endif
