#ifndef HODGE_TEST_GENERATOR_HPP
#define HODGE_TEST_GENERATOR_HPP

// Random polarized mixed Hodge structures built from an explicit split bigrading.
// Everything the library is supposed to recover (types, primitive signs) is
// recorded here independently.

#include "hodge/mhs.hpp"
#include "support.hpp"

#include <random>

namespace testsupport {

using namespace hodge;

struct PrimBlock {
    int p, q, l;
    Rat lambda; // i^{p-q} S(u, N^l conj u)
};

struct GeneratedMHS {
    MHSData data;
    std::vector<PrimBlock> blocks;
    std::map<Bidegree, std::pair<int, int>> expectedSig; // (s+, s-) per primitive type
    std::map<Bidegree, int> expectedI;
};

struct GenOptions {
    int maxDim = 10;
    int maxD = 4;
    int minD = 0;
    bool polarized = true; // all lambda > 0
    bool twist = true;     // non-split exp(i delta) twist
    bool scramble = true;  // random rational change of coordinates
};

inline GeneratedMHS randomMHS(std::mt19937& rng, const GenOptions& opt = {}) {
    GeneratedMHS g;
    int d = opt.minD + static_cast<int>(rng() % (opt.maxD - opt.minD + 1));
    int target = 1 + static_cast<int>(rng() % opt.maxDim);
    int n = 0;
    for (int tries = 0; tries < 50 && n < target; ++tries) {
        int l = static_cast<int>(rng() % (d + 1));
        int plo = std::max(l, (d + l + 1) / 2);
        int p = plo + static_cast<int>(rng() % (d - plo + 1));
        int q = d + l - p;
        int size = (p == q ? 1 : 2) * (l + 1);
        if (n + size > opt.maxDim) continue;
        Rat lam(1 + static_cast<int>(rng() % 3));
        if (!opt.polarized && rng() % 2) lam = -lam;
        g.blocks.push_back({p, q, l, lam});
        n += size;
    }
    if (g.blocks.empty()) { // a single weight-d line or pair always fits
        g.blocks.push_back({d - d / 2, d / 2, 0, Rat(1)});
        n = (d % 2 == 0) ? 1 : 2;
    }

    // complex basis B in rational coordinates, with types and weights
    CMat B(n, n), N(n, n);
    std::vector<Bidegree> type(n);
    std::vector<int> blockOf(n), level(n), partner(n, -1);
    int col = 0;
    for (size_t b = 0; b < g.blocks.size(); ++b) {
        const PrimBlock& pb = g.blocks[b];
        int len = pb.l + 1;
        if (pb.p == pb.q) {
            for (int r = 0; r < len; ++r) {
                B(col + r, col + r) = 1;
                if (r + 1 < len) N(col + r + 1, col + r) = 1;
                type[col + r] = {pb.p - r, pb.q - r};
                blockOf[col + r] = static_cast<int>(b);
                level[col + r] = r;
            }
            col += len;
        } else {
            // coordinates x_r at col + r, y_r at col + len + r
            for (int r = 0; r < len; ++r) {
                int x = col + r, y = col + len + r;
                B(x, x) = 1;
                B(y, x) = I();
                B(x, y) = 1;
                B(y, y) = -I();
                if (r + 1 < len) {
                    N(x + 1, x) = 1;
                    N(y + 1, y) = 1;
                }
                type[x] = {pb.p - r, pb.q - r};
                type[y] = {pb.q - r, pb.p - r};
                blockOf[x] = blockOf[y] = static_cast<int>(b);
                level[x] = level[y] = r;
                partner[x] = y;
                partner[y] = x;
            }
            col += 2 * len;
        }
    }

    // S in the B basis: S(N^a u, N^{l-a} w) = (-1)^a mu(u, w)
    CMat SB(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (blockOf[i] != blockOf[j]) continue;
            const PrimBlock& pb = g.blocks[blockOf[i]];
            if (level[i] + level[j] != pb.l) continue;
            Gauss sgnA = (level[i] % 2 == 0) ? Gauss(1) : Gauss(-1);
            if (pb.p == pb.q) {
                SB(i, j) = sgnA * Gauss(pb.lambda);
            } else {
                // mu(u, ubar) = c, mu(ubar, u) = (-1)^{d+l} c, mu(u,u) = 0
                bool iIsU = type[i].first + level[i] == pb.p;
                bool jIsU = type[j].first + level[j] == pb.p;
                if (iIsU == jIsU) continue;
                Gauss c = ipow(pb.q - pb.p) * Gauss(pb.lambda);
                Gauss mu = iIsU ? c : c * Gauss(((d + pb.l) % 2 == 0) ? 1 : -1);
                SB(i, j) = sgnA * mu;
            }
        }
    CMat Binv = inverse(B);
    CMat S = Binv.transpose() * SB * Binv;

    // filtrations
    MHSData m;
    m.dim = n;
    m.d = d;
    int pmin = 1 << 20, pmax = -(1 << 20), wmin = 1 << 20, wmax = -(1 << 20);
    for (int i = 0; i < n; ++i) {
        pmin = std::min(pmin, type[i].first);
        pmax = std::max(pmax, type[i].first);
        wmin = std::min(wmin, type[i].first + type[i].second);
        wmax = std::max(wmax, type[i].first + type[i].second);
    }
    CMat twist = CMat::identity(n);
    if (opt.twist) {
        CMat delta(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!N(i, j).isZero()) delta(i, j) = N(i, j);
        // per-block scalar multiple of N
        for (size_t b = 0; b < g.blocks.size(); ++b) {
            Rat c = frac(static_cast<long>(rng() % 5) - 2, 1 + rng() % 2);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (blockOf[i] == static_cast<int>(b) && blockOf[j] == static_cast<int>(b)) delta(i, j) *= Gauss(c);
        }
        // exp(i delta)
        CMat term = CMat::identity(n), idelta = I() * delta;
        for (int k = 1; k <= n; ++k) {
            term = term * idelta * Gauss(frac(1, k));
            twist += term;
        }
    }
    m.W = IncreasingFiltration(n);
    for (int w = wmin; w <= wmax; ++w) {
        std::vector<int> idx;
        for (int i = 0; i < n; ++i)
            if (type[i].first + type[i].second <= w) idx.push_back(i);
        m.W.set(w, Subspace::span(B.cols(idx)));
    }
    m.F = DecreasingFiltration(n);
    for (int p = pmin; p <= pmax; ++p) {
        std::vector<int> idx;
        for (int i = 0; i < n; ++i)
            if (type[i].first >= p) idx.push_back(i);
        m.F.set(p, Subspace::span(twist * B.cols(idx)));
    }
    m.N = N;
    m.S = S;

    if (opt.scramble) {
        CMat gm = randomInvertible(rng, n, true);
        CMat gi = inverse(gm);
        IncreasingFiltration W2(n);
        for (const auto& [k, s] : m.W.steps()) W2.set(k, image(gm, s));
        DecreasingFiltration F2(n);
        for (const auto& [p, s] : m.F.steps()) F2.set(p, image(gm, s));
        m.W = W2;
        m.F = F2;
        m.N = gm * N * gi;
        m.S = gi.transpose() * S * gi;
    }
    g.data = m;

    for (const auto& pb : g.blocks) {
        auto add = [&](int p, int q) {
            auto& e = g.expectedSig[{p, q}];
            if (sgn(pb.lambda) > 0) ++e.first;
            else ++e.second;
        };
        add(pb.p, pb.q);
        if (pb.p != pb.q) add(pb.q, pb.p);
        for (int r = 0; r <= pb.l; ++r) {
            g.expectedI[{pb.p - r, pb.q - r}]++;
            if (pb.p != pb.q) g.expectedI[{pb.q - r, pb.p - r}]++;
        }
    }
    return g;
}

} // namespace testsupport

#endif
