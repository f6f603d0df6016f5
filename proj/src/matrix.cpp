#include "hodge/matrix.hpp"

namespace hodge {

CMat evalAt(const PMat& m, const Rat& t0) {
    CMat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).eval(t0);
    return r;
}

PMat toPoly(const CMat& m) {
    PMat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = Poly(m(i, j));
    return r;
}

RrefResult rref(const CMat& m) {
    RrefResult res{m, {}, 0};
    CMat& a = res.reduced;
    int row = 0;
    for (int c = 0; c < a.cols() && row < a.rows(); ++c) {
        int p = -1;
        for (int i = row; i < a.rows(); ++i)
            if (!a(i, c).isZero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        a.swapRows(row, p);
        Gauss inv = Gauss(1) / a(row, c);
        for (int j = c; j < a.cols(); ++j) a(row, j) *= inv;
        for (int i = 0; i < a.rows(); ++i) {
            if (i == row || a(i, c).isZero()) continue;
            Gauss f = a(i, c);
            for (int j = c; j < a.cols(); ++j)
                if (!a(row, j).isZero()) a(i, j) -= f * a(row, j);
        }
        res.pivots.push_back(c);
        ++row;
    }
    res.rank = row;
    return res;
}

int rank(const CMat& m) { return rref(m).rank; }

CMat inverse(const CMat& m) {
    if (!m.square()) throw ContractError("inverse of non-square matrix");
    int n = m.rows();
    RrefResult r = rref(hstack(m, CMat::identity(n)));
    if (r.rank < n || r.pivots[n - 1] != n - 1) throw ContractError("singular matrix");
    return r.reduced.block(0, n, n, n);
}

bool isHermitian(const CMat& h) { return h.square() && h == h.adjoint(); }

bool isRational(const CMat& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m(i, j).isReal()) return false;
    return true;
}

// Congruence diagonalization H -> P^* H P. A vanishing diagonal with a nonzero
// off-diagonal entry h_ij is repaired by e_i -> e_i + conj(h_ij) e_j, which gives
// the diagonal value 2|h_ij|^2 (the hyperbolic-plane case).
HermitianDiagonalization diagonalizeHermitian(const CMat& h) {
    if (!isHermitian(h)) throw ContractError("hermitianSignature: matrix is not Hermitian");
    int n = h.rows();
    CMat a = h;
    CMat p = CMat::identity(n);
    auto colOp = [&](int dst, int src, const Gauss& c) { // col_dst += c col_src, row_dst += conj(c) row_src
        for (int i = 0; i < n; ++i) a(i, dst) += c * a(i, src);
        Gauss cc = c.conj();
        for (int j = 0; j < n; ++j) a(dst, j) += cc * a(src, j);
        for (int i = 0; i < n; ++i) p(i, dst) += c * p(i, src);
    };
    auto swapIdx = [&](int i, int j) {
        a.swapRows(i, j);
        a.swapCols(i, j);
        p.swapCols(i, j);
    };
    int k = 0;
    while (k < n) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (!a(i, i).isZero()) {
                piv = i;
                break;
            }
        if (piv < 0) {
            int bi = -1, bj = -1;
            for (int i = k; i < n && bi < 0; ++i)
                for (int j = k; j < n; ++j)
                    if (!a(i, j).isZero()) {
                        bi = i;
                        bj = j;
                        break;
                    }
            if (bi < 0) break;
            colOp(bi, bj, a(bi, bj).conj());
            continue;
        }
        swapIdx(k, piv);
        Gauss d = a(k, k);
        for (int i = k + 1; i < n; ++i) {
            if (a(k, i).isZero()) continue;
            colOp(i, k, -(a(k, i) / d));
        }
        ++k;
    }
    HermitianDiagonalization res;
    res.P = p;
    for (int i = 0; i < n; ++i) {
        Rat v = a(i, i).re;
        res.diag.push_back(v);
        int s = sgn(v);
        if (s > 0) ++res.sig.positives;
        else if (s < 0) ++res.sig.negatives;
        else ++res.sig.nulls;
    }
    return res;
}

Signature hermitianSignature(const CMat& h) { return diagonalizeHermitian(h).sig; }

} // namespace hodge
