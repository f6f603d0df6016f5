#include "hodge/subspace.hpp"

namespace hodge {

Subspace Subspace::span(const CMat& vectors) {
    Subspace s;
    s.n_ = vectors.rows();
    RrefResult r = rref(vectors.transpose());
    s.basis_ = r.reduced.block(0, r.rank, 0, vectors.rows()).transpose();
    s.pivots_ = r.pivots;
    return s;
}

Subspace Subspace::zero(int n) { return span(CMat(n, 0)); }

Subspace Subspace::full(int n) { return span(CMat::identity(n)); }

bool Subspace::contains(const CMat& v) const {
    if (v.rows() != n_) throw ContractError("contains: ambient mismatch");
    for (int j = 0; j < v.cols(); ++j) {
        CMat rest = v.col(j);
        for (int i = 0; i < dim(); ++i) {
            const Gauss c = v(pivots_[i], j);
            if (c.isZero()) continue;
            for (int k = 0; k < n_; ++k)
                if (!basis_(k, i).isZero()) rest(k, 0) -= c * basis_(k, i);
        }
        if (!rest.isZero()) return false;
    }
    return true;
}

bool Subspace::contains(const Subspace& o) const { return contains(o.basis()); }

Subspace Subspace::conj() const { return span(basis_.conj()); }

CMat Subspace::coords(const CMat& v) const {
    if (v.rows() != n_) throw ContractError("coords: ambient mismatch");
    if (!contains(v)) throw ContractError("coords: vector not in subspace");
    CMat c(dim(), v.cols());
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < v.cols(); ++j) c(i, j) = v(pivots_[i], j);
    return c;
}

Subspace kernel(const CMat& m) {
    RrefResult r = rref(m);
    int n = m.cols();
    std::vector<bool> isPivot(n, false);
    for (int c : r.pivots) isPivot[c] = true;
    CMat basis(n, n - r.rank);
    int col = 0;
    for (int f = 0; f < n; ++f) {
        if (isPivot[f]) continue;
        basis(f, col) = Gauss(1);
        for (int i = 0; i < r.rank; ++i) basis(r.pivots[i], col) = -r.reduced(i, f);
        ++col;
    }
    return Subspace::span(basis);
}

Subspace image(const CMat& m) { return Subspace::span(m); }

Subspace sum(const Subspace& u, const Subspace& v) {
    if (u.ambient() != v.ambient()) throw ContractError("sum: ambient mismatch");
    return Subspace::span(hstack(u.basis(), v.basis()));
}

Subspace intersect(const Subspace& u, const Subspace& v) {
    if (u.ambient() != v.ambient()) throw ContractError("intersect: ambient mismatch");
    if (u.dim() == 0 || v.dim() == 0) return Subspace::zero(u.ambient());
    Subspace k = kernel(hstack(u.basis(), -v.basis()));
    CMat top = k.basis().block(0, u.dim(), 0, k.dim());
    return Subspace::span(u.basis() * top);
}

Subspace image(const CMat& m, const Subspace& u) {
    if (m.cols() != u.ambient()) throw ContractError("image: shape mismatch");
    return Subspace::span(m * u.basis());
}

Subspace preimage(const CMat& m, const Subspace& v) {
    if (m.rows() != v.ambient()) throw ContractError("preimage: shape mismatch");
    Subspace k = kernel(hstack(m, -v.basis()));
    return Subspace::span(k.basis().block(0, m.cols(), 0, k.dim()));
}

CMat complementColumns(const Subspace& base, const CMat& candidates) {
    std::vector<int> chosen;
    CMat acc = base.basis();
    int r = base.dim();
    for (int j = 0; j < candidates.cols(); ++j) {
        CMat trial = hstack(acc, candidates.col(j));
        int rt = rank(trial);
        if (rt > r) {
            acc = trial;
            r = rt;
            chosen.push_back(j);
        }
    }
    return candidates.cols(chosen);
}

} // namespace hodge
