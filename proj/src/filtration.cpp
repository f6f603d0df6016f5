#include "hodge/filtration.hpp"

namespace hodge {

void IncreasingFiltration::set(int k, const Subspace& s) {
    if (s.ambient() != n_) throw ContractError("filtration step ambient mismatch");
    steps_[k] = s;
}

Subspace IncreasingFiltration::at(int k) const {
    auto it = steps_.upper_bound(k);
    if (it == steps_.begin()) return Subspace::zero(n_);
    return std::prev(it)->second;
}

std::vector<int> IncreasingFiltration::jumps() const {
    std::vector<int> out;
    for (const auto& [k, s] : steps_)
        if (at(k - 1).dim() != s.dim()) out.push_back(k);
    return out;
}

int IncreasingFiltration::lo() const {
    for (const auto& [k, s] : steps_)
        if (s.dim() > 0) return k;
    return 0;
}

int IncreasingFiltration::hi() const {
    if (steps_.empty()) return 0;
    int top = steps_.rbegin()->second.dim();
    for (const auto& [k, s] : steps_)
        if (s.dim() == top) return k;
    return 0;
}

bool IncreasingFiltration::valid() const {
    Subspace prev = Subspace::zero(n_);
    for (const auto& [k, s] : steps_) {
        if (!s.contains(prev)) return false;
        prev = s;
    }
    return prev.dim() == n_;
}

IncreasingFiltration IncreasingFiltration::shifted(int c) const {
    IncreasingFiltration w(n_);
    for (const auto& [k, s] : steps_) w.set(k + c, s);
    return w;
}

bool operator==(const IncreasingFiltration& a, const IncreasingFiltration& b) {
    if (a.n_ != b.n_) return false;
    int lo = std::min(a.lo(), b.lo()) - 1, hi = std::max(a.hi(), b.hi()) + 1;
    for (int k = lo; k <= hi; ++k)
        if (a.at(k) != b.at(k)) return false;
    return true;
}

void DecreasingFiltration::set(int p, const Subspace& s) {
    if (s.ambient() != n_) throw ContractError("filtration step ambient mismatch");
    steps_[p] = s;
}

Subspace DecreasingFiltration::at(int p) const {
    auto it = steps_.lower_bound(p);
    if (it == steps_.end()) return Subspace::zero(n_);
    return it->second;
}

int DecreasingFiltration::lo() const { return steps_.empty() ? 0 : steps_.begin()->first; }

int DecreasingFiltration::hi() const {
    for (auto it = steps_.rbegin(); it != steps_.rend(); ++it)
        if (it->second.dim() > 0) return it->first;
    return lo() - 1;
}

bool DecreasingFiltration::valid() const {
    Subspace prev = Subspace::zero(n_);
    for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
        if (!it->second.contains(prev)) return false;
        prev = it->second;
    }
    return prev.dim() == n_;
}

DecreasingFiltration DecreasingFiltration::conj() const {
    DecreasingFiltration f(n_);
    for (const auto& [p, s] : steps_) f.set(p, s.conj());
    return f;
}

bool operator==(const DecreasingFiltration& a, const DecreasingFiltration& b) {
    if (a.n_ != b.n_) return false;
    int lo = std::min(a.lo(), b.lo()) - 1, hi = std::max(a.hi(), b.hi()) + 1;
    for (int p = lo; p <= hi; ++p)
        if (a.at(p) != b.at(p)) return false;
    return true;
}

bool isNilpotent(const CMat& N) {
    if (!N.square()) return false;
    return matPow(N, N.rows()).isZero();
}

namespace {

// Fill the steps of W(N) on the subquotient A/B, centred at c.
void weightRecurse(const CMat& N, const Subspace& A, const Subspace& B, int c, IncreasingFiltration& W) {
    if (A.dim() == B.dim()) return;
    int l = 0;
    CMat Nl = CMat::identity(N.rows());
    std::vector<CMat> powers{Nl};
    while (true) {
        CMat next = powers.back() * N;
        if (B.contains(image(next, A))) break;
        powers.push_back(next);
        ++l;
    }
    if (l == 0) {
        W.set(c - 1, B);
        W.set(c, A);
        return;
    }
    const CMat& P = powers[l];
    Subspace K = intersect(A, preimage(P, B));
    Subspace Im = sum(image(P, A), B);
    W.set(c - l - 1, B);
    W.set(c - l, Im);
    W.set(c + l - 1, K);
    W.set(c + l, A);
    weightRecurse(N, K, Im, c, W);
}

} // namespace

IncreasingFiltration weightFiltration(const CMat& N, int d) {
    if (!isNilpotent(N)) throw ContractError("weightFiltration: N is not nilpotent");
    int n = N.rows();
    IncreasingFiltration W(n);
    weightRecurse(N, Subspace::full(n), Subspace::zero(n), d, W);
    if (n == 0) W.set(d, Subspace::full(0));
    // drop redundant entries so only jumps remain
    IncreasingFiltration out(n);
    Subspace prev = Subspace::zero(n);
    for (const auto& [k, s] : W.steps()) {
        if (s.dim() != prev.dim()) out.set(k, s);
        prev = s;
    }
    if (out.steps().empty()) out.set(d, Subspace::full(n));
    return out;
}

CMat GradedPiece::project(const CMat& v) const {
    CMat basis = hstack(lower.basis(), reps);
    RrefResult r = rref(hstack(basis, v));
    int k = basis.cols();
    if (r.rank != k) throw ContractError("project: vector not in W_k");
    return r.reduced.block(lower.dim(), reps.cols(), k, v.cols());
}

GradedPiece gradedPiece(const IncreasingFiltration& W, int k) {
    GradedPiece g;
    g.weight = k;
    g.lower = W.at(k - 1);
    g.upper = W.at(k);
    g.reps = complementColumns(g.lower, g.upper.basis());
    return g;
}

CMat inducedMap(const CMat& M, const GradedPiece& src, const GradedPiece& tgt) {
    if (!tgt.lower.contains(M * src.lower.basis())) throw ContractError("inducedMap: map does not respect lower steps");
    CMat img = M * src.reps;
    if (!tgt.upper.contains(img)) throw ContractError("inducedMap: map does not respect upper steps");
    return tgt.project(img);
}

AxiomReport checkWeightAxioms(const IncreasingFiltration& W, const CMat& N, int d) {
    AxiomReport rep;
    if (!W.valid()) rep.fail("filtration is not an exhaustive increasing chain");
    int lo = W.lo() - 2, hi = W.hi() + 2;
    for (int k = lo; k <= hi; ++k)
        if (!W.at(k - 2).contains(image(N, W.at(k)))) rep.fail("N W_" + std::to_string(k) + " not in W_" + std::to_string(k - 2));
    if (!rep.ok) return rep;
    int span = std::max(std::abs(hi - d), std::abs(d - lo)) + 1;
    for (int l = 1; l <= span; ++l) {
        GradedPiece top = gradedPiece(W, d + l), bot = gradedPiece(W, d - l);
        if (top.dim() != bot.dim()) {
            rep.fail("dim Gr_" + std::to_string(d + l) + " != dim Gr_" + std::to_string(d - l));
            continue;
        }
        if (top.dim() == 0) continue;
        CMat m = inducedMap(matPow(N, l), top, bot);
        if (rank(m) != top.dim()) rep.fail("N^" + std::to_string(l) + " not an isomorphism Gr_" + std::to_string(d + l) + " -> Gr_" + std::to_string(d - l));
    }
    return rep;
}

} // namespace hodge
