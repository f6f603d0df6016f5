#ifndef HODGE_SUBSPACE_HPP
#define HODGE_SUBSPACE_HPP

#include "hodge/matrix.hpp"

namespace hodge {

// Column span inside C^n. The basis is kept in a canonical (reduced) form so
// equal subspaces have identical bases.
class Subspace {
public:
    Subspace() = default;
    static Subspace span(const CMat& vectors);
    static Subspace zero(int n);
    static Subspace full(int n);

    int ambient() const { return n_; }
    int dim() const { return basis_.cols(); }
    const CMat& basis() const { return basis_; }

    bool contains(const CMat& v) const;
    bool contains(const Subspace& o) const;
    Subspace conj() const;
    // coordinates of the columns of v in the canonical basis
    CMat coords(const CMat& v) const;

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.n_ == b.n_ && a.basis_ == b.basis_; }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    int n_ = 0;
    CMat basis_;
    std::vector<int> pivots_; // basis_ column i is 1 at pivots_[i] and 0 at the other pivots
};

Subspace kernel(const CMat& m);
Subspace image(const CMat& m);
Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersect(const Subspace& u, const Subspace& v);
// M U
Subspace image(const CMat& m, const Subspace& u);
// { x : M x in V }
Subspace preimage(const CMat& m, const Subspace& v);

// Greedy extension: columns of `candidates` (in order) that are independent
// modulo `base`.
CMat complementColumns(const Subspace& base, const CMat& candidates);

} // namespace hodge

#endif
