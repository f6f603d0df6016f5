#ifndef HODGE_FILTRATION_HPP
#define HODGE_FILTRATION_HPP

#include "hodge/subspace.hpp"

#include <map>
#include <string>
#include <vector>

namespace hodge {

// Increasing filtration W_k. Only jumps are stored; W_k for k below the first
// stored weight is zero and at or above the last one equals the last step.
class IncreasingFiltration {
public:
    IncreasingFiltration() = default;
    explicit IncreasingFiltration(int n) : n_(n) {}

    void set(int k, const Subspace& s);
    Subspace at(int k) const;
    int ambient() const { return n_; }
    // weights where the filtration jumps (W_k != W_{k-1})
    std::vector<int> jumps() const;
    int lo() const; // smallest k with W_k != 0
    int hi() const; // smallest k with W_k = everything stored
    bool valid() const;
    IncreasingFiltration shifted(int c) const;
    const std::map<int, Subspace>& steps() const { return steps_; }

    friend bool operator==(const IncreasingFiltration& a, const IncreasingFiltration& b);

private:
    int n_ = 0;
    std::map<int, Subspace> steps_;
};

// Decreasing filtration F^p. F^p for p above the last stored level is zero and
// at or below the first stored level equals the first step.
class DecreasingFiltration {
public:
    DecreasingFiltration() = default;
    explicit DecreasingFiltration(int n) : n_(n) {}

    void set(int p, const Subspace& s);
    Subspace at(int p) const;
    int ambient() const { return n_; }
    int lo() const; // largest p with F^p = F^{lo}; F^p full (if valid) for p <= lo
    int hi() const; // largest p with F^p != 0
    bool valid() const;
    DecreasingFiltration conj() const;
    const std::map<int, Subspace>& steps() const { return steps_; }

    friend bool operator==(const DecreasingFiltration& a, const DecreasingFiltration& b);

private:
    int n_ = 0;
    std::map<int, Subspace> steps_;
};

IncreasingFiltration weightFiltration(const CMat& N, int d);

struct AxiomReport {
    bool ok = true;
    std::vector<std::string> reasons;
    void fail(const std::string& why) {
        ok = false;
        reasons.push_back(why);
    }
};

AxiomReport checkWeightAxioms(const IncreasingFiltration& W, const CMat& N, int d);

// Gr_k = W_k / W_{k-1} with representatives extending a basis of W_{k-1}.
struct GradedPiece {
    int weight = 0;
    Subspace lower; // W_{k-1}
    Subspace upper; // W_k
    CMat reps;      // columns, earliest pivots of W_k modulo W_{k-1}

    int dim() const { return reps.cols(); }
    // quotient coordinates of vectors lying in W_k
    CMat project(const CMat& v) const;
};

GradedPiece gradedPiece(const IncreasingFiltration& W, int k);
CMat inducedMap(const CMat& M, const GradedPiece& src, const GradedPiece& tgt);

bool isNilpotent(const CMat& N);

} // namespace hodge

#endif
