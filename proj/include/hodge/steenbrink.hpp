#ifndef HODGE_STEENBRINK_HPP
#define HODGE_STEENBRINK_HPP

#include "hodge/mhs.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hodge {

// H^q of one merged stratum. Basis vectors are type-pure; conjugation sends
// basis vector i to basis vector partner[i] (entrywise conjugation of the
// coefficients on top of that permutation).
struct DegreeBlock {
    int q = 0;
    int dim = 0;
    std::vector<Bidegree> types;
    CMat pairing;             // against degree 2c - q, c the complex dimension
    std::vector<int> partner; // empty: i-th (a,b) <-> i-th (b,a)
};

struct StratumCohomology {
    int depth = 0;
    std::map<int, DegreeBlock> degrees;

    int dim(int q) const;
    const DegreeBlock* at(int q) const;
};

// per-depth merged strata, E(l) of complex dimension m - l + 1
struct DegenerationData {
    int m = 0;
    std::map<int, StratumCohomology> strata;
    // keyed by (source depth l, source degree q)
    // gysin: H^q(E(l)) -> H^{q+2}(E(l-1)); derived by adjointness when absent
    std::map<std::pair<int, int>, CMat> gysin;
    // restriction: H^q(E(l)) -> H^q(E(l+1))
    std::map<std::pair<int, int>, CMat> restriction;

    int maxDepth() const;
    int cdim(int depth) const { return m - depth + 1; }
    int dim(int depth, int q) const;
    const DegreeBlock* block(int depth, int q) const;
};

// partner permutation with the default filled in
std::vector<int> partnerOf(const DegreeBlock& b);
// conj(x) = C * entrywise conj(x)
CMat conjMatrix(const DegreeBlock& b);

// explicit or adjointness-derived Gysin map (zero matrix when a side is empty)
CMat gysinMatrix(const DegenerationData& data, int depth, int q);
CMat restrictionMatrix(const DegenerationData& data, int depth, int q);
// fills every missing Gysin block
DegenerationData withDerivedGysin(const DegenerationData& data);

AxiomReport validateDegenerationData(const DegenerationData& data);

struct E1Summand {
    int k = 0;
    int depth = 0;
    int q = 0;
    int twist = 0; // r + k; the summand is H^q(E(depth))(-twist)
    int offset = 0;
    int dim = 0;
};

// E1^{-r, d+r}
struct E1Term {
    int d = 0, r = 0;
    std::vector<E1Summand> summands;
    int dim = 0;
    const E1Summand* find(int k) const;
    // total type of each basis vector (stratum type shifted by the twist)
    std::vector<Bidegree> types(const DegenerationData& data) const;
    CMat conjMatrix(const DegenerationData& data) const;
};

E1Term e1Term(const DegenerationData& data, int d, int r);

struct E1Page {
    int d = 0;
    std::map<int, E1Term> terms; // by r, nonzero terms only
    int rMin = 0, rMax = -1;
};

E1Page e1Page(const DegenerationData& data, int d);

// d1 = -gamma + theta from E1^{-r,d+r} to E1^{-r+1,d+r}
CMat d1Matrix(const DegenerationData& data, int d, int r);

struct D1Block {
    int r = 0; // source column
    CMat map;
};

// all d1 maps out of degree d; throws ContractError naming the block when
// d1 o d1 fails to vanish
std::vector<D1Block> d1Maps(const DegenerationData& data, int d);

// identity shift of summand k onto summand k + s, E1^{-r,d+r} -> E1^{-r+2s,d+r-2s}
CMat shiftMatrix(const DegenerationData& data, int d, int r, int s);

struct E2Term {
    E1Term e1;
    GradedPiece piece;           // lower = boundaries, upper = cycles
    std::vector<Bidegree> types; // of piece.reps (conjugation-adapted)
    GradedPiece realPiece;       // same quotient, conjugation-fixed representatives
    int dim() const { return piece.dim(); }
};

E2Term e2Term(const DegenerationData& data, int d, int r);

struct E2Page {
    int d = 0;
    std::map<int, E2Term> terms; // by r
    int dim(int r) const;
};

E2Page e2Page(const DegenerationData& data, int d);

struct CriterionStep {
    int r = 0;
    int dimTop = 0, dimBottom = 0, rank = 0;
    bool ok = false;
};

struct CriterionReport {
    int d = 0;
    bool ok = true;
    std::vector<CriterionStep> steps;
};

CriterionReport weightCriterion(const DegenerationData& data, int d);

// psi between E1^{-r,m+r} (rows) and E1^{r,m-r} (columns)
CMat psiForm(const DegenerationData& data, int r);

// (H, W^St, F, -shift, S) in a real basis adapted to the E2 pieces;
// S only when d == m
MHSData extractMHS(const DegenerationData& data, int d);

// signatures of i^{p-q} S(u, N^l conj u) on the primitive parts of E2, N the
// abstract (negated geometric) monodromy
SignatureTable e2SignatureTable(const DegenerationData& data);

struct DegreeReport {
    int d = 0;
    CriterionReport criterion;
    std::map<int, int> gr;      // weight -> dim
    std::map<Bidegree, int> hodge; // limit h^{p,d-p}
};

struct IndexReport {
    int m = 0;
    bool ddbar = true; // criterion holds in every degree
    std::vector<DegreeReport> degrees;
    bool hasSignature = false;
    SignatureTable table;
    std::map<int, std::pair<int, int>> signature; // p -> index on H^{p,m-p}
    std::string note;
};

// degrees are computed on up to `workers` threads; the report does not depend on it
IndexReport nearbyHodgeIndex(const DegenerationData& data, int workers = 1);

} // namespace hodge

#endif
