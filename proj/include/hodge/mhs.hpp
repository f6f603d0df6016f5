#ifndef HODGE_MHS_HPP
#define HODGE_MHS_HPP

#include "hodge/filtration.hpp"

#include <map>
#include <optional>
#include <utility>

namespace hodge {

// Real structure is coordinatewise conjugation: W, N and S must be rational.
struct MHSData {
    int dim = 0;
    int d = 0;
    IncreasingFiltration W;
    DecreasingFiltration F;
    std::optional<CMat> N;
    std::optional<CMat> S;
};

using Bidegree = std::pair<int, int>;

// Hodge levels p with Gr_F^p possibly nonzero, [lo, hi]
std::pair<int, int> hodgeRange(const MHSData& data);

AxiomReport checkMHS(const MHSData& data);

struct DeligneSplitting {
    int n = 0;
    std::map<Bidegree, Subspace> parts; // nonzero I^{p,q} only
    Subspace at(int p, int q) const;
    int dim(int p, int q) const { return at(p, q).dim(); }
};

DeligneSplitting deligneSplitting(const MHSData& data);

// reasons explain each failed condition
AxiomReport situationA(const MHSData& data);
AxiomReport situationB(const MHSData& data);
inline bool checkSituationA(const MHSData& data) { return situationA(data).ok; }
inline bool checkSituationB(const MHSData& data) { return situationB(data).ok; }

// kernel of N^{l+1}: Gr_{d+l} -> Gr_{d-l-2}, in the coordinates of gradedPiece(W, d+l)
Subspace primitivePart(const MHSData& data, int l);
// the (p,q)-component I^{p,q} cap ker N^{l+1} with l = p+q-d, inside H
Subspace primitiveComponent(const MHSData& data, const DeligneSplitting& split, int p, int q);

struct SignatureEntry {
    int plus = 0, minus = 0;
    int prim = 0; // dim of the primitive (p,q)-part
    int dimI = 0; // dim I^{p,q}
};

struct SignatureTable {
    int d = 0;
    std::map<Bidegree, SignatureEntry> entries;
    SignatureEntry at(int p, int q) const;
    int pMin() const;
    int pMax() const;
};

SignatureTable signatureTable(const MHSData& data);

// bold S_{+-}^{p, d+l-p}
std::pair<int, int> aggregateS(const SignatureTable& table, int p, int l);
std::pair<int, int> nearbyIndexFormula(const SignatureTable& table, int p);

} // namespace hodge

#endif
