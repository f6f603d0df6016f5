#ifndef HODGE_GEOMODELS_HPP
#define HODGE_GEOMODELS_HPP

#include "hodge/steenbrink.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hodge {

using HodgeTable = std::map<Bidegree, long>;  // h^{a,b}
using IndexTable = std::map<int, std::pair<long, long>>; // k -> (positives, negatives) on H^{k,m-k}

// ---- building blocks ----

// smooth quadric of dimension n: H^{2s} spanned by h^s, except the middle of an
// even quadric which is spanned by the two plane classes A, B
StratumCohomology quadricCohomology(int n);
// restriction from the quadric of dimension n+1 to a hyperplane section, per degree
std::map<int, CMat> quadricHyperplaneRestriction(int n);

StratumCohomology directSum(const std::vector<StratumCohomology>& parts, int depth);
// Kunneth: (a x b).(a' x b') = (-1)^{|b||a'|} (a.a')(b.b')
StratumCohomology productCohomology(const StratumCohomology& a, const StratumCohomology& b);

// [i1^* | i2_!] and [i1_! ; -i2^*]
CMat blowupRestriction(const CMat& iota1Star, const CMat& iota2Gysin);
CMat blowupGysin(const CMat& iota1Gysin, const CMat& iota2Star);

// Gysin map of an inclusion determined by adjointness with its restriction:
// rho: H^{c'}(X) -> H^{c'}(Z) with c' = 2 dim Z - q, pairings of Z in degree q
// and of X in degree q + 2 codim
CMat adjointGysin(const CMat& pairingZ, const CMat& rho, const CMat& pairingX);

// i^{p-q} eps(m) int u ^ conj(u) on each H^{k,m-k}
IndexTable middleSignature(const StratumCohomology& coh, int m);

// ---- sample degenerations ----

DegenerationData smoothModel(const StratumCohomology& coh, int m);
// two Hirzebruch surfaces F_a glued along zero and infinity sections
DegenerationData kodairaModel(int a);
// cycle of n >= 2 rational curves
DegenerationData cycleModel(int n);
// sample cohomologies
StratumCohomology k3Cohomology();
StratumCohomology ellipticCurveCohomology();
StratumCohomology projectiveSpaceCohomology(int n);

// ---- ordinary double points ----

struct ResolutionData {
    int m = 0;
    StratumCohomology coh;                    // H^*(resolution)
    std::vector<std::map<int, CMat>> toQuadric; // per node, restriction to Q_i per degree
};

struct OdpInput {
    int m = 0;
    int l = 0;
    int R = 0;           // odd m
    Signature vHat;      // even m: signature on the (m/2,m/2) part of V^m
    IndexTable table;    // of the resolution
};

// base: cohomology of a smooth m-fold whose positive-degree classes vanish
// near the nodes; l nodes of which R relations among the A_i - B_i (odd m)
ResolutionData syntheticResolution(const StratumCohomology& base, int m, int l, int R);
OdpInput odpInputFrom(const ResolutionData& res);
DegenerationData odpSemistableModel(const ResolutionData& res, const OdpInput& input);
IndexTable odpIndexFormula(const OdpInput& input);

// ---- closed-form tables ----

std::pair<long, long> kahlerIndexFormula(const HodgeTable& h, int m, int p);
long fullSignature(const HodgeTable& h);
HodgeTable k3Hodge();

struct LefschetzFactor {
    int m = 0;
    long d = 0;                 // critical values
    std::vector<long> bettiY;   // h^k of a smooth fiber, k = 0..2m-2
    long van = 0, fixed = 0;    // middle h^{m-1}(Y) = van + fixed
    // ambient data for the dimension check
    std::vector<long> bettiX;   // h^k(X), k = 0..2m
    long vanB = 0;              // h^{m-2}_van of the base locus
    long y(int k) const;
};

struct LefschetzInput {
    LefschetzFactor f1, f2;
};

// fills Y, d and the fixed part from (bettiX, van, vanB)
LefschetzFactor lefschetzFactorFromAmbient(int m, const std::vector<long>& bettiX, long van, long vanB);
long lefschetzMiddleBetti(const LefschetzFactor& f);

struct FiberProductBetti {
    long symmetric = 0; // adopted reading
    long printed = 0;   // literal reading of the printed term
};
FiberProductBetti fiberProductMiddleBetti(const LefschetzInput& in);

struct DimCheck {
    bool ok = false;
    long formula = 0, printed = 0, tensor = 0;
};
DimCheck fiberProductDimCheck(const LefschetzInput& in);
LefschetzInput schoenInput();

struct SanoRow {
    int k = 0;
    std::optional<long long> h; // h^{k,m-k} when supplied
    long long minus = 0;
    std::optional<long long> plus;
};
std::vector<SanoRow> sanoIndexTable(int m, long long a, const std::map<int, long long>& h = {});

struct PicFixture {
    CMat iota, form;
    Rat det;
    bool preserved = false;
    int compositeRank = 0;
    bool ok = false;
};
PicFixture hashimotoSanoPicFixture(long a);

struct O16Verdict {
    bool ddbar = false;
    bool polarized = false;
    int gr4 = 0, gr2 = 0;
    IndexTable table;
};
O16Verdict o16Evaluator(int defect, const IndexTable& resolutionMiddle);

} // namespace hodge

#endif
