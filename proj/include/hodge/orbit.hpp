#ifndef HODGE_ORBIT_HPP
#define HODGE_ORBIT_HPP

#include "hodge/mhs.hpp"

#include <gmpxx.h>

namespace hodge {

// N^r u_i^{p,q}; sign and lambda refer to i^{p-q} S(u, N^l conj u)
struct TaggedVector {
    int p = 0, q = 0, i = 0, r = 0;
    Rat lambda;
    CMat v;
    int level() const { return p - r; }
    int sign() const { return sgn(lambda); }
};

// Sorted largest first: by p-r, then q-r, then r, then i.
struct WellOrderedBasis {
    int d = 0;
    std::vector<TaggedVector> vectors;
    CMat matrix() const;
    // number of leading vectors with p - r >= k
    int prefix(int k) const;
};

WellOrderedBasis wellOrderedBasis(const MHSData& data);

// exp((a + i t) N) as a polynomial matrix in t
PMat expzN(const CMat& N, const Rat& a);

struct OrbitFiltration {
    MHSData base;
    Rat a;
    WellOrderedBasis basis;
    PMat E; // exp(zN)
    PMat V; // E times the well-ordered basis
    int lo = 0, hi = -1; // Hodge levels present
    // columns spanning exp(zN) F^k
    PMat level(int k) const;
    // i^d S(x, conj y) on exp(zN) F^k, in the well-ordered basis
    PMat hermitian(int k) const;
};

OrbitFiltration orbitFiltration(const MHSData& data, const Rat& a);

// det[ exp(zN)F^k basis | conj exp(zN)F^{d-k+1} basis ]; throws ContractError
// when the dimensions cannot add up
Poly opposednessPolynomial(const OrbitFiltration& orb, int k);
int expectedOpposednessDegree(const OrbitFiltration& orb, int k);

enum class SigMethod { Evaluate, Asymptotic };

struct OrbitOptions {
    Rat t0 = Rat(1024);
    Rat t0Cap = Rat(mpz_class(1) << 60);
};

struct OrbitSignature {
    Signature sig;
    Rat t; // evaluation point where the signature stabilized (evaluate mode)
};

OrbitSignature orbitSignature(const OrbitFiltration& orb, int k, SigMethod method, const OrbitOptions& opt = {});

struct MinorStep {
    int index = 0; // 1-based size of the leading minor
    int p = 0, q = 0, i = 0, r = 0;
    int degree = 0, sign = 0;
    int ratioDegree = 0;   // deg P_l - deg P_{l-1}
    int ratioSign = 0;     // sign of lc(P_l) lc(P_{l-1})
    int predictedOrder = 0; // p + q - d - 2r
    int predictedSign = 0;  // (-1)^{d-p+r} sign(lambda)
};

struct OppLevel {
    int k = 0;
    bool possible = true;
    int degree = -1, expected = 0;
    bool ok = false;
};

struct AsymptoticReport {
    bool ok = true;
    std::vector<OppLevel> levels;
    std::vector<MinorStep> minors;
    std::vector<std::string> failures;
};

AsymptoticReport refinedFiltrationCheck(const OrbitFiltration& orb);

struct LevelCheck {
    int k = 0;
    OrbitSignature evaluated;
    Signature asymptotic;
    int predictedIndex = 0; // sum_{j>=k} (-1)^{d-j} (S+^j - S-^j)
};

struct HodgeComponentCheck {
    int p = 0;
    std::pair<int, int> orbit, formula;
};

struct MainTheoremReport {
    bool ok = true;
    bool polarized = false;
    SignatureTable table;
    AsymptoticReport asymptotic;
    std::vector<LevelCheck> levels;
    std::vector<HodgeComponentCheck> components;
    std::vector<std::string> failures;
};

MainTheoremReport verifyMainTheorem(const MHSData& data, const Rat& a = Rat(0), const OrbitOptions& opt = {});

// combinatorial identities
mpz_class sytCount(int rows, int cols);
struct IdentityCheck {
    bool ok = false;
    Poly lhs, rhs;
};
IdentityCheck taylorMinorIdentity(int n, int k);
IdentityCheck wedgeIdentity(int n, int k, const Rat& a = Rat(0));
// the block B^{p,q}_k of the string computation: determinant against its closed form
IdentityCheck stringBlockIdentity(int d, int p, int q, int k, const Rat& a = Rat(0));

} // namespace hodge

#endif
