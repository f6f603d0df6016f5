#include "hodge/geomodels.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace hodge {

namespace {

DegreeBlock makeBlock(int q, const std::vector<Bidegree>& types, const CMat& pairing, std::vector<int> partner = {}) {
    DegreeBlock b;
    b.q = q;
    b.dim = static_cast<int>(types.size());
    b.types = types;
    b.pairing = pairing;
    b.partner = std::move(partner);
    return b;
}

CMat scalarMat(long v) {
    CMat m(1, 1);
    m(0, 0) = Gauss(v);
    return m;
}

// the middle pairing of the plane classes of an even quadric of dimension 2j
CMat planePairing(int j) {
    CMat m(2, 2);
    if (j % 2 == 0) {
        m(0, 0) = Gauss(1);
        m(1, 1) = Gauss(1);
    } else {
        m(0, 1) = Gauss(1);
        m(1, 0) = Gauss(1);
    }
    return m;
}

} // namespace

StratumCohomology quadricCohomology(int n) {
    if (n < 1) throw ContractError("quadricCohomology: dimension must be positive");
    StratumCohomology c;
    for (int s = 0; s <= n; ++s) {
        if (n % 2 == 0 && 2 * s == n)
            c.degrees[2 * s] = makeBlock(2 * s, {{s, s}, {s, s}}, planePairing(s));
        else
            c.degrees[2 * s] = makeBlock(2 * s, {{s, s}}, scalarMat(2));
    }
    return c;
}

std::map<int, CMat> quadricHyperplaneRestriction(int n) {
    if (n < 1) throw ContractError("quadricHyperplaneRestriction: dimension must be positive");
    std::map<int, CMat> out;
    for (int s = 0; s <= n; ++s) {
        CMat r;
        if ((n + 1) % 2 == 0 && 2 * s == n + 1) {
            // a plane of the ambient quadric meets the hyperplane in a linear
            // space whose class is h^s / 2
            r = CMat(1, 2);
            r(0, 0) = Gauss(frac(1, 2));
            r(0, 1) = Gauss(frac(1, 2));
        } else if (n % 2 == 0 && 2 * s == n) {
            r = CMat(2, 1);
            r(0, 0) = Gauss(1);
            r(1, 0) = Gauss(1);
        } else {
            r = scalarMat(1);
        }
        out[2 * s] = r;
    }
    return out;
}

StratumCohomology directSum(const std::vector<StratumCohomology>& parts, int depth) {
    StratumCohomology out;
    out.depth = depth;
    std::set<int> degrees;
    for (const auto& p : parts)
        for (const auto& [q, b] : p.degrees) degrees.insert(q);
    for (int q : degrees) {
        DegreeBlock b;
        b.q = q;
        for (const auto& p : parts) {
            const DegreeBlock* x = p.at(q);
            if (!x) continue;
            std::vector<int> part = partnerOf(*x);
            for (int v : part) b.partner.push_back(v + b.dim);
            b.types.insert(b.types.end(), x->types.begin(), x->types.end());
            b.dim += x->dim;
        }
        out.degrees[q] = b;
    }
    // pairings: block diagonal against the matching dual degree of each part
    for (auto& [q, b] : out.degrees) {
        int rows = 0;
        std::vector<std::pair<int, int>> shapes;
        for (const auto& p : parts) shapes.push_back({p.dim(q), 0});
        int total = 0;
        for (size_t i = 0; i < parts.size(); ++i) {
            const DegreeBlock* x = parts[i].at(q);
            shapes[i].second = x ? x->pairing.cols() : 0;
            total += shapes[i].second;
        }
        b.pairing = CMat(b.dim, total);
        int col = 0;
        for (size_t i = 0; i < parts.size(); ++i) {
            const DegreeBlock* x = parts[i].at(q);
            if (x) b.pairing.setBlock(rows, col, x->pairing);
            rows += shapes[i].first;
            col += shapes[i].second;
        }
    }
    return out;
}

StratumCohomology productCohomology(const StratumCohomology& a, const StratumCohomology& b) {
    if (a.degrees.empty() || b.degrees.empty()) throw ContractError("productCohomology: empty factor");
    int ca = a.degrees.rbegin()->first / 2, cb = b.degrees.rbegin()->first / 2;
    struct Cls {
        int qa, ia, qb, ib;
    };
    std::map<int, std::vector<Cls>> lists;
    for (const auto& [qa, ba] : a.degrees)
        for (const auto& [qb, bb] : b.degrees)
            for (int i = 0; i < ba.dim; ++i)
                for (int j = 0; j < bb.dim; ++j) lists[qa + qb].push_back({qa, i, qb, j});
    StratumCohomology out;
    for (const auto& [q, list] : lists) {
        DegreeBlock blk;
        blk.q = q;
        blk.dim = static_cast<int>(list.size());
        std::map<std::tuple<int, int, int, int>, int> where;
        for (int i = 0; i < blk.dim; ++i) where[{list[i].qa, list[i].ia, list[i].qb, list[i].ib}] = i;
        for (const Cls& x : list) {
            const DegreeBlock *xa = a.at(x.qa), *xb = b.at(x.qb);
            blk.types.push_back({xa->types[x.ia].first + xb->types[x.ib].first, xa->types[x.ia].second + xb->types[x.ib].second});
            blk.partner.push_back(where.at({x.qa, partnerOf(*xa)[x.ia], x.qb, partnerOf(*xb)[x.ib]}));
        }
        const auto& dual = lists[2 * (ca + cb) - q];
        blk.pairing = CMat(blk.dim, static_cast<int>(dual.size()));
        for (int i = 0; i < blk.dim; ++i)
            for (size_t j = 0; j < dual.size(); ++j) {
                const Cls &x = list[i], &y = dual[j];
                if (x.qa + y.qa != 2 * ca) continue;
                Gauss v = a.at(x.qa)->pairing(x.ia, y.ia) * b.at(x.qb)->pairing(x.ib, y.ib);
                if ((x.qb * y.qa) % 2) v = -v;
                blk.pairing(i, static_cast<int>(j)) = v;
            }
        out.degrees[q] = blk;
    }
    return out;
}

CMat blowupRestriction(const CMat& iota1Star, const CMat& iota2Gysin) {
    if (iota1Star.rows() != iota2Gysin.rows()) throw ContractError("blowupRestriction: row counts differ");
    return hstack(iota1Star, iota2Gysin);
}

CMat blowupGysin(const CMat& iota1Gysin, const CMat& iota2Star) {
    if (iota1Gysin.cols() != iota2Star.cols()) throw ContractError("blowupGysin: column counts differ");
    return vstack(iota1Gysin, -iota2Star);
}

CMat adjointGysin(const CMat& pairingZ, const CMat& rho, const CMat& pairingX) {
    if (pairingZ.cols() != rho.rows() || rho.cols() != pairingX.cols()) throw ContractError("adjointGysin: shape mismatch");
    return (pairingZ * rho * inverse(pairingX)).transpose();
}

IndexTable middleSignature(const StratumCohomology& coh, int m) {
    IndexTable out;
    const DegreeBlock* b = coh.at(m);
    for (int k = 0; k <= m; ++k) out[k] = {0, 0};
    if (!b) return out;
    std::vector<int> part = partnerOf(*b);
    Gauss eps(epsilon(m));
    for (int k = 0; k <= m; ++k) {
        std::vector<int> idx;
        for (int i = 0; i < b->dim; ++i)
            if (b->types[i] == Bidegree{k, m - k}) idx.push_back(i);
        if (idx.empty()) continue;
        CMat G(static_cast<int>(idx.size()), static_cast<int>(idx.size()));
        Gauss f = ipow(2 * k - m) * eps;
        for (size_t i = 0; i < idx.size(); ++i)
            for (size_t j = 0; j < idx.size(); ++j) G(i, j) = f * b->pairing(idx[i], part[idx[j]]);
        Signature s = hermitianSignature(G);
        if (s.nulls) throw ContractError("middleSignature: degenerate form on H^{" + std::to_string(k) + "," + std::to_string(m - k) + "}");
        out[k] = {s.positives, s.negatives};
    }
    return out;
}

DegenerationData smoothModel(const StratumCohomology& coh, int m) {
    DegenerationData d;
    d.m = m;
    d.strata[1] = coh;
    d.strata[1].depth = 1;
    return d;
}

DegenerationData kodairaModel(int a) {
    if (a < 1) throw ContractError("kodairaModel: Hirzebruch index must be positive");
    StratumCohomology S;
    S.degrees[0] = makeBlock(0, {{0, 0}}, scalarMat(1));
    CMat p2(2, 2); // basis fiber f, zero section D0
    p2(0, 1) = Gauss(1);
    p2(1, 0) = Gauss(1);
    p2(1, 1) = Gauss(-a);
    S.degrees[2] = makeBlock(2, {{1, 1}, {1, 1}}, p2);
    S.degrees[4] = makeBlock(4, {{2, 2}}, scalarMat(1));
    StratumCohomology D = projectiveSpaceCohomology(1);

    DegenerationData d;
    d.m = 2;
    d.strata[1] = directSum({S, S}, 1);
    d.strata[2] = directSum({D, D}, 2);
    // both double curves lie on S1 and S2; theta = rho(S2) - rho(S1)
    CMat r0(2, 2);
    for (int i = 0; i < 2; ++i) {
        r0(i, 0) = Gauss(-1);
        r0(i, 1) = Gauss(1);
    }
    d.restriction[{1, 0}] = r0;
    // D1 = zero section of S1 = infinity section of S2, D2 the other way round;
    // infinity section = D0 + a f
    CMat r2(2, 4);
    r2(0, 0) = Gauss(-1);
    r2(0, 1) = Gauss(a);
    r2(0, 2) = Gauss(1);
    r2(0, 3) = Gauss(0);
    r2(1, 0) = Gauss(-1);
    r2(1, 1) = Gauss(0);
    r2(1, 2) = Gauss(1);
    r2(1, 3) = Gauss(-a);
    d.restriction[{1, 2}] = r2;
    return d;
}

DegenerationData cycleModel(int n) {
    if (n < 2) throw ContractError("cycleModel: need at least two curves");
    StratumCohomology P1 = projectiveSpaceCohomology(1);
    StratumCohomology pt = projectiveSpaceCohomology(0);
    DegenerationData d;
    d.m = 1;
    d.strata[1] = directSum(std::vector<StratumCohomology>(n, P1), 1);
    d.strata[2] = directSum(std::vector<StratumCohomology>(n, pt), 2);
    CMat r(n, n);
    for (int i = 0; i < n; ++i) {
        int a = i, b = (i + 1) % n;
        if (a > b) std::swap(a, b);
        r(i, b) += Gauss(1);
        r(i, a) -= Gauss(1);
    }
    d.restriction[{1, 0}] = r;
    return d;
}

StratumCohomology projectiveSpaceCohomology(int n) {
    StratumCohomology c;
    for (int s = 0; s <= n; ++s) c.degrees[2 * s] = makeBlock(2 * s, {{s, s}}, scalarMat(1));
    return c;
}

StratumCohomology k3Cohomology() {
    StratumCohomology c;
    c.degrees[0] = makeBlock(0, {{0, 0}}, scalarMat(1));
    c.degrees[4] = makeBlock(4, {{2, 2}}, scalarMat(1));
    std::vector<Bidegree> t{{2, 0}, {0, 2}};
    for (int i = 0; i < 20; ++i) t.push_back({1, 1});
    CMat p(22, 22);
    p(0, 1) = Gauss(2);
    p(1, 0) = Gauss(2);
    p(2, 2) = Gauss(2); // a Kahler class
    for (int i = 3; i < 22; ++i) p(i, i) = Gauss(-2);
    c.degrees[2] = makeBlock(2, t, p);
    return c;
}

StratumCohomology ellipticCurveCohomology() {
    StratumCohomology c;
    c.degrees[0] = makeBlock(0, {{0, 0}}, scalarMat(1));
    c.degrees[2] = makeBlock(2, {{1, 1}}, scalarMat(1));
    CMat p(2, 2);
    p(0, 1) = Gauss(0, -2);
    p(1, 0) = Gauss(0, 2);
    c.degrees[1] = makeBlock(1, {{1, 0}, {0, 1}}, p);
    return c;
}

// ---- ordinary double points ----

namespace {

struct ClassTag {
    enum Kind { Base, T, A, D } kind;
    int i = 0, s = 0; // base index / node and power / relation index
};

} // namespace

ResolutionData syntheticResolution(const StratumCohomology& base, int m, int l, int R) {
    if (m < 2) throw ContractError("syntheticResolution: m >= 2 required");
    if (l < 0 || R < 0 || R > l) throw ContractError("syntheticResolution: need 0 <= R <= l");
    if (m % 2 == 0 && R != 0) throw ContractError("syntheticResolution: R only applies to odd m");
    if (base.dim(0) != 1) throw ContractError("syntheticResolution: base must be connected");
    int n = m - 1;
    int extra = m % 2 ? l - R : 0;
    std::map<int, std::vector<ClassTag>> tags;
    for (const auto& [q, b] : base.degrees)
        for (int i = 0; i < b.dim; ++i) tags[q].push_back({ClassTag::Base, i, 0});
    for (int i = 0; i < l; ++i)
        for (int s = 0; s <= n - 1; ++s) tags[2 * s + 2].push_back({ClassTag::T, i, s});
    for (int s = 0; s < extra; ++s) {
        tags[m - 1].push_back({ClassTag::D, 0, s});
        tags[m + 1].push_back({ClassTag::A, 0, s});
    }
    auto typeOf = [&](int q, const ClassTag& t) -> Bidegree {
        if (t.kind == ClassTag::Base) return base.at(q)->types[t.i];
        return {q / 2, q / 2};
    };
    auto pair = [&](int q, const ClassTag& x, const ClassTag& y) -> Gauss {
        if (x.kind == ClassTag::Base && y.kind == ClassTag::Base) return base.at(q)->pairing(x.i, y.i);
        if (x.kind == ClassTag::T && y.kind == ClassTag::T) return x.i == y.i && x.s + y.s == n - 1 ? Gauss(-2) : Gauss(0);
        if ((x.kind == ClassTag::D && y.kind == ClassTag::A) || (x.kind == ClassTag::A && y.kind == ClassTag::D))
            return x.s == y.s ? Gauss(1) : Gauss(0);
        return Gauss(0);
    };

    ResolutionData res;
    res.m = m;
    for (const auto& [q, list] : tags) {
        DegreeBlock b;
        b.q = q;
        b.dim = static_cast<int>(list.size());
        std::vector<int> basePartner;
        if (base.at(q)) basePartner = partnerOf(*base.at(q));
        for (int i = 0; i < b.dim; ++i) {
            b.types.push_back(typeOf(q, list[i]));
            b.partner.push_back(list[i].kind == ClassTag::Base ? basePartner[list[i].i] : i);
        }
        const auto& dual = tags[2 * m - q];
        b.pairing = CMat(b.dim, static_cast<int>(dual.size()));
        for (int i = 0; i < b.dim; ++i)
            for (size_t j = 0; j < dual.size(); ++j) b.pairing(i, static_cast<int>(j)) = pair(q, list[i], dual[j]);
        res.coh.degrees[q] = b;
    }

    StratumCohomology Q = quadricCohomology(n);
    int j = n / 2;
    Gauss abSquare(j % 2 == 0 ? 2 : -2); // (A - B)^2 on an even quadric
    for (int node = 0; node < l; ++node) {
        std::map<int, CMat> rho;
        for (const auto& [q, qb] : Q.degrees) {
            const auto& list = tags[q];
            CMat r(qb.dim, static_cast<int>(list.size()));
            for (size_t c = 0; c < list.size(); ++c) {
                const ClassTag& t = list[c];
                int col = static_cast<int>(c);
                if (t.kind == ClassTag::Base && q == 0) r(0, col) = Gauss(1);
                if (t.kind == ClassTag::T && t.i == node) // normal bundle O(-1): restriction is -h^{s+1}
                    for (int row = 0; row < qb.dim; ++row) r(row, col) = Gauss(-1);
                if (t.kind == ClassTag::D) {
                    Gauss M = (node == t.s || node >= l - R) ? Gauss(1) : Gauss(0);
                    r(0, col) = M / abSquare;
                    r(1, col) = -(M / abSquare);
                }
            }
            rho[q] = r;
        }
        res.toQuadric.push_back(rho);
    }
    return res;
}

OdpInput odpInputFrom(const ResolutionData& res) {
    OdpInput in;
    int m = res.m, n = m - 1;
    in.m = m;
    in.l = static_cast<int>(res.toQuadric.size());
    in.table = middleSignature(res.coh, m);
    StratumCohomology Q = quadricCohomology(n);
    if (m % 2 == 1) {
        const DegreeBlock* top = res.coh.at(m + 1);
        CMat images(top ? top->dim : 0, 0);
        for (const auto& rho : res.toQuadric) {
            if (!top) break;
            CMat g = adjointGysin(Q.at(n)->pairing, rho.at(n), top->pairing);
            CMat v(2, 1);
            v(0, 0) = Gauss(1);
            v(1, 0) = Gauss(-1);
            images = hstack(images, g * v);
        }
        in.R = in.l - (images.cols() ? rank(images) : 0);
    } else {
        const DegreeBlock* mid = res.coh.at(m);
        if (mid) {
            std::vector<int> idx;
            for (int i = 0; i < mid->dim; ++i)
                if (mid->types[i] == Bidegree{m / 2, m / 2}) idx.push_back(i);
            CMat stacked(0, mid->dim);
            for (const auto& rho : res.toQuadric)
                if (rho.count(m)) stacked = vstack(stacked, rho.at(m));
            CMat K0 = kernel(stacked.cols(idx)).basis();
            CMat K(mid->dim, K0.cols());
            for (size_t i = 0; i < idx.size(); ++i)
                for (int c = 0; c < K0.cols(); ++c) K(idx[i], c) = K0(static_cast<int>(i), c);
            CMat G = Gauss(epsilon(m)) * (K.transpose() * mid->pairing * conjMatrix(*mid) * K.conj());
            in.vHat = hermitianSignature(G);
            if (in.vHat.nulls) throw ContractError("odpInputFrom: degenerate form on V^m");
        }
    }
    return in;
}

DegenerationData odpSemistableModel(const ResolutionData& res, const OdpInput& input) {
    int m = res.m, l = static_cast<int>(res.toQuadric.size());
    if (input.m != m || input.l != l) throw ContractError("odpSemistableModel: input does not match the resolution");
    DegenerationData d;
    d.m = m;
    if (l == 0) return smoothModel(res.coh, m);
    StratumCohomology E = quadricCohomology(m), Q = quadricCohomology(m - 1);
    std::vector<StratumCohomology> top{res.coh};
    for (int i = 0; i < l; ++i) top.push_back(E);
    d.strata[1] = directSum(top, 1);
    d.strata[2] = directSum(std::vector<StratumCohomology>(l, Q), 2);
    std::map<int, CMat> eq = quadricHyperplaneRestriction(m - 1);
    for (const auto& [q, qb] : Q.degrees) {
        int dx = res.coh.dim(q), de = E.dim(q);
        CMat r(l * qb.dim, dx + l * de);
        for (int i = 0; i < l; ++i) {
            auto it = res.toQuadric[i].find(q);
            if (it != res.toQuadric[i].end()) {
                if (it->second.rows() != qb.dim || it->second.cols() != dx)
                    throw ContractError("odpSemistableModel: restriction to Q_" + std::to_string(i) + " in degree " + std::to_string(q) + " has the wrong shape");
                r.setBlock(i * qb.dim, 0, -it->second);
            }
            if (de) r.setBlock(i * qb.dim, dx + i * de, eq.at(q));
        }
        d.restriction[{1, q}] = r;
    }
    return d;
}

IndexTable odpIndexFormula(const OdpInput& in) {
    IndexTable out;
    int m = in.m;
    for (int k = 0; k <= m; ++k) {
        auto it = in.table.find(k);
        std::pair<long, long> s = it == in.table.end() ? std::pair<long, long>{0, 0} : it->second;
        if (m % 2 == 1 && (2 * k == m + 1 || 2 * k == m - 1)) s.first += in.R;
        if (m % 2 == 0 && 2 * k == m) s = {in.vHat.positives + in.l, in.vHat.negatives};
        out[k] = s;
    }
    return out;
}

// ---- closed forms ----

namespace {
long hv(const HodgeTable& h, int a, int b) {
    if (a < 0 || b < 0) return 0;
    auto it = h.find({a, b});
    return it == h.end() ? 0 : it->second;
}
} // namespace

std::pair<long, long> kahlerIndexFormula(const HodgeTable& h, int m, int p) {
    for (const auto& [ab, v] : h)
        if (v != hv(h, ab.second, ab.first)) throw ContractError("kahlerIndexFormula: h^{a,b} != h^{b,a}");
    long plus = 0, minus = 0;
    int q = m - p;
    for (int r = 0; p - 2 * r >= 0 && q - 2 * r >= 0; ++r) {
        long a = hv(h, p - 2 * r, q - 2 * r) - hv(h, p - 2 * r - 1, q - 2 * r - 1);
        long b = hv(h, p - 2 * r - 1, q - 2 * r - 1) - hv(h, p - 2 * r - 2, q - 2 * r - 2);
        if (a < 0 || b < 0)
            throw ContractError("kahlerIndexFormula: negative difference at r=" + std::to_string(r) + ", input not Lefschetz-admissible");
        plus += a;
        minus += b;
    }
    return {plus, minus};
}

long fullSignature(const HodgeTable& h) {
    long s = 0;
    for (const auto& [ab, v] : h) s += (ab.first % 2 ? -v : v);
    return s;
}

HodgeTable k3Hodge() {
    return {{{0, 0}, 1}, {{2, 0}, 1}, {{0, 2}, 1}, {{1, 1}, 20}, {{2, 2}, 1}};
}

long LefschetzFactor::y(int k) const {
    return k >= 0 && k < static_cast<int>(bettiY.size()) ? bettiY[k] : 0;
}

namespace {
long at(const std::vector<long>& v, int k) { return k >= 0 && k < static_cast<int>(v.size()) ? v[k] : 0; }

// Betti numbers of the base locus (dimension m-2) by the Lefschetz theorem
long baseBetti(const LefschetzFactor& f, int k) {
    int m = f.m;
    if (k < 0 || k > 2 * m - 4) return 0;
    if (k <= m - 3) return at(f.bettiX, k);
    if (k == m - 2) return at(f.bettiX, k) + f.vanB;
    return at(f.bettiX, k + 4);
}

long blowupBetti(const LefschetzFactor& f, int k) { return at(f.bettiX, k) + baseBetti(f, k - 2); }

template <class A, class B>
long convolve(int k, A a, B b) {
    long s = 0;
    for (int i = 0; i <= k; ++i) s += a(i) * b(k - i);
    return s;
}
} // namespace

LefschetzFactor lefschetzFactorFromAmbient(int m, const std::vector<long>& bettiX, long van, long vanB) {
    LefschetzFactor f;
    f.m = m;
    f.bettiX = bettiX;
    f.van = van;
    f.vanB = vanB;
    f.fixed = at(bettiX, m - 1);
    for (int k = 0; k <= 2 * m - 2; ++k) {
        if (k <= m - 2) f.bettiY.push_back(at(bettiX, k));
        else if (k == m - 1) f.bettiY.push_back(at(bettiX, k) + van);
        else f.bettiY.push_back(at(bettiX, k + 2));
    }
    f.d = at(bettiX, m) - at(bettiX, m - 2) + vanB + 2 * van;
    return f;
}

long lefschetzMiddleBetti(const LefschetzFactor& f) {
    if (f.van + f.fixed != f.y(f.m - 1)) throw ContractError("lefschetzMiddleBetti: van + fixed != h^{m-1}(Y)");
    long v = f.d + f.y(f.m) + f.y(f.m - 2) - 2 * f.van;
    if (v < 0) throw ContractError("lefschetzMiddleBetti: negative Betti number, inconsistent input");
    return v;
}

FiberProductBetti fiberProductMiddleBetti(const LefschetzInput& in) {
    const LefschetzFactor &a = in.f1, &b = in.f2;
    int m1 = a.m, m2 = b.m, M = m1 + m2 - 2;
    auto yy = [&](int k) { return convolve(k, [&](int i) { return a.y(i); }, [&](int i) { return b.y(i); }); };
    long v1 = a.van, v2 = b.van;
    long common = yy(M) - v1 * b.y(m2 - 1) - a.y(m1 - 1) * v2 + v1 * v2 + yy(M - 2) - v1 * b.y(m2 - 3) - a.y(m1 - 3) * v2 +
                  a.d * b.y(m2 - 2) - 2 * (v1 * b.y(m2 - 2) + a.y(m1 - 2) * v2);
    return {common + b.d * a.y(m1 - 2), common + b.d * a.y(m1 - 1)};
}

DimCheck fiberProductDimCheck(const LefschetzInput& in) {
    const LefschetzFactor &a = in.f1, &b = in.f2;
    if (a.bettiX.empty() || b.bettiX.empty()) throw ContractError("fiberProductDimCheck: ambient Betti numbers required");
    int M = a.m + b.m - 2;
    auto xt = [&](int k) {
        return convolve(k, [&](int i) { return blowupBetti(a, i); }, [&](int i) { return blowupBetti(b, i); });
    };
    auto bb = [&](int k) { return k < 0 ? 0L : convolve(k, [&](int i) { return baseBetti(a, i); }, [&](int i) { return baseBetti(b, i); }); };
    auto bx = [&](int k) { return k < 0 ? 0L : convolve(k, [&](int i) { return baseBetti(a, i); }, [&](int i) { return at(b.bettiX, i); }); };
    auto xb = [&](int k) { return k < 0 ? 0L : convolve(k, [&](int i) { return at(a.bettiX, i); }, [&](int i) { return baseBetti(b, i); }); };
    DimCheck c;
    FiberProductBetti v = fiberProductMiddleBetti(in);
    c.formula = v.symmetric;
    c.printed = v.printed;
    c.tensor = xt(M) - bb(M - 4) - bx(M - 2) - xb(M - 2) + bb(M - 2) - a.vanB * b.vanB;
    c.ok = c.formula == c.tensor;
    return c;
}

LefschetzInput schoenInput() {
    // rational elliptic surfaces: pencils of plane cubics, nine base points
    LefschetzFactor f = lefschetzFactorFromAmbient(2, {1, 0, 1, 0, 1}, 2, 8);
    return {f, f};
}

std::vector<SanoRow> sanoIndexTable(int m, long long a, const std::map<int, long long>& h) {
    if (m < 3 || a < 1) throw ContractError("sanoIndexTable: need m >= 3 and a >= 1");
    std::vector<SanoRow> rows;
    for (int k = 0; k <= m; ++k) {
        SanoRow r;
        r.k = k;
        if (m % 4 == 1 && (2 * k == m + 1 || 2 * k == m - 1)) r.minus = 9 * (27 * a * a - 2 * a + 5) + a + 6;
        if (m == 4 && k == 2) r.minus = a + 1;
        if (m % 2 == 0 && m >= 6 && 2 * k == m) r.minus = a + 2;
        auto it = h.find(k);
        if (it != h.end()) {
            r.h = it->second;
            r.plus = it->second - r.minus;
            if (*r.plus < 0) throw ContractError("sanoIndexTable: h^{k,m-k} smaller than the negative part");
        }
        rows.push_back(r);
    }
    return rows;
}

PicFixture hashimotoSanoPicFixture(long a) {
    PicFixture f;
    f.iota = CMat(3, 3);
    long rows[3][3] = {{1, 4 * a * a - 2 * a, 4 * a * a + 2 * a}, {0, 1 - 2 * a, -2 * a}, {0, 2 * a, 1 + 2 * a}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) f.iota(i, j) = Gauss(rows[i][j]);
    // fiber classes of the three projections on a (2,2,2) surface
    f.form = CMat(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) f.form(i, j) = Gauss(i == j ? 0 : 2);
    f.det = det(f.iota).re;
    f.preserved = f.iota.transpose() * f.form * f.iota == f.form;
    // Gysin of Pic into H^4 of the ambient (P^1)^3 in the basis dual to the
    // divisor classes is the intersection form itself
    f.compositeRank = rank(f.form * f.iota);
    f.ok = (f.det == 1 || f.det == -1) && f.preserved && f.compositeRank == 3;
    return f;
}

O16Verdict o16Evaluator(int defect, const IndexTable& resolutionMiddle) {
    if (defect < 0) throw ContractError("o16Evaluator: defect must be non-negative");
    O16Verdict v;
    const int prim = 6; // primitive H^2 of the cubic surface
    v.gr4 = prim - defect;
    v.gr2 = prim;
    v.ddbar = defect == 0;
    if (!v.ddbar) return v;
    v.table = resolutionMiddle;
    bool resPolarized = true;
    for (const auto& [k, s] : resolutionMiddle)
        if (s.second != 0) resPolarized = false;
    v.table[1].first += prim;
    v.table[2].first += prim;
    v.polarized = resPolarized;
    return v;
}

} // namespace hodge
