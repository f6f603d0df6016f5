#include "hodge/mhs.hpp"

namespace hodge {

namespace {

void requireRational(const CMat& m, const char* what) {
    if (!isRational(m)) throw ContractError(std::string(what) + " must have rational entries");
}

} // namespace

std::pair<int, int> hodgeRange(const MHSData& data) {
    int lo = data.F.lo(), hi = data.F.hi();
    if (data.F.steps().empty()) return {0, -1};
    return {lo, hi};
}

AxiomReport checkMHS(const MHSData& data) {
    AxiomReport rep;
    int n = data.dim;
    if (data.W.ambient() != n || data.F.ambient() != n) {
        rep.fail("ambient dimension mismatch");
        return rep;
    }
    if (!data.W.valid()) rep.fail("W is not an exhaustive increasing filtration");
    if (!data.F.valid()) rep.fail("F is not an exhaustive decreasing filtration");
    for (const auto& [k, s] : data.W.steps())
        if (s.conj() != s) rep.fail("W_" + std::to_string(k) + " is not defined over Q");
    if (!rep.ok) return rep;
    auto [plo, phi] = hodgeRange(data);
    DecreasingFiltration Fbar = data.F.conj();
    for (int k : data.W.jumps()) {
        Subspace lower = data.W.at(k - 1), upper = data.W.at(k);
        for (int p = plo; p <= phi + 1; ++p) {
            Subspace a = sum(intersect(data.F.at(p), upper), lower);
            Subspace b = sum(intersect(Fbar.at(k - p + 1), upper), lower);
            if (sum(a, b) != upper || intersect(a, b) != lower)
                rep.fail("F^" + std::to_string(p) + " on Gr_" + std::to_string(k) + " is not " + std::to_string(k) + "-opposed to its conjugate");
        }
    }
    return rep;
}

Subspace DeligneSplitting::at(int p, int q) const {
    auto it = parts.find({p, q});
    return it == parts.end() ? Subspace::zero(n) : it->second;
}

DeligneSplitting deligneSplitting(const MHSData& data) {
    AxiomReport rep = checkMHS(data);
    if (!rep.ok) throw ContractError("deligneSplitting: not a mixed Hodge structure (" + rep.reasons.front() + ")");
    DeligneSplitting out;
    out.n = data.dim;
    auto [plo, phi] = hodgeRange(data);
    DecreasingFiltration Fbar = data.F.conj();
    int wlo = data.W.lo();
    std::map<Bidegree, Subspace> barCache; // conj F^a cap W_b
    auto barW = [&](int a, int b) -> const Subspace& {
        auto it = barCache.find({a, b});
        if (it == barCache.end()) it = barCache.emplace(Bidegree{a, b}, intersect(Fbar.at(a), data.W.at(b))).first;
        return it->second;
    };
    for (int p = plo; p <= phi; ++p)
        for (int q = plo; q <= phi; ++q) {
            int w = p + q;
            Subspace inner = barW(q, w);
            for (int j = 2; w - j >= wlo - 1; ++j) inner = sum(inner, barW(q - j + 1, w - j));
            Subspace I = intersect(intersect(data.F.at(p), data.W.at(w)), inner);
            if (I.dim() > 0) out.parts[{p, q}] = I;
        }
    CMat all(data.dim, 0);
    for (const auto& [pq, s] : out.parts) all = hstack(all, s.basis());
    if (all.cols() != data.dim || rank(all) != data.dim) throw ContractError("deligneSplitting: pieces do not form a direct sum");
    return out;
}

AxiomReport situationA(const MHSData& data) {
    if (!data.N) throw ContractError("situation A: N is missing");
    const CMat& N = *data.N;
    requireRational(N, "N");
    AxiomReport rep;
    if (!isNilpotent(N)) {
        rep.fail("N is not nilpotent");
        return rep;
    }
    for (int k = data.W.lo() - 1; k <= data.W.hi() + 2; ++k)
        if (!data.W.at(k - 2).contains(image(N, data.W.at(k)))) rep.fail("N W_" + std::to_string(k) + " not in W_" + std::to_string(k - 2));
    auto [plo, phi] = hodgeRange(data);
    for (int p = plo; p <= phi + 1; ++p)
        if (!data.F.at(p - 1).contains(image(N, data.F.at(p)))) rep.fail("N F^" + std::to_string(p) + " not in F^" + std::to_string(p - 1));
    if (!(weightFiltration(N, data.d) == data.W)) rep.fail("W differs from the monodromy weight filtration W(N, d)");
    return rep;
}

AxiomReport situationB(const MHSData& data) {
    if (!data.S) throw ContractError("situation B: S is missing");
    if (!data.N) throw ContractError("situation B: N is missing");
    const CMat &S = *data.S, &N = *data.N;
    requireRational(S, "S");
    requireRational(N, "N");
    AxiomReport rep;
    int d = data.d;
    CMat sign = (d % 2 == 0) ? S : -S;
    if (S.transpose() != sign) rep.fail("S is not (-1)^d-symmetric");
    if (rank(S) != data.dim) rep.fail("S is degenerate");
    if (!(N.transpose() * S + S * N).isZero()) rep.fail("N is not an infinitesimal isometry of S");
    auto [plo, phi] = hodgeRange(data);
    for (int p = plo; p <= phi + 1; ++p) {
        CMat a = data.F.at(p).basis(), b = data.F.at(d - p + 1).basis();
        if (!(a.transpose() * S * b).isZero()) rep.fail("S(F^" + std::to_string(p) + ", F^" + std::to_string(d - p + 1) + ") != 0");
    }
    int lo = data.W.lo(), hi = data.W.hi();
    for (int a = lo; a <= hi; ++a)
        for (int b = lo; b <= hi && a + b <= 2 * d - 1; ++b) {
            CMat x = data.W.at(a).basis(), y = data.W.at(b).basis();
            if (!(x.transpose() * S * y).isZero()) rep.fail("S(W_" + std::to_string(a) + ", W_" + std::to_string(b) + ") != 0");
        }
    return rep;
}

Subspace primitivePart(const MHSData& data, int l) {
    if (!data.N) throw ContractError("primitivePart: N is missing");
    GradedPiece top = gradedPiece(data.W, data.d + l);
    if (l < 0) return Subspace::zero(top.dim());
    GradedPiece bot = gradedPiece(data.W, data.d - l - 2);
    if (top.dim() == 0) return Subspace::zero(0);
    return kernel(inducedMap(matPow(*data.N, l + 1), top, bot));
}

Subspace primitiveComponent(const MHSData& data, const DeligneSplitting& split, int p, int q) {
    int l = p + q - data.d;
    if (l < 0) return Subspace::zero(data.dim);
    return intersect(split.at(p, q), kernel(matPow(*data.N, l + 1)));
}

SignatureEntry SignatureTable::at(int p, int q) const {
    auto it = entries.find({p, q});
    return it == entries.end() ? SignatureEntry{} : it->second;
}

int SignatureTable::pMin() const {
    int m = 0;
    bool first = true;
    for (const auto& [pq, e] : entries) {
        int v = std::min(pq.first, pq.second);
        if (first || v < m) m = v;
        first = false;
    }
    return m;
}

int SignatureTable::pMax() const {
    int m = 0;
    bool first = true;
    for (const auto& [pq, e] : entries) {
        int v = std::max(pq.first, pq.second);
        if (first || v > m) m = v;
        first = false;
    }
    return m;
}

SignatureTable signatureTable(const MHSData& data) {
    AxiomReport a = situationA(data), b = situationB(data);
    if (!a.ok) throw ContractError("signatureTable: situation A fails (" + a.reasons.front() + ")");
    if (!b.ok) throw ContractError("signatureTable: situation B fails (" + b.reasons.front() + ")");
    DeligneSplitting split = deligneSplitting(data);
    SignatureTable table;
    table.d = data.d;
    const CMat &S = *data.S, &N = *data.N;
    for (const auto& [pq, I] : split.parts) {
        auto [p, q] = pq;
        SignatureEntry e;
        e.dimI = I.dim();
        int l = p + q - data.d;
        if (l >= 0) {
            Subspace P = primitiveComponent(data, split, p, q);
            e.prim = P.dim();
            if (e.prim > 0) {
                CMat B = P.basis();
                CMat G = ipow(p - q) * (B.transpose() * S * matPow(N, l) * B.conj());
                Signature s = hermitianSignature(G);
                if (s.nulls != 0) throw ContractError("signatureTable: degenerate primitive form at (" + std::to_string(p) + "," + std::to_string(q) + ")");
                e.plus = s.positives;
                e.minus = s.negatives;
            }
        }
        table.entries[pq] = e;
    }
    return table;
}

std::pair<int, int> aggregateS(const SignatureTable& table, int p, int l) {
    int d = table.d, q = d + l - p;
    int plus = 0, minus = 0;
    int top = table.pMax();
    for (int r = std::max(0, -l); p + r <= top && q + r <= top; ++r) {
        SignatureEntry e = table.at(p + r, q + r);
        plus += e.plus;
        minus += e.minus;
    }
    if (plus + minus != table.at(p, q).dimI)
        throw std::logic_error("aggregateS: Lefschetz count " + std::to_string(plus + minus) + " != dim I^{" + std::to_string(p) + "," + std::to_string(q) + "}");
    return {plus, minus};
}

std::pair<int, int> nearbyIndexFormula(const SignatureTable& table, int p) {
    int d = table.d;
    std::pair<int, int> first{0, 0}, second{0, 0};
    for (int k = 0; k <= d; ++k) {
        auto s = aggregateS(table, p, k + p - d);
        first.first += s.first;
        first.second += s.second;
    }
    int top = table.pMax();
    for (int l = p - d; d + l - p <= top; ++l)
        for (int r = std::max(0, -l); p + r <= top; ++r) {
            SignatureEntry e = table.at(p + r, d + l - p + r);
            second.first += e.plus;
            second.second += e.minus;
        }
    if (first != second) throw std::logic_error("nearbyIndexFormula: the two aggregation forms disagree");
    return first;
}

} // namespace hodge
