#include "hodge/orbit.hpp"

#include <algorithm>

namespace hodge {

namespace {

Rat factorial(int m) {
    mpz_class f = 1;
    for (int i = 2; i <= m; ++i) f *= i;
    return Rat(f);
}

std::string pair2(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

} // namespace

CMat WellOrderedBasis::matrix() const {
    int n = vectors.empty() ? 0 : vectors.front().v.rows();
    CMat m(n, 0);
    for (const auto& tv : vectors) m = hstack(m, tv.v);
    return m;
}

int WellOrderedBasis::prefix(int k) const {
    int c = 0;
    while (c < static_cast<int>(vectors.size()) && vectors[c].level() >= k) ++c;
    return c;
}

WellOrderedBasis wellOrderedBasis(const MHSData& data) {
    DeligneSplitting split = deligneSplitting(data);
    const CMat &S = *data.S, &N = *data.N;
    int d = data.d, n = data.dim;
    WellOrderedBasis wb;
    wb.d = d;

    // all I^{p,q} bases side by side, for projections along the splitting
    CMat all(n, 0);
    std::vector<std::pair<Bidegree, int>> offsets;
    for (const auto& [pq, s] : split.parts) {
        offsets.push_back({pq, all.cols()});
        all = hstack(all, s.basis());
    }
    CMat allInv = inverse(all);
    auto project = [&](const CMat& v, Bidegree target) {
        CMat c = allInv * v;
        CMat out(n, v.cols());
        for (const auto& [pq, off] : offsets) {
            if (pq != target) continue;
            int k = split.at(pq.first, pq.second).dim();
            out = all.block(0, n, off, k) * c.block(off, k, 0, v.cols());
        }
        return out;
    };

    auto addString = [&](int p, int q, int i, const CMat& u, const Rat& lam) {
        int l = p + q - d;
        CMat x = u;
        for (int r = 0; r <= l; ++r) {
            wb.vectors.push_back({p, q, i, r, lam, x});
            x = N * x;
        }
    };

    for (const auto& [pq, s] : split.parts) {
        auto [p, q] = pq;
        if (p < q || p + q < d) continue;
        Subspace P = primitiveComponent(data, split, p, q);
        if (P.dim() == 0) continue;
        int l = p + q - d;
        CMat B = P.basis();
        CMat Nl = matPow(N, l);
        CMat G = ipow(p - q) * (B.transpose() * S * Nl * B.conj());
        HermitianDiagonalization dg = diagonalizeHermitian(G);
        if (dg.sig.nulls) throw ContractError("wellOrderedBasis: degenerate primitive form at " + pair2(p, q));
        CMat U = B * dg.P.conj();
        for (int i = 0; i < U.cols(); ++i) {
            CMat u = U.col(i);
            Rat lam = dg.diag[i];
            addString(p, q, i, u, lam);
            if (p != q) addString(q, p, i, project(u.conj(), {q, p}), lam);
        }
    }
    std::sort(wb.vectors.begin(), wb.vectors.end(), [](const TaggedVector& x, const TaggedVector& y) {
        auto key = [](const TaggedVector& t) { return std::make_tuple(t.p - t.r, t.q - t.r, t.r, t.i); };
        return key(x) > key(y);
    });
    if (static_cast<int>(wb.vectors.size()) != n || rank(wb.matrix()) != n)
        throw std::logic_error("wellOrderedBasis: strings do not form a basis");
    return wb;
}

PMat expzN(const CMat& N, const Rat& a) {
    int n = N.rows();
    PMat E = PMat::identity(n);
    Poly z = Poly::z(a), zk(1);
    CMat Nk = CMat::identity(n);
    for (int k = 1; k <= n; ++k) {
        Nk = Nk * N;
        if (Nk.isZero()) break;
        zk = zk * z;
        E += toPoly(Nk) * (zk * Poly(Gauss(1 / factorial(k))));
    }
    return E;
}

PMat OrbitFiltration::level(int k) const { return V.block(0, V.rows(), 0, basis.prefix(k)); }

PMat OrbitFiltration::hermitian(int k) const {
    PMat X = level(k);
    return (X.transpose() * toPoly(*base.S) * X.conj()) * Poly(ipow(base.d));
}

OrbitFiltration orbitFiltration(const MHSData& data, const Rat& a) {
    if (!data.N) throw ContractError("orbitFiltration: N is missing");
    OrbitFiltration orb;
    orb.base = data;
    orb.a = a;
    orb.basis = wellOrderedBasis(data);
    orb.E = expzN(*data.N, a);
    orb.V = orb.E * toPoly(orb.basis.matrix());
    auto range = hodgeRange(data);
    orb.lo = range.first;
    orb.hi = range.second;
    return orb;
}

Poly opposednessPolynomial(const OrbitFiltration& orb, int k) {
    int d = orb.base.d, n = orb.base.dim;
    PMat A = orb.level(k), B = orb.level(d - k + 1).conj();
    if (A.cols() + B.cols() != n)
        throw ContractError("opposedness impossible: dim F^" + std::to_string(k) + " + dim F^" + std::to_string(d - k + 1) + " != " + std::to_string(n));
    return polyDet(hstack(A, B));
}

int expectedOpposednessDegree(const OrbitFiltration& orb, int k) {
    int d = orb.base.d, deg = 0;
    for (const auto& tv : orb.basis.vectors)
        if (tv.r == 0 && tv.p >= k && tv.q >= d - k + 1) deg += (tv.p - k + 1) * (tv.q - d + k);
    return deg;
}

OrbitSignature orbitSignature(const OrbitFiltration& orb, int k, SigMethod method, const OrbitOptions& opt) {
    PMat G = orb.hermitian(k);
    OrbitSignature out;
    if (G.rows() == 0) return out;
    if (method == SigMethod::Asymptotic) {
        std::vector<Poly> minors = leadingPrincipalMinors(G);
        int prev = 1;
        for (const Poly& m : minors) {
            if (m.isZero()) throw std::runtime_error("orbitSignature: a leading minor vanishes identically");
            int s = leadingSign(m).sign;
            if (s == prev) ++out.sig.positives;
            else ++out.sig.negatives;
            prev = s;
        }
        return out;
    }
    Rat t = opt.t0;
    Signature last = hermitianSignature(evalAt(G, t));
    while (true) {
        Rat next = t * 2;
        if (next > opt.t0Cap) throw std::runtime_error("orbitSignature: no stable nondegenerate signature below the t0 cap");
        Signature cur = hermitianSignature(evalAt(G, next));
        if (cur == last && cur.nulls == 0) {
            out.sig = cur;
            out.t = next;
            return out;
        }
        last = cur;
        t = next;
    }
}

AsymptoticReport refinedFiltrationCheck(const OrbitFiltration& orb) {
    AsymptoticReport rep;
    int d = orb.base.d, n = orb.base.dim;
    for (int k = orb.lo; k <= orb.hi; ++k) {
        OppLevel lv;
        lv.k = k;
        lv.expected = expectedOpposednessDegree(orb, k);
        try {
            Poly c = opposednessPolynomial(orb, k);
            lv.degree = c.degree();
            lv.ok = !c.isZero() && lv.degree == lv.expected;
        } catch (const ContractError&) {
            lv.possible = false;
        }
        if (!lv.ok) rep.failures.push_back("level " + std::to_string(k) + ": opposedness degree " + std::to_string(lv.degree) + ", expected " + std::to_string(lv.expected));
        rep.levels.push_back(lv);
    }
    if (n == 0) return rep;
    PMat G = orb.hermitian(orb.lo);
    std::vector<Poly> minors = leadingPrincipalMinors(G);
    int prevDeg = 0, prevSign = 1;
    for (int l = 1; l <= n; ++l) {
        const TaggedVector& tv = orb.basis.vectors[l - 1];
        MinorStep st;
        st.index = l;
        st.p = tv.p;
        st.q = tv.q;
        st.i = tv.i;
        st.r = tv.r;
        st.predictedOrder = tv.p + tv.q - d - 2 * tv.r;
        st.predictedSign = ((d - tv.p + tv.r) % 2 == 0 ? 1 : -1) * tv.sign();
        const Poly& m = minors[l - 1];
        if (m.isZero()) {
            rep.failures.push_back("leading minor " + std::to_string(l) + " vanishes identically");
            rep.minors.push_back(st);
            prevDeg = 0;
            prevSign = 1;
            continue;
        }
        LeadingSign ls = leadingSign(m);
        st.degree = ls.degree;
        st.sign = ls.sign;
        st.ratioDegree = ls.degree - prevDeg;
        st.ratioSign = ls.sign * prevSign;
        prevDeg = ls.degree;
        prevSign = ls.sign;
        int k = tv.level();
        if (st.predictedOrder < k - d || st.predictedOrder > d) rep.failures.push_back("minor " + std::to_string(l) + ": order outside [k-d, d]");
        if (st.ratioDegree != st.predictedOrder || st.ratioSign != st.predictedSign)
            rep.failures.push_back("minor " + std::to_string(l) + ": ratio t^" + std::to_string(st.ratioDegree) + " sign " + std::to_string(st.ratioSign) +
                                   ", predicted t^" + std::to_string(st.predictedOrder) + " sign " + std::to_string(st.predictedSign));
        rep.minors.push_back(st);
    }
    rep.ok = rep.failures.empty();
    return rep;
}

MainTheoremReport verifyMainTheorem(const MHSData& data, const Rat& a, const OrbitOptions& opt) {
    MainTheoremReport rep;
    rep.table = signatureTable(data);
    int d = data.d;
    rep.polarized = true;
    for (const auto& [pq, e] : rep.table.entries)
        if (e.minus) rep.polarized = false;

    OrbitFiltration orb = orbitFiltration(data, a);
    rep.asymptotic = refinedFiltrationCheck(orb);
    for (const auto& f : rep.asymptotic.failures) rep.failures.push_back(f);

    std::map<int, std::pair<int, int>> formula;
    for (int p = orb.lo; p <= orb.hi; ++p) formula[p] = nearbyIndexFormula(rep.table, p);

    std::map<int, Signature> onF;
    for (int k = orb.lo; k <= orb.hi + 1; ++k) {
        LevelCheck lc;
        lc.k = k;
        lc.evaluated = orbitSignature(orb, k, SigMethod::Evaluate, opt);
        lc.asymptotic = orbitSignature(orb, k, SigMethod::Asymptotic, opt).sig;
        for (int j = k; j <= orb.hi; ++j) {
            int s = (d - j) % 2 == 0 ? 1 : -1;
            lc.predictedIndex += s * (formula[j].first - formula[j].second);
        }
        const Signature& ev = lc.evaluated.sig;
        if (!(ev == lc.asymptotic)) rep.failures.push_back("level " + std::to_string(k) + ": evaluated and asymptotic signatures differ");
        if (ev.positives - ev.negatives != lc.predictedIndex)
            rep.failures.push_back("level " + std::to_string(k) + ": index " + std::to_string(ev.positives - ev.negatives) + " != predicted " + std::to_string(lc.predictedIndex));
        onF[k] = ev;
        rep.levels.push_back(lc);
    }
    for (int p = orb.lo; p <= orb.hi; ++p) {
        HodgeComponentCheck hc;
        hc.p = p;
        int pos = onF[p].positives - onF[p + 1].positives, neg = onF[p].negatives - onF[p + 1].negatives;
        if ((d - p) % 2 != 0) std::swap(pos, neg);
        hc.orbit = {pos, neg};
        hc.formula = formula[p];
        if (hc.orbit != hc.formula)
            rep.failures.push_back("component " + pair2(p, d - p) + ": orbit " + pair2(pos, neg) + " != formula " + pair2(hc.formula.first, hc.formula.second));
        if (rep.polarized && pos < 0) rep.failures.push_back("component " + pair2(p, d - p) + ": negative count");
        if (rep.polarized && neg != 0) rep.failures.push_back("component " + pair2(p, d - p) + ": polarized structure gives an indefinite orbit form");
        rep.components.push_back(hc);
    }
    rep.ok = rep.failures.empty();
    return rep;
}

mpz_class sytCount(int rows, int cols) {
    if (rows < 0 || cols < 0) throw ContractError("sytCount: negative shape");
    mpz_class num = 1, den = 1;
    for (int i = 2; i <= rows * cols; ++i) num *= i;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) den *= (rows - 1 - i) + (cols - 1 - j) + 1;
    return num / den;
}

IdentityCheck taylorMinorIdentity(int n, int k) {
    if (k < 0 || k > n + 1) throw ContractError("taylorMinorIdentity: need 0 <= k <= n+1");
    Poly x = Poly::t();
    // upper right k x k block of (x^{j-i}/(j-i)!)_{0<=i,j<=n}
    PMat A(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            int e = (n + 1 - k + j) - i;
            if (e >= 0) A(i, j) = pow(x, e) * Poly(Gauss(1 / factorial(e)));
        }
    IdentityCheck c;
    c.lhs = polyDet(A);
    int m = (n - k + 1) * k;
    c.rhs = pow(x, m) * Poly(Gauss(Rat(sytCount(k, n - k + 1)) / factorial(m)));
    c.ok = c.lhs == c.rhs;
    return c;
}

IdentityCheck wedgeIdentity(int n, int k, const Rat& a) {
    if (k < 0 || k > n + 1) throw ContractError("wedgeIdentity: need 0 <= k <= n+1");
    // string u, Nu, ..., N^n u on the standard basis
    CMat N(n + 1, n + 1);
    for (int j = 0; j < n; ++j) N(j + 1, j) = 1;
    PMat E = expzN(N, a), Ebar = E.conj();
    PMat cols(n + 1, 0);
    for (int j = 0; j <= n - k; ++j) cols = hstack(cols, E.block(0, n + 1, j, 1));
    for (int j = 0; j < k; ++j) cols = hstack(cols, Ebar.block(0, n + 1, j, 1));
    IdentityCheck c;
    c.lhs = polyDet(cols);
    int m = (n - k + 1) * k;
    Poly zbarMinusZ = Poly::z(a).conj() - Poly::z(a);
    c.rhs = pow(zbarMinusZ, m) * Poly(Gauss(Rat(sytCount(n - k + 1, k)) / factorial(m)));
    c.ok = c.lhs == c.rhs;
    return c;
}

IdentityCheck stringBlockIdentity(int d, int p, int q, int k, const Rat& a) {
    if (!(d - q <= k && k <= p)) throw ContractError("stringBlockIdentity: need d-q <= k <= p");
    int size = p - k + 1, l = p + q - d;
    Poly w = Poly::z(a).conj() - Poly::z(a);
    PMat B(size, size);
    for (int r = 0; r < size; ++r)
        for (int s = 0; s < size; ++s) {
            int e = l - r - s;
            if (e < 0) continue;
            Gauss c = ipow(d - p + q) * Gauss(r % 2 == 0 ? 1 : -1) / Gauss(factorial(e));
            B(r, s) = pow(w, e) * Poly(c);
        }
    IdentityCheck c;
    c.lhs = polyDet(B);
    int sum = 0;
    for (int j = k; j <= p; ++j) sum += d - j;
    int m = (q - d + k) * (p - k + 1);
    Gauss coef = Gauss(Rat(sytCount(q - d + k, p - k + 1)) / factorial(m)) * Gauss(sum % 2 == 0 ? 1 : -1);
    c.rhs = pow(Poly::t() * Poly(2), m) * Poly(coef);
    c.ok = c.lhs == c.rhs;
    return c;
}

} // namespace hodge
