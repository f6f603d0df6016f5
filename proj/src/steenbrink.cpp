#include "hodge/steenbrink.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <set>
#include <thread>

namespace hodge {

namespace {

std::string tag(int depth, int q) { return "E(" + std::to_string(depth) + ") H^" + std::to_string(q); }

CMat sub(const CMat& m, const std::vector<int>& rows, const std::vector<int>& cols) {
    CMat s(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) s(i, j) = m(rows[i], cols[j]);
    return s;
}

// columns of v (given in the coordinates idx) placed in C^n
CMat embed(const CMat& v, const std::vector<int>& idx, int n) {
    CMat out(n, v.cols());
    for (size_t i = 0; i < idx.size(); ++i)
        for (int j = 0; j < v.cols(); ++j) out(idx[i], j) = v(i, j);
    return out;
}

std::map<Bidegree, std::vector<int>> byType(const std::vector<Bidegree>& types) {
    std::map<Bidegree, std::vector<int>> out;
    for (size_t i = 0; i < types.size(); ++i) out[types[i]].push_back(static_cast<int>(i));
    return out;
}

Bidegree swapped(const Bidegree& t) { return {t.second, t.first}; }

bool sameUpToSign(const CMat& a, const CMat& b) { return a == b || a == -b; }

} // namespace

int StratumCohomology::dim(int q) const {
    auto it = degrees.find(q);
    return it == degrees.end() ? 0 : it->second.dim;
}

const DegreeBlock* StratumCohomology::at(int q) const {
    auto it = degrees.find(q);
    return it == degrees.end() ? nullptr : &it->second;
}

int DegenerationData::maxDepth() const {
    int top = 0;
    for (const auto& [l, s] : strata)
        for (const auto& [q, b] : s.degrees)
            if (b.dim > 0) top = std::max(top, l);
    return top;
}

int DegenerationData::dim(int depth, int q) const {
    auto it = strata.find(depth);
    return it == strata.end() ? 0 : it->second.dim(q);
}

const DegreeBlock* DegenerationData::block(int depth, int q) const {
    auto it = strata.find(depth);
    return it == strata.end() ? nullptr : it->second.at(q);
}

std::vector<int> partnerOf(const DegreeBlock& b) {
    if (!b.partner.empty()) return b.partner;
    std::map<Bidegree, std::vector<int>> groups = byType(b.types);
    std::vector<int> p(b.dim, -1);
    for (const auto& [t, idx] : groups) {
        auto it = groups.find(swapped(t));
        if (it == groups.end() || it->second.size() != idx.size())
            throw ContractError("partnerOf: type tags are not conjugation-symmetric");
        for (size_t i = 0; i < idx.size(); ++i) p[idx[i]] = it->second[i];
    }
    return p;
}

CMat conjMatrix(const DegreeBlock& b) {
    std::vector<int> p = partnerOf(b);
    CMat c(b.dim, b.dim);
    for (int j = 0; j < b.dim; ++j) c(p[j], j) = Gauss(1);
    return c;
}

CMat restrictionMatrix(const DegenerationData& data, int depth, int q) {
    auto it = data.restriction.find({depth, q});
    if (it != data.restriction.end()) return it->second;
    return CMat(data.dim(depth + 1, q), data.dim(depth, q));
}

CMat gysinMatrix(const DegenerationData& data, int depth, int q) {
    auto it = data.gysin.find({depth, q});
    if (it != data.gysin.end()) return it->second;
    int rows = data.dim(depth - 1, q + 2), cols = data.dim(depth, q);
    if (rows == 0 || cols == 0) return CMat(rows, cols);
    // gamma^T P_{l-1}(q+2) = P_l(q) theta_{l-1}
    int dual = 2 * data.cdim(depth) - q;
    const DegreeBlock* src = data.block(depth, q);
    const DegreeBlock* tgt = data.block(depth - 1, q + 2);
    CMat theta = restrictionMatrix(data, depth - 1, dual);
    CMat g = src->pairing * theta * inverse(tgt->pairing);
    return g.transpose();
}

DegenerationData withDerivedGysin(const DegenerationData& data) {
    DegenerationData out = data;
    for (const auto& [l, s] : data.strata) {
        if (l < 2) continue;
        for (const auto& [q, b] : s.degrees)
            if (!out.gysin.count({l, q})) out.gysin[{l, q}] = gysinMatrix(data, l, q);
    }
    return out;
}

AxiomReport validateDegenerationData(const DegenerationData& data) {
    AxiomReport rep;
    if (data.m < 0) rep.fail("m must be non-negative");
    for (const auto& [l, s] : data.strata) {
        if (l < 1 || l > data.m + 1) {
            rep.fail("depth " + std::to_string(l) + " out of range");
            continue;
        }
        int c = data.cdim(l);
        for (const auto& [q, b] : s.degrees) {
            std::string at = tag(l, q);
            if (b.q != q) rep.fail(at + ": degree field disagrees with key");
            if (q < 0 || q > 2 * c) rep.fail(at + ": degree outside [0, " + std::to_string(2 * c) + "]");
            if (static_cast<int>(b.types.size()) != b.dim) {
                rep.fail(at + ": " + std::to_string(b.types.size()) + " type tags for dimension " + std::to_string(b.dim));
                continue;
            }
            bool typesOk = true;
            for (auto [a, bb] : b.types)
                if (a + bb != q || a < 0 || bb < 0 || a > c || bb > c) typesOk = false;
            if (!typesOk) rep.fail(at + ": type tag not of weight q inside [0,c]^2");
            std::vector<int> p;
            try {
                p = partnerOf(b);
            } catch (const ContractError& e) {
                rep.fail(at + ": " + e.what());
                continue;
            }
            bool inv = static_cast<int>(p.size()) == b.dim;
            for (int i = 0; inv && i < b.dim; ++i)
                inv = p[i] >= 0 && p[i] < b.dim && p[p[i]] == i && b.types[p[i]] == swapped(b.types[i]);
            if (!inv) {
                rep.fail(at + ": partner is not a type-swapping involution");
                continue;
            }
            const DegreeBlock* dual = s.at(2 * c - q);
            int dd = dual ? dual->dim : 0;
            if (b.pairing.rows() != b.dim || b.pairing.cols() != dd) {
                rep.fail(at + ": pairing shape does not match the dual degree");
                continue;
            }
            if (b.dim != dd || rank(b.pairing) != b.dim) {
                rep.fail(at + ": pairing is degenerate");
                continue;
            }
            if (b.dim == 0) continue;
            if (dual->pairing.rows() == dd && dual->pairing.cols() == b.dim) {
                CMat sym = b.pairing.transpose();
                if (q % 2) sym = -sym;
                if (dual->pairing != sym) rep.fail(at + ": pairing is not graded symmetric");
            }
            bool orth = true;
            if (static_cast<int>(dual->types.size()) == dd)
                for (int i = 0; i < b.dim; ++i)
                    for (int j = 0; j < dd; ++j)
                        if (!b.pairing(i, j).isZero() &&
                            (b.types[i].first + dual->types[j].first != c || b.types[i].second + dual->types[j].second != c))
                            orth = false;
            if (!orth) rep.fail(at + ": pairing couples types that do not add up to (c,c)");
            try {
                if (conjMatrix(b).transpose() * b.pairing * conjMatrix(*dual) != b.pairing.conj())
                    rep.fail(at + ": pairing is not compatible with conjugation");
            } catch (const ContractError&) {
            }
        }
    }
    if (!rep.ok) return rep;

    auto checkMap = [&](const CMat& M, int sl, int sq, int tl, int tq, Bidegree shift, const std::string& name) {
        const DegreeBlock* s = data.block(sl, sq);
        const DegreeBlock* t = data.block(tl, tq);
        int sd = s ? s->dim : 0, td = t ? t->dim : 0;
        if (M.rows() != td || M.cols() != sd) {
            rep.fail(name + ": shape " + std::to_string(M.rows()) + "x" + std::to_string(M.cols()) + ", expected " +
                     std::to_string(td) + "x" + std::to_string(sd));
            return false;
        }
        if (sd == 0 || td == 0) return true;
        for (int i = 0; i < td; ++i)
            for (int j = 0; j < sd; ++j)
                if (!M(i, j).isZero() && (t->types[i].first != s->types[j].first + shift.first ||
                                          t->types[i].second != s->types[j].second + shift.second)) {
                    rep.fail(name + ": entry (" + std::to_string(i) + "," + std::to_string(j) + ") breaks the type shift");
                    return false;
                }
        if (conjMatrix(*t) * M.conj() != M * conjMatrix(*s)) {
            rep.fail(name + ": does not commute with conjugation");
            return false;
        }
        return true;
    };

    for (const auto& [key, M] : data.restriction) {
        auto [l, q] = key;
        checkMap(M, l, q, l + 1, q, {0, 0}, "restriction " + tag(l, q));
    }
    for (const auto& [key, M] : data.gysin) {
        auto [l, q] = key;
        if (!checkMap(M, l, q, l - 1, q + 2, {1, 1}, "gysin " + tag(l, q))) continue;
        int dual = 2 * data.cdim(l) - q;
        const DegreeBlock* s = data.block(l, q);
        const DegreeBlock* t = data.block(l - 1, q + 2);
        if (!s || !t || s->dim == 0 || t->dim == 0) continue;
        CMat lhs = M.transpose() * t->pairing;
        CMat rhs = s->pairing * restrictionMatrix(data, l - 1, dual);
        if (!sameUpToSign(lhs, rhs)) rep.fail("gysin " + tag(l, q) + ": not adjoint to restriction");
    }
    if (!rep.ok) return rep;
    // derived Gysin maps must also carry the types
    for (const auto& [l, s] : data.strata) {
        if (l < 2) continue;
        for (const auto& [q, b] : s.degrees) {
            if (data.gysin.count({l, q})) continue;
            try {
                checkMap(gysinMatrix(data, l, q), l, q, l - 1, q + 2, {1, 1}, "derived gysin " + tag(l, q));
            } catch (const ContractError& e) {
                rep.fail("derived gysin " + tag(l, q) + ": " + e.what());
            }
        }
    }
    if (!rep.ok) return rep;
    for (int d = 0; d <= 2 * data.m; ++d) {
        try {
            d1Maps(data, d);
        } catch (const ContractError& e) {
            rep.fail(e.what());
        }
    }
    return rep;
}

const E1Summand* E1Term::find(int k) const {
    for (const auto& s : summands)
        if (s.k == k) return &s;
    return nullptr;
}

std::vector<Bidegree> E1Term::types(const DegenerationData& data) const {
    std::vector<Bidegree> out;
    for (const auto& s : summands)
        for (auto [a, b] : data.block(s.depth, s.q)->types) out.push_back({a + s.twist, b + s.twist});
    return out;
}

CMat E1Term::conjMatrix(const DegenerationData& data) const {
    CMat c(dim, dim);
    for (const auto& s : summands) c.setBlock(s.offset, s.offset, hodge::conjMatrix(*data.block(s.depth, s.q)));
    return c;
}

E1Term e1Term(const DegenerationData& data, int d, int r) {
    E1Term t;
    t.d = d;
    t.r = r;
    int top = data.maxDepth();
    for (int k = std::max(0, -r);; ++k) {
        int depth = 2 * k + r + 1, q = d - r - 2 * k;
        if (depth > top || q < 0) break;
        if (depth < 1) continue;
        int n = data.dim(depth, q);
        if (n == 0) continue;
        t.summands.push_back({k, depth, q, r + k, t.dim, n});
        t.dim += n;
    }
    return t;
}

E1Page e1Page(const DegenerationData& data, int d) {
    E1Page page;
    page.d = d;
    int L = data.maxDepth();
    for (int r = 1 - L; r <= L - 1; ++r) {
        E1Term t = e1Term(data, d, r);
        if (t.dim == 0) continue;
        page.rMin = page.terms.empty() ? r : std::min(page.rMin, r);
        page.rMax = page.terms.empty() ? r : std::max(page.rMax, r);
        page.terms[r] = t;
    }
    return page;
}

CMat d1Matrix(const DegenerationData& data, int d, int r) {
    E1Term src = e1Term(data, d, r), tgt = e1Term(data, d + 1, r - 1);
    CMat M(tgt.dim, src.dim);
    for (const auto& s : src.summands) {
        if (const E1Summand* t = tgt.find(s.k)) M.setBlock(t->offset, s.offset, -gysinMatrix(data, s.depth, s.q));
        if (const E1Summand* t = tgt.find(s.k + 1)) M.setBlock(t->offset, s.offset, restrictionMatrix(data, s.depth, s.q));
    }
    return M;
}

std::vector<D1Block> d1Maps(const DegenerationData& data, int d) {
    std::vector<D1Block> out;
    int L = std::max(1, data.maxDepth());
    for (int r = 1 - L; r <= L; ++r) {
        CMat first = d1Matrix(data, d, r);
        if (first.rows() && first.cols()) {
            CMat second = d1Matrix(data, d + 1, r - 1);
            if (second.rows() && !(second * first).isZero())
                throw ContractError("d1 o d1 != 0 from E1^{" + std::to_string(-r) + "," + std::to_string(d + r) + "} to E1^{" +
                                    std::to_string(-r + 2) + "," + std::to_string(d + r) + "}");
        }
        out.push_back({r, first});
    }
    return out;
}

CMat shiftMatrix(const DegenerationData& data, int d, int r, int s) {
    E1Term src = e1Term(data, d, r), tgt = e1Term(data, d, r - 2 * s);
    CMat M(tgt.dim, src.dim);
    for (const auto& a : src.summands) {
        const E1Summand* b = tgt.find(a.k + s);
        if (!b) continue;
        if (b->depth != a.depth || b->q != a.q) throw std::logic_error("shiftMatrix: summands do not line up");
        M.setBlock(b->offset, a.offset, CMat::identity(a.dim));
    }
    return M;
}

E2Term e2Term(const DegenerationData& data, int d, int r) {
    E2Term out;
    out.e1 = e1Term(data, d, r);
    int n = out.e1.dim;
    std::vector<Bidegree> types = out.e1.types(data);
    CMat C = out.e1.conjMatrix(data);
    CMat dout = d1Matrix(data, d, r);
    CMat din = d < 1 ? CMat(n, 0) : d1Matrix(data, d - 1, r + 1);
    std::vector<Bidegree> inTypes = d < 1 ? std::vector<Bidegree>{} : e1Term(data, d - 1, r + 1).types(data);
    std::vector<Bidegree> outTypes = e1Term(data, d + 1, r - 1).types(data);
    auto src = byType(types), tin = byType(inTypes), tout = byType(outTypes);

    std::map<Bidegree, CMat> cyc, bnd;
    std::map<Bidegree, CMat> reps;
    CMat allZ(n, 0), allB(n, 0);
    for (const auto& [t, idx] : src) {
        std::vector<int> rows = tout.count(t) ? tout[t] : std::vector<int>{};
        CMat Z = embed(kernel(sub(dout, rows, idx)).basis(), idx, n);
        CMat B = tin.count(t) ? din.cols(tin[t]) : CMat(n, 0);
        cyc[t] = Z;
        bnd[t] = B;
        allZ = hstack(allZ, Z);
        allB = hstack(allB, B);
    }
    for (const auto& [t, idx] : src) {
        if (t.first < t.second) continue;
        Subspace B = Subspace::span(bnd[t]);
        if (t.first > t.second) {
            CMat u = complementColumns(B, cyc[t]);
            reps[t] = u;
            reps[swapped(t)] = C * u.conj();
        } else {
            const CMat& Z = cyc[t];
            CMat cand(n, 0);
            CMat Zc = C * Z.conj();
            for (int j = 0; j < Z.cols(); ++j) {
                CMat re = (Z.col(j) + Zc.col(j)) * Gauss(frac(1, 2));
                CMat im = (Z.col(j) - Zc.col(j)) * Gauss(Rat(0), frac(-1, 2));
                cand = hstack(cand, hstack(re, im));
            }
            reps[t] = complementColumns(B, cand);
        }
    }
    out.piece.weight = d + r;
    out.piece.lower = Subspace::span(allB);
    out.piece.upper = Subspace::span(allZ);
    out.piece.reps = CMat(n, 0);
    CMat real(n, 0);
    for (const auto& [t, u] : reps) {
        out.piece.reps = hstack(out.piece.reps, u);
        for (int j = 0; j < u.cols(); ++j) out.types.push_back(t);
        if (t.first == t.second) real = hstack(real, u);
        else if (t.first > t.second) {
            CMat uc = C * u.conj();
            real = hstack(real, (u + uc) * Gauss(frac(1, 2)));
            real = hstack(real, (u - uc) * Gauss(Rat(0), frac(-1, 2)));
        }
    }
    out.realPiece = out.piece;
    out.realPiece.reps = real;
    if (out.piece.upper.dim() - out.piece.lower.dim() != out.piece.dim() || real.cols() != out.piece.dim())
        throw std::logic_error("e2Term: inconsistent subquotient at r=" + std::to_string(r));
    return out;
}

int E2Page::dim(int r) const {
    auto it = terms.find(r);
    return it == terms.end() ? 0 : it->second.dim();
}

E2Page e2Page(const DegenerationData& data, int d) {
    E2Page page;
    page.d = d;
    int L = std::max(1, data.maxDepth());
    for (int r = 1 - L; r <= L - 1; ++r) page.terms[r] = e2Term(data, d, r);
    return page;
}

CriterionReport weightCriterion(const DegenerationData& data, int d) {
    CriterionReport rep;
    rep.d = d;
    E2Page page = e2Page(data, d);
    int L = std::max(1, data.maxDepth());
    for (int r = 1; r <= L - 1; ++r) {
        const E2Term &top = page.terms.at(r), &bot = page.terms.at(-r);
        CriterionStep st;
        st.r = r;
        st.dimTop = top.dim();
        st.dimBottom = bot.dim();
        if (st.dimTop > 0 && st.dimBottom > 0) st.rank = rank(inducedMap(shiftMatrix(data, d, r, r), top.piece, bot.piece));
        st.ok = st.dimTop == st.dimBottom && st.rank == st.dimTop;
        if (!st.ok) rep.ok = false;
        rep.steps.push_back(st);
    }
    return rep;
}

CMat psiForm(const DegenerationData& data, int r) {
    int m = data.m;
    E1Term a = e1Term(data, m, r), b = e1Term(data, m, -r);
    CMat M(a.dim, b.dim);
    Gauss eps(epsilon(r - m));
    for (const auto& s : a.summands) {
        const E1Summand* t = b.find(s.k + r);
        if (!t) continue;
        if (t->depth != s.depth || t->q != s.q) throw std::logic_error("psiForm: summands do not line up");
        M.setBlock(s.offset, t->offset, eps * data.block(s.depth, s.q)->pairing);
    }
    return M;
}

MHSData extractMHS(const DegenerationData& data, int d) {
    E2Page page = e2Page(data, d);
    std::map<int, int> off;
    int n = 0;
    for (const auto& [r, t] : page.terms) {
        off[r] = n;
        n += t.dim();
    }
    MHSData out;
    out.dim = n;
    out.d = d;
    out.W = IncreasingFiltration(n);
    out.F = DecreasingFiltration(n);
    if (n == 0) {
        out.W.set(d, Subspace::full(0));
        out.F.set(0, Subspace::full(0));
    }
    CMat typed(n, 0);
    std::vector<int> level;
    for (const auto& [r, t] : page.terms) {
        if (t.dim() == 0) continue;
        out.W.set(d + r, Subspace::span(CMat::identity(n).block(0, n, 0, off[r] + t.dim())));
        CMat c = t.realPiece.project(t.piece.reps);
        CMat full(n, c.cols());
        full.setBlock(off[r], 0, c);
        typed = hstack(typed, full);
        for (auto ty : t.types) level.push_back(ty.first);
    }
    if (n > 0) {
        int lo = *std::min_element(level.begin(), level.end()), hi = *std::max_element(level.begin(), level.end());
        for (int p = lo; p <= hi; ++p) {
            std::vector<int> pick;
            for (size_t j = 0; j < level.size(); ++j)
                if (level[j] >= p) pick.push_back(static_cast<int>(j));
            out.F.set(p, Subspace::span(typed.cols(pick)));
        }
    }
    CMat N(n, n);
    for (const auto& [r, t] : page.terms) {
        if (t.dim() == 0) continue;
        auto it = page.terms.find(r - 2);
        CMat img = shiftMatrix(data, d, r, 1) * t.realPiece.reps;
        if (it == page.terms.end() || it->second.dim() == 0) {
            if (it != page.terms.end() && !it->second.piece.lower.contains(img))
                throw std::logic_error("extractMHS: shift leaves the cycles");
            continue;
        }
        N.setBlock(off[r - 2], off[r], -inducedMap(shiftMatrix(data, d, r, 1), t.realPiece, it->second.realPiece));
    }
    if (!isRational(N)) throw ContractError("extractMHS: monodromy is not real; conjugation data inconsistent");
    out.N = N;
    if (d == data.m) {
        CMat S(n, n);
        Gauss sign(data.m % 2 ? -1 : 1);
        for (const auto& [r, t] : page.terms) {
            auto it = page.terms.find(-r);
            if (t.dim() == 0 || it == page.terms.end() || it->second.dim() == 0) continue;
            CMat blk = sign * (t.realPiece.reps.transpose() * psiForm(data, r) * it->second.realPiece.reps);
            S.setBlock(off[r], off[-r], blk);
        }
        if (!isRational(S)) throw ContractError("extractMHS: polarization is not real; conjugation data inconsistent");
        out.S = S;
    }
    return out;
}

SignatureTable e2SignatureTable(const DegenerationData& data) {
    int m = data.m;
    CriterionReport crit = weightCriterion(data, m);
    if (!crit.ok) throw ContractError("e2SignatureTable: the weight criterion fails in degree m");
    E2Page page = e2Page(data, m);
    SignatureTable table;
    table.d = m;
    for (const auto& [r, t] : page.terms) {
        if (t.dim() == 0) continue;
        auto groups = byType(t.types);
        CMat prim;
        CMat kill; // shift^{r+1} in E2 coordinates
        if (r >= 0) {
            auto below = page.terms.find(-r - 2);
            if (below != page.terms.end() && below->second.dim() > 0)
                kill = inducedMap(shiftMatrix(data, m, r, r + 1), t.piece, below->second.piece);
            else
                kill = CMat(0, t.dim());
        }
        for (const auto& [ty, idx] : groups) {
            SignatureEntry e;
            e.dimI = static_cast<int>(idx.size());
            if (r >= 0) {
                CMat coeff = embed(kernel(kill.cols(idx)).basis(), idx, t.dim());
                CMat U = t.piece.reps * coeff;
                e.prim = U.cols();
                if (e.prim > 0) {
                    const E2Term& dual = page.terms.at(-r);
                    CMat Y = shiftMatrix(data, m, r, r) * t.e1.conjMatrix(data) * U.conj();
                    if (!dual.piece.upper.contains(Y)) throw std::logic_error("e2SignatureTable: shifted class is not a cycle");
                    Gauss f = ipow(ty.first - ty.second) * Gauss((m + r) % 2 ? -1 : 1);
                    CMat G = f * (U.transpose() * psiForm(data, r) * Y);
                    Signature s = hermitianSignature(G);
                    if (s.nulls) throw ContractError("e2SignatureTable: degenerate primitive form at (" + std::to_string(ty.first) + "," +
                                                     std::to_string(ty.second) + ")");
                    e.plus = s.positives;
                    e.minus = s.negatives;
                }
            }
            table.entries[ty] = e;
        }
    }
    return table;
}

IndexReport nearbyHodgeIndex(const DegenerationData& data, int workers) {
    IndexReport rep;
    rep.m = data.m;
    int count = 2 * data.m + 1;
    rep.degrees.resize(count);
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failureLock;
    auto work = [&] {
        for (int d = next++; d < count; d = next++) {
            try {
                DegreeReport dr;
                dr.d = d;
                dr.criterion = weightCriterion(data, d);
                E2Page page = e2Page(data, d);
                for (const auto& [r, t] : page.terms) {
                    if (t.dim() == 0) continue;
                    dr.gr[d + r] = t.dim();
                    for (auto ty : t.types) dr.hodge[{ty.first, d - ty.first}] += 1;
                }
                rep.degrees[d] = std::move(dr);
            } catch (...) {
                std::lock_guard<std::mutex> g(failureLock);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    int n = std::max(1, std::min(workers, count));
    std::vector<std::thread> pool;
    for (int i = 1; i < n; ++i) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    for (const DegreeReport& dr : rep.degrees)
        if (!dr.criterion.ok) rep.ddbar = false;
    if (!rep.degrees.empty() && rep.degrees[data.m].criterion.ok) {
        rep.table = e2SignatureTable(data);
        rep.hasSignature = true;
        for (int p = 0; p <= data.m; ++p) rep.signature[p] = nearbyIndexFormula(rep.table, p);
    } else {
        rep.note = "weight criterion fails in degree m; no signature table";
    }
    return rep;
}

} // namespace hodge
