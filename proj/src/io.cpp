#include "hodge/io.hpp"

#include <fstream>

namespace hodge {

namespace {

const Json& field(const Json& j, const std::string& key, const std::string& path) {
    if (!j.is_object()) throw InputError(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw InputError(path + "/" + key, "missing field");
    return *it;
}

int intField(const Json& j, const std::string& key, const std::string& path) {
    const Json& v = field(j, key, path);
    if (!v.is_number_integer()) throw InputError(path + "/" + key, "expected an integer");
    return v.get<int>();
}

const Json& arrayField(const Json& j, const std::string& key, const std::string& path) {
    const Json& v = field(j, key, path);
    if (!v.is_array()) throw InputError(path + "/" + key, "expected an array");
    return v;
}

Subspace spanFromJson(const Json& j, int n, const std::string& path) {
    if (!j.is_array()) throw InputError(path, "expected a list of vectors");
    CMat cols(n, static_cast<int>(j.size()));
    for (size_t c = 0; c < j.size(); ++c) {
        std::string p = path + "/" + std::to_string(c);
        if (!j[c].is_array() || static_cast<int>(j[c].size()) != n) throw InputError(p, "expected a vector of length " + std::to_string(n));
        for (int r = 0; r < n; ++r) cols(r, static_cast<int>(c)) = scalarFromJson(j[c][r], p + "/" + std::to_string(r));
    }
    return Subspace::span(cols);
}

Json spanToJson(const Subspace& s) {
    Json out = Json::array();
    const CMat& b = s.basis();
    for (int c = 0; c < b.cols(); ++c) {
        Json v = Json::array();
        for (int r = 0; r < b.rows(); ++r) v.push_back(scalarToJson(b(r, c)));
        out.push_back(v);
    }
    return out;
}

} // namespace

Json scalarToJson(const Gauss& g) {
    if (g.isReal() && g.re.get_den() == 1 && g.re.get_num().fits_slong_p()) return Json(g.re.get_num().get_si());
    return Json(str(g));
}

Gauss scalarFromJson(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return Gauss(Rat(j.get<long>()));
    if (j.is_string()) {
        try {
            return parseGauss(j.get<std::string>());
        } catch (const std::exception& e) {
            throw InputError(path, std::string("bad scalar: ") + e.what());
        }
    }
    throw InputError(path, "expected an integer or a string scalar (floats are not exact)");
}

Json matrixToJson(const CMat& m) {
    Json out = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(scalarToJson(m(r, c)));
        out.push_back(row);
    }
    return out;
}

CMat matrixFromJson(const Json& j, int rows, int cols, const std::string& path) {
    if (!j.is_array()) throw InputError(path, "expected a list of rows");
    if (static_cast<int>(j.size()) != rows)
        throw InputError(path, "expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
    CMat m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        std::string p = path + "/" + std::to_string(r);
        if (!j[r].is_array() || static_cast<int>(j[r].size()) != cols)
            throw InputError(p, "expected a row of length " + std::to_string(cols));
        for (int c = 0; c < cols; ++c) m(r, c) = scalarFromJson(j[r][c], p + "/" + std::to_string(c));
    }
    return m;
}

MHSData mhsFromJson(const Json& j) {
    MHSData m;
    m.d = intField(j, "d", "");
    m.dim = intField(j, "dim", "");
    if (m.dim < 0) throw InputError("/dim", "negative dimension");
    m.W = IncreasingFiltration(m.dim);
    m.F = DecreasingFiltration(m.dim);
    const Json& W = arrayField(j, "W", "");
    for (size_t i = 0; i < W.size(); ++i) {
        std::string p = "/W/" + std::to_string(i);
        m.W.set(intField(W[i], "k", p), spanFromJson(field(W[i], "span", p), m.dim, p + "/span"));
    }
    const Json& F = arrayField(j, "F", "");
    for (size_t i = 0; i < F.size(); ++i) {
        std::string p = "/F/" + std::to_string(i);
        m.F.set(intField(F[i], "p", p), spanFromJson(field(F[i], "span", p), m.dim, p + "/span"));
    }
    if (j.contains("N")) m.N = matrixFromJson(j["N"], m.dim, m.dim, "/N");
    if (j.contains("S")) m.S = matrixFromJson(j["S"], m.dim, m.dim, "/S");
    return m;
}

Json mhsToJson(const MHSData& m) {
    Json j;
    j["d"] = m.d;
    j["dim"] = m.dim;
    j["W"] = Json::array();
    for (const auto& [k, s] : m.W.steps()) j["W"].push_back({{"k", k}, {"span", spanToJson(s)}});
    j["F"] = Json::array();
    for (const auto& [p, s] : m.F.steps()) j["F"].push_back({{"p", p}, {"span", spanToJson(s)}});
    if (m.N) j["N"] = matrixToJson(*m.N);
    if (m.S) j["S"] = matrixToJson(*m.S);
    return j;
}

DegenerationData degenerationFromJson(const Json& j) {
    DegenerationData d;
    d.m = intField(j, "m", "");
    if (d.m < 1) throw InputError("/m", "fiber dimension must be positive");
    const Json& strata = arrayField(j, "strata", "");
    // first pass: dimensions, so pairings can be sized against the dual degree
    for (size_t s = 0; s < strata.size(); ++s) {
        std::string p = "/strata/" + std::to_string(s);
        int depth = intField(strata[s], "depth", p);
        if (depth < 1) throw InputError(p + "/depth", "depth must be at least 1");
        if (d.strata.count(depth)) throw InputError(p + "/depth", "duplicate depth");
        StratumCohomology& c = d.strata[depth];
        c.depth = depth;
        const Json& coh = arrayField(strata[s], "cohomology", p);
        for (size_t b = 0; b < coh.size(); ++b) {
            std::string pb = p + "/cohomology/" + std::to_string(b);
            DegreeBlock blk;
            blk.q = intField(coh[b], "q", pb);
            blk.dim = intField(coh[b], "dim", pb);
            if (blk.q < 0 || blk.q > 2 * d.cdim(depth)) throw InputError(pb + "/q", "degree out of range");
            if (blk.dim < 0) throw InputError(pb + "/dim", "negative dimension");
            if (c.degrees.count(blk.q)) throw InputError(pb + "/q", "duplicate degree");
            const Json& types = arrayField(coh[b], "types", pb);
            if (static_cast<int>(types.size()) != blk.dim) throw InputError(pb + "/types", "expected one type per basis vector");
            for (size_t t = 0; t < types.size(); ++t) {
                const Json& ty = types[t];
                if (!ty.is_array() || ty.size() != 2 || !ty[0].is_number_integer() || !ty[1].is_number_integer())
                    throw InputError(pb + "/types/" + std::to_string(t), "expected [p, q]");
                blk.types.push_back({ty[0].get<int>(), ty[1].get<int>()});
            }
            if (coh[b].contains("partner")) {
                const Json& part = coh[b]["partner"];
                if (!part.is_array() || static_cast<int>(part.size()) != blk.dim)
                    throw InputError(pb + "/partner", "expected one index per basis vector");
                for (size_t t = 0; t < part.size(); ++t) {
                    if (!part[t].is_number_integer()) throw InputError(pb + "/partner/" + std::to_string(t), "expected an integer");
                    blk.partner.push_back(part[t].get<int>());
                }
            }
            c.degrees[blk.q] = blk;
        }
    }
    for (size_t s = 0; s < strata.size(); ++s) {
        std::string p = "/strata/" + std::to_string(s);
        int depth = strata[s]["depth"].get<int>();
        StratumCohomology& c = d.strata[depth];
        const Json& coh = strata[s]["cohomology"];
        for (size_t b = 0; b < coh.size(); ++b) {
            std::string pb = p + "/cohomology/" + std::to_string(b);
            DegreeBlock& blk = c.degrees[coh[b]["q"].get<int>()];
            int dual = c.dim(2 * d.cdim(depth) - blk.q);
            blk.pairing = matrixFromJson(field(coh[b], "pairing", pb), blk.dim, dual, pb + "/pairing");
        }
    }
    auto maps = [&](const char* key, int degShift, int depthShift, std::map<std::pair<int, int>, CMat>& out) {
        if (!j.contains(key)) return;
        const Json& arr = arrayField(j, key, "");
        for (size_t i = 0; i < arr.size(); ++i) {
            std::string p = std::string("/") + key + "/" + std::to_string(i);
            int depth = intField(arr[i], "depth", p), q = intField(arr[i], "q", p);
            int rows = d.dim(depth + depthShift, q + degShift), cols = d.dim(depth, q);
            out[{depth, q}] = matrixFromJson(field(arr[i], "matrix", p), rows, cols, p + "/matrix");
        }
    };
    maps("gysin", 2, -1, d.gysin);
    maps("restriction", 0, 1, d.restriction);
    return d;
}

Json degenerationToJson(const DegenerationData& d) {
    Json j;
    j["m"] = d.m;
    j["strata"] = Json::array();
    for (const auto& [depth, c] : d.strata) {
        Json coh = Json::array();
        for (const auto& [q, b] : c.degrees) {
            Json types = Json::array();
            for (auto [p, qq] : b.types) types.push_back({p, qq});
            Json blk{{"q", q}, {"dim", b.dim}, {"types", types}, {"pairing", matrixToJson(b.pairing)}};
            if (!b.partner.empty()) blk["partner"] = b.partner;
            coh.push_back(blk);
        }
        j["strata"].push_back({{"depth", depth}, {"cohomology", coh}});
    }
    j["gysin"] = Json::array();
    for (const auto& [key, m] : d.gysin) j["gysin"].push_back({{"depth", key.first}, {"q", key.second}, {"matrix", matrixToJson(m)}});
    j["restriction"] = Json::array();
    for (const auto& [key, m] : d.restriction)
        j["restriction"].push_back({{"depth", key.first}, {"q", key.second}, {"matrix", matrixToJson(m)}});
    return j;
}

Json toJson(const Signature& s) { return {{"plus", s.positives}, {"minus", s.negatives}, {"null", s.nulls}}; }

Json toJson(const SignatureTable& t) {
    Json rows = Json::array();
    for (const auto& [pq, e] : t.entries)
        rows.push_back({{"p", pq.first}, {"q", pq.second}, {"plus", e.plus}, {"minus", e.minus}, {"prim", e.prim}, {"dimI", e.dimI}});
    return {{"d", t.d}, {"entries", rows}};
}

Json toJson(const IndexTable& t) {
    Json rows = Json::array();
    for (const auto& [k, s] : t) rows.push_back({{"k", k}, {"plus", s.first}, {"minus", s.second}});
    return rows;
}

Json toJson(const IndexReport& r) {
    Json j;
    j["m"] = r.m;
    j["ddbar"] = r.ddbar;
    j["degrees"] = Json::array();
    for (const DegreeReport& d : r.degrees) {
        Json steps = Json::array();
        for (const CriterionStep& s : d.criterion.steps)
            steps.push_back({{"r", s.r}, {"dimTop", s.dimTop}, {"dimBottom", s.dimBottom}, {"rank", s.rank}, {"ok", s.ok}});
        Json gr = Json::array();
        for (auto [w, n] : d.gr) gr.push_back({{"weight", w}, {"dim", n}});
        Json hodge = Json::array();
        for (auto [pq, n] : d.hodge) hodge.push_back({{"p", pq.first}, {"q", pq.second}, {"h", n}});
        j["degrees"].push_back({{"d", d.d}, {"criterion", d.criterion.ok}, {"steps", steps}, {"gr", gr}, {"hodge", hodge}});
    }
    if (r.hasSignature) {
        j["table"] = toJson(r.table);
        Json sig = Json::array();
        for (auto [p, s] : r.signature) sig.push_back({{"p", p}, {"q", r.m - p}, {"plus", s.first}, {"minus", s.second}});
        j["signature"] = sig;
    }
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

Json toJson(const MainTheoremReport& r) {
    Json j;
    j["ok"] = r.ok;
    j["polarized"] = r.polarized;
    j["table"] = toJson(r.table);
    Json levels = Json::array();
    for (const OppLevel& l : r.asymptotic.levels)
        levels.push_back({{"k", l.k}, {"possible", l.possible}, {"degree", l.degree}, {"expected", l.expected}, {"ok", l.ok}});
    j["opposedness"] = levels;
    Json minors = Json::array();
    for (const MinorStep& m : r.asymptotic.minors)
        minors.push_back({{"index", m.index}, {"p", m.p}, {"q", m.q}, {"r", m.r}, {"ratioDegree", m.ratioDegree}, {"ratioSign", m.ratioSign},
                          {"predictedOrder", m.predictedOrder}, {"predictedSign", m.predictedSign}});
    j["minors"] = minors;
    Json lv = Json::array();
    for (const LevelCheck& l : r.levels)
        lv.push_back({{"k", l.k}, {"evaluated", toJson(l.evaluated.sig)}, {"t", str(l.evaluated.t)}, {"asymptotic", toJson(l.asymptotic)},
                      {"predictedIndex", l.predictedIndex}});
    j["levels"] = lv;
    Json comps = Json::array();
    for (const HodgeComponentCheck& c : r.components)
        comps.push_back({{"p", c.p}, {"orbit", {c.orbit.first, c.orbit.second}}, {"formula", {c.formula.first, c.formula.second}}});
    j["components"] = comps;
    j["failures"] = r.failures;
    return j;
}

Json readJsonFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("", "cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InputError("", std::string("invalid JSON: ") + e.what());
    }
}

} // namespace hodge
