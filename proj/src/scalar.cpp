#include "hodge/scalar.hpp"

#include <algorithm>
#include <cctype>

namespace hodge {

int sgn(const Rat& x) { return ::sgn(x); }

Gauss& Gauss::operator+=(const Gauss& o) {
    re += o.re;
    im += o.im;
    return *this;
}

Gauss& Gauss::operator-=(const Gauss& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

Gauss& Gauss::operator*=(const Gauss& o) {
    // real factors are the common case
    if (o.isReal()) {
        re *= o.re;
        im *= o.re;
        return *this;
    }
    if (isReal()) {
        im = re * o.im;
        re *= o.re;
        return *this;
    }
    Rat r = re * o.re - im * o.im;
    Rat i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

Gauss& Gauss::operator/=(const Gauss& o) {
    if (o.isReal()) {
        if (sgn(o.re) == 0) throw ContractError("division by zero");
        re /= o.re;
        im /= o.re;
        return *this;
    }
    Rat n = o.norm();
    Rat r = (re * o.re + im * o.im) / n;
    Rat i = (im * o.re - re * o.im) / n;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

Gauss operator+(Gauss a, const Gauss& b) { return a += b; }
Gauss operator-(Gauss a, const Gauss& b) { return a -= b; }
Gauss operator*(Gauss a, const Gauss& b) { return a *= b; }
Gauss operator/(Gauss a, const Gauss& b) { return a /= b; }
Gauss operator-(const Gauss& a) { return {-a.re, -a.im}; }
bool operator==(const Gauss& a, const Gauss& b) { return a.re == b.re && a.im == b.im; }

Gauss ipow(long k) {
    switch (((k % 4) + 4) % 4) {
    case 0: return Gauss(1);
    case 1: return Gauss(0, 1);
    case 2: return Gauss(-1);
    default: return Gauss(0, -1);
    }
}

Gauss pow(const Gauss& g, unsigned k) {
    Gauss r(1), b = g;
    while (k) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

std::string str(const Rat& r) { return r.get_str(); }

std::string str(const Gauss& g) {
    if (g.isReal()) return str(g.re);
    Rat a = abs(g.im);
    std::string im = str(a) + "*i";
    if (sgn(g.re) == 0) return sgn(g.im) < 0 ? "-" + im : im;
    return str(g.re) + (sgn(g.im) < 0 ? "-" : "+") + im;
}

static std::string strip(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

Rat parseRat(const std::string& raw) {
    std::string s = strip(raw);
    if (s.empty()) throw std::invalid_argument("empty rational");
    if (s[0] == '+') s = s.substr(1);
    for (size_t k = 0; k < s.size(); ++k) {
        char c = s[k];
        bool ok = std::isdigit(static_cast<unsigned char>(c)) || c == '/' || (c == '-' && k == 0);
        if (!ok) throw std::invalid_argument("bad rational '" + raw + "'");
    }
    Rat r;
    if (r.set_str(s, 10) != 0 || r.get_den() == 0) throw std::invalid_argument("bad rational '" + raw + "'");
    r.canonicalize();
    return r;
}

Gauss parseGauss(const std::string& raw) {
    std::string s = strip(raw);
    if (s.empty()) throw std::invalid_argument("empty scalar");
    if (s.back() != 'i') return Gauss(parseRat(s));
    std::string body = s.substr(0, s.size() - 1);
    if (!body.empty() && body.back() == '*') body.pop_back();
    // split at the last sign that is not leading
    size_t cut = std::string::npos;
    for (size_t k = body.size(); k-- > 1;)
        if (body[k] == '+' || body[k] == '-') {
            cut = k;
            break;
        }
    std::string rePart, imPart;
    if (cut == std::string::npos) {
        imPart = body;
    } else {
        rePart = body.substr(0, cut);
        imPart = body.substr(cut);
    }
    Rat im;
    if (imPart.empty() || imPart == "+") im = 1;
    else if (imPart == "-") im = -1;
    else im = parseRat(imPart);
    Rat re = rePart.empty() ? Rat(0) : parseRat(rePart);
    return {re, im};
}

Poly::Poly(const Gauss& c) {
    if (!c.isZero()) c_.push_back(c);
}

Poly::Poly(std::vector<Gauss> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::t() { return Poly(std::vector<Gauss>{Gauss(0), Gauss(1)}); }

Poly Poly::z(const Rat& a) { return Poly(std::vector<Gauss>{Gauss(a), Gauss(0, 1)}); }

void Poly::trim() {
    while (!c_.empty() && c_.back().isZero()) c_.pop_back();
}

const Gauss& Poly::lead() const {
    if (c_.empty()) throw ContractError("leading coefficient of zero polynomial");
    return c_.back();
}

Poly Poly::conj() const {
    Poly r = *this;
    for (auto& c : r.c_) c = c.conj();
    return r;
}

Gauss Poly::eval(const Rat& t) const {
    Gauss acc;
    for (size_t k = c_.size(); k-- > 0;) {
        acc *= Gauss(t);
        acc += c_[k];
    }
    return acc;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& o) {
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<Gauss> r(c_.size() + o.c_.size() - 1);
    for (size_t a = 0; a < c_.size(); ++a) {
        if (c_[a].isZero()) continue;
        for (size_t b = 0; b < o.c_.size(); ++b) r[a + b] += c_[a] * o.c_[b];
    }
    c_ = std::move(r);
    trim();
    return *this;
}

Poly operator+(Poly a, const Poly& b) { return a += b; }
Poly operator-(Poly a, const Poly& b) { return a -= b; }
Poly operator*(Poly a, const Poly& b) { return a *= b; }
Poly operator-(const Poly& a) { return Poly() - a; }
bool operator==(const Poly& a, const Poly& b) { return a.coeffs() == b.coeffs(); }

Poly pow(const Poly& p, unsigned k) {
    Poly r(1), b = p;
    while (k) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

Poly divExact(const Poly& a, const Poly& b) {
    if (b.isZero()) throw ContractError("polynomial division by zero");
    if (a.isZero()) return Poly();
    int da = a.degree(), db = b.degree();
    if (da < db) throw ContractError("inexact polynomial division");
    std::vector<Gauss> rem = a.coeffs();
    std::vector<Gauss> q(da - db + 1);
    Gauss lb = b.lead();
    for (int k = da - db; k >= 0; --k) {
        Gauss c = rem[k + db] / lb;
        q[k] = c;
        if (c.isZero()) continue;
        for (int j = 0; j <= db; ++j) rem[k + j] -= c * b.coeffs()[j];
    }
    for (const auto& r : rem)
        if (!r.isZero()) throw ContractError("inexact polynomial division");
    return Poly(std::move(q));
}

std::string str(const Poly& p) {
    if (p.isZero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        const Gauss& c = p.coeffs()[k];
        if (c.isZero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + str(c) + ")";
        if (k >= 1) out += "*t";
        if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
}

LeadingSign leadingSign(const Poly& p) {
    if (p.isZero()) throw ContractError("leadingSign of zero polynomial");
    const Gauss& c = p.lead();
    if (!c.isReal()) throw ContractError("leadingSign: non-real leading coefficient");
    return {p.degree(), sgn(c.re)};
}

int epsilon(long a) {
    // a(a-1)/2 mod 2 depends on a mod 4
    long r = ((a % 4) + 4) % 4;
    return (r == 0 || r == 1) ? 1 : -1;
}

} // namespace hodge
