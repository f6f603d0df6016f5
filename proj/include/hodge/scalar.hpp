#ifndef HODGE_SCALAR_HPP
#define HODGE_SCALAR_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace hodge {

using Rat = mpq_class;

// Raised when a documented precondition of an operation is violated.
struct ContractError : std::logic_error {
    using std::logic_error::logic_error;
};

int sgn(const Rat& x);

// n/d in lowest terms (mpq_class(n, d) alone does not canonicalize)
inline Rat frac(long n, long d) {
    Rat r(n, d);
    r.canonicalize();
    return r;
}

// a + b i with a, b rational
struct Gauss {
    Rat re, im;

    Gauss() = default;
    Gauss(const Rat& r) : re(r) {}
    Gauss(const Rat& r, const Rat& i) : re(r), im(i) {}
    Gauss(long r) : re(r) {}
    Gauss(long r, long i) : re(r), im(i) {}

    bool isZero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool isReal() const { return sgn(im) == 0; }
    Gauss conj() const { return {re, -im}; }
    Rat norm() const { return re * re + im * im; }

    Gauss& operator+=(const Gauss& o);
    Gauss& operator-=(const Gauss& o);
    Gauss& operator*=(const Gauss& o);
    Gauss& operator/=(const Gauss& o);
};

Gauss operator+(Gauss a, const Gauss& b);
Gauss operator-(Gauss a, const Gauss& b);
Gauss operator*(Gauss a, const Gauss& b);
Gauss operator/(Gauss a, const Gauss& b);
Gauss operator-(const Gauss& a);
bool operator==(const Gauss& a, const Gauss& b);
inline bool operator!=(const Gauss& a, const Gauss& b) { return !(a == b); }

inline Gauss I() { return Gauss(0, 1); }
// i^k for any integer k
Gauss ipow(long k);
Gauss pow(const Gauss& g, unsigned k);

std::string str(const Rat& r);
std::string str(const Gauss& g);
Rat parseRat(const std::string& s);
// accepts "p/q", "p/q+r/s*i", "r/s*i", "i", "-i"
Gauss parseGauss(const std::string& s);

// Polynomial in the real variable t with Gaussian coefficients, lowest degree first.
class Poly {
public:
    Poly() = default;
    Poly(const Gauss& c);
    Poly(long c) : Poly(Gauss(c)) {}
    explicit Poly(std::vector<Gauss> coeffs);

    static Poly t();          // the monomial t
    static Poly z(const Rat& a); // a + i t

    const std::vector<Gauss>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool isZero() const { return c_.empty(); }
    const Gauss& lead() const;
    Gauss coeff(int k) const { return k >= 0 && k < (int)c_.size() ? c_[k] : Gauss(); }
    Poly conj() const;
    Gauss eval(const Rat& t) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);

private:
    void trim();
    std::vector<Gauss> c_;
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator*(Poly a, const Poly& b);
Poly operator-(const Poly& a);
bool operator==(const Poly& a, const Poly& b);
inline bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
Poly pow(const Poly& p, unsigned k);
// Quotient of an exact division; throws ContractError if b does not divide a.
Poly divExact(const Poly& a, const Poly& b);
std::string str(const Poly& p);

// (degree, sign of leading coefficient) as t -> +infinity
struct LeadingSign {
    int degree;
    int sign;
};
LeadingSign leadingSign(const Poly& p);

// (-1)^{a(a-1)/2}
int epsilon(long a);

// scalar traits used by the matrix templates
inline bool isZero(const Gauss& g) { return g.isZero(); }
inline bool isZero(const Poly& p) { return p.isZero(); }
inline Gauss conjOf(const Gauss& g) { return g.conj(); }
inline Poly conjOf(const Poly& p) { return p.conj(); }
inline Gauss exactDiv(const Gauss& a, const Gauss& b) { return a / b; }
inline Poly exactDiv(const Poly& a, const Poly& b) { return divExact(a, b); }

} // namespace hodge

#endif
