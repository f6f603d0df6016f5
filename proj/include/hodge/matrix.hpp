#ifndef HODGE_MATRIX_HPP
#define HODGE_MATRIX_HPP

#include "hodge/scalar.hpp"

#include <vector>

namespace hodge {

template <class T>
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw ContractError("negative matrix shape");
    }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }
    bool square() const { return r_ == c_; }

    T& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
    const T& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

    Mat transpose() const {
        Mat t(c_, r_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Mat conj() const {
        Mat t = *this;
        for (auto& x : t.a_) x = conjOf(x);
        return t;
    }

    Mat adjoint() const { return transpose().conj(); }

    Mat col(int j) const { return block(0, r_, j, 1); }

    Mat block(int r0, int nr, int c0, int nc) const {
        Mat b(nr, nc);
        for (int i = 0; i < nr; ++i)
            for (int j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
        return b;
    }

    void setBlock(int r0, int c0, const Mat& b) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
    }

    Mat cols(const std::vector<int>& idx) const {
        Mat b(r_, static_cast<int>(idx.size()));
        for (int i = 0; i < r_; ++i)
            for (size_t j = 0; j < idx.size(); ++j) b(i, static_cast<int>(j)) = (*this)(i, idx[j]);
        return b;
    }

    bool isZero() const {
        for (const auto& x : a_)
            if (!hodge::isZero(x)) return false;
        return true;
    }

    void swapRows(int i, int j) {
        if (i == j) return;
        for (int k = 0; k < c_; ++k) std::swap((*this)(i, k), (*this)(j, k));
    }

    void swapCols(int i, int j) {
        if (i == j) return;
        for (int k = 0; k < r_; ++k) std::swap((*this)(k, i), (*this)(k, j));
    }

    Mat& operator+=(const Mat& o) {
        checkSame(o);
        for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }
    Mat& operator-=(const Mat& o) {
        checkSame(o);
        for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
        return *this;
    }
    Mat& operator*=(const T& s) {
        for (auto& x : a_) x *= s;
        return *this;
    }

    friend Mat operator+(Mat a, const Mat& b) { return a += b; }
    friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
    friend Mat operator-(Mat a) {
        for (auto& x : a.a_) x = T() - x;
        return a;
    }
    friend Mat operator*(Mat a, const T& s) { return a *= s; }
    friend Mat operator*(const T& s, Mat a) { return a *= s; }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.c_ != b.r_) throw ContractError("matrix product shape mismatch");
        Mat p(a.r_, b.c_);
        for (int i = 0; i < a.r_; ++i)
            for (int k = 0; k < a.c_; ++k) {
                const T& x = a(i, k);
                if (hodge::isZero(x)) continue;
                for (int j = 0; j < b.c_; ++j) p(i, j) += x * b(k, j);
            }
        return p;
    }

    friend bool operator==(const Mat& a, const Mat& b) { return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_; }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

private:
    void checkSame(const Mat& o) const {
        if (r_ != o.r_ || c_ != o.c_) throw ContractError("matrix shape mismatch");
    }
    int r_ = 0, c_ = 0;
    std::vector<T> a_;
};

using CMat = Mat<Gauss>;
using PMat = Mat<Poly>;

template <class T>
Mat<T> hstack(const Mat<T>& a, const Mat<T>& b) {
    if (a.rows() != b.rows()) throw ContractError("hstack row mismatch");
    Mat<T> m(a.rows(), a.cols() + b.cols());
    m.setBlock(0, 0, a);
    m.setBlock(0, a.cols(), b);
    return m;
}

template <class T>
Mat<T> vstack(const Mat<T>& a, const Mat<T>& b) {
    if (a.cols() != b.cols()) throw ContractError("vstack column mismatch");
    Mat<T> m(a.rows() + b.rows(), a.cols());
    m.setBlock(0, 0, a);
    m.setBlock(a.rows(), 0, b);
    return m;
}

template <class T>
Mat<T> directSum(const Mat<T>& a, const Mat<T>& b) {
    Mat<T> m(a.rows() + b.rows(), a.cols() + b.cols());
    m.setBlock(0, 0, a);
    m.setBlock(a.rows(), a.cols(), b);
    return m;
}

template <class T>
Mat<T> matPow(const Mat<T>& m, int k) {
    Mat<T> r = Mat<T>::identity(m.rows());
    for (int i = 0; i < k; ++i) r = r * m;
    return r;
}

// Fraction-free (Bareiss) determinant with row pivoting.
template <class T>
T det(Mat<T> m) {
    if (!m.square()) throw ContractError("determinant of non-square matrix");
    int n = m.rows();
    if (n == 0) return T(1);
    bool neg = false;
    T prev(1);
    for (int k = 0; k < n - 1; ++k) {
        if (isZero(m(k, k))) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (!isZero(m(i, k))) {
                    p = i;
                    break;
                }
            if (p < 0) return T();
            m.swapRows(k, p);
            neg = !neg;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) m(i, j) = exactDiv(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
        prev = m(k, k);
    }
    T d = m(n - 1, n - 1);
    return neg ? T() - d : d;
}

// Leading principal minors D_1..D_n (Bareiss without pivoting; falls back to
// direct determinants once a minor vanishes).
template <class T>
std::vector<T> leadingPrincipalMinors(Mat<T> m) {
    if (!m.square()) throw ContractError("minors of non-square matrix");
    int n = m.rows();
    std::vector<T> out;
    const Mat<T> orig = m;
    T prev(1);
    for (int k = 0; k < n; ++k) {
        if (isZero(m(k, k))) {
            out.push_back(T());
            for (int s = k + 2; s <= n; ++s) out.push_back(det(orig.block(0, s, 0, s)));
            return out;
        }
        out.push_back(m(k, k));
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) m(i, j) = exactDiv(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
        prev = m(k, k);
    }
    return out;
}

inline Poly polyDet(const PMat& m) { return det(m); }

// Entrywise substitution t = t0.
CMat evalAt(const PMat& m, const Rat& t0);
PMat toPoly(const CMat& m);

struct RrefResult {
    CMat reduced;
    std::vector<int> pivots;
    int rank = 0;
};

RrefResult rref(const CMat& m);
int rank(const CMat& m);
CMat inverse(const CMat& m);
bool isHermitian(const CMat& h);
bool isRational(const CMat& m);

struct Signature {
    int positives = 0, negatives = 0, nulls = 0;
    friend bool operator==(const Signature& a, const Signature& b) {
        return a.positives == b.positives && a.negatives == b.negatives && a.nulls == b.nulls;
    }
};

struct HermitianDiagonalization {
    CMat P;                // P^* H P is diagonal
    std::vector<Rat> diag; // the real diagonal entries
    Signature sig;
};

HermitianDiagonalization diagonalizeHermitian(const CMat& h);
Signature hermitianSignature(const CMat& h);

} // namespace hodge

#endif
