#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "qaomoto/cyclo.hpp"
#include "qaomoto/rational.hpp"

namespace qaomoto {

// Prime field element. Every value carries its modulus; the matrices here
// are small enough that the per-element cost is irrelevant.
class Fp {
  public:
    Fp() : p_(0), v_(0) {}
    Fp(long p, const Int& v) : p_(p) {
        Int r = v % p;
        if (r < 0) r += p;
        v_ = r.get_si();
    }
    long modulus() const { return p_; }
    long value() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    Fp operator+(const Fp& o) const { return raw(p_, (v_ + o.v_) % p_); }
    Fp operator-(const Fp& o) const { return raw(p_, (v_ - o.v_ + p_) % p_); }
    Fp operator*(const Fp& o) const { return raw(p_, (v_ * o.v_) % p_); }
    Fp operator/(const Fp& o) const { return *this * o.inv(); }
    Fp inv() const {
        if (v_ == 0) throw input_error("division by zero");
        // Fermat: p is prime by construction.
        long r = 1, b = v_, e = p_ - 2;
        while (e) {
            if (e & 1) r = r * b % p_;
            b = b * b % p_;
            e >>= 1;
        }
        return raw(p_, r);
    }
    bool operator==(const Fp& o) const { return p_ == o.p_ && v_ == o.v_; }

  private:
    static Fp raw(long p, long v) {
        Fp x;
        x.p_ = p;
        x.v_ = v;
        return x;
    }
    long p_;
    long v_;
};

inline bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

template <class F>
struct Matrix {
    std::size_t rows = 0, cols = 0;
    std::vector<F> a;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, const F& init) : rows(r), cols(c), a(r * c, init) {}
    Matrix(std::size_t r, std::size_t c)
        requires std::default_initializable<F>
        : rows(r), cols(c), a(r * c, F{}) {}

    F& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    Matrix transposed() const {
        Matrix t = *this;
        t.rows = cols;
        t.cols = rows;
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) t.a[j * rows + i] = (*this)(i, j);
        return t;
    }

    bool operator==(const Matrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

using IntMat = Matrix<Int>;
using RatMat = Matrix<Rat>;

inline bool fld_is_zero(const Rat& x) { return x == 0; }
inline bool fld_is_zero(const Fp& x) { return x.is_zero(); }
inline bool fld_is_zero(const CycloElem& x) { return x.is_zero(); }

// Exact rank by Gaussian elimination over any exact field carrier.
template <class F>
std::size_t rank(Matrix<F> m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t piv = r;
        while (piv < m.rows && fld_is_zero(m(piv, c))) ++piv;
        if (piv == m.rows) continue;
        if (piv != r)
            for (std::size_t j = c; j < m.cols; ++j) std::swap(m(r, j), m(piv, j));
        for (std::size_t i = r + 1; i < m.rows; ++i) {
            if (fld_is_zero(m(i, c))) continue;
            F f = m(i, c) / m(r, c);
            for (std::size_t j = c; j < m.cols; ++j) m(i, j) = m(i, j) - f * m(r, j);
        }
        ++r;
    }
    return r;
}

// Floating rank with partial pivoting. A pivot counts if its magnitude
// exceeds tol times the largest magnitude of the *input* matrix.
std::size_t rank_float(Matrix<std::complex<double>> m, double tol = 1e-9);

inline RatMat to_rat(const IntMat& m) {
    RatMat r(m.rows, m.cols, Rat(0));
    for (std::size_t i = 0; i < m.a.size(); ++i) r.a[i] = Rat(m.a[i]);
    return r;
}

inline Matrix<Fp> to_fp(const IntMat& m, long p) {
    Matrix<Fp> r(m.rows, m.cols, Fp(p, 0));
    for (std::size_t i = 0; i < m.a.size(); ++i) r.a[i] = Fp(p, m.a[i]);
    return r;
}

// Inverse of a square rational matrix; throws math_error when singular.
RatMat invert(const RatMat& m);

// Determinant by fraction-producing elimination (sizes here are tiny).
Rat det(RatMat m);

RatMat mat_mul(const RatMat& x, const RatMat& y);

}  // namespace qaomoto
