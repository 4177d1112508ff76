#include "qaomoto/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace qaomoto {

std::size_t rank_float(Matrix<std::complex<double>> m, double tol) {
    double max_init = 0.0;
    for (const auto& z : m.a) max_init = std::max(max_init, std::abs(z));
    if (max_init == 0.0) return 0;
    const double cutoff = tol * max_init;

    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t piv = r;
        double best = std::abs(m(r, c));
        for (std::size_t i = r + 1; i < m.rows; ++i) {
            double v = std::abs(m(i, c));
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        if (best <= cutoff) continue;
        if (piv != r)
            for (std::size_t j = c; j < m.cols; ++j) std::swap(m(r, j), m(piv, j));
        for (std::size_t i = r + 1; i < m.rows; ++i) {
            std::complex<double> f = m(i, c) / m(r, c);
            for (std::size_t j = c; j < m.cols; ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

RatMat invert(const RatMat& m) {
    if (m.rows != m.cols) throw math_error("cannot invert non-square matrix");
    std::size_t n = m.rows;
    RatMat aug(n, 2 * n, Rat(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && aug(piv, c) == 0) ++piv;
        if (piv == n) throw math_error("matrix is singular");
        if (piv != c)
            for (std::size_t j = 0; j < 2 * n; ++j) std::swap(aug(c, j), aug(piv, j));
        Rat d = aug(c, c);
        for (std::size_t j = 0; j < 2 * n; ++j) aug(c, j) /= d;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || aug(i, c) == 0) continue;
            Rat f = aug(i, c);
            for (std::size_t j = 0; j < 2 * n; ++j) aug(i, j) -= f * aug(c, j);
        }
    }
    RatMat inv(n, n, Rat(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

Rat det(RatMat m) {
    if (m.rows != m.cols) throw math_error("determinant of non-square matrix");
    std::size_t n = m.rows;
    Rat d(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m(piv, c) == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != c) {
            for (std::size_t j = c; j < n; ++j) std::swap(m(c, j), m(piv, j));
            d = -d;
        }
        d *= m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c) == 0) continue;
            Rat f = m(i, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return d;
}

RatMat mat_mul(const RatMat& x, const RatMat& y) {
    if (x.cols != y.rows) throw math_error("matrix shape mismatch");
    RatMat r(x.rows, y.cols, Rat(0));
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            if (x(i, k) == 0) continue;
            for (std::size_t j = 0; j < y.cols; ++j) r(i, j) += x(i, k) * y(k, j);
        }
    return r;
}

}  // namespace qaomoto
