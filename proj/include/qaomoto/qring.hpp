#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "qaomoto/rational.hpp"

namespace qaomoto {

class QNum;

// Laurent polynomial in s = q^{1/2} with integer coefficients, exponents
// counted in powers of s (so exponent 1 means q^{1/2}). Only used as the
// cross-check and evaluation carrier; the working representation is QNum.
class LaurentHalf {
  public:
    LaurentHalf() = default;

    static LaurentHalf monomial(long exp, Int coeff);

    void add_term(long exp, const Int& coeff);

    LaurentHalf operator+(const LaurentHalf& o) const;
    LaurentHalf operator-(const LaurentHalf& o) const;
    LaurentHalf operator*(const LaurentHalf& o) const;
    LaurentHalf operator*(const Int& c) const;
    bool operator==(const LaurentHalf& o) const { return coeffs_ == o.coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    // Invariant under the involution s -> s^{-1}.
    bool is_involution_invariant() const;

    const std::map<long, Int>& terms() const { return coeffs_; }

    std::string str() const;

  private:
    std::map<long, Int> coeffs_;  // exponent of s -> nonzero coefficient
};

// Element of Z[q^{1/2}, q^{-1/2}]^<iota>, stored in the free basis of
// canonical q-integers [n]_q, n >= 1. Involution invariance is structural.
class QNum {
  public:
    QNum() = default;  // zero

    // [n]_q for any integer n; [0]_q = 0 and [-n]_q = -[n]_q.
    static QNum qint(long n);
    static QNum from_int(const Int& c) { return qint(1) * c; }  // trivial deformation c*[1]_q

    QNum operator+(const QNum& o) const;
    QNum operator-() const;
    QNum operator-(const QNum& o) const { return *this + (-o); }
    // Clebsch-Gordan product, bilinear over the [n]_q basis:
    // [m]_q [n]_q = [m+n-1]_q + [m+n-3]_q + ... + [m-n+1]_q  (m >= n >= 1).
    QNum operator*(const QNum& o) const;
    QNum operator*(const Int& c) const;
    bool operator==(const QNum& o) const { return coeffs_ == o.coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }

    // Ring homomorphism to Z, [n]_q -> n (the q -> 1 limit).
    Int gamma() const;

    LaurentHalf to_laurent() const;
    // Inverse of to_laurent; rejects input that is not iota-invariant.
    static QNum from_laurent(const LaurentHalf& p);

    // Value at a chosen square root s0 of q0; total for every s0 != 0.
    std::complex<double> eval(std::complex<double> s0) const;

    // Rendering: "2*[5] - [3] + 1" where a bare integer abbreviates [1]_q.
    std::string str() const;
    static QNum parse(const std::string& text);

    const std::map<long, Int>& terms() const { return coeffs_; }

  private:
    void add_term(long n, const Int& coeff);

    std::map<long, Int> coeffs_;  // n >= 1 -> nonzero coefficient of [n]_q
};

inline QNum qint(long n) { return QNum::qint(n); }

// Polynomial in the formal variables x_n (n in Z): a list of terms, each a
// multiset of indices with an integer coefficient.
struct XWord {
    struct Term {
        std::vector<long> mono;  // multiset of indices, any order
        Int coeff;
    };
    std::vector<Term> terms;

    static XWord monomial(std::vector<long> mono, Int coeff = 1);
    XWord operator+(const XWord& o) const;
    XWord operator*(const XWord& o) const;
};

// Normal form of Prop-style rewriting: x_0 -> 0, x_1 -> 1, x_{-n} -> -x_n,
// and products resolved by Clebsch-Gordan until linear. Total degree drops
// at every product step, so any strategy terminates.
QNum normalize_word(const XWord& w);

}  // namespace qaomoto
