#pragma once

#include <complex>
#include <string>
#include <vector>

#include "qaomoto/qring.hpp"
#include "qaomoto/rational.hpp"

namespace qaomoto {

// Coefficients of the m-th cyclotomic polynomial, ascending degree, monic.
// Computed by dividing x^m - 1 by Phi_d over all proper divisors d | m.
std::vector<Int> cyclotomic_poly(long m);

// Element of Q(zeta_m) in the power basis 1, z, ..., z^{phi(m)-1} modulo
// Phi_m. The conductor m is carried by every element; mixing conductors is
// an error.
class CycloElem {
  public:
    explicit CycloElem(long m);  // zero of conductor m
    static CycloElem zeta(long m, long power = 1);
    static CycloElem from_rat(long m, const Rat& r);

    long conductor() const { return m_; }
    const std::vector<Rat>& vec() const { return vec_; }

    bool is_zero() const;
    bool is_rational(Rat* value = nullptr) const;

    CycloElem operator+(const CycloElem& o) const;
    CycloElem operator-(const CycloElem& o) const;
    CycloElem operator-() const;
    CycloElem operator*(const CycloElem& o) const;
    CycloElem operator*(const Rat& c) const;
    CycloElem inv() const;  // extended Euclid against Phi_m
    CycloElem operator/(const CycloElem& o) const { return *this * o.inv(); }
    CycloElem pow(long e) const;  // any integer exponent (negative uses inv)
    bool operator==(const CycloElem& o) const;

    std::complex<double> to_complex() const;
    std::string str() const;  // polynomial in z = zeta_m

  private:
    void check_same(const CycloElem& o) const;

    long m_;
    std::vector<Rat> vec_;  // length = deg Phi_m
};

// [n]_q evaluated at a cyclotomic s0: s0^{n-1} + s0^{n-3} + ... + s0^{1-n},
// extended linearly. Errors on s0 = 0.
CycloElem eval_qnum(const QNum& x, const CycloElem& s0);

}  // namespace qaomoto
