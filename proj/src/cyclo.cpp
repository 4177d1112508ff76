#include "qaomoto/cyclo.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

namespace qaomoto {

namespace {

// Quotient of exact division (dividend / divisor) for monic-divisor integer
// polynomials, ascending coefficients. Remainder must vanish.
std::vector<Int> poly_divide_exact(std::vector<Int> dividend, const std::vector<Int>& divisor) {
    long dn = static_cast<long>(dividend.size()) - 1;
    long dd = static_cast<long>(divisor.size()) - 1;
    std::vector<Int> quot(dn - dd + 1, 0);
    for (long k = dn - dd; k >= 0; --k) {
        Int f = dividend[k + dd];  // divisor is monic
        quot[k] = f;
        if (f == 0) continue;
        for (long j = 0; j <= dd; ++j) dividend[k + j] -= f * divisor[j];
    }
    for (const Int& c : dividend)
        if (c != 0) throw math_error("inexact polynomial division");
    return quot;
}

}  // namespace

std::vector<Int> cyclotomic_poly(long m) {
    if (m < 1) throw input_error("cyclotomic conductor must be >= 1");
    static std::map<long, std::vector<Int>> cache;
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    std::vector<Int> poly(m + 1, 0);  // x^m - 1
    poly[0] = -1;
    poly[m] = 1;
    for (long d = 1; d < m; ++d)
        if (m % d == 0) poly = poly_divide_exact(std::move(poly), cyclotomic_poly(d));
    cache[m] = poly;
    return poly;
}

CycloElem::CycloElem(long m) : m_(m) {
    vec_.resize(cyclotomic_poly(m).size() - 1, Rat(0));
}

CycloElem CycloElem::zeta(long m, long power) {
    power %= m;
    if (power < 0) power += m;
    std::vector<Int> phi = cyclotomic_poly(m);
    long deg = static_cast<long>(phi.size()) - 1;
    CycloElem z(m);
    if (power < deg) {
        z.vec_[power] = 1;
        return z;
    }
    // Reduce x^power modulo the monic Phi_m.
    std::vector<Rat> p(power + 1, Rat(0));
    p[power] = 1;
    for (long k = power; k >= deg; --k) {
        Rat f = p[k];
        if (f == 0) continue;
        p[k] = 0;
        for (long j = 0; j < deg; ++j) p[k - deg + j] -= f * Rat(phi[j]);
    }
    for (long i = 0; i < deg; ++i) z.vec_[i] = p[i];
    return z;
}

CycloElem CycloElem::from_rat(long m, const Rat& r) {
    CycloElem x(m);
    x.vec_[0] = r;
    return x;
}

bool CycloElem::is_zero() const {
    for (const Rat& c : vec_)
        if (c != 0) return false;
    return true;
}

bool CycloElem::is_rational(Rat* value) const {
    for (size_t i = 1; i < vec_.size(); ++i)
        if (vec_[i] != 0) return false;
    if (value) *value = vec_[0];
    return true;
}

void CycloElem::check_same(const CycloElem& o) const {
    if (m_ != o.m_) throw input_error("conductor mismatch");
}

CycloElem CycloElem::operator+(const CycloElem& o) const {
    check_same(o);
    CycloElem r = *this;
    for (size_t i = 0; i < vec_.size(); ++i) r.vec_[i] += o.vec_[i];
    return r;
}

CycloElem CycloElem::operator-(const CycloElem& o) const {
    check_same(o);
    CycloElem r = *this;
    for (size_t i = 0; i < vec_.size(); ++i) r.vec_[i] -= o.vec_[i];
    return r;
}

CycloElem CycloElem::operator-() const {
    CycloElem r = *this;
    for (Rat& c : r.vec_) c = -c;
    return r;
}

CycloElem CycloElem::operator*(const CycloElem& o) const {
    check_same(o);
    size_t d = vec_.size();
    std::vector<Rat> prod(2 * d - 1, Rat(0));
    for (size_t i = 0; i < d; ++i) {
        if (vec_[i] == 0) continue;
        for (size_t j = 0; j < d; ++j)
            if (o.vec_[j] != 0) prod[i + j] += vec_[i] * o.vec_[j];
    }
    // Reduce modulo the monic Phi_m.
    std::vector<Int> phi = cyclotomic_poly(m_);
    for (size_t k = prod.size(); k-- > d;) {
        Rat f = prod[k];
        if (f == 0) continue;
        prod[k] = 0;
        for (size_t j = 0; j < d; ++j) prod[k - d + j] -= f * Rat(phi[j]);
    }
    CycloElem r(m_);
    for (size_t i = 0; i < d; ++i) r.vec_[i] = prod[i];
    return r;
}

CycloElem CycloElem::operator*(const Rat& c) const {
    CycloElem r = *this;
    for (Rat& a : r.vec_) a *= c;
    return r;
}

CycloElem CycloElem::inv() const {
    if (is_zero()) throw input_error("division by zero");
    // Extended Euclid over Q[x]: u*a + v*Phi_m = gcd = const, so a^{-1} = u/gcd.
    std::vector<Int> phiz = cyclotomic_poly(m_);
    std::vector<Rat> r0(phiz.begin(), phiz.end());
    std::vector<Rat> r1(vec_);
    auto trim = [](std::vector<Rat>& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    };
    trim(r1);
    std::vector<Rat> u0{Rat(0)}, u1{Rat(1)};  // coefficients of *this
    while (true) {
        trim(r0);
        trim(r1);
        if (r1.empty()) throw math_error("element not invertible (reducible modulus?)");
        if (r1.size() == 1) break;
        // r0 = q*r1 + rem; replace (r0, u0) <- (r1, u1), (r1, u1) <- (rem, u0 - q*u1)
        std::vector<Rat> rem = r0;
        std::vector<Rat> q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, Rat(0));
        while (rem.size() >= r1.size()) {
            while (!rem.empty() && rem.back() == 0) rem.pop_back();
            if (rem.size() < r1.size()) break;
            size_t shift = rem.size() - r1.size();
            Rat f = rem.back() / r1.back();
            q[shift] += f;
            for (size_t j = 0; j < r1.size(); ++j) rem[shift + j] -= f * r1[j];
            rem.pop_back();
        }
        std::vector<Rat> u2(std::max(u0.size(), q.size() + u1.size()), Rat(0));
        for (size_t i = 0; i < u0.size(); ++i) u2[i] += u0[i];
        for (size_t i = 0; i < q.size(); ++i)
            for (size_t j = 0; j < u1.size(); ++j) u2[i + j] -= q[i] * u1[j];
        r0 = std::move(r1);
        u0 = std::move(u1);
        r1 = std::move(rem);
        u1 = std::move(u2);
    }
    Rat g = r1[0];
    CycloElem out(m_);
    for (size_t i = 0; i < u1.size() && i < out.vec_.size(); ++i) out.vec_[i] = u1[i] / g;
    // u1 may formally exceed deg Phi_m - 1; fold the excess back in if so.
    if (u1.size() > out.vec_.size()) {
        CycloElem acc = from_rat(m_, u1[0] / g);
        CycloElem z = zeta(m_, 1);
        CycloElem zp = from_rat(m_, Rat(1));
        for (size_t i = 1; i < u1.size(); ++i) {
            zp = zp * z;
            acc = acc + zp * (u1[i] / g);
        }
        out = acc;
    }
    return out;
}

CycloElem CycloElem::pow(long e) const {
    CycloElem base = e < 0 ? inv() : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    CycloElem acc = from_rat(m_, Rat(1));
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

bool CycloElem::operator==(const CycloElem& o) const {
    return m_ == o.m_ && vec_ == o.vec_;
}

std::complex<double> CycloElem::to_complex() const {
    std::complex<double> z = std::polar(1.0, 2.0 * std::numbers::pi / static_cast<double>(m_));
    std::complex<double> acc = 0.0, zp = 1.0;
    for (const Rat& c : vec_) {
        acc += c.get_d() * zp;
        zp *= z;
    }
    return acc;
}

std::string CycloElem::str() const {
    std::ostringstream os;
    bool any = false;
    for (size_t i = 0; i < vec_.size(); ++i) {
        if (vec_[i] == 0) continue;
        if (any) os << " + ";
        os << vec_[i].get_str();
        if (i >= 1) os << "*z^" << i;
        any = true;
    }
    if (!any) return "0";
    return os.str();
}

CycloElem eval_qnum(const QNum& x, const CycloElem& s0) {
    if (s0.is_zero()) throw input_error("zero parameter");
    long m = s0.conductor();
    CycloElem total(m);
    CycloElem inv2 = s0.inv();
    inv2 = inv2 * inv2;
    for (const auto& [n, c] : x.terms()) {
        CycloElem term = s0.pow(n - 1);
        CycloElem sum(m);
        for (long k = 0; k < n; ++k) {
            sum = sum + term;
            term = term * inv2;
        }
        total = total + sum * Rat(c);
    }
    return total;
}

}  // namespace qaomoto
