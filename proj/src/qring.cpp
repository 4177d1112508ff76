#include "qaomoto/qring.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>

namespace qaomoto {

// ---------------------------------------------------------------- LaurentHalf

LaurentHalf LaurentHalf::monomial(long exp, Int coeff) {
    LaurentHalf p;
    p.add_term(exp, coeff);
    return p;
}

void LaurentHalf::add_term(long exp, const Int& coeff) {
    if (coeff == 0) return;
    auto it = coeffs_.find(exp);
    if (it == coeffs_.end()) {
        coeffs_.emplace(exp, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) coeffs_.erase(it);
    }
}

LaurentHalf LaurentHalf::operator+(const LaurentHalf& o) const {
    LaurentHalf r = *this;
    for (const auto& [e, c] : o.coeffs_) r.add_term(e, c);
    return r;
}

LaurentHalf LaurentHalf::operator-(const LaurentHalf& o) const {
    LaurentHalf r = *this;
    for (const auto& [e, c] : o.coeffs_) r.add_term(e, -c);
    return r;
}

LaurentHalf LaurentHalf::operator*(const LaurentHalf& o) const {
    LaurentHalf r;
    for (const auto& [e1, c1] : coeffs_)
        for (const auto& [e2, c2] : o.coeffs_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

LaurentHalf LaurentHalf::operator*(const Int& c) const {
    LaurentHalf r;
    if (c == 0) return r;
    for (const auto& [e, a] : coeffs_) r.coeffs_.emplace(e, a * c);
    return r;
}

bool LaurentHalf::is_involution_invariant() const {
    for (const auto& [e, c] : coeffs_) {
        auto it = coeffs_.find(-e);
        if (it == coeffs_.end() || it->second != c) return false;
    }
    return true;
}

std::string LaurentHalf::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        Int c = it->second;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Int a = abs(c);
        if (a != 1 || it->first == 0) os << a.get_str();
        if (it->first != 0) {
            if (a != 1) os << "*";
            os << "s^" << it->first;
        }
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------- QNum

void QNum::add_term(long n, const Int& coeff) {
    if (coeff == 0 || n == 0) return;
    auto it = coeffs_.find(n);
    if (it == coeffs_.end()) {
        coeffs_.emplace(n, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) coeffs_.erase(it);
    }
}

QNum QNum::qint(long n) {
    QNum x;
    if (n > 0)
        x.coeffs_.emplace(n, 1);
    else if (n < 0)
        x.coeffs_.emplace(-n, -1);
    return x;
}

QNum QNum::operator+(const QNum& o) const {
    QNum r = *this;
    for (const auto& [n, c] : o.coeffs_) r.add_term(n, c);
    return r;
}

QNum QNum::operator-() const {
    QNum r;
    for (const auto& [n, c] : coeffs_) r.coeffs_.emplace(n, -c);
    return r;
}

QNum QNum::operator*(const QNum& o) const {
    QNum r;
    for (const auto& [m0, a] : coeffs_) {
        for (const auto& [n0, b] : o.coeffs_) {
            long m = std::max(m0, n0), n = std::min(m0, n0);
            // indices m+n-1-2k, k = 0..n-1, all >= m-n+1 >= 1
            Int ab = a * b;
            for (long k = 0; k < n; ++k) r.add_term(m + n - 1 - 2 * k, ab);
        }
    }
    return r;
}

QNum QNum::operator*(const Int& c) const {
    QNum r;
    if (c == 0) return r;
    for (const auto& [n, a] : coeffs_) r.coeffs_.emplace(n, a * c);
    return r;
}

Int QNum::gamma() const {
    Int g = 0;
    for (const auto& [n, c] : coeffs_) g += c * n;
    return g;
}

LaurentHalf QNum::to_laurent() const {
    LaurentHalf p;
    for (const auto& [n, c] : coeffs_)
        for (long e = n - 1; e >= 1 - n; e -= 2) p.add_term(e, c);
    return p;
}

QNum QNum::from_laurent(const LaurentHalf& p) {
    if (!p.is_involution_invariant()) throw input_error("not involution-invariant");
    QNum x;
    LaurentHalf rest = p;
    // Peel the leading monomial: the top exponent e can only come from [e+1]_q.
    while (!rest.is_zero()) {
        auto top = rest.terms().rbegin();
        long e = top->first;
        Int c = top->second;
        x.add_term(e + 1, c);
        rest = rest - QNum::qint(e + 1).to_laurent() * c;
    }
    return x;
}

std::complex<double> QNum::eval(std::complex<double> s0) const {
    if (s0 == std::complex<double>(0.0, 0.0)) throw input_error("zero parameter");
    std::complex<double> total = 0.0;
    std::complex<double> inv = 1.0 / s0;
    for (const auto& [n, c] : coeffs_) {
        // s0^{n-1} + s0^{n-3} + ... + s0^{1-n}
        std::complex<double> term = std::pow(s0, static_cast<double>(n - 1));
        std::complex<double> sum = 0.0;
        for (long k = 0; k < n; ++k) {
            sum += term;
            term *= inv * inv;
        }
        total += c.get_d() * sum;
    }
    return total;
}

std::string QNum::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        long n = it->first;
        Int c = it->second;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Int a = abs(c);
        if (n == 1) {
            os << a.get_str();  // [1]_q prints as a bare integer
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << "[" << n << "]";
        }
        first = false;
    }
    return os.str();
}

namespace {

struct QParser {
    const std::string& s;
    size_t pos = 0;

    explicit QParser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    Int parse_int() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
        size_t digits = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == digits) throw input_error("expected integer in q-number at position " + std::to_string(start));
        return Int(s.substr(start, pos - start));
    }

    // bracket := '[' int ']'
    long parse_bracket() {
        if (!eat('[')) throw input_error("expected '[' in q-number");
        Int n = parse_int();
        if (!eat(']')) throw input_error("expected ']' in q-number");
        if (!n.fits_slong_p()) throw input_error("q-integer index out of range");
        return n.get_si();
    }

    QNum parse() {
        QNum acc;
        skip_ws();
        bool first = true;
        while (pos < s.size()) {
            int sign = 1;
            skip_ws();
            if (eat('+')) {
                sign = 1;
            } else if (eat('-')) {
                sign = -1;
            } else if (!first) {
                throw input_error("expected '+' or '-' in q-number");
            }
            skip_ws();
            Int coeff = 1;
            bool have_coeff = false;
            if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                coeff = parse_int();
                have_coeff = true;
            }
            skip_ws();
            long n = 1;
            if (pos < s.size() && (s[pos] == '[' || s[pos] == '*')) {
                eat('*');
                n = parse_bracket();
            } else if (!have_coeff) {
                throw input_error("expected term in q-number");
            }
            acc = acc + QNum::qint(n) * (coeff * sign);
            first = false;
            skip_ws();
        }
        return acc;
    }
};

}  // namespace

QNum QNum::parse(const std::string& text) {
    std::string trimmed;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
    if (trimmed == "0") return QNum();
    QParser p(text);
    return p.parse();
}

// --------------------------------------------------------------------- XWord

XWord XWord::monomial(std::vector<long> mono, Int coeff) {
    XWord w;
    w.terms.push_back({std::move(mono), std::move(coeff)});
    return w;
}

XWord XWord::operator+(const XWord& o) const {
    XWord r = *this;
    r.terms.insert(r.terms.end(), o.terms.begin(), o.terms.end());
    return r;
}

XWord XWord::operator*(const XWord& o) const {
    XWord r;
    for (const auto& t1 : terms)
        for (const auto& t2 : o.terms) {
            XWord::Term t;
            t.mono = t1.mono;
            t.mono.insert(t.mono.end(), t2.mono.begin(), t2.mono.end());
            t.coeff = t1.coeff * t2.coeff;
            r.terms.push_back(std::move(t));
        }
    return r;
}

QNum normalize_word(const XWord& w) {
    QNum acc;
    std::deque<XWord::Term> work(w.terms.begin(), w.terms.end());
    while (!work.empty()) {
        XWord::Term t = std::move(work.front());
        work.pop_front();
        if (t.coeff == 0) continue;
        // Fold generators (i)-(iii): x_0 kills the term, x_{-n} flips the
        // sign, x_1 acts as the unit.
        std::vector<long> mono;
        bool dead = false;
        for (long idx : t.mono) {
            if (idx == 0) {
                dead = true;
                break;
            }
            if (idx < 0) {
                t.coeff = -t.coeff;
                idx = -idx;
            }
            if (idx == 1) continue;
            mono.push_back(idx);
        }
        if (dead) continue;
        if (mono.empty()) {
            acc = acc + QNum::qint(1) * t.coeff;
            continue;
        }
        if (mono.size() == 1) {
            acc = acc + QNum::qint(mono[0]) * t.coeff;
            continue;
        }
        // Resolve one product by Clebsch-Gordan; total degree drops by one.
        std::sort(mono.begin(), mono.end(), std::greater<long>());
        long m = mono[0], n = mono[1];
        std::vector<long> rest(mono.begin() + 2, mono.end());
        for (long k = 0; k < n; ++k) {
            XWord::Term nt;
            nt.mono = rest;
            nt.mono.push_back(m + n - 1 - 2 * k);
            nt.coeff = t.coeff;
            work.push_back(std::move(nt));
        }
    }
    return acc;
}

}  // namespace qaomoto
