#include "qaomoto/qcomplex.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

namespace qaomoto {

DegreeData parse_degree_fixture(const nlohmann::json& j, const FlagDecomposition& decomp) {
    DegreeData d;
    if (!j.contains("labels_c") || !j.contains("labels_d") || !j.contains("N"))
        throw input_error("degree fixture must contain labels_c, labels_d, N");
    d.labels_c = j["labels_c"].get<std::vector<std::string>>();
    d.labels_d = j["labels_d"].get<std::vector<std::string>>();
    if (j.contains("table_labels_d"))
        d.table_labels_d = j["table_labels_d"].get<std::vector<std::string>>();

    if (d.labels_c != decomp.labels_c() || d.labels_d != decomp.labels_d())
        throw input_error("label mismatch between degree fixture and decomposition");

    size_t b = d.labels_d.size(), n = d.labels_c.size();
    const auto& nj = j["N"];
    if (!nj.is_array() || nj.size() != b) throw input_error("degree matrix N has wrong row count");
    d.N = Matrix<int>(b, n, 0);
    for (size_t i = 0; i < b; ++i) {
        if (!nj[i].is_array() || nj[i].size() != n)
            throw input_error("degree matrix N has wrong column count");
        for (size_t k = 0; k < n; ++k) {
            if (!nj[i][k].is_number_integer()) throw input_error("degree matrix entries must be integers");
            long v = nj[i][k].get<long>();
            if (v < -1 || v > 1) throw input_error("entry outside {-1,0,1} in degree matrix");
            d.N(i, k) = static_cast<int>(v);
        }
    }
    return d;
}

DegreeData load_degree_fixture(const std::string& path, const FlagDecomposition& decomp) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open degree fixture: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw input_error("malformed JSON in " + path + ": " + e.what());
    }
    return parse_degree_fixture(j, decomp);
}

std::vector<Int> QComplex::gamma_S() const {
    std::vector<Int> g(Sq.size());
    for (size_t i = 0; i < Sq.size(); ++i) g[i] = Sq[i].gamma();
    return g;
}

IntMat QComplex::gamma_T() const {
    IntMat g(b, n, Int(0));
    for (int i = 0; i < b; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = Tq[i][j].gamma();
    return g;
}

SeparationTable separation_table(const FlagDecomposition& decomp, const std::vector<Int>& weights) {
    SeparationTable t;
    int n = decomp.n(), b = decomp.b();
    t.L0.resize(n);
    t.L = IntMat(b, n, Int(0));
    for (int j = 0; j < n; ++j) t.L0[j] = separating_weight(decomp.ch0, decomp.ch1[j], weights).second;
    for (int i = 0; i < b; ++i)
        for (int j = 0; j < n; ++j)
            t.L(i, j) = separating_weight(decomp.ch1[j], decomp.ch2[i], weights).second;
    return t;
}

namespace {

long to_long(const Int& v, const char* what) {
    if (!v.fits_slong_p()) throw input_error(std::string("value out of range for ") + what);
    return v.get_si();
}

}  // namespace

QComplex assemble(const FlagDecomposition& decomp, const std::vector<Int>& weights,
                  const DegreeData& deg) {
    int n = decomp.n(), b = decomp.b();
    if (static_cast<int>(weights.size()) != n) throw input_error("weight count mismatch");
    if (static_cast<int>(deg.N.rows) != b || static_cast<int>(deg.N.cols) != n)
        throw input_error("degree matrix size mismatch");

    SeparationTable sep = separation_table(decomp, weights);

    QComplex qc;
    qc.n = n;
    qc.b = b;
    qc.Sq.resize(n);
    for (int j = 0; j < n; ++j) qc.Sq[j] = QNum::qint(to_long(sep.L0[j], "separating weight"));
    qc.Tq.assign(b, std::vector<QNum>(n));
    for (int i = 0; i < b; ++i)
        for (int j = 0; j < n; ++j)
            if (deg.N(i, j) != 0)
                qc.Tq[i][j] =
                    QNum::qint(to_long(sep.L(i, j), "separating weight")) * Int(deg.N(i, j));

    for (int i = 0; i < b; ++i) {
        QNum acc;
        for (int j = 0; j < n; ++j) acc = acc + qc.Tq[i][j] * qc.Sq[j];
        if (!acc.is_zero())
            throw math_error("q-chain condition violated at row " + std::to_string(i + 1) + " (" +
                             decomp.labels_d()[i] + "): " + acc.str());
    }
    return qc;
}

bool verify_chain_q(const QComplex& qc) {
    for (int i = 0; i < qc.b; ++i) {
        QNum acc;
        for (int j = 0; j < qc.n; ++j) acc = acc + qc.Tq[i][j] * qc.Sq[j];
        if (!acc.is_zero()) return false;
    }
    return true;
}

// ------------------------------------------------------------------- S0Spec

S0Spec S0Spec::root_of_unity(long m, long k, double tol) {
    if (m < 1) throw input_error("root-of-unity order must be >= 1");
    S0Spec s;
    s.exact = true;
    s.m = m;
    s.k = ((k % m) + m) % m;
    s.tol = tol;
    return s;
}

S0Spec S0Spec::complex_value(std::complex<double> z, double tol) {
    if (z == std::complex<double>(0.0, 0.0)) throw input_error("zero parameter");
    S0Spec s;
    s.exact = false;
    s.z = z;
    s.tol = tol;
    return s;
}

namespace {

// "a+bi" / "a-bi" / "a" / "bi" / "i" / "-i", 15 significant digits out.
std::complex<double> parse_complex(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw input_error("empty complex number");
    if (s == "i") return {0.0, 1.0};
    if (s == "-i" ) return {0.0, -1.0};
    bool has_i = s.back() == 'i';
    if (!has_i) {
        size_t pos = 0;
        double re = std::stod(s, &pos);
        if (pos != s.size()) throw input_error("invalid complex number: '" + text + "'");
        return {re, 0.0};
    }
    s.pop_back();  // drop 'i'
    // Split at the last '+'/'-' that is not an exponent sign and not leading.
    size_t split = std::string::npos;
    for (size_t p = s.size(); p-- > 1;) {
        if ((s[p] == '+' || s[p] == '-') && s[p - 1] != 'e' && s[p - 1] != 'E') {
            split = p;
            break;
        }
    }
    if (split == std::string::npos) {
        // pure imaginary
        if (s.empty() || s == "+") return {0.0, 1.0};
        if (s == "-") return {0.0, -1.0};
        size_t pos = 0;
        double im = std::stod(s, &pos);
        if (pos != s.size()) throw input_error("invalid complex number: '" + text + "'");
        return {0.0, im};
    }
    std::string re_part = s.substr(0, split);
    std::string im_part = s.substr(split);
    if (im_part == "+") im_part = "1";
    if (im_part == "-") im_part = "-1";
    size_t pos = 0;
    double re = std::stod(re_part, &pos);
    if (pos != re_part.size()) throw input_error("invalid complex number: '" + text + "'");
    double im = std::stod(im_part, &pos);
    if (pos != im_part.size()) throw input_error("invalid complex number: '" + text + "'");
    return {re, im};
}

std::string format_double15(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

std::string format_complex(std::complex<double> z) {
    std::string re = format_double15(z.real());
    std::string im = format_double15(z.imag());
    std::string out = re;
    out += (z.imag() < 0 || im[0] == '-') ? "" : "+";
    out += im;
    out += "i";
    return out;
}

std::string zeta_str(long m, long k) {
    k = ((k % m) + m) % m;
    if (k == 0) return "1";
    long g = std::gcd(k, m);
    m /= g;
    k /= g;
    if (m == 1) return "1";
    if (m == 2) return "-1";
    std::string s = "zeta(" + std::to_string(m) + ")";
    if (k != 1) s += "^" + std::to_string(k);
    return s;
}

}  // namespace

S0Spec S0Spec::parse(const std::string& text, double tol) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.rfind("zeta(", 0) == 0) {
        auto close = s.find(')');
        if (close == std::string::npos) throw input_error("invalid root of unity: '" + text + "'");
        long m = 0, k = 1;
        try {
            m = std::stol(s.substr(5, close - 5));
        } catch (...) {
            throw input_error("invalid root of unity: '" + text + "'");
        }
        std::string rest = s.substr(close + 1);
        if (!rest.empty()) {
            if (rest[0] != '^') throw input_error("invalid root of unity: '" + text + "'");
            try {
                k = std::stol(rest.substr(1));
            } catch (...) {
                throw input_error("invalid root of unity: '" + text + "'");
            }
        }
        if (m < 1) throw input_error("invalid root of unity order");
        auto spec = root_of_unity(m, k, tol);
        if (spec.k == 0 && m > 1) return root_of_unity(1, 0, tol);  // zeta(m)^0 = 1
        return spec;
    }
    if (s == "1") return root_of_unity(1, 0, tol);
    if (s == "-1") return root_of_unity(2, 1, tol);
    return complex_value(parse_complex(s), tol);
}

S0Spec S0Spec::principal_sqrt_of_q0(const S0Spec& q0) {
    if (q0.exact) {
        // q0 = zeta_m^k = e^{2 pi i k/m} with 0 <= k < m: principal root is
        // e^{pi i k/m} = zeta_{2m}^k.
        return root_of_unity(2 * q0.m, q0.k, q0.tol);
    }
    return complex_value(std::sqrt(q0.z), q0.tol);
}

std::string S0Spec::s0_str() const {
    if (exact) return zeta_str(m, k);
    return format_complex(z);
}

std::string S0Spec::q0_str() const {
    if (exact) return zeta_str(m, 2 * k);
    return format_complex(z * z);
}

bool S0Spec::q0_is_one() const {
    if (exact) return (2 * k) % m == 0;
    return z * z == std::complex<double>(1.0, 0.0);
}

SpecReport specialize(const QComplex& qc, const S0Spec& s0) {
    SpecReport rep;
    rep.s0 = s0.s0_str();
    rep.q0 = s0.q0_str();

    long rank_t = 0, rank_s = 0;
    if (s0.exact) {
        rep.carrier = "cyclotomic(" + std::to_string(s0.m) + ")";
        CycloElem root = CycloElem::zeta(s0.m, s0.k);
        if (root.is_zero()) throw input_error("zero parameter");
        CycloElem zero(s0.m);
        Matrix<CycloElem> T(qc.b, qc.n, zero), S(qc.n, 1, zero);
        for (int i = 0; i < qc.b; ++i)
            for (int j = 0; j < qc.n; ++j) T(i, j) = eval_qnum(qc.Tq[i][j], root);
        for (int j = 0; j < qc.n; ++j) S(j, 0) = eval_qnum(qc.Sq[j], root);
        rank_t = static_cast<long>(rank(T));
        rank_s = static_cast<long>(rank(S));
    } else {
        rep.carrier = "float";
        if (s0.z == std::complex<double>(0.0, 0.0)) throw input_error("zero parameter");
        Matrix<std::complex<double>> T(qc.b, qc.n), S(qc.n, 1);
        for (int i = 0; i < qc.b; ++i)
            for (int j = 0; j < qc.n; ++j) T(i, j) = qc.Tq[i][j].eval(s0.z);
        for (int j = 0; j < qc.n; ++j) S(j, 0) = qc.Sq[j].eval(s0.z);
        rank_t = static_cast<long>(rank_float(T, s0.tol));
        rank_s = static_cast<long>(rank_float(S, s0.tol));
    }

    rep.rank_s = rank_s;
    rep.rank_t = rank_t;
    rep.h0 = 1 - rank_s;
    rep.h1 = qc.n - rank_t - rank_s;
    rep.h2 = qc.b - rank_t;
    if (s0.q0_is_one())
        rep.warning = "q0 = 1: dimensions are those of the Aomoto complex, not a local system";
    return rep;
}

std::vector<MilnorRow> milnor_spectrum(const FlagDecomposition& decomp, const DegreeData& deg) {
    int n = decomp.n();
    std::vector<Int> ones(n, Int(1));
    QComplex qc = assemble(decomp, ones, deg);
    std::vector<MilnorRow> rows;
    for (int i = 1; i <= n; ++i) {
        MilnorRow row;
        row.i = i;
        row.report = specialize(qc, S0Spec::root_of_unity(2 * (n + 1), i));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace qaomoto
