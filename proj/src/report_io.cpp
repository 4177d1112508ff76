#include "qaomoto/report_io.hpp"

#include <sstream>

namespace qaomoto {

namespace {

long small(const Int& v) {
    if (!v.fits_slong_p()) throw input_error("value too large for report");
    return v.get_si();
}

std::vector<long> small_vec(const std::vector<Int>& v) {
    std::vector<long> out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = small(v[i]);
    return out;
}

std::vector<std::vector<long>> small_mat(const IntMat& m) {
    std::vector<std::vector<long>> out(m.rows, std::vector<long>(m.cols));
    for (size_t i = 0; i < m.rows; ++i)
        for (size_t j = 0; j < m.cols; ++j) out[i][j] = small(m(i, j));
    return out;
}

std::string pad(const std::string& s, size_t w) {
    return std::string(w > s.size() ? w - s.size() : 0, ' ') + s;
}

std::string render_table(const std::vector<std::string>& col_heads,
                         const std::vector<std::string>& row_heads,
                         const std::vector<std::vector<std::string>>& cells) {
    std::vector<size_t> w(col_heads.size());
    size_t rw = 0;
    for (const auto& h : row_heads) rw = std::max(rw, h.size());
    for (size_t j = 0; j < col_heads.size(); ++j) {
        w[j] = col_heads[j].size();
        for (const auto& row : cells) w[j] = std::max(w[j], row[j].size());
    }
    std::ostringstream os;
    os << std::string(rw, ' ');
    for (size_t j = 0; j < col_heads.size(); ++j) os << "  " << pad(col_heads[j], w[j]);
    os << "\n";
    for (size_t i = 0; i < row_heads.size(); ++i) {
        os << pad(row_heads[i], rw);
        for (size_t j = 0; j < col_heads.size(); ++j) os << "  " << pad(cells[i][j], w[j]);
        os << "\n";
    }
    return os.str();
}

}  // namespace

ChambersReport make_chambers_report(const Arrangement& arr, const FlagDecomposition& d) {
    ChambersReport r;
    r.n = d.n();
    r.b = d.b();
    for (int idx : d.crossing_order) r.crossing_order.push_back("H" + std::to_string(idx + 1));
    r.flag_f1 = {d.flag.f1.a.get_str(), d.flag.f1.b.get_str(), d.flag.f1.c.get_str()};
    r.flag_f0 = {rat_str(d.flag.x0), rat_str(d.flag.y0)};

    auto entry = [](const std::string& label, const Chamber& c) {
        return ChamberEntry{label, c.sign_str(), {rat_str(c.wx), rat_str(c.wy)}};
    };
    r.chambers.push_back(entry("C0", d.ch0));
    auto lc = d.labels_c();
    auto ld = d.labels_d();
    for (int i = 0; i < r.n; ++i) r.chambers.push_back(entry(lc[i], d.ch1[i]));
    for (int i = 0; i < r.b; ++i) r.chambers.push_back(entry(ld[i], d.ch2[i]));

    SeparationTable t = separation_table(d, arr.weights);
    r.L0 = small_vec(t.L0);
    r.L = small_mat(t.L);
    return r;
}

AomotoReport make_aomoto_report(const OSAlgebra& os, const AomotoMatrices& am, long field_p) {
    AomotoReport r;
    r.n = os.n;
    r.b = os.b();
    r.basis = am.basis_desc;
    r.S = small_vec(am.S);
    r.T = small_mat(am.T);
    r.chain_ok = check_chain(am);
    if (r.chain_ok) {
        QDeformVerdict v = is_canonically_qdeformable(am);
        r.deformable = v.deformable;
        for (const auto& q : v.product) r.witness.push_back(q.str());
    }
    r.field = field_p == 0 ? "Q" : "F" + std::to_string(field_p);
    CohomDims dims = aomoto_cohomology_dims(am, field_p);
    r.dims = {dims.h0, dims.h1, dims.h2};
    return r;
}

QComplexReport make_qcomplex_report(const QComplex& qc) {
    QComplexReport r;
    r.n = qc.n;
    r.b = qc.b;
    for (const auto& q : qc.Sq) r.Sq.push_back(q.str());
    for (const auto& row : qc.Tq) {
        std::vector<std::string> out;
        for (const auto& q : row) out.push_back(q.str());
        r.Tq.push_back(std::move(out));
    }
    r.chain_ok = verify_chain_q(qc);
    r.gamma_S = small_vec(qc.gamma_S());
    r.gamma_T = small_mat(qc.gamma_T());
    return r;
}

bool MilnorReport::operator==(const MilnorReport& o) const {
    if (n != o.n || rows.size() != o.rows.size()) return false;
    for (size_t i = 0; i < rows.size(); ++i)
        if (rows[i].i != o.rows[i].i || !(rows[i].report == o.rows[i].report)) return false;
    return true;
}

// ---------------------------------------------------------------- JSON forms

void to_json(nlohmann::json& j, const ChambersReport& r) {
    j = nlohmann::json{{"n", r.n},
                       {"b", r.b},
                       {"sizes", {1, r.n, r.b}},
                       {"crossing_order", r.crossing_order},
                       {"flag", {{"f1", r.flag_f1}, {"f0", r.flag_f0}}},
                       {"L0", r.L0},
                       {"L", r.L}};
    nlohmann::json chambers = nlohmann::json::array();
    for (const auto& c : r.chambers)
        chambers.push_back({{"label", c.label}, {"sign", c.sign}, {"witness", c.witness}});
    j["chambers"] = chambers;
}

void from_json(const nlohmann::json& j, ChambersReport& r) {
    r.n = j.at("n").get<int>();
    r.b = j.at("b").get<int>();
    r.crossing_order = j.at("crossing_order").get<std::vector<std::string>>();
    r.flag_f1 = j.at("flag").at("f1").get<std::vector<std::string>>();
    r.flag_f0 = j.at("flag").at("f0").get<std::vector<std::string>>();
    r.chambers.clear();
    for (const auto& c : j.at("chambers"))
        r.chambers.push_back(ChamberEntry{c.at("label").get<std::string>(),
                                          c.at("sign").get<std::string>(),
                                          c.at("witness").get<std::vector<std::string>>()});
    r.L0 = j.at("L0").get<std::vector<long>>();
    r.L = j.at("L").get<std::vector<std::vector<long>>>();
}

void to_json(nlohmann::json& j, const AomotoReport& r) {
    j = nlohmann::json{{"n", r.n},         {"b", r.b},
                       {"basis", r.basis}, {"S", r.S},
                       {"T", r.T},         {"chain_ok", r.chain_ok},
                       {"canonically_q_deformable", r.deformable}, {"witness", r.witness},
                       {"field", r.field}, {"dims", r.dims}};
}

void from_json(const nlohmann::json& j, AomotoReport& r) {
    r.n = j.at("n").get<int>();
    r.b = j.at("b").get<int>();
    r.basis = j.at("basis").get<std::string>();
    r.S = j.at("S").get<std::vector<long>>();
    r.T = j.at("T").get<std::vector<std::vector<long>>>();
    r.chain_ok = j.at("chain_ok").get<bool>();
    r.deformable = j.at("canonically_q_deformable").get<bool>();
    r.witness = j.at("witness").get<std::vector<std::string>>();
    r.field = j.at("field").get<std::string>();
    r.dims = j.at("dims").get<std::vector<long>>();
}

void to_json(nlohmann::json& j, const QComplexReport& r) {
    j = nlohmann::json{{"n", r.n},           {"b", r.b},
                       {"Sq", r.Sq},         {"Tq", r.Tq},
                       {"chain_ok", r.chain_ok}, {"gamma_S", r.gamma_S},
                       {"gamma_T", r.gamma_T}};
}

void from_json(const nlohmann::json& j, QComplexReport& r) {
    r.n = j.at("n").get<int>();
    r.b = j.at("b").get<int>();
    r.Sq = j.at("Sq").get<std::vector<std::string>>();
    r.Tq = j.at("Tq").get<std::vector<std::vector<std::string>>>();
    r.chain_ok = j.at("chain_ok").get<bool>();
    r.gamma_S = j.at("gamma_S").get<std::vector<long>>();
    r.gamma_T = j.at("gamma_T").get<std::vector<std::vector<long>>>();
}

void to_json(nlohmann::json& j, const SpecReport& r) {
    j = nlohmann::json{{"s0", r.s0},
                       {"q0", r.q0},
                       {"carrier", r.carrier},
                       {"ranks", {{"S", r.rank_s}, {"T", r.rank_t}}},
                       {"dims", {r.h0, r.h1, r.h2}}};
    if (!r.warning.empty()) j["warning"] = r.warning;
}

void from_json(const nlohmann::json& j, SpecReport& r) {
    r.s0 = j.at("s0").get<std::string>();
    r.q0 = j.at("q0").get<std::string>();
    r.carrier = j.at("carrier").get<std::string>();
    r.rank_s = j.at("ranks").at("S").get<long>();
    r.rank_t = j.at("ranks").at("T").get<long>();
    auto dims = j.at("dims").get<std::vector<long>>();
    if (dims.size() != 3) throw input_error("dims must have three entries");
    r.h0 = dims[0];
    r.h1 = dims[1];
    r.h2 = dims[2];
    r.warning = j.value("warning", "");
}

void to_json(nlohmann::json& j, const MilnorReport& r) {
    j = nlohmann::json{{"n", r.n}};
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : r.rows) {
        nlohmann::json rj;
        to_json(rj, row.report);
        rj["i"] = row.i;
        rows.push_back(rj);
    }
    j["rows"] = rows;
}

void from_json(const nlohmann::json& j, MilnorReport& r) {
    r.n = j.at("n").get<int>();
    r.rows.clear();
    for (const auto& rj : j.at("rows")) {
        MilnorRow row;
        row.i = rj.at("i").get<int>();
        from_json(rj, row.report);
        r.rows.push_back(std::move(row));
    }
}

// ---------------------------------------------------------------- text forms

std::string render_chambers_text(const ChambersReport& r) {
    std::ostringstream os;
    os << "chambers: " << (1 + r.n + r.b) << "  (ch0, ch1, ch2) = (1, " << r.n << ", " << r.b
       << ")\n";
    os << "flag F1: [" << r.flag_f1[0] << ", " << r.flag_f1[1] << ", " << r.flag_f1[2]
       << "]  F0: (" << r.flag_f0[0] << ", " << r.flag_f0[1] << ")\n";
    os << "crossing order:";
    for (const auto& h : r.crossing_order) os << " " << h;
    os << "\n\n";
    for (const auto& c : r.chambers)
        os << pad(c.label, 4) << "  " << c.sign << "  witness (" << c.witness[0] << ", "
           << c.witness[1] << ")\n";
    os << "\nL(C0, Cj):";
    for (long v : r.L0) os << " " << v;
    os << "\n\nL(Ci, Dj):\n";
    std::vector<std::string> col_heads, row_heads;
    for (int j = 1; j <= r.n; ++j) col_heads.push_back("C" + std::to_string(j));
    std::vector<std::vector<std::string>> cells;
    for (int i = 0; i < r.b; ++i) {
        row_heads.push_back("D" + std::to_string(i + 1));
        std::vector<std::string> row;
        for (long v : r.L[i]) row.push_back(std::to_string(v));
        cells.push_back(std::move(row));
    }
    os << render_table(col_heads, row_heads, cells);
    return os.str();
}

std::string render_aomoto_text(const AomotoReport& r) {
    std::ostringstream os;
    os << "basis: " << r.basis << "\n";
    os << "S(omega)^t = (";
    for (size_t i = 0; i < r.S.size(); ++i) os << (i ? ", " : "") << r.S[i];
    os << ")\n";
    os << "T(omega) =\n";
    std::vector<std::string> col_heads(r.n), row_heads(r.b);
    std::vector<std::vector<std::string>> cells;
    for (int j = 0; j < r.n; ++j) col_heads[j] = "c" + std::to_string(j + 1);
    for (int i = 0; i < r.b; ++i) {
        row_heads[i] = "r" + std::to_string(i + 1);
        std::vector<std::string> row;
        for (long v : r.T[i]) row.push_back(std::to_string(v));
        cells.push_back(std::move(row));
    }
    os << render_table(col_heads, row_heads, cells);
    os << "T*S = 0 over Z: " << (r.chain_ok ? "yes" : "NO") << "\n";
    if (r.chain_ok) {
        os << "canonically q-deformable: " << (r.deformable ? "yes" : "NO") << "\n";
        os << "[T]_q [S]_q = (";
        for (size_t i = 0; i < r.witness.size(); ++i) os << (i ? "; " : "") << r.witness[i];
        os << ")\n";
    }
    os << "cohomology over " << r.field << ": h = (" << r.dims[0] << ", " << r.dims[1] << ", "
       << r.dims[2] << ")\n";
    return os.str();
}

std::string render_qcomplex_text(const QComplexReport& r) {
    std::ostringstream os;
    os << "Sq = (";
    for (size_t i = 0; i < r.Sq.size(); ++i) os << (i ? ", " : "") << r.Sq[i];
    os << ")\nTq =\n";
    std::vector<std::string> col_heads, row_heads;
    for (int j = 1; j <= r.n; ++j) col_heads.push_back("C" + std::to_string(j));
    std::vector<std::vector<std::string>> cells;
    for (int i = 0; i < r.b; ++i) {
        row_heads.push_back("D" + std::to_string(i + 1));
        cells.push_back(r.Tq[i]);
    }
    os << render_table(col_heads, row_heads, cells);
    os << "Tq*Sq = 0 in Z[q^(1/2), q^(-1/2)]^<iota>: " << (r.chain_ok ? "yes" : "NO") << "\n";
    os << "gamma(Sq) = (";
    for (size_t i = 0; i < r.gamma_S.size(); ++i) os << (i ? ", " : "") << r.gamma_S[i];
    os << ")\n";
    return os.str();
}

std::string render_spec_text(const SpecReport& r) {
    std::ostringstream os;
    os << "s0 = " << r.s0 << "  (q0 = " << r.q0 << ", carrier: " << r.carrier << ")\n";
    os << "rank S = " << r.rank_s << ", rank T = " << r.rank_t << "\n";
    os << "dim H^0 = " << r.h0 << ", dim H^1 = " << r.h1 << ", dim H^2 = " << r.h2 << "\n";
    if (!r.warning.empty()) os << "warning: " << r.warning << "\n";
    return os.str();
}

std::string render_milnor_text(const MilnorReport& r) {
    std::ostringstream os;
    os << "eigenspace dimensions (all weights 1, q0 = zeta_" << (r.n + 1) << "^i):\n";
    std::vector<std::string> col_heads{"s0", "q0", "h0", "h1", "h2"};
    std::vector<std::string> row_heads;
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : r.rows) {
        row_heads.push_back("i=" + std::to_string(row.i));
        cells.push_back({row.report.s0, row.report.q0, std::to_string(row.report.h0),
                         std::to_string(row.report.h1), std::to_string(row.report.h2)});
    }
    os << render_table(col_heads, row_heads, cells);
    return os.str();
}

}  // namespace qaomoto
