#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qaomoto/arrangement.hpp"
#include "qaomoto/chambers.hpp"
#include "qaomoto/osalg.hpp"
#include "qaomoto/qcomplex.hpp"

namespace qaomoto {

// Machine-readable views of the pipeline outputs. Every report type
// round-trips through JSON: from_json(to_json(x)) == x.

struct ChamberEntry {
    std::string label;
    std::string sign;                  // e.g. "--+-+++"
    std::vector<std::string> witness;  // [x, y] as exact rationals
    bool operator==(const ChamberEntry&) const = default;
};

struct ChambersReport {
    int n = 0, b = 0;
    std::vector<std::string> crossing_order;  // member names "H4", ...
    std::vector<std::string> flag_f1;         // [a, b, c]
    std::vector<std::string> flag_f0;         // [x, y]
    std::vector<ChamberEntry> chambers;       // C0, C1..Cn, D1..Db
    std::vector<long> L0;                     // separating weights L(C0, Cj)
    std::vector<std::vector<long>> L;         // L(Ci, Dj), rows = D
    bool operator==(const ChambersReport&) const = default;
};

ChambersReport make_chambers_report(const Arrangement& arr, const FlagDecomposition& d);

struct AomotoReport {
    int n = 0, b = 0;
    std::string basis;
    std::vector<long> S;
    std::vector<std::vector<long>> T;
    bool chain_ok = false;
    bool deformable = false;
    std::vector<std::string> witness;  // [T]_q [S]_q entries
    std::string field;                 // "Q" or "F<p>"
    std::vector<long> dims;            // h0, h1, h2
    bool operator==(const AomotoReport&) const = default;
};

AomotoReport make_aomoto_report(const OSAlgebra& os, const AomotoMatrices& am, long field_p);

struct QComplexReport {
    int n = 0, b = 0;
    std::vector<std::string> Sq;
    std::vector<std::vector<std::string>> Tq;
    bool chain_ok = false;
    std::vector<long> gamma_S;
    std::vector<std::vector<long>> gamma_T;
    bool operator==(const QComplexReport&) const = default;
};

QComplexReport make_qcomplex_report(const QComplex& qc);

struct MilnorReport {
    int n = 0;
    std::vector<MilnorRow> rows;
    bool operator==(const MilnorReport& o) const;
};

void to_json(nlohmann::json& j, const ChambersReport& r);
void from_json(const nlohmann::json& j, ChambersReport& r);
void to_json(nlohmann::json& j, const AomotoReport& r);
void from_json(const nlohmann::json& j, AomotoReport& r);
void to_json(nlohmann::json& j, const QComplexReport& r);
void from_json(const nlohmann::json& j, QComplexReport& r);
void to_json(nlohmann::json& j, const SpecReport& r);
void from_json(const nlohmann::json& j, SpecReport& r);
void to_json(nlohmann::json& j, const MilnorReport& r);
void from_json(const nlohmann::json& j, MilnorReport& r);

std::string render_chambers_text(const ChambersReport& r);
std::string render_aomoto_text(const AomotoReport& r);
std::string render_qcomplex_text(const QComplexReport& r);
std::string render_spec_text(const SpecReport& r);
std::string render_milnor_text(const MilnorReport& r);

}  // namespace qaomoto
