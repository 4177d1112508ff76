#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qaomoto/report_io.hpp"

using namespace qaomoto;

namespace {

const std::string fixtures = FIXTURES_DIR;

template <class R>
R roundtrip(const R& r) {
    nlohmann::json j = r;
    nlohmann::json reparsed = nlohmann::json::parse(j.dump());
    return reparsed.get<R>();
}

}  // namespace

TEST_CASE("chambers report round-trips through JSON") {
    Arrangement arr = load_arrangement_file(fixtures + "/deleted_b3.json");
    FlagDecomposition d = decompose(arr, enumerate_chambers(arr), auto_flag(arr));
    ChambersReport r = make_chambers_report(arr, d);
    CHECK(roundtrip(r) == r);
    std::string text = render_chambers_text(r);
    CHECK(text.find("(1, 7, 12)") != std::string::npos);
    CHECK(text.find("H4 H3 H7 H6 H5 H1 H2") != std::string::npos);
}

TEST_CASE("aomoto report round-trips through JSON") {
    Arrangement arr = load_arrangement_file(fixtures + "/three_lines.json");
    OSAlgebra os = build_os(arr);
    BasisChange bc = load_basis_change_file(fixtures + "/three_lines_basis_eta.json");
    AomotoReport r = make_aomoto_report(os, aomoto_matrices(os, arr.weights, bc), 0);
    CHECK(roundtrip(r) == r);
    CHECK(r.deformable);
    CHECK(render_aomoto_text(r).find("canonically q-deformable: yes") != std::string::npos);
}

TEST_CASE("qcomplex and spec reports round-trip through JSON") {
    Arrangement arr = load_arrangement_file(fixtures + "/deleted_b3.json");
    FlagDecomposition d = decompose(arr, enumerate_chambers(arr), auto_flag(arr));
    DegreeData deg = load_degree_fixture(fixtures + "/deleted_b3_degrees.json", d);
    QComplex qc = assemble(d, arr.weights, deg);

    QComplexReport qr = make_qcomplex_report(qc);
    CHECK(roundtrip(qr) == qr);
    CHECK(qr.chain_ok);

    SpecReport sr = specialize(qc, S0Spec::root_of_unity(4, 1));
    CHECK(roundtrip(sr) == sr);
    nlohmann::json j = sr;
    CHECK(j["ranks"]["T"] == 4);
    CHECK(j["dims"][1] == 2);

    SpecReport warned = specialize(qc, S0Spec::root_of_unity(1, 0));
    CHECK(roundtrip(warned) == warned);

    MilnorReport mr;
    mr.n = d.n();
    mr.rows = milnor_spectrum(d, deg);
    CHECK(roundtrip(mr) == mr);
    CHECK(render_milnor_text(mr).find("i=7") != std::string::npos);
}
