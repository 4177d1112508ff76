// Command-line front end: chamber decompositions, Aomoto matrices, the
// q-deformed complex, specializations, and fixture verification.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>

#include "qaomoto/arrangement.hpp"
#include "qaomoto/chambers.hpp"
#include "qaomoto/osalg.hpp"
#include "qaomoto/qcomplex.hpp"
#include "qaomoto/report_io.hpp"

using namespace qaomoto;

namespace {

struct CommonOpts {
    std::string arrangement_path;
    std::string weights_override;  // comma-separated integers
    bool json = false;
};

Arrangement load_input(const CommonOpts& o) {
    Arrangement arr = load_arrangement_file(o.arrangement_path);
    if (!o.weights_override.empty()) {
        std::vector<Int> w;
        std::string cur;
        for (char c : o.weights_override + ",") {
            if (c == ',') {
                if (cur.empty()) throw input_error("empty entry in --weights");
                try {
                    w.emplace_back(Int(cur));
                } catch (const std::invalid_argument&) {
                    throw input_error("invalid weight: '" + cur + "'");
                }
                cur.clear();
            } else if (!std::isspace(static_cast<unsigned char>(c))) {
                cur += c;
            }
        }
        if (static_cast<int>(w.size()) != arr.n()) throw input_error("weight count mismatch");
        arr.weights = std::move(w);
    }
    return arr;
}

FlagDecomposition full_decomposition(const Arrangement& arr) {
    auto chambers = enumerate_chambers(arr);
    Flag flag = auto_flag(arr);
    return decompose(arr, chambers, flag);
}

void emit(const nlohmann::json& j, const std::string& text, bool as_json) {
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

long parse_field(const std::string& field) {
    if (field.empty() || field == "Q" || field == "q") return 0;
    if (field[0] == 'F' || field[0] == 'f') {
        long p = 0;
        try {
            p = std::stol(field.substr(1));
        } catch (...) {
            throw input_error("invalid field spec: '" + field + "'");
        }
        if (!is_prime(p)) throw input_error("field characteristic must be prime: " + field);
        return p;
    }
    throw input_error("invalid field spec: '" + field + "' (use Q or F<p>)");
}

int run_chambers(const CommonOpts& o) {
    Arrangement arr = load_input(o);
    FlagDecomposition d = full_decomposition(arr);
    ChambersReport rep = make_chambers_report(arr, d);
    emit(rep, render_chambers_text(rep), o.json);
    return 0;
}

int run_aomoto(const CommonOpts& o, const std::string& basis_path, const std::string& field) {
    Arrangement arr = load_input(o);
    OSAlgebra os = build_os(arr);
    std::optional<BasisChange> bc;
    if (!basis_path.empty()) bc = load_basis_change_file(basis_path);
    AomotoMatrices am = aomoto_matrices(os, arr.weights, bc);
    AomotoReport rep = make_aomoto_report(os, am, parse_field(field));
    emit(rep, render_aomoto_text(rep), o.json);
    return 0;
}

int run_qcomplex(const CommonOpts& o, const std::string& degrees_path) {
    Arrangement arr = load_input(o);
    FlagDecomposition d = full_decomposition(arr);
    DegreeData deg = load_degree_fixture(degrees_path, d);
    QComplex qc = assemble(d, arr.weights, deg);
    QComplexReport rep = make_qcomplex_report(qc);
    emit(rep, render_qcomplex_text(rep), o.json);
    return 0;
}

S0Spec resolve_s0(const std::string& s0_arg, const std::string& q0_arg, double tol, bool quiet) {
    if (!s0_arg.empty() && !q0_arg.empty()) throw input_error("give either --s0 or --q0, not both");
    if (s0_arg.empty() && q0_arg.empty()) throw input_error("one of --s0 / --q0 is required");
    if (!s0_arg.empty()) return S0Spec::parse(s0_arg, tol);
    S0Spec q0 = S0Spec::parse(q0_arg, tol);
    S0Spec s0 = S0Spec::principal_sqrt_of_q0(q0);
    if (!quiet)
        std::cerr << "using principal square root s0 = " << s0.s0_str() << " of q0 = " << q0.s0_str()
                  << "\n";
    return s0;
}

int run_specialize(const CommonOpts& o, const std::string& degrees_path, const std::string& s0_arg,
                   const std::string& q0_arg, double tol) {
    Arrangement arr = load_input(o);
    FlagDecomposition d = full_decomposition(arr);
    DegreeData deg = load_degree_fixture(degrees_path, d);
    QComplex qc = assemble(d, arr.weights, deg);
    SpecReport rep = specialize(qc, resolve_s0(s0_arg, q0_arg, tol, o.json));
    emit(rep, render_spec_text(rep), o.json);
    return 0;
}

int run_milnor(const CommonOpts& o, const std::string& degrees_path) {
    Arrangement arr = load_input(o);  // weights are forced to 1 below
    FlagDecomposition d = full_decomposition(arr);
    DegreeData deg = load_degree_fixture(degrees_path, d);
    MilnorReport rep;
    rep.n = d.n();
    rep.rows = milnor_spectrum(d, deg);
    emit(rep, render_milnor_text(rep), o.json);
    return 0;
}

int run_verify(const CommonOpts& o, const std::string& degrees_path) {
    Arrangement arr = load_input(o);
    OSAlgebra os = build_os(arr);
    FlagDecomposition d = full_decomposition(arr);

    bool all_ok = true;
    auto check = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "ok  " : "FAIL") << "  " << name << "\n";
        if (!ok) all_ok = false;
    };

    check("chamber counts (1, n, b) match OS ranks",
          d.n() == os.n && d.b() == os.b());
    AomotoMatrices am = aomoto_matrices(os, arr.weights);
    check("T(omega) S(omega) = 0 over Z", check_chain(am));

    if (!degrees_path.empty()) {
        DegreeData deg = load_degree_fixture(degrees_path, d);
        QComplex qc = assemble(d, arr.weights, deg);  // includes the exact chain check
        check("Tq Sq = 0 exactly in the invariant ring", verify_chain_q(qc));

        SeparationTable sep = separation_table(d, arr.weights);
        IntMat gt = qc.gamma_T();
        bool mag_ok = true;
        for (size_t i = 0; i < gt.rows; ++i)
            for (size_t j = 0; j < gt.cols; ++j)
                if (gt(i, j) != 0 && abs(gt(i, j)) != sep.L(i, j)) mag_ok = false;
        check("|gamma(Tq)| equals separating weights on the support", mag_ok);

        bool rank_ok = rank(to_rat(gt)) == rank(to_rat(am.T));
        check("rank gamma(Tq) = rank T(omega) over Q", rank_ok);
    }

    if (!all_ok) throw math_error("fixture verification failed");
    std::cout << "all checks passed\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"q-deformed Aomoto complexes of weighted real line arrangements"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string basis_path, degrees_path, field = "Q", s0_arg, q0_arg;
    double tol = 1e-9;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("arrangement", opts.arrangement_path, "arrangement JSON file")->required();
        cmd->add_option("--weights", opts.weights_override,
                        "override the file's weights (comma-separated integers)");
        cmd->add_flag("--json", opts.json, "emit machine-readable JSON");
    };

    CLI::App* c_chambers = app.add_subcommand("chambers", "enumerate chambers and decompose by a generic flag");
    add_common(c_chambers);

    CLI::App* c_aomoto = app.add_subcommand("aomoto", "Aomoto matrices, chain check, q-deformability");
    add_common(c_aomoto);
    c_aomoto->add_option("--basis", basis_path, "basis-change JSON file (P1, P2)");
    c_aomoto->add_option("--field", field, "field for cohomology dims: Q (default) or F<p>");

    CLI::App* c_qcomplex = app.add_subcommand("qcomplex", "assemble the q-deformed complex from degree data");
    add_common(c_qcomplex);
    c_qcomplex->add_option("--degrees", degrees_path, "degree fixture JSON file")->required();

    CLI::App* c_spec = app.add_subcommand("specialize", "evaluate the q-complex at s0 and report dimensions");
    add_common(c_spec);
    c_spec->add_option("--degrees", degrees_path, "degree fixture JSON file")->required();
    c_spec->add_option("--s0", s0_arg, "square root of q0: zeta(m)[^k] or decimal a+bi");
    c_spec->add_option("--q0", q0_arg, "q0 itself; the principal square root is used");
    c_spec->add_option("--tol", tol, "pivot threshold for the float carrier (default 1e-9)");

    CLI::App* c_milnor = app.add_subcommand("milnor", "eigenspace dimensions at q0 = zeta_{n+1}^i, all weights 1");
    add_common(c_milnor);
    c_milnor->add_option("--degrees", degrees_path, "degree fixture JSON file")->required();

    CLI::App* c_verify = app.add_subcommand("verify-fixtures", "cross-check arrangement and degree fixtures");
    add_common(c_verify);
    c_verify->add_option("--degrees", degrees_path, "degree fixture JSON file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_chambers->parsed()) return run_chambers(opts);
        if (c_aomoto->parsed()) return run_aomoto(opts, basis_path, field);
        if (c_qcomplex->parsed()) return run_qcomplex(opts, degrees_path);
        if (c_spec->parsed()) return run_specialize(opts, degrees_path, s0_arg, q0_arg, tol);
        if (c_milnor->parsed()) return run_milnor(opts, degrees_path);
        if (c_verify->parsed()) return run_verify(opts, degrees_path);
    } catch (const math_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
