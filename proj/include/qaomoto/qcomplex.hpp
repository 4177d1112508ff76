#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qaomoto/chambers.hpp"
#include "qaomoto/cyclo.hpp"
#include "qaomoto/linalg.hpp"
#include "qaomoto/qring.hpp"

namespace qaomoto {

// Degree data N in {0, +-1}: rows indexed by the D-labels, columns by the
// C-labels of a flag decomposition. The coboundary in the rescaled chamber
// basis factors entrywise as N * [L]_q with L the separating weight, so N
// is the only extra input beyond the geometry. It is fixture-supplied; the
// assembly-time chain check makes inconsistent data loudly detectable.
struct DegreeData {
    Matrix<int> N;  // b x n
    std::vector<std::string> labels_c, labels_d;
    // Optional map to an external naming of the same chambers (row i of N
    // is called table_labels_d[i] there). Purely metadata.
    std::vector<std::string> table_labels_d;
};

// Schema: {"labels_c": [...], "labels_d": [...], "N": [[...]]}; labels must
// match the decomposition's labels exactly.
DegreeData parse_degree_fixture(const nlohmann::json& j, const FlagDecomposition& decomp);
DegreeData load_degree_fixture(const std::string& path, const FlagDecomposition& decomp);

// The q-deformed complex in the rescaled chamber basis:
//   Sq_j  = [L(C_0, C_j)]_q
//   Tq_ij = N_ij * [L(C_i, D_j)]_q
// with Tq * Sq = 0 exactly in the invariant ring.
struct QComplex {
    int n = 0, b = 0;
    std::vector<QNum> Sq;             // length n
    std::vector<std::vector<QNum>> Tq;  // b rows of length n

    std::vector<Int> gamma_S() const;  // q -> 1 image (the integer complex)
    IntMat gamma_T() const;
};

QComplex assemble(const FlagDecomposition& decomp, const std::vector<Int>& weights,
                  const DegreeData& deg);

bool verify_chain_q(const QComplex& qc);

// Specialization parameter: an exact root of unity zeta_m^k or a complex
// float. The caller always supplies the square root s0 of q0 = s0^2.
struct S0Spec {
    bool exact = false;
    long m = 0, k = 1;             // exact: s0 = zeta_m^k, carrier Q(zeta_m)
    std::complex<double> z;        // float s0
    double tol = 1e-9;             // float rank threshold

    static S0Spec root_of_unity(long m, long k = 1, double tol = 1e-9);
    static S0Spec complex_value(std::complex<double> z, double tol = 1e-9);
    // "zeta(12)", "zeta(8)^3", or a decimal complex "a+bi".
    static S0Spec parse(const std::string& text, double tol = 1e-9);
    // Principal square root of q0 (exact for roots of unity: zeta(2m)^k).
    static S0Spec principal_sqrt_of_q0(const S0Spec& q0);

    std::string s0_str() const;
    std::string q0_str() const;  // s0^2, reduced for roots of unity
    bool q0_is_one() const;
};

struct SpecReport {
    std::string s0, q0, carrier;
    long rank_s = 0, rank_t = 0;
    long h0 = 0, h1 = 0, h2 = 0;
    std::string warning;  // set when q0 = 1 (Aomoto-complex dimensions)

    bool operator==(const SpecReport&) const = default;
};

SpecReport specialize(const QComplex& qc, const S0Spec& s0);

// Monodromy-eigenspace dimensions of the Milnor fiber of the cone: for
// i = 1..n the complex with all weights 1 specialized at s0 = zeta_{2(n+1)}^i
// (so q0 = zeta_{n+1}^i), exact cyclotomic carrier.
struct MilnorRow {
    int i = 0;
    SpecReport report;
};

std::vector<MilnorRow> milnor_spectrum(const FlagDecomposition& decomp, const DegreeData& deg);

// Full L-data of a decomposition under given weights: the degree-0 vector
// L(C_0, C_j) and the b x n matrix L(C_i, D_j).
struct SeparationTable {
    std::vector<Int> L0;  // length n
    IntMat L;             // b x n
};

SeparationTable separation_table(const FlagDecomposition& decomp, const std::vector<Int>& weights);

}  // namespace qaomoto
