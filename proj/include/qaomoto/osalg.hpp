#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qaomoto/arrangement.hpp"
#include "qaomoto/linalg.hpp"
#include "qaomoto/qring.hpp"

namespace qaomoto {

// Degree <= 2 part of the Orlik-Solomon algebra of a line arrangement.
// The degree-2 basis takes, at each intersection point with incident lines
// i_1 < ... < i_m, the pairs (i_1, i_j) for j = 2..m. For any other meeting
// pair i < j with minimal incident index i0, the boundary relation of the
// dependent triple {i0, i, j} gives e_i e_j = e_{i0} e_j - e_{i0} e_i;
// disjoint (parallel) pairs multiply to zero.
struct OSAlgebra {
    int n = 0;
    std::vector<std::pair<int, int>> deg2_basis;  // 0-based (i, j), i < j
    // expansion of e_i e_j (i < j) in deg2_basis: list of (basis index, +-1)
    std::vector<std::vector<std::pair<int, int>>> products;  // indexed by i*n+j
    std::vector<IntersectionPoint> points;

    int b() const { return static_cast<int>(deg2_basis.size()); }
    const std::vector<std::pair<int, int>>& product(int i, int j) const { return products[i * n + j]; }
};

OSAlgebra build_os(const Arrangement& arr);

// Unimodular change of basis: P1 columns = new degree-1 basis in the e_i
// coordinates, P2 columns = new degree-2 basis in deg2_basis coordinates.
struct BasisChange {
    IntMat P1, P2;
};

BasisChange parse_basis_change(const nlohmann::json& j);
BasisChange load_basis_change_file(const std::string& path);

// Coboundary matrices of (A^bullet, omega): omega wedge 1 has coordinates S
// in the degree-1 basis, omega wedge eta_i fills column i of T in the
// degree-2 basis. T*S = 0 over Z in any basis.
struct AomotoMatrices {
    std::vector<Int> S;  // length n
    IntMat T;            // b x n
    std::string basis_desc;
};

AomotoMatrices aomoto_matrices(const OSAlgebra& os, const std::vector<Int>& weights,
                               const std::optional<BasisChange>& basis = std::nullopt);

bool check_chain(const AomotoMatrices& am);

// Entrywise canonical q-deformation [T]_q [S]_q; the basis is canonically
// q-deformable iff the product vanishes identically in the invariant ring.
struct QDeformVerdict {
    bool deformable = false;
    std::vector<QNum> product;  // length b, the witness
};

QDeformVerdict is_canonically_qdeformable(const AomotoMatrices& am);

struct CohomDims {
    long h0 = 0, h1 = 0, h2 = 0;
    bool operator==(const CohomDims&) const = default;
};

// field_p = 0 means Q; otherwise ranks are taken mod the prime p.
CohomDims aomoto_cohomology_dims(const AomotoMatrices& am, long field_p = 0);

// omega wedge omega expanded through the product table (sanity hook).
std::vector<Int> wedge_square(const OSAlgebra& os, const std::vector<Int>& weights);

}  // namespace qaomoto
