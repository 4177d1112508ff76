#include "qaomoto/osalg.hpp"

#include <algorithm>
#include <fstream>
#include <map>

namespace qaomoto {

OSAlgebra build_os(const Arrangement& arr) {
    OSAlgebra os;
    os.n = arr.n();
    os.points = intersection_points(arr);
    os.products.assign(static_cast<size_t>(os.n) * os.n, {});

    std::vector<int> point_of(static_cast<size_t>(os.n) * os.n, -1);
    for (size_t p = 0; p < os.points.size(); ++p) {
        const auto& inc = os.points[p].incident;
        for (size_t u = 0; u < inc.size(); ++u)
            for (size_t v = u + 1; v < inc.size(); ++v)
                point_of[inc[u] * os.n + inc[v]] = static_cast<int>(p);
    }

    // Basis block at each point: (i0, i_j) for j = 2..m.
    std::vector<int> basis_index(static_cast<size_t>(os.n) * os.n, -1);
    for (const auto& pt : os.points) {
        int i0 = pt.incident.front();
        for (size_t j = 1; j < pt.incident.size(); ++j) {
            basis_index[i0 * os.n + pt.incident[j]] = static_cast<int>(os.deg2_basis.size());
            os.deg2_basis.emplace_back(i0, pt.incident[j]);
        }
    }

    for (int i = 0; i < os.n; ++i) {
        for (int j = i + 1; j < os.n; ++j) {
            int p = point_of[i * os.n + j];
            if (p < 0) continue;  // parallel: e_i e_j = 0
            int i0 = os.points[p].incident.front();
            auto& expansion = os.products[i * os.n + j];
            if (i == i0) {
                expansion = {{basis_index[i0 * os.n + j], +1}};
            } else {
                // e_i e_j = e_{i0} e_j - e_{i0} e_i
                expansion = {{basis_index[i0 * os.n + j], +1}, {basis_index[i0 * os.n + i], -1}};
            }
        }
    }
    return os;
}

namespace {

IntMat int_matrix_from_json(const nlohmann::json& j, const char* name) {
    if (!j.is_array() || j.empty()) throw input_error(std::string(name) + " must be a nonempty matrix");
    size_t rows = j.size(), cols = j[0].size();
    IntMat m(rows, cols, Int(0));
    for (size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw input_error(std::string(name) + " rows must have equal length");
        for (size_t k = 0; k < cols; ++k) {
            if (!j[i][k].is_number_integer())
                throw input_error(std::string(name) + " entries must be integers");
            m(i, k) = Int(static_cast<long>(j[i][k].get<long long>()));
        }
    }
    return m;
}

}  // namespace

BasisChange parse_basis_change(const nlohmann::json& j) {
    if (!j.contains("P1") || !j.contains("P2"))
        throw input_error("basis-change file must contain \"P1\" and \"P2\"");
    BasisChange bc{int_matrix_from_json(j["P1"], "P1"), int_matrix_from_json(j["P2"], "P2")};
    if (bc.P1.rows != bc.P1.cols || bc.P2.rows != bc.P2.cols)
        throw input_error("basis-change matrices must be square");
    return bc;
}

BasisChange load_basis_change_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open basis-change file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw input_error("malformed JSON in " + path + ": " + e.what());
    }
    return parse_basis_change(j);
}

AomotoMatrices aomoto_matrices(const OSAlgebra& os, const std::vector<Int>& weights,
                               const std::optional<BasisChange>& basis) {
    if (static_cast<int>(weights.size()) != os.n) throw input_error("weight count mismatch");
    int n = os.n, b = os.b();

    // Standard-basis T: column j = expansion of omega wedge e_j.
    IntMat T(b, n, Int(0));
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            if (i == j || weights[i] == 0) continue;
            // e_i e_j with i > j picks up the exterior sign.
            int lo = std::min(i, j), hi = std::max(i, j);
            Int coeff = (i < j) ? weights[i] : -weights[i];
            for (const auto& [idx, sgn] : os.product(lo, hi)) T(idx, j) += coeff * sgn;
        }
    }
    std::vector<Int> S(weights);

    if (!basis) {
        AomotoMatrices am;
        am.S = std::move(S);
        am.T = std::move(T);
        am.basis_desc = "standard";
        return am;
    }

    if (static_cast<int>(basis->P1.rows) != n || static_cast<int>(basis->P2.rows) != b)
        throw input_error("basis-change matrix size does not match arrangement");
    Rat d1 = det(to_rat(basis->P1));
    Rat d2 = det(to_rat(basis->P2));
    if ((d1 != 1 && d1 != -1) || (d2 != 1 && d2 != -1)) throw input_error("basis not unimodular");

    RatMat p1inv = invert(to_rat(basis->P1));
    RatMat p2inv = invert(to_rat(basis->P2));

    RatMat svec(n, 1, Rat(0));
    for (int i = 0; i < n; ++i) svec(i, 0) = Rat(S[i]);
    RatMat s2 = mat_mul(p1inv, svec);
    RatMat t2 = mat_mul(p2inv, mat_mul(to_rat(T), to_rat(basis->P1)));

    AomotoMatrices am;
    am.S.resize(n);
    am.T = IntMat(b, n, Int(0));
    for (int i = 0; i < n; ++i) {
        if (s2(i, 0).get_den() != 1) throw math_error("basis change produced non-integer S");
        am.S[i] = s2(i, 0).get_num();
    }
    for (int i = 0; i < b; ++i)
        for (int j = 0; j < n; ++j) {
            if (t2(i, j).get_den() != 1) throw math_error("basis change produced non-integer T");
            am.T(i, j) = t2(i, j).get_num();
        }
    am.basis_desc = "custom";
    return am;
}

bool check_chain(const AomotoMatrices& am) {
    for (size_t i = 0; i < am.T.rows; ++i) {
        Int acc = 0;
        for (size_t j = 0; j < am.T.cols; ++j) acc += am.T(i, j) * am.S[j];
        if (acc != 0) return false;
    }
    return true;
}

QDeformVerdict is_canonically_qdeformable(const AomotoMatrices& am) {
    if (!check_chain(am)) throw math_error("not a chain complex");
    QDeformVerdict v;
    v.product.resize(am.T.rows);
    bool ok = true;
    for (size_t i = 0; i < am.T.rows; ++i) {
        QNum acc;
        for (size_t j = 0; j < am.T.cols; ++j) {
            if (am.T(i, j) == 0 || am.S[j] == 0) continue;
            if (!am.T(i, j).fits_slong_p() || !am.S[j].fits_slong_p())
                throw input_error("matrix entry too large for q-deformation");
            acc = acc + QNum::qint(am.T(i, j).get_si()) * QNum::qint(am.S[j].get_si());
        }
        if (!acc.is_zero()) ok = false;
        v.product[i] = std::move(acc);
    }
    v.deformable = ok;
    return v;
}

CohomDims aomoto_cohomology_dims(const AomotoMatrices& am, long field_p) {
    long n = static_cast<long>(am.T.cols);
    long b = static_cast<long>(am.T.rows);
    long rank_t = 0, rank_s = 0;

    IntMat smat(am.S.size(), 1, Int(0));
    for (size_t i = 0; i < am.S.size(); ++i) smat(i, 0) = am.S[i];

    if (field_p == 0) {
        rank_t = static_cast<long>(rank(to_rat(am.T)));
        rank_s = static_cast<long>(rank(to_rat(smat)));
    } else {
        if (!is_prime(field_p)) throw input_error("field characteristic must be prime");
        rank_t = static_cast<long>(rank(to_fp(am.T, field_p)));
        rank_s = static_cast<long>(rank(to_fp(smat, field_p)));
    }
    return CohomDims{1 - rank_s, n - rank_t - rank_s, b - rank_t};
}

std::vector<Int> wedge_square(const OSAlgebra& os, const std::vector<Int>& weights) {
    std::vector<Int> acc(os.b(), Int(0));
    for (int i = 0; i < os.n; ++i) {
        if (weights[i] == 0) continue;
        for (int j = 0; j < os.n; ++j) {
            if (i == j) continue;
            int lo = std::min(i, j), hi = std::max(i, j);
            Int coeff = weights[i] * weights[j];
            if (i > j) coeff = -coeff;
            for (const auto& [idx, sgn] : os.product(lo, hi)) acc[idx] += coeff * sgn;
        }
    }
    return acc;
}

}  // namespace qaomoto
