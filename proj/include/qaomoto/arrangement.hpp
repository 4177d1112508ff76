#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qaomoto/rational.hpp"

namespace qaomoto {

// Affine line {ax + by = c}. Canonical form: integer coefficients with
// gcd(a,b,c) = 1 and the first nonzero of (a,b) positive, so equality is
// componentwise.
struct Line {
    Int a, b, c;

    static Line make(const Rat& a, const Rat& b, const Rat& c);
    bool operator==(const Line& o) const { return a == o.a && b == o.b && c == o.c; }
    bool operator<(const Line& o) const;
    bool parallel_to(const Line& o) const { return a * o.b - b * o.a == 0; }
    // Sign of ax + by - c at a point: +1 / 0 / -1.
    int side(const Rat& x, const Rat& y) const;
    std::string str() const;
};

struct Arrangement {
    std::vector<Line> lines;   // index i <-> hyperplane H_{i+1} in I/O
    std::vector<Int> weights;  // omega = sum weights[i] * e_{i+1}

    int n() const { return static_cast<int>(lines.size()); }
};

struct IntersectionPoint {
    Rat x, y;
    std::vector<int> incident;  // 0-based line indices, sorted, size >= 2
};

// Schema: {"lines": [[a,b,c], ...], "weights": [w, ...]}, rationals given as
// integers or "p/q" strings.
Arrangement parse_arrangement(const nlohmann::json& j);
Arrangement load_arrangement_file(const std::string& path);

// All pairwise intersections, merged at multiple points, sorted by (x, y).
std::vector<IntersectionPoint> intersection_points(const Arrangement& arr);

// Sum over points of (multiplicity - 1) = rank of the degree-2 part.
long deg2_rank(const std::vector<IntersectionPoint>& pts);

}  // namespace qaomoto
