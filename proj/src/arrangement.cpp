#include "qaomoto/arrangement.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace qaomoto {

Line Line::make(const Rat& ra, const Rat& rb, const Rat& rc) {
    if (ra == 0 && rb == 0) throw input_error("degenerate line (a=b=0)");
    // Clear denominators, divide by the content, fix the leading sign.
    Int den = lcm(lcm(ra.get_den(), rb.get_den()), rc.get_den());
    Int a = ra.get_num() * (den / ra.get_den());
    Int b = rb.get_num() * (den / rb.get_den());
    Int c = rc.get_num() * (den / rc.get_den());
    Int g = gcd(gcd(a, b), c);
    if (g != 0) {
        a /= g;
        b /= g;
        c /= g;
    }
    int lead = (a != 0) ? sgn(a) : sgn(b);
    if (lead < 0) {
        a = -a;
        b = -b;
        c = -c;
    }
    return Line{a, b, c};
}

bool Line::operator<(const Line& o) const {
    if (a != o.a) return a < o.a;
    if (b != o.b) return b < o.b;
    return c < o.c;
}

int Line::side(const Rat& x, const Rat& y) const {
    Rat v = Rat(a) * x + Rat(b) * y - Rat(c);
    return sgn(v);
}

std::string Line::str() const {
    std::ostringstream os;
    os << a.get_str() << "x + " << b.get_str() << "y = " << c.get_str();
    return os.str();
}

namespace {

Rat rat_from_json(const nlohmann::json& v) {
    if (v.is_number_integer()) return Rat(static_cast<long>(v.get<long long>()));
    if (v.is_string()) return parse_rat(v.get<std::string>());
    throw input_error("expected integer or \"p/q\" string in arrangement file");
}

}  // namespace

Arrangement parse_arrangement(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("lines") || !j["lines"].is_array())
        throw input_error("arrangement file must contain a \"lines\" array");
    Arrangement arr;
    for (const auto& lj : j["lines"]) {
        if (!lj.is_array() || lj.size() != 3)
            throw input_error("each line must be a triple [a, b, c]");
        arr.lines.push_back(Line::make(rat_from_json(lj[0]), rat_from_json(lj[1]), rat_from_json(lj[2])));
    }
    if (arr.lines.empty()) throw input_error("arrangement has no lines");
    for (size_t i = 0; i < arr.lines.size(); ++i)
        for (size_t k = i + 1; k < arr.lines.size(); ++k)
            if (arr.lines[i] == arr.lines[k])
                throw input_error("duplicate line (H" + std::to_string(i + 1) + " = H" + std::to_string(k + 1) + ")");
    if (j.contains("weights")) {
        if (!j["weights"].is_array() || j["weights"].size() != arr.lines.size())
            throw input_error("weight count mismatch");
        for (const auto& wj : j["weights"]) {
            if (wj.is_number_integer()) {
                arr.weights.emplace_back(static_cast<long>(wj.get<long long>()));
            } else if (wj.is_string()) {
                try {
                    arr.weights.emplace_back(Int(wj.get<std::string>()));
                } catch (const std::invalid_argument&) {
                    throw input_error("weights must be integers");
                }
            } else {
                throw input_error("weights must be integers");
            }
        }
    } else {
        arr.weights.assign(arr.lines.size(), Int(1));
    }
    return arr;
}

Arrangement load_arrangement_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open arrangement file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw input_error("malformed JSON in " + path + ": " + e.what());
    }
    return parse_arrangement(j);
}

std::vector<IntersectionPoint> intersection_points(const Arrangement& arr) {
    std::map<std::pair<Rat, Rat>, std::vector<int>> at;
    int n = arr.n();
    for (int i = 0; i < n; ++i) {
        for (int k = i + 1; k < n; ++k) {
            const Line& p = arr.lines[i];
            const Line& q = arr.lines[k];
            Int d = p.a * q.b - p.b * q.a;
            if (d == 0) continue;  // parallel pair
            Rat x = make_rat(p.c * q.b - p.b * q.c, d);
            Rat y = make_rat(p.a * q.c - p.c * q.a, d);
            auto& inc = at[{x, y}];
            if (std::find(inc.begin(), inc.end(), i) == inc.end()) inc.push_back(i);
            if (std::find(inc.begin(), inc.end(), k) == inc.end()) inc.push_back(k);
        }
    }
    std::vector<IntersectionPoint> pts;
    pts.reserve(at.size());
    for (auto& [xy, inc] : at) {
        std::sort(inc.begin(), inc.end());
        pts.push_back(IntersectionPoint{xy.first, xy.second, inc});
    }
    return pts;
}

long deg2_rank(const std::vector<IntersectionPoint>& pts) {
    long b = 0;
    for (const auto& p : pts) b += static_cast<long>(p.incident.size()) - 1;
    return b;
}

}  // namespace qaomoto
