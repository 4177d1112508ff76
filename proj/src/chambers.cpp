#include "qaomoto/chambers.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qaomoto {

std::string Chamber::sign_str() const {
    std::string s;
    s.reserve(sign.size());
    for (int8_t v : sign) s += (v > 0 ? '+' : '-');
    return s;
}

std::vector<std::string> FlagDecomposition::labels_c() const {
    std::vector<std::string> l;
    for (int i = 1; i <= n(); ++i) l.push_back("C" + std::to_string(i));
    return l;
}

std::vector<std::string> FlagDecomposition::labels_d() const {
    std::vector<std::string> l;
    for (int i = 1; i <= b(); ++i) l.push_back("D" + std::to_string(i));
    return l;
}

namespace {

std::vector<int8_t> sign_vector(const Arrangement& arr, const Rat& x, const Rat& y) {
    std::vector<int8_t> s(arr.lines.size());
    for (size_t i = 0; i < arr.lines.size(); ++i) {
        int v = arr.lines[i].side(x, y);
        if (v == 0) return {};  // on a line: not a chamber point
        s[i] = static_cast<int8_t>(v);
    }
    return s;
}

Rat abs_rat(const Rat& r) { return r < 0 ? Rat(-r) : r; }

// Half of a lower bound for the smallest feature scale: vertex-vertex L1
// gaps and vertex-to-nonincident-line margins. Exact rational throughout;
// the Zaslavsky recount below is what actually guarantees correctness.
Rat initial_epsilon(const Arrangement& arr, const std::vector<IntersectionPoint>& pts) {
    Rat eps(1);
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j) {
            Rat gap = abs_rat(pts[i].x - pts[j].x) + abs_rat(pts[i].y - pts[j].y);
            if (gap / 4 < eps) eps = gap / 4;
        }
    for (const auto& pt : pts)
        for (size_t li = 0; li < arr.lines.size(); ++li) {
            const Line& l = arr.lines[li];
            Rat v = Rat(l.a) * pt.x + Rat(l.b) * pt.y - Rat(l.c);
            if (v == 0) continue;
            Rat margin = abs_rat(v) / (Rat(abs(l.a)) + Rat(abs(l.b))) / 4;
            if (margin < eps) eps = margin;
        }
    return eps / 2;
}

void add_candidate(std::map<std::vector<int8_t>, std::pair<Rat, Rat>>& found, const Arrangement& arr,
                   const Rat& x, const Rat& y) {
    auto s = sign_vector(arr, x, y);
    if (s.empty()) return;
    found.emplace(std::move(s), std::make_pair(x, y));
}

}  // namespace

std::vector<Chamber> enumerate_chambers(const Arrangement& arr) {
    if (arr.n() < 1) throw input_error("arrangement has no lines");
    auto pts = intersection_points(arr);
    long expected = 1 + arr.n() + deg2_rank(pts);

    Rat eps = initial_epsilon(arr, pts);
    for (int attempt = 0; attempt < 10; ++attempt, eps /= 2) {
        std::map<std::vector<int8_t>, std::pair<Rat, Rat>> found;

        // Diagonal offsets around every vertex.
        for (const auto& pt : pts)
            for (int sx : {-1, +1})
                for (int sy : {-1, +1})
                    add_candidate(found, arr, pt.x + eps * sx, pt.y + eps * sy);

        // Perpendicular offsets from edge midpoints (and beyond the extreme
        // vertices) of every line; every chamber borders some edge.
        for (const auto& l : arr.lines) {
            // base point and direction of the line
            Rat px, py;
            if (l.b != 0) {
                px = 0;
                py = make_rat(l.c, l.b);
            } else {
                px = make_rat(l.c, l.a);
                py = 0;
            }
            Rat dx(l.b), dy(-l.a);
            auto param_of = [&](const Rat& x, const Rat& y) {
                return dx != 0 ? Rat((x - px) / dx) : Rat((y - py) / dy);
            };
            std::vector<Rat> params;
            for (const auto& pt : pts)
                if (Rat(l.a) * pt.x + Rat(l.b) * pt.y == Rat(l.c)) params.push_back(param_of(pt.x, pt.y));
            std::sort(params.begin(), params.end());
            std::vector<Rat> samples;
            if (params.empty()) {
                samples.push_back(Rat(0));
            } else {
                samples.push_back(params.front() - 1);
                for (size_t k = 0; k + 1 < params.size(); ++k)
                    samples.push_back((params[k] + params[k + 1]) / 2);
                samples.push_back(params.back() + 1);
            }
            for (const Rat& t : samples) {
                Rat sx = px + t * dx, sy = py + t * dy;
                add_candidate(found, arr, sx + eps * l.a, sy + eps * l.b);
                add_candidate(found, arr, sx - eps * l.a, sy - eps * l.b);
            }
        }

        // Exterior grid around the vertex bounding box.
        if (!pts.empty()) {
            Rat minx = pts.front().x, maxx = pts.front().x, miny = pts.front().y, maxy = pts.front().y;
            for (const auto& pt : pts) {
                minx = std::min(minx, pt.x);
                maxx = std::max(maxx, pt.x);
                miny = std::min(miny, pt.y);
                maxy = std::max(maxy, pt.y);
            }
            const Rat xs[3] = {Rat(minx - 1), Rat((minx + maxx) / 2), Rat(maxx + 1)};
            const Rat ys[3] = {Rat(miny - 1), Rat((miny + maxy) / 2), Rat(maxy + 1)};
            for (const Rat& x : xs)
                for (const Rat& y : ys) add_candidate(found, arr, x, y);
        }

        if (static_cast<long>(found.size()) == expected) {
            std::vector<Chamber> out;
            out.reserve(found.size());
            for (const auto& [sgn, w] : found) out.push_back(Chamber{sgn, w.first, w.second});
            return out;
        }
        if (static_cast<long>(found.size()) > expected)
            throw math_error("chamber count mismatch (found more sign vectors than regions)");
    }
    throw math_error("chamber count mismatch");
}

Flag auto_flag(const Arrangement& arr) {
    auto pts = intersection_points(arr);

    // Slope candidates 0, 1, 1/2, 1/3, ...: skip any parallel to a member.
    Rat slope(0);
    for (long k = 0;; ++k) {
        slope = (k == 0) ? Rat(0) : make_rat(Int(1), Int(k));
        bool parallel = false;
        for (const Line& l : arr.lines)
            if (Rat(l.a) + Rat(l.b) * slope == 0) {  // direction (1, slope)
                parallel = true;
                break;
            }
        if (!parallel) break;
    }

    // Height below every vertex (in the sheared coordinate y - slope*x).
    Rat h(0);
    if (!pts.empty()) {
        Rat minv = pts.front().y - slope * pts.front().x;
        for (const auto& pt : pts) minv = std::min(minv, Rat(pt.y - slope * pt.x));
        h = minv - 1;
    }

    Flag f;
    f.f1 = Line::make(-slope, Rat(1), h);  // y = slope*x + h
    f.dx = 1;
    f.dy = slope;

    // F0 strictly before the first crossing along +x.
    Rat x0(0);
    bool have = false;
    for (const Line& l : arr.lines) {
        Rat den = Rat(l.a) + Rat(l.b) * slope;
        Rat x = (Rat(l.c) - Rat(l.b) * h) / den;
        if (!have || x < x0) {
            x0 = x;
            have = true;
        }
    }
    f.x0 = x0 - 1;
    f.y0 = slope * f.x0 + h;
    return f;
}

FlagDecomposition decompose(const Arrangement& arr, const std::vector<Chamber>& chambers,
                            const Flag& flag) {
    int n = arr.n();

    // Crossing parameters along F1; genericity means all denominators are
    // nonzero and the parameters are distinct and strictly positive.
    std::vector<std::pair<Rat, int>> crossings;
    for (int i = 0; i < n; ++i) {
        const Line& l = arr.lines[i];
        Rat den = Rat(l.a) * flag.dx + Rat(l.b) * flag.dy;
        if (den == 0) throw math_error("flag not generic (parallel member line)");
        Rat t = (Rat(l.c) - Rat(l.a) * flag.x0 - Rat(l.b) * flag.y0) / den;
        if (t <= 0) throw math_error("flag not generic (crossing not beyond F0)");
        crossings.emplace_back(t, i);
    }
    std::sort(crossings.begin(), crossings.end());
    for (size_t k = 0; k + 1 < crossings.size(); ++k)
        if (crossings[k].first == crossings[k + 1].first)
            throw math_error("flag not generic (passes through an intersection point)");

    std::map<std::vector<int8_t>, const Chamber*> by_sign;
    for (const auto& c : chambers) by_sign[c.sign] = &c;
    auto chamber_at = [&](const Rat& t) -> Chamber {
        Rat x = flag.x0 + t * flag.dx, y = flag.y0 + t * flag.dy;
        std::vector<int8_t> s(n);
        for (int i = 0; i < n; ++i) {
            int v = arr.lines[i].side(x, y);
            if (v == 0) throw math_error("flag not generic (sample point on a line)");
            s[i] = static_cast<int8_t>(v);
        }
        auto it = by_sign.find(s);
        if (it == by_sign.end()) throw math_error("flag sample hit an unenumerated chamber");
        Chamber c = *it->second;
        c.wx = x;
        c.wy = y;
        return c;
    };

    FlagDecomposition d;
    d.flag = flag;
    d.ch0 = chamber_at(Rat(0));
    std::set<std::vector<int8_t>> used{d.ch0.sign};
    for (size_t k = 0; k < crossings.size(); ++k) {
        Rat t = (k + 1 < crossings.size()) ? Rat((crossings[k].first + crossings[k + 1].first) / 2)
                                           : Rat(crossings[k].first + 1);
        Chamber c = chamber_at(t);
        if (!used.insert(c.sign).second) throw math_error("flag not generic (chamber met twice)");
        d.ch1.push_back(std::move(c));
        d.crossing_order.push_back(crossings[k].second);
    }
    for (const auto& c : chambers)
        if (!used.count(c.sign)) d.ch2.push_back(c);
    std::sort(d.ch2.begin(), d.ch2.end(),
              [](const Chamber& a, const Chamber& b) { return a.sign < b.sign; });
    return d;
}

std::pair<std::vector<int>, Int> separating_weight(const Chamber& c1, const Chamber& c2,
                                                   const std::vector<Int>& weights) {
    if (c1.sign.size() != c2.sign.size() || c1.sign.size() != weights.size())
        throw input_error("chambers belong to different arrangements");
    std::vector<int> sep;
    Int L = 0;
    for (size_t i = 0; i < c1.sign.size(); ++i)
        if (c1.sign[i] != c2.sign[i]) {
            sep.push_back(static_cast<int>(i));
            L += weights[i];
        }
    return {std::move(sep), std::move(L)};
}

}  // namespace qaomoto
