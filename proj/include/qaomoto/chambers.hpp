#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qaomoto/arrangement.hpp"

namespace qaomoto {

// A chamber is identified by its sign vector (+1: ax+by > c, -1: below);
// the witness is an exact rational interior point.
struct Chamber {
    std::vector<int8_t> sign;
    Rat wx, wy;

    std::string sign_str() const;  // e.g. "--+?" rendered as '-'/'+'
};

// Generic flag F0 in F1: F1 is parallel to no member line and misses every
// intersection point; all crossings lie strictly after F0 in `direction`.
struct Flag {
    Line f1;
    Rat x0, y0;    // F0
    Rat dx, dy;    // direction along f1
};

// ch^0 = {C_0} (contains F0), ch^1 = chambers met by F1 beyond F0 in
// crossing order, ch^2 = the rest in lexicographic sign order.
struct FlagDecomposition {
    Flag flag;
    Chamber ch0;
    std::vector<Chamber> ch1;
    std::vector<Chamber> ch2;
    std::vector<int> crossing_order;  // 0-based member index crossed k-th

    int n() const { return static_cast<int>(ch1.size()); }
    int b() const { return static_cast<int>(ch2.size()); }
    // Stable label sets "C0","C1",...,"D1",...
    std::vector<std::string> labels_c() const;
    std::vector<std::string> labels_d() const;
};

// Every realized sign vector exactly once, verified against the region
// count 1 + n + sum_p (m_p - 1); retries with halved epsilon on mismatch.
std::vector<Chamber> enumerate_chambers(const Arrangement& arr);

Flag auto_flag(const Arrangement& arr);

FlagDecomposition decompose(const Arrangement& arr, const std::vector<Chamber>& chambers,
                            const Flag& flag);

// Indices (0-based) where the sign vectors differ, and the weight sum over
// that separating set.
std::pair<std::vector<int>, Int> separating_weight(const Chamber& c1, const Chamber& c2,
                                                   const std::vector<Int>& weights);

}  // namespace qaomoto
