#pragma once

#include <random>
#include <set>
#include <vector>

#include "qaomoto/arrangement.hpp"
#include "qaomoto/linalg.hpp"
#include "qaomoto/qring.hpp"

namespace qaomoto::testutil {

inline QNum random_qnum(std::mt19937& rng, long max_index = 30, int max_terms = 5) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<long> idx(1, max_index);
    std::uniform_int_distribution<int> coeff(-9, 9);
    QNum x;
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) x = x + QNum::qint(idx(rng)) * Int(coeff(rng));
    return x;
}

inline XWord random_word(std::mt19937& rng, int max_terms = 5, int max_degree = 4,
                         long min_index = -6, long max_index = 8) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<long> idx(min_index, max_index);
    std::uniform_int_distribution<int> coeff(-9, 9);
    XWord w;
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        XWord::Term term;
        int d = deg(rng);
        for (int i = 0; i < d; ++i) term.mono.push_back(idx(rng));
        term.coeff = coeff(rng);
        w.terms.push_back(std::move(term));
    }
    return w;
}

// Laurent-expansion oracle for word normalization: substitute
// x_n -> expansion of [n]_q and multiply as plain Laurent polynomials.
inline QNum word_oracle(const XWord& w) {
    LaurentHalf total;
    for (const auto& term : w.terms) {
        LaurentHalf prod = LaurentHalf::monomial(0, 1);
        for (long idx : term.mono) prod = prod * QNum::qint(idx).to_laurent();
        total = total + prod * term.coeff;
    }
    return QNum::from_laurent(total);
}

inline Arrangement random_arrangement(std::mt19937& rng, int max_lines = 6) {
    std::uniform_int_distribution<int> nlines(1, max_lines);
    std::uniform_int_distribution<int> co(-3, 3);
    std::uniform_int_distribution<int> cw(-4, 4);
    Arrangement arr;
    std::set<std::pair<std::pair<Int, Int>, Int>> seen;
    int want = nlines(rng);
    int guard = 0;
    while (static_cast<int>(arr.lines.size()) < want && ++guard < 200) {
        int a = co(rng), b = co(rng), c = cw(rng);
        if (a == 0 && b == 0) continue;
        Line l = Line::make(Rat(a), Rat(b), Rat(c));
        if (!seen.insert({{l.a, l.b}, l.c}).second) continue;
        arr.lines.push_back(l);
    }
    for (size_t i = 0; i < arr.lines.size(); ++i) arr.weights.emplace_back(cw(rng));
    return arr;
}

inline std::vector<Int> random_weights(std::mt19937& rng, int n, int bound = 4) {
    std::uniform_int_distribution<int> cw(-bound, bound);
    std::vector<Int> w;
    for (int i = 0; i < n; ++i) w.emplace_back(cw(rng));
    return w;
}

// Random unimodular integer matrix: a product of elementary row operations
// applied to the identity.
inline IntMat random_unimodular(std::mt19937& rng, int n, int ops = 12) {
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::uniform_int_distribution<int> kind(0, 2);
    std::uniform_int_distribution<int> mult(-2, 2);
    IntMat m(n, n, Int(0));
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    for (int t = 0; t < ops; ++t) {
        int i = pick(rng), j = pick(rng);
        switch (kind(rng)) {
            case 0:
                if (i != j)
                    for (int k = 0; k < n; ++k) std::swap(m(i, k), m(j, k));
                break;
            case 1:
                for (int k = 0; k < n; ++k) m(i, k) = -m(i, k);
                break;
            default:
                if (i != j) {
                    Int f(mult(rng));
                    for (int k = 0; k < n; ++k) m(i, k) += f * m(j, k);
                }
        }
    }
    return m;
}

}  // namespace qaomoto::testutil
