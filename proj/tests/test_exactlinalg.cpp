#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <random>

#include "helpers.hpp"
#include "qaomoto/cyclo.hpp"
#include "qaomoto/linalg.hpp"

using namespace qaomoto;

namespace {

std::vector<Int> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

CycloElem random_cyclo(std::mt19937& rng, long m) {
    std::uniform_int_distribution<int> c(-5, 5);
    CycloElem x(m);
    CycloElem z = CycloElem::zeta(m, 1);
    CycloElem zp = CycloElem::from_rat(m, 1);
    size_t deg = x.vec().size();
    for (size_t i = 0; i < deg; ++i) {
        x = x + zp * Rat(c(rng));
        zp = zp * z;
    }
    return x;
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_poly(1) == ints({-1, 1}));
    CHECK(cyclotomic_poly(4) == ints({1, 0, 1}));
    CHECK(cyclotomic_poly(12) == ints({1, 0, -1, 0, 1}));
    CHECK(cyclotomic_poly(2) == ints({1, 1}));
    CHECK(cyclotomic_poly(6) == ints({1, -1, 1}));
}

TEST_CASE("cyclotomic arithmetic") {
    CycloElem i4 = CycloElem::zeta(4, 1);
    CHECK(i4 * i4 == CycloElem::from_rat(4, -1));

    // zeta_12 + zeta_12^{-1} squares to 3.
    CycloElem r3 = CycloElem::zeta(12, 1) + CycloElem::zeta(12, -1);
    CHECK(r3 * r3 == CycloElem::from_rat(12, 3));

    CHECK(CycloElem::zeta(6, 1).inv() == CycloElem::zeta(6, 5));
    CHECK_THROWS_AS(CycloElem(6).inv(), input_error);
    CHECK_THROWS_AS(CycloElem::zeta(4, 1) + CycloElem::zeta(6, 1), input_error);
}

TEST_CASE("cyclotomic field axioms") {
    std::mt19937 rng(99);
    for (long m : {4L, 6L, 12L}) {
        for (int t = 0; t < 40; ++t) {
            CycloElem a = random_cyclo(rng, m), b = random_cyclo(rng, m), c = random_cyclo(rng, m);
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            if (!a.is_zero()) CHECK(a * a.inv() == CycloElem::from_rat(m, 1));
        }
    }
}

TEST_CASE("cyclotomic eval matches float eval") {
    std::mt19937 rng(123);
    for (long m : {3L, 4L, 6L, 8L, 12L, 16L, 24L}) {
        CycloElem s0 = CycloElem::zeta(m, 1);
        std::complex<double> z0 = s0.to_complex();
        for (int t = 0; t < 20; ++t) {
            QNum x = testutil::random_qnum(rng, 20);
            CHECK(std::abs(eval_qnum(x, s0).to_complex() - x.eval(z0)) < 1e-9);
        }
    }
}

TEST_CASE("rank basics") {
    RatMat z(4, 5, Rat(0));
    CHECK(rank(z) == 0);

    RatMat m(2, 3, Rat(0));
    m(0, 0) = 1;
    m(0, 1) = 2;
    m(0, 2) = 3;
    m(1, 0) = 2;
    m(1, 1) = 4;
    m(1, 2) = 6;
    CHECK(rank(m) == 1);
    m(1, 2) = 7;
    CHECK(rank(m) == 2);
}

TEST_CASE("rank properties on random rational matrices") {
    std::mt19937 rng(7777);
    std::uniform_int_distribution<int> dim(1, 6), entry(-6, 6);
    for (int t = 0; t < 100; ++t) {
        size_t r = dim(rng), c = dim(rng);
        RatMat m(r, c, Rat(0));
        for (auto& v : m.a) v = entry(rng);
        size_t rk = rank(m);
        CHECK(rank(m.transposed()) == rk);

        // permuted rows
        RatMat p = m;
        if (r > 1)
            for (size_t i = 0; i < r; ++i) {
                size_t j = std::uniform_int_distribution<size_t>(0, r - 1)(rng);
                for (size_t k = 0; k < c; ++k) std::swap(p(i, k), p(j, k));
            }
        CHECK(rank(p) == rk);

        // float carrier agrees on integer matrices
        Matrix<std::complex<double>> f(r, c);
        for (size_t i = 0; i < m.a.size(); ++i) f.a[i] = m.a[i].get_d();
        CHECK(rank_float(f) == rk);
    }
}

TEST_CASE("Fp rank") {
    // (1 1 1; 2 2 2) has rank 1 over Q and rank 1 over F3; mod 2 the rows
    // become (1 1 1; 0 0 0).
    IntMat m(2, 3, Int(0));
    m(0, 0) = 1;
    m(0, 1) = 1;
    m(0, 2) = 1;
    m(1, 0) = 2;
    m(1, 1) = 2;
    m(1, 2) = 2;
    CHECK(rank(to_fp(m, 3)) == 1);
    CHECK(rank(to_fp(m, 2)) == 1);
    m(1, 2) = 3;
    CHECK(rank(to_rat(m)) == 2);
    CHECK(rank(to_fp(m, 3)) == 2);  // rows (1,1,1),(2,2,0)
}

TEST_CASE("invert and det") {
    IntMat p(2, 2, Int(0));
    p(0, 0) = 1;
    p(0, 1) = -1;
    p(1, 0) = 0;
    p(1, 1) = 1;
    CHECK(det(to_rat(p)) == 1);
    RatMat inv = invert(to_rat(p));
    RatMat prod = mat_mul(inv, to_rat(p));
    CHECK(prod(0, 0) == 1);
    CHECK(prod(0, 1) == 0);
    CHECK(prod(1, 0) == 0);
    CHECK(prod(1, 1) == 1);

    RatMat sing(2, 2, Rat(1));
    CHECK(det(sing) == 0);
    CHECK_THROWS_AS(invert(sing), math_error);
}

TEST_CASE("is_prime") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(101));
    CHECK(!is_prime(1));
    CHECK(!is_prime(91));
}
