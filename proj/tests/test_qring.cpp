#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "helpers.hpp"
#include "qaomoto/qring.hpp"

using namespace qaomoto;
using qaomoto::testutil::random_qnum;
using qaomoto::testutil::random_word;
using qaomoto::testutil::word_oracle;

namespace {

LaurentHalf s_power(long e) { return LaurentHalf::monomial(e, 1); }

}  // namespace

TEST_CASE("qint basics") {
    CHECK(QNum::qint(0).is_zero());
    CHECK(QNum::qint(1) == QNum::from_int(1));
    CHECK(QNum::qint(2).to_laurent() == s_power(1) + s_power(-1));
    CHECK(QNum::qint(-3) == -QNum::qint(3));
}

TEST_CASE("addition and negation") {
    CHECK((QNum::qint(3) + (-QNum::qint(3))).is_zero());
    CHECK(QNum::qint(2) + QNum::qint(2) == QNum::qint(2) * Int(2));
    QNum x = QNum::qint(5) * Int(2) + QNum::qint(1);
    CHECK(x - QNum::qint(1) == QNum::qint(5) * Int(2));
}

TEST_CASE("Clebsch-Gordan products") {
    CHECK(QNum::qint(3) * QNum::qint(2) == QNum::qint(4) + QNum::qint(2));
    for (long n = 1; n <= 10; ++n) CHECK(QNum::qint(n) * QNum::qint(1) == QNum::qint(n));
    // [2]^2 via the Laurent oracle: (s + s^-1)^2 = s^2 + 2 + s^-2
    QNum sq = QNum::from_laurent(QNum::qint(2).to_laurent() * QNum::qint(2).to_laurent());
    CHECK(QNum::qint(2) * QNum::qint(2) == sq);
    CHECK(sq == QNum::qint(3) + QNum::qint(1));
}

TEST_CASE("laurent conversions") {
    CHECK(QNum::qint(4).to_laurent() == s_power(3) + s_power(1) + s_power(-1) + s_power(-3));
    LaurentHalf p = s_power(2) + s_power(0) + s_power(-2);
    CHECK(QNum::from_laurent(p) == QNum::qint(3));
    CHECK_THROWS_AS(QNum::from_laurent(s_power(1)), input_error);
}

TEST_CASE("gamma") {
    CHECK(QNum::qint(7).gamma() == 7);
    CHECK((QNum::qint(3) * QNum::qint(2)).gamma() == 6);
    CHECK(QNum().gamma() == 0);
}

TEST_CASE("normalize_word examples") {
    CHECK(normalize_word(XWord::monomial({2, 2})) == word_oracle(XWord::monomial({2, 2})));
    CHECK(normalize_word(XWord::monomial({2, 2})) == QNum::qint(3) + QNum::qint(1));
    XWord w = XWord::monomial({0, 5}) + XWord::monomial({1});
    CHECK(normalize_word(w) == QNum::qint(1));
    XWord v = XWord::monomial({-2, 3});
    CHECK(normalize_word(v) == -(QNum::qint(4) + QNum::qint(2)));
    CHECK(normalize_word(v) == word_oracle(v));
}

TEST_CASE("evaluation at special points") {
    const std::complex<double> I(0.0, 1.0);
    auto near = [](std::complex<double> a, std::complex<double> b) {
        return std::abs(a - b) < 1e-12;
    };
    for (long n = 1; n <= 24; ++n) {
        double expect = (n % 4 == 1) ? 1.0 : (n % 4 == 3) ? -1.0 : 0.0;
        CHECK(near(QNum::qint(n).eval(I), expect));
    }
    const double r3 = std::sqrt(3.0);
    const std::complex<double> z12 = std::polar(1.0, std::acos(-1.0) / 6.0);
    auto zeta_case = [&](long n) -> double {
        switch (n % 12) {
            case 0: case 6: return 0.0;
            case 1: case 5: return 1.0;
            case 2: case 4: return r3;
            case 3: return 2.0;
            case 7: case 11: return -1.0;
            case 8: case 10: return -r3;
            default: return -2.0;  // 9
        }
    };
    for (long n = 1; n <= 24; ++n) CHECK(near(QNum::qint(n).eval(z12), zeta_case(n)));
    CHECK(near(QNum::qint(5).eval(1.0), 5.0));
    CHECK_THROWS_AS(QNum::qint(2).eval(0.0), input_error);
}

TEST_CASE("ring axioms on random values") {
    std::mt19937 rng(20240517);
    for (int t = 0; t < 300; ++t) {
        QNum x = random_qnum(rng), y = random_qnum(rng), z = random_qnum(rng);
        CHECK(x * y == y * x);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x * QNum::qint(1) == x);
    }
}

TEST_CASE("Clebsch-Gordan agrees with Laurent multiplication up to 30") {
    for (long m = 1; m <= 30; ++m)
        for (long n = 1; n <= 30; ++n) {
            LaurentHalf lhs = (QNum::qint(m) * QNum::qint(n)).to_laurent();
            LaurentHalf rhs = QNum::qint(m).to_laurent() * QNum::qint(n).to_laurent();
            CHECK(lhs == rhs);
        }
}

TEST_CASE("laurent round-trip and involution invariance") {
    std::mt19937 rng(7);
    for (int t = 0; t < 1000; ++t) {
        QNum x = random_qnum(rng);
        LaurentHalf p = x.to_laurent();
        CHECK(p.is_involution_invariant());
        CHECK(QNum::from_laurent(p) == x);
    }
}

TEST_CASE("gamma is a ring homomorphism") {
    std::mt19937 rng(11);
    for (int t = 0; t < 1000; ++t) {
        QNum x = random_qnum(rng), y = random_qnum(rng);
        CHECK((x * y).gamma() == x.gamma() * y.gamma());
        CHECK((x + y).gamma() == x.gamma() + y.gamma());
    }
}

TEST_CASE("normalize_word agrees with the Laurent oracle") {
    std::mt19937 rng(23);
    for (int t = 0; t < 1000; ++t) {
        XWord w = random_word(rng);
        CHECK(normalize_word(w) == word_oracle(w));
    }
}

TEST_CASE("eval at 1 equals gamma") {
    std::mt19937 rng(31);
    for (int t = 0; t < 200; ++t) {
        QNum x = random_qnum(rng);
        CHECK(std::abs(x.eval(1.0) - std::complex<double>(x.gamma().get_d())) < 1e-9);
    }
}

TEST_CASE("text rendering and parsing") {
    QNum x = QNum::qint(5) * Int(2) - QNum::qint(3) + QNum::qint(1);
    CHECK(x.str() == "2*[5] - [3] + 1");
    CHECK(QNum::parse("2*[5] - [3] + 1") == x);
    CHECK(QNum::parse("0").is_zero());
    CHECK(QNum::parse("-[4] + [2]") == -QNum::qint(4) + QNum::qint(2));
    CHECK(QNum::parse("7") == QNum::from_int(7));
    std::mt19937 rng(43);
    for (int t = 0; t < 300; ++t) {
        QNum r = random_qnum(rng);
        CHECK(QNum::parse(r.str()) == r);
    }
}
