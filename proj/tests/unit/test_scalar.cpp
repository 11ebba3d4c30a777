#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sdirac/scalar.hpp"

using namespace sdirac;

namespace {

Scalar random_scalar(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 5);
    auto q = [&] { return Rational(num(rng), den(rng)); };
    return Scalar::make(q(), q(), q(), q());
}

}  // namespace

TEST_CASE("basis relations") {
    CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
    CHECK(Scalar::sqrt2() * Scalar::sqrt2() == Scalar(2));
    CHECK(Scalar::i() * Scalar::sqrt2() == Scalar::i_sqrt2());
    CHECK(Scalar::i_sqrt2() * Scalar::i_sqrt2() == Scalar(-2));
    // (1+i)(1-i) = 2
    Scalar one_plus_i = Scalar(1) + Scalar::i();
    Scalar one_minus_i = Scalar(1) - Scalar::i();
    CHECK(one_plus_i * one_minus_i == Scalar(2));
}

TEST_CASE("inverse of 1 + sqrt2 is -1 + sqrt2") {
    Scalar z = Scalar(1) + Scalar::sqrt2();
    CHECK(z.inverse() == Scalar(-1) + Scalar::sqrt2());
    CHECK(z.inverse() * z == Scalar(1));
}

TEST_CASE("inverse of zero throws") {
    CHECK_THROWS_AS(Scalar(0).inverse(), DivisionByZero);
}

TEST_CASE("field laws on randomized triples") {
    std::mt19937 rng(20240915);
    for (int trial = 0; trial < 1000; ++trial) {
        Scalar x = random_scalar(rng), y = random_scalar(rng), z = random_scalar(rng);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK((x + y) * z == x * z + y * z);
        if (!x.is_zero()) {
            CHECK(x.inverse().inverse() == x);
            CHECK(x * x.inverse() == Scalar(1));
        }
    }
}

TEST_CASE("rational embedding and equality after normalization") {
    CHECK(Scalar(Rational(2, 4)) == Scalar(Rational(1, 2)));
    CHECK(Scalar::make(Rational(1, 2), 0, 0, 0).is_rational());
    CHECK_FALSE((Scalar(1) + Scalar::i()).is_rational());
    Scalar sum = Scalar::fraction(1, 3) + Scalar::fraction(1, 6);
    CHECK(sum == Scalar::fraction(1, 2));
}

TEST_CASE("conjugations are automorphisms") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        Scalar x = random_scalar(rng), y = random_scalar(rng);
        CHECK((x * y).conj_i() == x.conj_i() * y.conj_i());
        CHECK((x * y).conj_sqrt2() == x.conj_sqrt2() * y.conj_sqrt2());
        CHECK((x + y).conj_i() == x.conj_i() + y.conj_i());
    }
}

TEST_CASE("wire format is the 4-tuple of reduced fractions") {
    Scalar z = Scalar::make(Rational(1, 2), Rational(-2, 4), Rational(3), Rational(0));
    auto t = z.tuple4();
    CHECK(t[0] == "1/2");
    CHECK(t[1] == "-1/2");
    CHECK(t[2] == "3/1");
    CHECK(t[3] == "0/1");
}

TEST_CASE("printing") {
    CHECK(Scalar(0).str() == "0");
    CHECK((Scalar(1) + Scalar::i()).str() == "1 + i");
    CHECK((-Scalar::sqrt2()).str() == "-sqrt2");
    CHECK(Scalar::fraction(-1, 2).str() == "-1/2");
}
