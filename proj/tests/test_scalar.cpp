#include <doctest.h>

#include "qtri/randomq.hpp"
#include "qtri/scalar.hpp"

using namespace qtri;

TEST_CASE("exact power") {
    CHECK(pow(Scalar::exact(1, 2), 3) == Scalar::exact(1, 8));
    CHECK(pow(Scalar::exact(7, 3), 0) == Scalar::exact(1));
    CHECK(pow(Scalar::exact(2, 3), -2) == Scalar::exact(9, 4));
    CHECK(pow(Scalar::exact(0), 0) == Scalar::exact(1));
    CHECK_THROWS_AS(pow(Scalar::exact(0), -1), Error);
    CHECK_THROWS_WITH_AS(pow(Scalar::exact(0), -3),
                         doctest::Contains("ZeroToNegativePower"), Error);
    // large exponents stay exact
    Scalar big = pow(Scalar::exact(1, 2), 3000);
    CHECK(big * pow(Scalar::exact(2), 3000) == Scalar::exact(1));
}

TEST_CASE("close") {
    CHECK(close(Scalar::exact(1, 3), Scalar::exact(1, 3), 0.0));
    CHECK_FALSE(close(Scalar::exact(1, 3), Scalar::exact(2, 3), 1.0)); // rel_tol ignored
    CHECK(close(Scalar::real(0.1 + 0.2), Scalar::real(0.3), 1e-10));
    CHECK_FALSE(close(Scalar::real(1.0), Scalar::real(1.1), 1e-10));
    CHECK_THROWS_AS((void)close(Scalar::exact(1), Scalar::real(1.0), 1e-10), Error);
}

TEST_CASE("mixed mode is rejected, never coerced") {
    Scalar e = Scalar::exact(1, 2);
    Scalar f = Scalar::real(0.5);
    CHECK_THROWS_AS((void)(e + f), Error);
    CHECK_THROWS_AS((void)(e * f), Error);
    CHECK_THROWS_AS((void)(e == f), Error);
    try {
        (void)(e - f);
        FAIL("expected throw");
    } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::MixedMode);
    }
}

TEST_CASE("lowest terms and positive denominator") {
    Scalar s = Scalar::exact(-4, -6);
    CHECK(s.rat().get_num() == 2);
    CHECK(s.rat().get_den() == 3);
    CHECK(Scalar::exact(6, 4).str() == "3/2");
    CHECK(Scalar::exact(8, 4).str() == "2");
}

TEST_CASE("parse and print round trip") {
    CHECK(Scalar::parse("2/5", Mode::Exact) == Scalar::exact(2, 5));
    CHECK(Scalar::parse("-7", Mode::Exact) == Scalar::exact(-7));
    CHECK(Scalar::parse("1/2", Mode::Float).dbl() == 0.5);
    CHECK(Scalar::parse("0.25", Mode::Float).dbl() == 0.25);
    CHECK_THROWS_AS(Scalar::parse("0.25", Mode::Exact), Error);
    CHECK_THROWS_AS(Scalar::parse("2/0", Mode::Exact), Error);
    CHECK_THROWS_AS(Scalar::parse("", Mode::Exact), Error);
    CHECK(Scalar::parse(Scalar::exact(-3, 7).str(), Mode::Exact) == Scalar::exact(-3, 7));
}

TEST_CASE("division by zero carries the factor name") {
    try {
        div_named(Scalar::exact(1), Scalar::exact(0), "q-Pochhammer factor (beta^2;q)_1");
        FAIL("expected throw");
    } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::DivisionByZero);
        CHECK(std::string(err.what()).find("(beta^2;q)_1") != std::string::npos);
    }
    CHECK_THROWS_AS((void)(Scalar::exact(1) / Scalar::exact(0)), Error);
}

TEST_CASE("exact field laws hold bit-for-bit on random rationals") {
    RationalSampler rng(20240817);
    for (int i = 0; i < 200; ++i) {
        Scalar a = rng.unit_fraction(Mode::Exact);
        Scalar b = rng.unit_fraction(Mode::Exact);
        Scalar c = rng.unit_fraction(Mode::Exact);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a / b) * b == a);
    }
}
