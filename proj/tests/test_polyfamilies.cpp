#include <doctest.h>

#include "qtri/polyfamilies.hpp"
#include "qtri/qseries.hpp"
#include "qtri/randomq.hpp"

using namespace qtri;

TEST_CASE("c_ultra small degrees") {
    Scalar q = Scalar::exact(1, 2), beta = Scalar::exact(1, 4);
    CHECK(c_ultra(0, beta, q) == TrigPoly::one(Mode::Exact));

    TrigPoly c1 = c_ultra(1, beta, q);
    Scalar expect = (Scalar::exact(1) - beta) / (Scalar::exact(1) - q);
    CHECK(c1.coeff(1) == expect);
    CHECK(c1.coeff(-1) == expect);

    TrigPoly c2 = c_ultra(2, beta, q);
    CHECK(c2.coeff(2) == Scalar::exact(7, 4));
    CHECK(c2.coeff(0) == Scalar::exact(9, 4));
    CHECK(c2.coeff(-2) == Scalar::exact(7, 4));
    CHECK(c2.coeff(1).is_zero());
}

TEST_CASE("c_hermite small degrees and normalization") {
    Scalar q = Scalar::exact(1, 3);
    CHECK(c_hermite(0, q) == TrigPoly::one(Mode::Exact));
    TrigPoly h1 = c_hermite(1, q);
    CHECK(h1.coeff(1) == Scalar::exact(1));
    CHECK(h1.coeff(-1) == Scalar::exact(1));

    // H_n(x|q) = (q;q)_n C_n(x;0|q)
    for (long n = 0; n <= 12; ++n)
        CHECK(c_hermite(n, q) == qpoch(q, q, n) * c_ultra(n, Scalar::exact(0), q));
}

TEST_CASE("c_hermite_qinv") {
    Scalar q = Scalar::exact(1, 2);
    CHECK(c_hermite_qinv(0, q) == TrigPoly::one(Mode::Exact));
    TrigPoly h1 = c_hermite_qinv(1, q);
    CHECK(h1.coeff(1) == Scalar::exact(1));
    CHECK(h1.coeff(-1) == Scalar::exact(1));
}

TEST_CASE("base inversion duality") {
    // C_n(x;beta|q) = (beta q^{-1})^n C_n(x;beta^{-1}|q^{-1})
    Scalar q = Scalar::exact(1, 3), beta = Scalar::exact(2, 5);
    Scalar qi = Scalar::exact(3), bi = Scalar::exact(5, 2);
    for (long n = 0; n <= 8; ++n)
        CHECK(c_ultra(n, beta, q) == pow(beta / q, n) * c_ultra(n, bi, qi));
}

TEST_CASE("beta = 1 collapses to delta_{n,0}") {
    Scalar q = Scalar::exact(2, 7);
    CHECK(c_ultra(0, Scalar::exact(1), q) == TrigPoly::one(Mode::Exact));
    for (long n = 1; n <= 6; ++n)
        CHECK(c_ultra(n, Scalar::exact(1), q).is_zero());
}

TEST_CASE("gegenbauer small degrees") {
    Scalar alpha = Scalar::exact(2, 5);
    CHECK(gegenbauer(0, alpha) == TrigPoly::one(Mode::Exact));
    TrigPoly g1 = gegenbauer(1, alpha);
    CHECK(g1.coeff(1) == alpha);
    CHECK(g1.coeff(-1) == alpha);
}

TEST_CASE("constructors keep symmetry and parity up to degree 20") {
    RationalSampler rng(31);
    Scalar q = rng.unit_fraction(Mode::Exact);
    Scalar beta = rng.unit_fraction(Mode::Exact);
    Scalar alpha = rng.unit_fraction(Mode::Exact);
    for (long n = 0; n <= 20; ++n) {
        for (const TrigPoly& p : {c_ultra(n, beta, q), c_hermite(n, q),
                                  c_hermite_qinv(n, q), gegenbauer(n, alpha)}) {
            CHECK(p.is_symmetric());
            for (long k = -n; k <= n; ++k)
                if ((((k - n) % 2) + 2) % 2 == 1)
                    CHECK(p.coeff(k).is_zero());
        }
    }
}

TEST_CASE("q = 1 is rejected with a named factor, q = 0 rejected outright") {
    CHECK_THROWS_AS(c_ultra(2, Scalar::exact(1, 3), Scalar::exact(0)), Error);
    try {
        c_ultra(2, Scalar::exact(1, 3), Scalar::exact(1));
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DivisionByZero);
        CHECK(std::string(e.what()).find("(q;q)") != std::string::npos);
    }
}

TEST_CASE("float mode mirrors exact values") {
    Scalar qe = Scalar::exact(1, 2), qf = Scalar::real(0.5);
    Scalar be = Scalar::exact(1, 4), bf = Scalar::real(0.25);
    for (long n = 0; n <= 8; ++n) {
        TrigPoly pe = c_ultra(n, be, qe);
        TrigPoly pf = c_ultra(n, bf, qf);
        for (long k = -n; k <= n; ++k)
            CHECK(close(Scalar::real(pe.coeff(k).to_double()), pf.coeff(k), 1e-12));
    }
}
