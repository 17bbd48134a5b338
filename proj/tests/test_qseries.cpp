#include <doctest.h>

#include "oracles.hpp"
#include "qtri/qracah.hpp"
#include "qtri/qseries.hpp"
#include "qtri/randomq.hpp"

using namespace qtri;

TEST_CASE("qpoch basics") {
    Scalar a = Scalar::exact(3, 7), q = Scalar::exact(1, 3);
    CHECK(qpoch(a, q, 0) == Scalar::exact(1));
    CHECK(qpoch(Scalar::exact(1, 2), Scalar::exact(1, 2), 3) == Scalar::exact(21, 64));
    CHECK(qpoch(Scalar::exact(1), q, 4) == Scalar::exact(0));
    CHECK_THROWS_AS(qpoch(a, q, -1), Error);
}

TEST_CASE("qpoch splitting identity") {
    RationalSampler rng(11);
    for (int i = 0; i < 20; ++i) {
        Scalar a = rng.unit_fraction(Mode::Exact);
        Scalar q = rng.unit_fraction(Mode::Exact);
        long m = rng.integer(0, 10), n = rng.integer(0, 10);
        CHECK(qpoch(a, q, m + n) == qpoch(a, q, m) * qpoch(a * pow(q, m), q, n));
    }
}

TEST_CASE("q-Pochhammer flip identity used throughout the proofs") {
    // (q^r b^{-1};q)_l = (-1)^l q^{l(l-1)/2 + rl} b^{-l} (b q^{1-r-l};q)_l
    RationalSampler rng(12);
    for (int i = 0; i < 20; ++i) {
        Scalar b = rng.unit_fraction(Mode::Exact);
        Scalar q = rng.unit_fraction(Mode::Exact);
        long l = rng.integer(0, 8), r = rng.integer(-8, 8);
        Scalar lhs = qpoch(pow(q, r) / b, q, l);
        Scalar sign = Scalar::integer(l % 2 == 0 ? 1 : -1, Mode::Exact);
        Scalar rhs = sign * pow(q, l * (l - 1) / 2 + r * l) * pow(b, -l) *
                     qpoch(b * pow(q, 1 - r - l), q, l);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("poch basics") {
    CHECK(poch(Scalar::exact(5, 9), 0) == Scalar::exact(1));
    CHECK(poch(Scalar::exact(3), 4) == Scalar::exact(360));
    CHECK(poch(Scalar::exact(-2), 4) == Scalar::exact(0));
    CHECK_THROWS_AS(poch(Scalar::exact(1), -2), Error);
}

TEST_CASE("phi_terminating trivial cases") {
    Scalar q = Scalar::exact(1, 3);
    PhiSeries n0({Scalar::exact(1), Scalar::exact(2, 5), Scalar::exact(3, 5)},
                 {Scalar::exact(1, 7), Scalar::exact(1, 9)}, q, q, 0);
    CHECK(phi_terminating(n0) == Scalar::exact(1));

    // q-Racah R_0: the q^{-0} = 1 upper parameter kills every k >= 1 term.
    RacahParams p = RacahParams::degenerate(Scalar::exact(2, 7), Scalar::exact(2, 7), 3, q);
    for (long x = 0; x <= 3; ++x)
        CHECK(racah_eval(p, 0, x) == Scalar::exact(1));
}

TEST_CASE("phi_terminating equals brute-force summation on random series") {
    RationalSampler rng(13);
    for (int i = 0; i < 100; ++i) {
        Scalar q = rng.unit_fraction(Mode::Exact);
        long n = rng.integer(0, 5);
        // 4phi3 with explicit q^{-n} certificate; the rest generic.
        std::vector<Scalar> upper = {pow(q, -n), rng.unit_fraction(Mode::Exact),
                                     rng.unit_fraction(Mode::Exact),
                                     rng.unit_fraction(Mode::Exact)};
        std::vector<Scalar> lower = {rng.unit_fraction(Mode::Exact),
                                     rng.unit_fraction(Mode::Exact),
                                     rng.unit_fraction(Mode::Exact)};
        Scalar z = rng.unit_fraction(Mode::Exact);
        CHECK(phi_terminating(PhiSeries(upper, lower, q, z, n)) ==
              oracles::phi_bruteforce(upper, lower, q, z, n));
    }
}

TEST_CASE("phi_terminating names the vanishing lower factor") {
    Scalar q = Scalar::exact(1, 2);
    // lower parameter q^{-1} = 2 vanishes at k = 1 for termination 3
    PhiSeries bad({pow(q, -3), Scalar::exact(1, 5), Scalar::exact(1, 7), Scalar::exact(1, 9)},
                  {Scalar::exact(2), Scalar::exact(1, 5), Scalar::exact(1, 7)}, q, q, 3);
    try {
        phi_terminating(bad);
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::VanishingDenominatorFactor);
        CHECK(std::string(e.what()).find("lower parameter #0") != std::string::npos);
    }
}

TEST_CASE("termination certificate is validated in exact mode") {
    Scalar q = Scalar::exact(1, 3);
    CHECK_THROWS_AS(PhiSeries({Scalar::exact(1, 2), Scalar::exact(1, 5)},
                              {Scalar::exact(1, 7)}, q, q, 2),
                    Error);
}

TEST_CASE("is_balanced") {
    Scalar q = Scalar::exact(1, 3);
    // q-Racah series is balanced by construction.
    Scalar gamma = Scalar::exact(2, 7), delta = Scalar::exact(3, 8);
    long N = 3;
    Scalar alpha = pow(q, -N - 1), beta = Scalar::exact(1);
    long n = 2, x = 2;
    std::vector<Scalar> upper = {pow(q, -n), alpha * beta * pow(q, n + 1), pow(q, -x),
                                 gamma * delta * pow(q, x + 1)};
    std::vector<Scalar> lower = {alpha * q, beta * delta * q, gamma * q};
    CHECK(is_balanced(PhiSeries(upper, lower, q, q, std::min(n, x))));

    std::vector<Scalar> perturbed = lower;
    perturbed[1] = perturbed[1] * q;
    CHECK_FALSE(is_balanced(PhiSeries(upper, perturbed, q, q, std::min(n, x))));

    // First d(p) branch with alpha_k beta_k = q is balanced at argument q.
    Scalar b = Scalar::exact(2, 5);
    long nn = 5, p = 2, k = 1, nsub = 1; // Lemma 3.2 shape with m-n = nn
    Scalar ak = b * pow(q, k + nsub), bk = pow(q, 1 - k - nsub) / b;
    PhiSeries branch1({pow(q, -p), ak * pow(q, nn - p - k), pow(q, -k), bk},
                      {pow(q, 1 - p) / ak, pow(q, 1 - k) / bk, pow(q, nn - p - k + 1)},
                      q, q * q / (ak * bk), std::min(p, k));
    CHECK(branch1.argument() == q); // the argument collapses to q
    CHECK(is_balanced(branch1));
}

TEST_CASE("hyp_terminating") {
    Scalar one = Scalar::exact(1);
    CHECK(hyp_terminating({Scalar::exact(0), Scalar::exact(1, 2)}, {Scalar::exact(1, 3)},
                          Scalar::exact(1), 0) == one);
    // 2F1(-1, b; c; 1) = 1 - b/c
    Scalar b = Scalar::exact(3, 7), c = Scalar::exact(5, 9);
    CHECK(hyp_terminating({Scalar::exact(-1), b}, {c}, one, 1) == one - b / c);
    // vanishing lower parameter -2 at shift 2
    CHECK_THROWS_AS(hyp_terminating({Scalar::exact(-5), b}, {Scalar::exact(-2)}, one, 5),
                    Error);
}

TEST_CASE("classical dp branches match Gegenbauer convolution") {
    RationalSampler rng(14);
    for (int i = 0; i < 5; ++i) {
        long n = rng.integer(0, 4);
        std::vector<Scalar> alphas, betas, cs;
        for (long k = 0; k <= n; ++k) {
            alphas.push_back(rng.unit_fraction(Mode::Exact));
            betas.push_back(rng.unit_fraction(Mode::Exact));
            cs.push_back(rng.unit_fraction(Mode::Exact));
        }
        std::vector<Scalar> dp = oracles::classical_dp(n, alphas, betas, cs);
        TrigPoly brute(0, Mode::Exact);
        for (long k = 0; k <= n; ++k)
            brute += cs[static_cast<std::size_t>(k)] *
                     tp_mul(gegenbauer(n - k, alphas[static_cast<std::size_t>(k)]),
                            gegenbauer(k, betas[static_cast<std::size_t>(k)]));
        for (long p = 0; p <= n; ++p)
            CHECK(dp[static_cast<std::size_t>(p)] == brute.coeff(n - 2 * p));
    }
}
