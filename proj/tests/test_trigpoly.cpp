#include <doctest.h>

#include "oracles.hpp"
#include "qtri/matrices.hpp"
#include "qtri/polyfamilies.hpp"
#include "qtri/randomq.hpp"
#include "qtri/trigpoly.hpp"

using namespace qtri;

namespace {

TrigPoly random_symmetric(RationalSampler& rng, long degree) {
    TrigPoly p(degree, Mode::Exact);
    for (long k = 0; k <= degree; ++k) {
        Scalar c = rng.unit_fraction(Mode::Exact);
        p.set_coeff(k, c);
        p.set_coeff(-k, c);
    }
    return p;
}

} // namespace

TEST_CASE("tp_mul basics") {
    Scalar q = Scalar::exact(1, 2), beta = Scalar::exact(1, 4);
    TrigPoly p = c_ultra(3, beta, q);
    CHECK(tp_mul(TrigPoly::one(Mode::Exact), p) == p);

    TrigPoly e(1, Mode::Exact); // e^{i theta} + e^{-i theta}
    e.set_coeff(1, Scalar::exact(1));
    e.set_coeff(-1, Scalar::exact(1));
    TrigPoly sq = tp_mul(e, e);
    CHECK(sq.coeff(2) == Scalar::exact(1));
    CHECK(sq.coeff(0) == Scalar::exact(2));
    CHECK(sq.coeff(-2) == Scalar::exact(1));
    CHECK(sq.coeff(1) == Scalar::exact(0));
}

TEST_CASE("C_1 * C_1 matches the d(p) evaluator") {
    // c(k) = delta_{k,1} turns the convolution into C_1(x;beta|q)^2.
    Scalar q = Scalar::exact(1, 3), beta = Scalar::exact(2, 5);
    std::vector<Scalar> alphas(3, beta), betas(3, beta);
    std::vector<Scalar> cs = {Scalar::exact(0), Scalar::exact(1), Scalar::exact(0)};
    std::vector<Scalar> dp = dp_coefficients(2, alphas, betas, cs, q);
    TrigPoly direct = tp_mul(c_ultra(1, beta, q), c_ultra(1, beta, q));
    for (long p = 0; p <= 2; ++p)
        CHECK(dp[static_cast<std::size_t>(p)] == direct.coeff(2 - 2 * p));
}

TEST_CASE("Chebyshev conversion") {
    CHECK(tp_to_cheb(TrigPoly::one(Mode::Exact)).coeffs[0] == Scalar::exact(1));

    TrigPoly e(1, Mode::Exact);
    e.set_coeff(1, Scalar::exact(1));
    e.set_coeff(-1, Scalar::exact(1));
    ChebSeries c = tp_to_cheb(e);
    CHECK(c.coeffs[0] == Scalar::exact(0));
    CHECK(c.coeffs[1] == Scalar::exact(2));

    RationalSampler rng(21);
    TrigPoly p = random_symmetric(rng, 12);
    CHECK(cheb_to_tp(tp_to_cheb(p)) == p);

    TrigPoly skew(1, Mode::Exact);
    skew.set_coeff(1, Scalar::exact(1));
    CHECK_THROWS_AS(tp_to_cheb(skew), Error);
}

TEST_CASE("tp_eval") {
    CHECK(tp_eval(TrigPoly::one(Mode::Exact), Scalar::exact(9, 7)) == Scalar::exact(1));

    TrigPoly two_t1(1, Mode::Exact); // 2 T_1 = e^{i theta} + e^{-i theta}
    two_t1.set_coeff(1, Scalar::exact(1));
    two_t1.set_coeff(-1, Scalar::exact(1));
    CHECK(tp_eval(two_t1, Scalar::exact(1, 2)) == Scalar::exact(1));

    // theta = 0 (x = 1) turns every e^{ik theta} into 1.
    TrigPoly c2 = c_ultra(2, Scalar::exact(1, 4), Scalar::exact(1, 2));
    Scalar sum = Scalar::zero(Mode::Exact);
    for (long k = -2; k <= 2; ++k) sum += c2.coeff(k);
    CHECK(tp_eval(c2, Scalar::exact(1)) == sum);
}

TEST_CASE("eval is multiplicative") {
    RationalSampler rng(22);
    for (int i = 0; i < 10; ++i) {
        TrigPoly a = random_symmetric(rng, rng.integer(0, 6));
        TrigPoly b = random_symmetric(rng, rng.integer(0, 6));
        Scalar x = rng.unit_fraction(Mode::Exact);
        CHECK(tp_eval(tp_mul(a, b), x) == tp_eval(a, x) * tp_eval(b, x));
    }
}

TEST_CASE("symmetry and parity survive arithmetic") {
    RationalSampler rng(23);
    Scalar q = rng.unit_fraction(Mode::Exact);
    Scalar beta = rng.unit_fraction(Mode::Exact);
    for (long n : {0L, 1L, 5L, 8L}) {
        TrigPoly p = c_ultra(n, beta, q);
        TrigPoly prod = tp_mul(p, p);
        CHECK(prod.is_symmetric());
        // degree-n constructor parity: coeff(k) = 0 unless k = n (mod 2)
        for (long k = -prod.degree(); k <= prod.degree(); ++k)
            if (((k % 2) + 2) % 2 != ((2 * n % 2) + 2) % 2)
                CHECK(prod.coeff(k).is_zero());
    }
}

TEST_CASE("ts_inv basics") {
    // 1/(1 - t) = 1 + t + t^2 + t^3
    TruncSeries s = TruncSeries::one(3, Mode::Exact);
    TrigPoly minus_one = TrigPoly::constant(Scalar::exact(-1));
    s.set_coeff(1, minus_one);
    TruncSeries inv = ts_inv(s);
    for (long j = 0; j <= 3; ++j)
        CHECK(inv.coeff(j) == TrigPoly::one(Mode::Exact));

    CHECK_THROWS_AS(ts_inv(TruncSeries(2, Mode::Exact)), Error);
}

TEST_CASE("ts_mul and ts_inv round trip") {
    RationalSampler rng(24);
    TruncSeries a = TruncSeries::one(6, Mode::Exact);
    for (long j = 1; j <= 6; ++j)
        a.set_coeff(j, random_symmetric(rng, rng.integer(0, 3)));
    TruncSeries prod = ts_mul(a, ts_inv(a));
    CHECK(prod.coeff(0) == TrigPoly::one(Mode::Exact));
    for (long j = 1; j <= 6; ++j)
        CHECK(prod.coeff(j).is_zero());
}

TEST_CASE("Euler expansion against the finite product split") {
    // (a;q)_inf = (a;q)_{J+1} (a q^{J+1};q)_inf holds exactly at every t-order.
    Scalar q = Scalar::exact(1, 2), c = Scalar::exact(2, 5);
    const long T = 6, J = 4;
    TruncSeries finite = oracles::finite_qpoch_product(c, q, +1, J, T);
    TruncSeries tail = qpoch_inf_series(c * pow(q, J + 1), q, +1, T);
    TruncSeries whole = qpoch_inf_series(c, q, +1, T);
    TruncSeries combined = ts_mul(finite, tail);
    for (long j = 0; j <= T; ++j)
        CHECK(combined.coeff(j) == whole.coeff(j));

    // and the reciprocal expansion inverts the direct one
    TruncSeries recip = qpoch_inf_inv_series(c, q, +1, T);
    TruncSeries unit = ts_mul(whole, recip);
    CHECK(unit.coeff(0) == TrigPoly::one(Mode::Exact));
    for (long j = 1; j <= T; ++j)
        CHECK(unit.coeff(j).is_zero());
}

TEST_CASE("generating function coefficients through the series machinery") {
    // Coefficient of t^n of the paired-product ratio is C_n(x;beta|q).
    Scalar q = Scalar::exact(1, 2), beta = Scalar::exact(1, 4);
    const long T = 6;
    TruncSeries num = ts_mul(qpoch_inf_series(beta, q, +1, T), qpoch_inf_series(beta, q, -1, T));
    TruncSeries den = ts_mul(qpoch_inf_series(Scalar::exact(1), q, +1, T),
                             qpoch_inf_series(Scalar::exact(1), q, -1, T));
    TruncSeries ratio = ts_mul(num, ts_inv(den));
    for (long n = 0; n <= T; ++n)
        CHECK(ratio.coeff(n) == c_ultra(n, beta, q));
}

TEST_CASE("TrigPoly JSON shape") {
    TrigPoly e(1, Mode::Exact);
    e.set_coeff(1, Scalar::exact(1, 2));
    e.set_coeff(-1, Scalar::exact(1, 2));
    auto j = tp_to_json(e);
    CHECK(j["degree"] == 1);
    CHECK(j["coeffs"].size() == 3);
    CHECK(j["coeffs"][0] == "1/2");
    CHECK(j["coeffs"][1] == "0");
}
