#include "qtri/identities.hpp"

#include <algorithm>
#include <chrono>
#include <string>

#include "qtri/polyfamilies.hpp"
#include "qtri/qracah.hpp"
#include "qtri/qseries.hpp"
#include "qtri/trigpoly.hpp"

namespace qtri {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void bump(Scalar& residual, const Scalar& candidate) {
    Scalar a = abs(candidate);
    if (residual < a) residual = a;
}

VerificationReport finish(std::string identity, nlohmann::json params, Mode mode,
                          const Scalar& residual, double tol, Clock::time_point t0) {
    bool pass = mode == Mode::Exact ? residual.is_zero() : residual.dbl() <= tol;
    return VerificationReport{std::move(identity), std::move(params), mode, pass,
                              residual.str(), ms_since(t0)};
}

} // namespace

nlohmann::json report_to_json(const VerificationReport& r, bool with_timing) {
    return nlohmann::json{{"identity", r.identity},
                          {"params", r.params},
                          {"mode", mode_name(r.mode)},
                          {"pass", r.pass},
                          {"max_residual", r.max_residual},
                          {"elapsed_ms", with_timing ? r.elapsed_ms : 0.0}};
}

VerificationReport verify_sears(long n, const Scalar& a, const Scalar& b,
                                const Scalar& c, const Scalar& d, const Scalar& e,
                                const Scalar& q, double tol) {
    auto t0 = Clock::now();
    const Mode m = q.mode();
    Scalar f = div_named(a * b * c * pow(q, 1 - n), d * e, "d*e in forced f");

    Scalar lhs = phi_terminating(PhiSeries({pow(q, -n), a, b, c}, {d, e, f}, q, q, n));

    Scalar pre1 = pow(a, n) *
                  div_named(qpoch(e / a, q, n) * qpoch(f / a, q, n),
                            qpoch(e, q, n) * qpoch(f, q, n), "(e,f;q)_n");
    Scalar rhs1 = pre1 * phi_terminating(PhiSeries(
                             {pow(q, -n), a, d / b, d / c},
                             {d, a * pow(q, 1 - n) / e, a * pow(q, 1 - n) / f}, q, q, n));

    Scalar ef = e * f;
    Scalar pre2 = div_named(
        qpoch(a, q, n) * qpoch(ef / (a * b), q, n) * qpoch(ef / (a * c), q, n),
        qpoch(e, q, n) * qpoch(f, q, n) * qpoch(ef / (a * b * c), q, n),
        "(e,f,ef/(abc);q)_n");
    Scalar rhs2 = pre2 * phi_terminating(PhiSeries(
                             {pow(q, -n), e / a, f / a, ef / (a * b * c)},
                             {ef / (a * b), ef / (a * c), pow(q, 1 - n) / a}, q, q, n));

    Scalar residual = Scalar::zero(m);
    bump(residual, lhs - rhs1);
    bump(residual, lhs - rhs2);
    return finish("sears",
                  {{"n", n}, {"a", a.str()}, {"b", b.str()}, {"c", c.str()},
                   {"d", d.str()}, {"e", e.str()}, {"f", f.str()}, {"q", q.str()}},
                  m, residual, tol, t0);
}

VerificationReport verify_sears_racah_rewrite(long m, long n, const Scalar& beta,
                                              const Scalar& q, double tol) {
    auto t0 = Clock::now();
    if (m < n) throw Error(ErrorKind::InvalidParameter, "needs n <= m");
    const Mode mode = q.mode();
    const Scalar one = Scalar::one(mode);
    Scalar beta_inv = one / beta;
    long N = m - n;
    RacahParams rp = RacahParams::degenerate(beta * pow(q, n - 1), beta * pow(q, n - 1), N, q);

    Scalar residual = Scalar::zero(mode);
    for (long p = 0; p <= N; ++p) {
        for (long k = 0; k <= N - p; ++k) {
            Scalar lhs = phi_terminating(PhiSeries(
                {pow(q, -k), pow(q, -p), beta * pow(q, m - p), pow(q, 1 - n - k) * beta_inv},
                {beta * pow(q, n), pow(q, 1 - p - n - k) * beta_inv, pow(q, m - n - k - p + 1)},
                q, q, std::min(k, p)));
            Scalar pre = div_named(
                qpoch(pow(q, 1 - n - k) * beta_inv, q, k) * qpoch(pow(q, m - n - k + 1), q, k),
                qpoch(pow(q, 1 - n - k - p) * beta_inv, q, k) *
                    qpoch(pow(q, m - n - k - p + 1), q, k),
                "Sears prefactor denominator");
            Scalar rhs = pre * pow(q, -p * k) * racah_eval(rp, p, k);
            bump(residual, lhs - rhs);
        }
    }
    return finish("sears-racah-rewrite",
                  {{"m", m}, {"n", n}, {"beta", beta.str()}, {"q", q.str()}},
                  mode, residual, tol, t0);
}

VerificationReport verify_genfunc_ultra(const Scalar& beta, const Scalar& q,
                                        long T, double tol) {
    auto t0 = Clock::now();
    const Mode mode = q.mode();
    TruncSeries num = ts_mul(qpoch_inf_series(beta, q, +1, T),
                             qpoch_inf_series(beta, q, -1, T));
    TruncSeries den = ts_mul(qpoch_inf_series(Scalar::one(mode), q, +1, T),
                             qpoch_inf_series(Scalar::one(mode), q, -1, T));
    TruncSeries ratio = ts_mul(num, ts_inv(den));

    Scalar residual = Scalar::zero(mode);
    for (long j = 0; j <= T; ++j)
        bump(residual, (ratio.coeff(j) - c_ultra(j, beta, q)).max_abs_coeff());
    return finish("genfunc-ultra",
                  {{"beta", beta.str()}, {"q", q.str()}, {"T", T}},
                  mode, residual, tol, t0);
}

VerificationReport verify_genfunc_product_rule(const Scalar& alpha, const Scalar& beta,
                                               const Scalar& q, long n_max, double tol) {
    auto t0 = Clock::now();
    const Mode mode = q.mode();
    Scalar residual = Scalar::zero(mode);
    for (long n = 0; n <= n_max; ++n) {
        TrigPoly rhs(0, mode);
        for (long k = 0; k <= n; ++k)
            rhs += pow(alpha, k) * tp_mul(c_ultra(n - k, alpha, q), c_ultra(k, beta, q));
        bump(residual, (c_ultra(n, alpha * beta, q) - rhs).max_abs_coeff());
    }
    return finish("product-rule",
                  {{"alpha", alpha.str()}, {"beta", beta.str()}, {"q", q.str()},
                   {"n_max", n_max}},
                  mode, residual, tol, t0);
}

VerificationReport verify_ex43_sums(const Scalar& alpha, const Scalar& q,
                                    long n_max, double tol) {
    auto t0 = Clock::now();
    const Mode mode = q.mode();
    const Scalar one = Scalar::one(mode);
    if (alpha.is_zero()) throw Error(ErrorKind::InvalidParameter, "alpha must be nonzero");
    Scalar ai = one / alpha;
    Scalar residual = Scalar::zero(mode);

    auto term = [&](long n, long k) {
        return pow(alpha, k) * qpoch(alpha, q, n - k) / qpoch(q, q, n - k) *
               qpoch(ai, q, k) / qpoch(q, q, k);
    };

    // p = 0: the sum vanishes for n >= 1; cross-checked through the
    // q-Chu-Vandermonde evaluation of the same sum as a 2phi1.
    for (long n = 1; n <= n_max; ++n) {
        Scalar s = Scalar::zero(mode);
        for (long k = 0; k <= n; ++k) s += term(n, k);
        bump(residual, s);

        Scalar pref = qpoch(alpha, q, n) / qpoch(q, q, n);
        Scalar via_phi = pref * phi_terminating(PhiSeries(
                                    {ai, pow(q, -n)}, {ai * pow(q, 1 - n)}, q, q, n));
        bump(residual, via_phi);
        Scalar closed = pref * pow(ai, n) *
                        div_named(qpoch(pow(q, 1 - n), q, n),
                                  qpoch(ai * pow(q, 1 - n), q, n),
                                  "(alpha^{-1} q^{1-n};q)_n");
        bump(residual, closed);
    }

    // p = 1 companion (after n -> n+1).
    for (long n = 0; n <= n_max; ++n) {
        Scalar s = Scalar::zero(mode);
        for (long k = 0; k <= n; ++k) {
            Scalar den = (one - alpha * pow(q, 1 - k)) * (one - pow(q, n + 1 - k));
            if (den.is_zero())
                throw Error(ErrorKind::VanishingDenominatorFactor,
                            "1 - alpha q^{1-k} vanished at k=" + std::to_string(k));
            Scalar bracket = one + (one - alpha * pow(q, n - k)) * (one - pow(q, k)) *
                                       pow(q, 1 - k) / den;
            s += term(n, k) * bracket;
        }
        Scalar rhs = pow(alpha, n) * qpoch(ai, q, n) / qpoch(q, q, n);
        bump(residual, s - rhs);
    }

    return finish("ex43-sums",
                  {{"alpha", alpha.str()}, {"q", q.str()}, {"n_max", n_max}},
                  mode, residual, tol, t0);
}

VerificationReport verify_gegenbauer_key(long m, long n, const Scalar& alpha, double tol) {
    auto t0 = Clock::now();
    if (m < n) throw Error(ErrorKind::InvalidParameter, "needs n <= m");
    const Mode mode = alpha.mode();
    const Scalar one = Scalar::one(mode);
    const Scalar two = Scalar::integer(2, mode);

    TrigPoly acc(0, mode);
    for (long k = 0; k <= m - n; ++k) {
        // (2n+k+2a-1)_{m-n+1} with the j = k factor cancelled against the
        // numerator (2n+2k+2a-1).
        Scalar den = one;
        for (long j = 0; j <= m - n; ++j) {
            if (j == k) continue;
            Scalar factor = Scalar::integer(2 * n + k - 1 + j, mode) + two * alpha;
            if (mode == Mode::Exact && factor.is_zero())
                throw Error(ErrorKind::ExcludedParameter,
                            "2 alpha = " + std::to_string(1 - 2 * n - k - j) +
                                " lies in the excluded set (k=" + std::to_string(k) +
                                " j=" + std::to_string(j) + ")");
            den *= factor;
        }
        Scalar c = div_named(one, den, "(2n+k+2alpha-1)_{m-n+1}");
        Scalar upper = alpha + Scalar::integer(k + n, mode);
        Scalar lower = one - Scalar::integer(k + n, mode) - alpha;
        acc += c * tp_mul(gegenbauer(m - n - k, upper), gegenbauer(k, lower));
    }
    TrigPoly expected = m == n ? TrigPoly::one(mode) : TrigPoly(0, mode);
    Scalar residual = (acc - expected).max_abs_coeff();
    return finish("gegenbauer-key",
                  {{"m", m}, {"n", n}, {"alpha", alpha.str()}},
                  mode, residual, tol, t0);
}

VerificationReport verify_hermite_convolution(const Scalar& q, long n_max, double tol) {
    auto t0 = Clock::now();
    const Mode mode = q.mode();
    Scalar residual = Scalar::zero(mode);

    for (long p = 0; p <= n_max; ++p) {
        TrigPoly acc(0, mode);
        for (long k = 0; k <= p; ++k) {
            Scalar sign = Scalar::integer(k % 2 == 0 ? 1 : -1, mode);
            Scalar c = div_named(sign * pow(q, k * (k - 1) / 2),
                                 qpoch(q, q, p - k) * qpoch(q, q, k),
                                 "(q;q)_{p-k} (q;q)_k");
            acc += c * tp_mul(c_hermite(p - k, q), c_hermite_qinv(k, q));
        }
        TrigPoly expected = p == 0 ? TrigPoly::one(mode) : TrigPoly(0, mode);
        bump(residual, (acc - expected).max_abs_coeff());
    }

    // q^{-1}-Hermite generating function:
    // (te^{i theta}, te^{-i theta};q)_inf has t^j coefficient
    // (-1)^j q^{binom(j,2)} H_j(x|q^{-1}) / (q;q)_j.
    TruncSeries lhs = ts_mul(qpoch_inf_series(Scalar::one(mode), q, +1, n_max),
                             qpoch_inf_series(Scalar::one(mode), q, -1, n_max));
    for (long j = 0; j <= n_max; ++j) {
        Scalar sign = Scalar::integer(j % 2 == 0 ? 1 : -1, mode);
        Scalar c = sign * pow(q, j * (j - 1) / 2) / qpoch(q, q, j);
        bump(residual, (lhs.coeff(j) - c * c_hermite_qinv(j, q)).max_abs_coeff());
    }

    return finish("hermite-convolution",
                  {{"q", q.str()}, {"n_max", n_max}},
                  mode, residual, tol, t0);
}

VerificationReport verify_inverse(const Scalar& beta, const Scalar& q,
                                  long lo, long hi, double tol) {
    auto t0 = Clock::now();
    TriMatrix L = build_L(beta, q, lo, hi);
    TriMatrix M = build_M(beta, q, lo, hi);
    Scalar residual = band_product(L, M).max_residual_vs_identity();
    bump(residual, band_product(M, L).max_residual_vs_identity());
    return finish("inverse",
                  {{"beta", beta.str()}, {"q", q.str()}, {"lo", lo}, {"hi", hi}},
                  q.mode(), residual, tol, t0);
}

VerificationReport verify_inverse0(const Scalar& q, long lo, long hi, double tol) {
    auto t0 = Clock::now();
    TriMatrix L = build_L0(q, lo, hi);
    TriMatrix M = build_M0(q, lo, hi);
    Scalar residual = band_product(L, M).max_residual_vs_identity();
    bump(residual, band_product(M, L).max_residual_vs_identity());
    return finish("inverse0",
                  {{"q", q.str()}, {"lo", lo}, {"hi", hi}},
                  q.mode(), residual, tol, t0);
}

VerificationReport verify_inverse_oracle(const Scalar& beta, const Scalar& q,
                                         long lo, long hi, double tol) {
    auto t0 = Clock::now();
    TriMatrix inv = invert_unitriangular(build_L(beta, q, lo, hi));
    Scalar residual = inv.max_residual_vs(build_M(beta, q, lo, hi));
    return finish("inverse-oracle",
                  {{"beta", beta.str()}, {"q", q.str()}, {"lo", lo}, {"hi", hi}},
                  q.mode(), residual, tol, t0);
}

VerificationReport verify_lemma32(long m, long n, const Scalar& beta,
                                  const Scalar& q, double tol) {
    auto t0 = Clock::now();
    const Mode mode = q.mode();
    TrigPoly sum = lemma32_sum(m, n, beta, q);
    TrigPoly expected = m == n ? TrigPoly::one(mode) : TrigPoly(0, mode);
    Scalar residual = (sum - expected).max_abs_coeff();
    return finish("lemma32",
                  {{"m", m}, {"n", n}, {"beta", beta.str()}, {"q", q.str()}},
                  mode, residual, tol, t0);
}

VerificationReport verify_dp(long n, const std::vector<Scalar>& alphas,
                             const std::vector<Scalar>& betas,
                             const std::vector<Scalar>& cs, const Scalar& q, double tol) {
    auto t0 = Clock::now();
    const Mode mode = q.mode();
    std::vector<Scalar> dp = dp_coefficients(n, alphas, betas, cs, q);

    TrigPoly brute(0, mode);
    for (long k = 0; k <= n; ++k)
        brute += cs[static_cast<std::size_t>(k)] *
                 tp_mul(c_ultra(n - k, alphas[static_cast<std::size_t>(k)], q),
                        c_ultra(k, betas[static_cast<std::size_t>(k)], q));

    Scalar residual = Scalar::zero(mode);
    for (long p = 0; p <= n; ++p) {
        bump(residual, dp[static_cast<std::size_t>(p)] - brute.coeff(n - 2 * p));
        bump(residual, dp[static_cast<std::size_t>(p)] - dp[static_cast<std::size_t>(n - p)]);
    }
    // Chebyshev view: T_{n-2p} coefficient is (2 - delta_{n,2p}) d(p).
    ChebSeries cheb = tp_to_cheb(brute);
    for (long p = 0; 2 * p <= n; ++p) {
        Scalar want = (n == 2 * p ? Scalar::one(mode) : Scalar::integer(2, mode)) *
                      dp[static_cast<std::size_t>(p)];
        bump(residual, cheb.coeffs[static_cast<std::size_t>(n - 2 * p)] - want);
    }

    nlohmann::json pj;
    pj["n"] = n;
    pj["q"] = q.str();
    for (const char* key : {"alphas", "betas", "cs"}) pj[key] = nlohmann::json::array();
    for (long k = 0; k <= n; ++k) {
        pj["alphas"].push_back(alphas[static_cast<std::size_t>(k)].str());
        pj["betas"].push_back(betas[static_cast<std::size_t>(k)].str());
        pj["cs"].push_back(cs[static_cast<std::size_t>(k)].str());
    }
    return finish("dp", std::move(pj), mode, residual, tol, t0);
}

VerificationReport verify_racah_ortho(const Scalar& gamma, const Scalar& delta,
                                      long N, const Scalar& q, double tol) {
    auto t0 = Clock::now();
    const Mode mode = q.mode();
    RacahParams p = RacahParams::degenerate(gamma, delta, N, q);
    Scalar residual = Scalar::zero(mode);
    for (long m = 0; m <= N; ++m) {
        Scalar expected = (m == 0 && N == 0) ? Scalar::one(mode) : Scalar::zero(mode);
        bump(residual, racah_orthogonality_sum(p, m) - expected);
    }
    for (long nn = 0; nn <= N; ++nn)
        for (long x = 0; x <= N; ++x)
            bump(residual, racah_eval(p, nn, x) - racah_eval(p, N - nn, x));
    return finish("racah-ortho",
                  {{"gamma", gamma.str()}, {"delta", delta.str()}, {"N", N}, {"q", q.str()}},
                  mode, residual, tol, t0);
}

VerificationReport verify_example42(const Scalar& q, long N, double tol) {
    auto t0 = Clock::now();
    auto [L, Linv] = build_example42(q, N);
    Scalar residual = band_product(L, Linv).max_residual_vs_identity();
    bump(residual, band_product(Linv, L).max_residual_vs_identity());
    return finish("example42", {{"q", q.str()}, {"N", N}}, q.mode(), residual, tol, t0);
}

} // namespace qtri
