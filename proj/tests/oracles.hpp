// Test-only oracles: independent brute-force routes kept deliberately
// separate from the library implementations they witness.
#ifndef QTRI_TESTS_ORACLES_HPP
#define QTRI_TESTS_ORACLES_HPP

#include <vector>

#include "qtri/polyfamilies.hpp"
#include "qtri/qseries.hpp"
#include "qtri/trigpoly.hpp"

namespace oracles {

using qtri::Mode;
using qtri::Scalar;
using qtri::TrigPoly;

// Term-by-term phi sum, each term built from scratch via qpoch (no running
// ratio), so it cannot share a bug with the incremental evaluator.
inline Scalar phi_bruteforce(const std::vector<Scalar>& upper,
                             const std::vector<Scalar>& lower,
                             const Scalar& q, const Scalar& z, long n) {
    Scalar total = Scalar::zero(q.mode());
    for (long k = 0; k <= n; ++k) {
        Scalar t = qtri::pow(z, k) / qtri::qpoch(q, q, k);
        for (const Scalar& u : upper) t *= qtri::qpoch(u, q, k);
        for (const Scalar& l : lower) t /= qtri::qpoch(l, q, k);
        total += t;
    }
    return total;
}

// sum_k c(k) C_{n-k}(x; alpha_k | q) C_k(x; beta_k | q) by plain polynomial
// arithmetic; the coefficient of e^{i(n-2p) theta} is the d(p) oracle.
inline TrigPoly convolution_bruteforce(long n,
                                       const std::vector<Scalar>& alphas,
                                       const std::vector<Scalar>& betas,
                                       const std::vector<Scalar>& cs,
                                       const Scalar& q) {
    TrigPoly acc(0, q.mode());
    for (long k = 0; k <= n; ++k)
        acc += cs[static_cast<std::size_t>(k)] *
               qtri::tp_mul(qtri::c_ultra(n - k, alphas[static_cast<std::size_t>(k)], q),
                            qtri::c_ultra(k, betas[static_cast<std::size_t>(k)], q));
    return acc;
}

// Classical d(p) of the q -> 1 limit, through the two-branch terminating 4F3.
inline std::vector<Scalar> classical_dp(long n,
                                        const std::vector<Scalar>& alphas,
                                        const std::vector<Scalar>& betas,
                                        const std::vector<Scalar>& cs) {
    const Mode m = alphas.at(0).mode();
    const Scalar one = Scalar::one(m);
    auto I = [m](long v) { return Scalar::integer(v, m); };
    std::vector<Scalar> out;
    for (long p = 0; p <= n; ++p) {
        Scalar d = Scalar::zero(m);
        for (long k = 0; k <= n - p; ++k) {
            const Scalar& a = alphas[static_cast<std::size_t>(k)];
            const Scalar& b = betas[static_cast<std::size_t>(k)];
            Scalar pre = qtri::poch(a, p) / qtri::poch(one, p) *
                         qtri::poch(a, n - p - k) / qtri::poch(one, n - p - k) *
                         qtri::poch(b, k) / qtri::poch(one, k);
            Scalar f = qtri::hyp_terminating(
                {I(-p), a + I(n - p - k), I(-k), b},
                {one - I(p) - a, one - I(k) - b, I(n - p - k + 1)},
                I(2) - a - b, std::min(p, k));
            d += cs[static_cast<std::size_t>(k)] * pre * f;
        }
        for (long k = n - p + 1; k <= n; ++k) {
            const Scalar& a = alphas[static_cast<std::size_t>(k)];
            const Scalar& b = betas[static_cast<std::size_t>(k)];
            Scalar pre = qtri::poch(a, n - k) / qtri::poch(one, n - k) *
                         qtri::poch(b, p - n + k) / qtri::poch(one, p - n + k) *
                         qtri::poch(b, n - p) / qtri::poch(one, n - p);
            Scalar f = qtri::hyp_terminating(
                {I(k - n), I(p - n), a, b + I(k + p - n)},
                {one - I(n - k) - a, I(k + p - n + 1), one - I(n - p) - b},
                I(2) - a - b, std::min(n - k, n - p));
            d += cs[static_cast<std::size_t>(k)] * pre * f;
        }
        out.push_back(d);
    }
    return out;
}

// Finite product prod_{j=0}^{J} (1 - c t q^j e^{i s theta}) as a TruncSeries,
// built factor by factor with ts_mul.
inline qtri::TruncSeries finite_qpoch_product(const Scalar& c, const Scalar& q,
                                              int theta_sign, long J, long order) {
    qtri::TruncSeries acc = qtri::TruncSeries::one(order, q.mode());
    for (long j = 0; j <= J; ++j) {
        qtri::TruncSeries factor(order, q.mode());
        factor.set_coeff(0, TrigPoly::one(q.mode()));
        if (order >= 1) {
            TrigPoly lin(1, q.mode());
            lin.set_coeff(theta_sign, -(c * qtri::pow(q, j)));
            factor.set_coeff(1, lin);
        }
        acc = qtri::ts_mul(acc, factor);
    }
    return acc;
}

} // namespace oracles

#endif // QTRI_TESTS_ORACLES_HPP
