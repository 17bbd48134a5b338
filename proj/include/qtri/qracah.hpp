/**
 * @file qracah.hpp
 * @brief q-Racah polynomials and the degenerate-parameter orthogonality sum.
 *
 * R_n(mu(x); alpha, beta, gamma, delta; q) is the terminating balanced 4phi3
 * with upper (q^{-n}, alpha beta q^{n+1}, q^{-x}, gamma delta q^{x+1}) and
 * lower (alpha q, beta delta q, gamma q) at argument q, mu(x) = q^{-x} +
 * gamma delta q^{x+1}. Which of the three conditions q alpha = q^{-N},
 * beta delta q = q^{-N}, gamma q = q^{-N} certifies termination cannot be
 * re-derived reliably from rational values, so it is stored explicitly.
 *
 * The degenerate path alpha = q^{-N-1}, beta = 1 carries no positive-measure
 * orthogonality, but the n = 0 relation survives:
 *   sum_x w(x) R_m(mu(x)) = delta_{m,0} h_0,  h_0 = delta_{N,0}
 * (for gamma, delta avoiding q^{-1}..q^{-N}); behavior at those excluded
 * points is unspecified and the module errors rather than guessing.
 */
#ifndef QTRI_QRACAH_HPP
#define QTRI_QRACAH_HPP

#include "qtri/qseries.hpp"
#include "qtri/scalar.hpp"

namespace qtri {

enum class RacahTermination { QAlpha, BetaDeltaQ, GammaQ };

struct RacahParams {
    Scalar alpha, beta, gamma, delta;
    long N;
    Scalar q;
    RacahTermination termination;

    RacahParams(Scalar alpha, Scalar beta, Scalar gamma, Scalar delta,
                long N, Scalar q, RacahTermination termination);

    /// alpha = q^{-N-1}, beta = 1 (the QAlpha termination path).
    static RacahParams degenerate(const Scalar& gamma, const Scalar& delta,
                                  long N, const Scalar& q);

    bool is_degenerate() const;
};

/// mu(x) = q^{-x} + gamma delta q^{x+1}.
Scalar racah_mu(const RacahParams& p, long x);

/// R_n(mu(x)); requires 0 <= n <= N and 0 <= x <= N. The series terminates at
/// min(n, x).
Scalar racah_eval(const RacahParams& p, long n, long x);

/// Degenerate-path weight
///   w(x) = (q^{-N};q)_x (gamma delta q;q)_x /
///          [(q;q)_x (gamma delta q^{N+2};q)_x]
///          * (1 - gamma delta q^{2x+1}) / (1 - gamma delta q) * q^{Nx}.
Scalar racah_weight(const RacahParams& p, long x);

/// sum_{x=0}^{N} w(x) R_m(mu(x)); equals delta_{m,0} * delta_{N,0} under the
/// degenerate path with gamma, delta outside {q^{-1},...,q^{-N}}.
Scalar racah_orthogonality_sum(const RacahParams& p, long m);

} // namespace qtri

#endif // QTRI_QRACAH_HPP
