#include "qtri/qracah.hpp"

#include <algorithm>
#include <string>

namespace qtri {

namespace {

bool holds_exactly(const Scalar& lhs, const Scalar& rhs, Mode m) {
    if (m == Mode::Exact) return lhs == rhs;
    return close(lhs, rhs, 1e-12);
}

} // namespace

RacahParams::RacahParams(Scalar alpha_, Scalar beta_, Scalar gamma_, Scalar delta_,
                         long N_, Scalar q_, RacahTermination termination_)
    : alpha(std::move(alpha_)), beta(std::move(beta_)), gamma(std::move(gamma_)),
      delta(std::move(delta_)), N(N_), q(std::move(q_)), termination(termination_) {
    if (N < 0) throw Error(ErrorKind::NegativeIndex, "N = " + std::to_string(N));
    const Mode m = q.mode();
    for (const Scalar* s : {&alpha, &beta, &gamma, &delta})
        if (s->mode() != m) throw Error(ErrorKind::MixedMode, "q-Racah parameters");
    Scalar qmN = pow(q, -N);
    bool ok = false;
    switch (termination) {
        case RacahTermination::QAlpha: ok = holds_exactly(q * alpha, qmN, m); break;
        case RacahTermination::BetaDeltaQ: ok = holds_exactly(beta * delta * q, qmN, m); break;
        case RacahTermination::GammaQ: ok = holds_exactly(gamma * q, qmN, m); break;
    }
    if (!ok)
        throw Error(ErrorKind::InvalidParameter,
                    "declared termination condition does not hold for N = " + std::to_string(N));
}

RacahParams RacahParams::degenerate(const Scalar& gamma, const Scalar& delta,
                                    long N, const Scalar& q) {
    return RacahParams(pow(q, -N - 1), Scalar::one(q.mode()), gamma, delta, N, q,
                       RacahTermination::QAlpha);
}

bool RacahParams::is_degenerate() const {
    const Mode m = q.mode();
    return termination == RacahTermination::QAlpha &&
           holds_exactly(alpha, pow(q, -N - 1), m) && beta.is_one();
}

Scalar racah_mu(const RacahParams& p, long x) {
    return pow(p.q, -x) + p.gamma * p.delta * pow(p.q, x + 1);
}

Scalar racah_eval(const RacahParams& p, long n, long x) {
    if (n < 0 || n > p.N || x < 0 || x > p.N)
        throw Error(ErrorKind::InvalidParameter,
                    "racah_eval needs 0 <= n, x <= N; got n=" + std::to_string(n) +
                        " x=" + std::to_string(x) + " N=" + std::to_string(p.N));
    // Both q^{-n} and q^{-x} certify termination; the smaller wins.
    long t = std::min(n, x);
    PhiSeries s({pow(p.q, -n), p.alpha * p.beta * pow(p.q, n + 1), pow(p.q, -x),
                 p.gamma * p.delta * pow(p.q, x + 1)},
                {p.alpha * p.q, p.beta * p.delta * p.q, p.gamma * p.q},
                p.q, p.q, t);
    return phi_terminating(s);
}

Scalar racah_weight(const RacahParams& p, long x) {
    if (!p.is_degenerate())
        throw Error(ErrorKind::InvalidParameter,
                    "weight defined on the degenerate path alpha = q^{-N-1}, beta = 1");
    if (x < 0 || x > p.N)
        throw Error(ErrorKind::InvalidParameter, "weight index outside 0..N");
    const Mode m = p.q.mode();
    const Scalar one = Scalar::one(m);
    Scalar gd = p.gamma * p.delta;
    Scalar central = one - gd * p.q;
    if (central.is_zero())
        throw Error(ErrorKind::DegenerateCentral, "1 - gamma delta q vanished");

    Scalar num = qpoch(pow(p.q, -p.N), p.q, x) * qpoch(gd * p.q, p.q, x);
    Scalar den = qpoch(p.q, p.q, x);
    // (gamma delta q^{N+2};q)_x factor-by-factor, naming exact zeros.
    Scalar tail = one;
    Scalar f = gd * pow(p.q, p.N + 2);
    for (long j = 0; j < x; ++j) {
        Scalar factor = one - f;
        if (factor.is_zero())
            throw Error(ErrorKind::VanishingDenominatorFactor,
                        "(gamma delta q^{N+2};q)_x factor at j=" + std::to_string(j) +
                            " vanished (gamma delta = q^{-" + std::to_string(p.N + 2 + j) + "})");
        tail *= factor;
        f *= p.q;
    }
    den = den * tail * central;
    Scalar w = div_named(num, den, "q-Racah weight denominator");
    w *= one - gd * pow(p.q, 2 * x + 1);
    w *= pow(p.q, p.N * x);
    return w;
}

Scalar racah_orthogonality_sum(const RacahParams& p, long m) {
    if (m < 0 || m > p.N)
        throw Error(ErrorKind::InvalidParameter, "m outside 0..N");
    Scalar total = Scalar::zero(p.q.mode());
    for (long x = 0; x <= p.N; ++x)
        total += racah_weight(p, x) * racah_eval(p, m, x);
    return total;
}

} // namespace qtri
