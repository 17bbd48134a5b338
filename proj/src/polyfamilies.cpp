#include "qtri/polyfamilies.hpp"

#include <string>

#include "qtri/qseries.hpp"

namespace qtri {

namespace {

// Prefix table (a;q)_j for j = 0..n with named zero-division guard on demand.
std::vector<Scalar> qpoch_table(const Scalar& a, const Scalar& q, long n) {
    std::vector<Scalar> t;
    t.reserve(static_cast<std::size_t>(n) + 1);
    t.push_back(Scalar::one(a.mode()));
    Scalar aq = a;
    for (long j = 0; j < n; ++j) {
        t.push_back(t.back() * (Scalar::one(a.mode()) - aq));
        aq *= q;
    }
    return t;
}

} // namespace

TrigPoly c_ultra(long n, const Scalar& beta, const Scalar& q) {
    if (n < 0) throw Error(ErrorKind::NegativeIndex, "degree " + std::to_string(n));
    if (q.is_zero()) throw Error(ErrorKind::InvalidParameter, "base q must be nonzero");
    const Mode m = q.mode();
    std::vector<Scalar> bp = qpoch_table(beta, q, n);
    std::vector<Scalar> qp = qpoch_table(q, q, n);
    TrigPoly p(n, m);
    for (long k = 0; k <= n; ++k) {
        Scalar den = qp[static_cast<std::size_t>(k)] * qp[static_cast<std::size_t>(n - k)];
        Scalar c = div_named(bp[static_cast<std::size_t>(k)] * bp[static_cast<std::size_t>(n - k)],
                             den, "(q;q)_k (q;q)_{n-k} at k=" + std::to_string(k));
        p.set_coeff(n - 2 * k, p.coeff(n - 2 * k) + c);
    }
    return p;
}

TrigPoly c_hermite(long n, const Scalar& q) {
    if (n < 0) throw Error(ErrorKind::NegativeIndex, "degree " + std::to_string(n));
    const Mode m = q.mode();
    std::vector<Scalar> qp = qpoch_table(q, q, n);
    TrigPoly p(n, m);
    for (long k = 0; k <= n; ++k) {
        Scalar den = qp[static_cast<std::size_t>(k)] * qp[static_cast<std::size_t>(n - k)];
        Scalar c = div_named(qp[static_cast<std::size_t>(n)], den,
                             "(q;q)_k (q;q)_{n-k} at k=" + std::to_string(k));
        p.set_coeff(n - 2 * k, p.coeff(n - 2 * k) + c);
    }
    return p;
}

TrigPoly c_hermite_qinv(long n, const Scalar& q) {
    if (q.is_zero()) throw Error(ErrorKind::InvalidParameter, "base q must be nonzero");
    Scalar qi = Scalar::one(q.mode()) / q;
    return c_hermite(n, qi);
}

TrigPoly gegenbauer(long n, const Scalar& alpha) {
    if (n < 0) throw Error(ErrorKind::NegativeIndex, "degree " + std::to_string(n));
    const Mode m = alpha.mode();
    TrigPoly p(n, m);
    for (long k = 0; k <= n; ++k) {
        Scalar c = poch(alpha, k) * poch(alpha, n - k) /
                   (poch(Scalar::one(m), k) * poch(Scalar::one(m), n - k));
        p.set_coeff(n - 2 * k, p.coeff(n - 2 * k) + c);
    }
    return p;
}

} // namespace qtri
