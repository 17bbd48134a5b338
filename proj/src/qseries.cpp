#include "qtri/qseries.hpp"

#include <string>

namespace qtri {

Scalar qpoch(const Scalar& a, const Scalar& q, long n) {
    if (n < 0)
        throw Error(ErrorKind::NegativeIndex, "(a;q)_n with n = " + std::to_string(n));
    Scalar r = Scalar::one(a.mode());
    Scalar aq = a;
    for (long j = 0; j < n; ++j) {
        r *= Scalar::one(a.mode()) - aq;
        aq *= q;
    }
    return r;
}

Scalar poch(const Scalar& a, long n) {
    if (n < 0)
        throw Error(ErrorKind::NegativeIndex, "(a)_n with n = " + std::to_string(n));
    Scalar r = Scalar::one(a.mode());
    for (long j = 0; j < n; ++j)
        r *= a + Scalar::integer(j, a.mode());
    return r;
}

PhiSeries::PhiSeries(std::vector<Scalar> upper, std::vector<Scalar> lower,
                     Scalar base_q, Scalar argument_z, long termination)
    : upper_(std::move(upper)), lower_(std::move(lower)),
      q_(std::move(base_q)), z_(std::move(argument_z)), n_(termination) {
    if (n_ < 0)
        throw Error(ErrorKind::NegativeIndex, "termination index " + std::to_string(n_));
    if (upper_.size() != lower_.size() + 1)
        throw Error(ErrorKind::InvalidParameter,
                    "r+1_phi_r requires one more upper than lower parameter");
    Mode m = q_.mode();
    for (const Scalar& s : upper_)
        if (s.mode() != m) throw Error(ErrorKind::MixedMode, "phi series parameters");
    for (const Scalar& s : lower_)
        if (s.mode() != m) throw Error(ErrorKind::MixedMode, "phi series parameters");
    if (z_.mode() != m) throw Error(ErrorKind::MixedMode, "phi series argument");
    if (m == Mode::Exact) {
        Scalar cert = pow(q_, -n_);
        bool found = false;
        for (const Scalar& s : upper_)
            if (s == cert) { found = true; break; }
        if (!found)
            throw Error(ErrorKind::InvalidParameter,
                        "no upper parameter equals q^{-" + std::to_string(n_) +
                            "}: termination certificate does not hold");
    }
}

Scalar phi_terminating(const PhiSeries& s) {
    const Mode m = s.mode();
    const Scalar one = Scalar::one(m);
    Scalar term = one;
    Scalar total = one;
    Scalar qk = one; // q^k
    for (long k = 0; k < s.termination(); ++k) {
        for (const Scalar& u : s.upper())
            term *= one - u * qk;
        const Scalar qk1 = qk * s.base();
        Scalar qfac = one - qk1; // the (q;q)_k chain factor
        if (qfac.is_zero())
            throw Error(ErrorKind::VanishingDenominatorFactor,
                        "(q;q) factor 1 - q^" + std::to_string(k + 1) + " vanished");
        term /= qfac;
        for (std::size_t j = 0; j < s.lower().size(); ++j) {
            Scalar f = one - s.lower()[j] * qk;
            if (f.is_zero())
                throw Error(ErrorKind::VanishingDenominatorFactor,
                            "lower parameter #" + std::to_string(j) + " (= " +
                                s.lower()[j].str() + "): factor 1 - b q^" +
                                std::to_string(k) + " vanished");
            term /= f;
        }
        term *= s.argument();
        total += term;
        qk = qk1;
    }
    return total;
}

bool is_balanced(const PhiSeries& s) {
    Scalar pu = s.base(); // q * prod(upper)
    for (const Scalar& u : s.upper()) pu *= u;
    Scalar pl = Scalar::one(s.mode());
    for (const Scalar& l : s.lower()) pl *= l;
    if (s.mode() == Mode::Exact)
        return pu == pl && s.argument() == s.base();
    return close(pu, pl, 1e-10) && close(s.argument(), s.base(), 1e-10);
}

Scalar hyp_terminating(const std::vector<Scalar>& upper,
                       const std::vector<Scalar>& lower,
                       const Scalar& z, long n) {
    if (n < 0)
        throw Error(ErrorKind::NegativeIndex, "termination index " + std::to_string(n));
    const Mode m = z.mode();
    const Scalar one = Scalar::one(m);
    Scalar term = one;
    Scalar total = one;
    for (long k = 0; k < n; ++k) {
        const Scalar kk = Scalar::integer(k, m);
        for (const Scalar& u : upper)
            term *= u + kk;
        for (std::size_t j = 0; j < lower.size(); ++j) {
            Scalar f = lower[j] + kk;
            if (f.is_zero())
                throw Error(ErrorKind::VanishingDenominatorFactor,
                            "lower parameter #" + std::to_string(j) + " (= " +
                                lower[j].str() + ") hit zero at shift " +
                                std::to_string(k));
            term /= f;
        }
        term *= z / Scalar::integer(k + 1, m);
        total += term;
    }
    return total;
}

} // namespace qtri
