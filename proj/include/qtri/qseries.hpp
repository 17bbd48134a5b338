/**
 * @file qseries.hpp
 * @brief q-Pochhammer symbols, rising factorials and terminating
 *        (basic) hypergeometric series.
 *
 * Conventions: (a;q)_n = prod_{j=0}^{n-1} (1 - a q^j), (a)_n = a(a+1)...(a+n-1).
 * A terminating r+1_phi_r carries its termination index explicitly: detecting
 * q^{-n} from a rational value is ambiguous, the caller always knows n.
 */
#ifndef QTRI_QSERIES_HPP
#define QTRI_QSERIES_HPP

#include <vector>

#include "qtri/scalar.hpp"

namespace qtri {

/// (a;q)_n. Rejects n < 0.
Scalar qpoch(const Scalar& a, const Scalar& q, long n);

/// Rising factorial (a)_n. Rejects n < 0.
Scalar poch(const Scalar& a, long n);

/// A terminating basic hypergeometric series r+1_phi_r:
///   sum_{k=0}^{n}  prod(upper;q)_k / [prod(lower;q)_k (q;q)_k] * z^k,
/// where some upper parameter equals q^{-n} (the termination certificate,
/// stored explicitly and validated in Exact mode).
class PhiSeries {
public:
    PhiSeries(std::vector<Scalar> upper, std::vector<Scalar> lower,
              Scalar base_q, Scalar argument_z, long termination);

    const std::vector<Scalar>& upper() const { return upper_; }
    const std::vector<Scalar>& lower() const { return lower_; }
    const Scalar& base() const { return q_; }
    const Scalar& argument() const { return z_; }
    long termination() const { return n_; }
    Mode mode() const { return q_.mode(); }

private:
    std::vector<Scalar> upper_, lower_;
    Scalar q_, z_;
    long n_;
};

/// Evaluates the terminating sum. Throws VanishingDenominatorFactor when a
/// lower-parameter factor (1 - lower_j q^k) vanishes inside the summation
/// range, naming the parameter and the index.
Scalar phi_terminating(const PhiSeries& series);

/// Balanced: z = q and q * prod(upper) = prod(lower).
bool is_balanced(const PhiSeries& series);

/// Terminating classical hypergeometric series:
///   sum_{k=0}^{n} prod(upper)_k / [prod(lower)_k k!] * z^k,
/// with some upper parameter equal to -n.
Scalar hyp_terminating(const std::vector<Scalar>& upper,
                       const std::vector<Scalar>& lower,
                       const Scalar& z, long n);

} // namespace qtri

#endif // QTRI_QSERIES_HPP
