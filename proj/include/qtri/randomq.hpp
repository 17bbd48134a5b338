/**
 * @file randomq.hpp
 * @brief Seed-driven random rational parameters for sweeps: fractions a/b
 *        with 1 <= a < b <= 97, optionally rejection-sampled.
 */
#ifndef QTRI_RANDOMQ_HPP
#define QTRI_RANDOMQ_HPP

#include <functional>
#include <random>

#include "qtri/scalar.hpp"

namespace qtri {

class RationalSampler {
public:
    explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(rng_);
    }

    /// A fraction a/b with 1 <= a < b <= 97, strictly inside (0, 1).
    Scalar unit_fraction(Mode m) {
        long b = integer(2, 97);
        long a = integer(1, b - 1);
        if (m == Mode::Exact) return Scalar::exact(a, b);
        return Scalar::real(static_cast<double>(a) / static_cast<double>(b));
    }

    /// Redraws until the predicate accepts (bounded; the bound is never hit
    /// for the exclusion sets in this library, which are finite lists).
    Scalar unit_fraction_where(Mode m, const std::function<bool(const Scalar&)>& accept) {
        for (int tries = 0; tries < 1000; ++tries) {
            Scalar s = unit_fraction(m);
            if (accept(s)) return s;
        }
        throw Error(ErrorKind::InvalidParameter, "rejection sampling exhausted 1000 draws");
    }

private:
    std::mt19937_64 rng_;
};

} // namespace qtri

#endif // QTRI_RANDOMQ_HPP
