/**
 * @file polyfamilies.hpp
 * @brief The four polynomial families, built by direct summation of their
 *        defining e^{i(n-2k) theta} expansions.
 */
#ifndef QTRI_POLYFAMILIES_HPP
#define QTRI_POLYFAMILIES_HPP

#include "qtri/trigpoly.hpp"

namespace qtri {

/// Continuous q-ultraspherical (Rogers) polynomial:
///   C_n(x; beta | q) = sum_k (beta;q)_k (beta;q)_{n-k} /
///                            [(q;q)_k (q;q)_{n-k}] e^{i(n-2k) theta}.
/// Defined for all beta; q must be nonzero (and not a (q;q)-killing value
/// such as 1, which surfaces as a named division error).
TrigPoly c_ultra(long n, const Scalar& beta, const Scalar& q);

/// Continuous q-Hermite polynomial:
///   H_n(x|q) = sum_k (q;q)_n / [(q;q)_k (q;q)_{n-k}] e^{i(n-2k) theta}.
TrigPoly c_hermite(long n, const Scalar& q);

/// Continuous q^{-1}-Hermite polynomial H_n(x|q^{-1}): the same sum at base
/// 1/q, expanded with exact reciprocals.
TrigPoly c_hermite_qinv(long n, const Scalar& q);

/// Classical Gegenbauer polynomial:
///   C_n^{(alpha)}(x) = sum_k (alpha)_k (alpha)_{n-k} / [k! (n-k)!] e^{i(n-2k) theta}.
TrigPoly gegenbauer(long n, const Scalar& alpha);

} // namespace qtri

#endif // QTRI_POLYFAMILIES_HPP
