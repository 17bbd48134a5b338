/**
 * @file identities.hpp
 * @brief Machine verifiers for the identities the triangular inversion rests
 *        on: Sears transforms, generating functions, the classical limit, the
 *        summation identities, and the matrix contracts themselves.
 *
 * Every verifier returns a VerificationReport. In Exact mode "pass" means the
 * residual is identically zero: these are theorems, not approximations. In
 * Float mode pass means the residual stays below tol.
 */
#ifndef QTRI_IDENTITIES_HPP
#define QTRI_IDENTITIES_HPP

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qtri/matrices.hpp"
#include "qtri/scalar.hpp"

namespace qtri {

struct VerificationReport {
    std::string identity;
    nlohmann::json params;
    Mode mode;
    bool pass;
    std::string max_residual;
    double elapsed_ms;
};

nlohmann::json report_to_json(const VerificationReport& r, bool with_timing = true);

/// f is forced from abc = def q^{n-1}; evaluates the left 4phi3 and both
/// transformed right-hand sides and requires three-way equality.
VerificationReport verify_sears(long n, const Scalar& a, const Scalar& b,
                                const Scalar& c, const Scalar& d, const Scalar& e,
                                const Scalar& q, double tol = 1e-10);

/// The proof's specialization: the branch-one 4phi3 of the key sum equals a
/// q-Pochhammer prefactor times the q-Racah polynomial
/// R_p(mu(k); q^{n-m-1}, 1, beta q^{n-1}, beta q^{n-1}; q), for every
/// (p, k) in range on the window difference m - n.
VerificationReport verify_sears_racah_rewrite(long m, long n, const Scalar& beta,
                                              const Scalar& q, double tol = 1e-10);

/// sum_n C_n(x;beta|q) t^n = (beta t e^{+-i theta};q)_inf / (t e^{+-i theta};q)_inf
/// checked coefficientwise to t-order T (exact Euler expansions, ts_inv route).
VerificationReport verify_genfunc_ultra(const Scalar& beta, const Scalar& q,
                                        long T, double tol = 1e-10);

/// C_n(x; alpha beta | q) = sum_k alpha^k C_{n-k}(x;alpha|q) C_k(x;beta|q).
VerificationReport verify_genfunc_product_rule(const Scalar& alpha, const Scalar& beta,
                                               const Scalar& q, long n_max,
                                               double tol = 1e-10);

/// The two summation identities of the alpha / alpha^{-1} convolution:
/// the p=0 sum vanishes for n >= 1 (cross-checked through q-Chu-Vandermonde),
/// and the p=1 companion equals alpha^n (alpha^{-1};q)_n / (q;q)_n.
VerificationReport verify_ex43_sums(const Scalar& alpha, const Scalar& q,
                                    long n_max, double tol = 1e-10);

/// Classical key sum: sum_k (2n+2k+2a-1)/(2n+k+2a-1)_{m-n+1}
///   C^{(a+k+n)}_{m-n-k}(x) C^{(1-k-n-a)}_k(x) = delta_{m,n}.
VerificationReport verify_gegenbauer_key(long m, long n, const Scalar& alpha,
                                         double tol = 1e-10);

/// sum_k H_{p-k}(x|q)/(q;q)_{p-k} (-1)^k q^{binom(k,2)} H_k(x|q^{-1})/(q;q)_k
///   = delta_{p,0} for p <= n_max, plus the q^{-1}-Hermite generating function
/// sum_n (-1)^n q^{binom(n,2)} H_n(x|q^{-1})/(q;q)_n t^n = (te^{+-i theta};q)_inf
/// to t-order n_max.
VerificationReport verify_hermite_convolution(const Scalar& q, long n_max,
                                              double tol = 1e-10);

// Matrix-level contracts, reported in the same format.

/// L^beta M^beta = I = M^beta L^beta on the window.
VerificationReport verify_inverse(const Scalar& beta, const Scalar& q,
                                  long lo, long hi, double tol = 1e-10);

/// L^0 M^0 = I = M^0 L^0 on the window.
VerificationReport verify_inverse0(const Scalar& q, long lo, long hi,
                                   double tol = 1e-10);

/// Forward-substitution inverse of L^beta equals M^beta entrywise.
VerificationReport verify_inverse_oracle(const Scalar& beta, const Scalar& q,
                                         long lo, long hi, double tol = 1e-10);

/// lemma32_sum(m, n) = delta_{m,n} as a polynomial.
VerificationReport verify_lemma32(long m, long n, const Scalar& beta,
                                  const Scalar& q, double tol = 1e-10);

/// dp_coefficients against brute-force convolution, d(p) = d(n-p), and the
/// Chebyshev form (2 - delta_{n,2p}) d(p).
VerificationReport verify_dp(long n, const std::vector<Scalar>& alphas,
                             const std::vector<Scalar>& betas,
                             const std::vector<Scalar>& cs, const Scalar& q,
                             double tol = 1e-10);

/// Degenerate q-Racah orthogonality sum = delta_{m,0} delta_{N,0} for all
/// m <= N, plus the R_n = R_{N-n} symmetry on the full grid.
VerificationReport verify_racah_ortho(const Scalar& gamma, const Scalar& delta,
                                      long N, const Scalar& q, double tol = 1e-10);

/// The finite pair multiplies to the identity in both orders.
VerificationReport verify_example42(const Scalar& q, long N, double tol = 1e-10);

} // namespace qtri

#endif // QTRI_IDENTITIES_HPP
