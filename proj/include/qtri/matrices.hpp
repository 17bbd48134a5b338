/**
 * @file matrices.hpp
 * @brief Triangular matrix families with TrigPoly entries and the banded
 *        machinery that verifies their inversion identities exactly.
 *
 * A TriMatrix is a lower-triangular window [lo, hi] of a doubly infinite
 * matrix. For lower-triangular factors the (m,n) product entry only involves
 * indices k with n <= k <= m, so window products equal the doubly infinite
 * product on the window: nothing is lost by working with windows.
 *
 * The families built here:
 *   L^beta_{m,n}  = C_{m-n}(x; beta q^n | q) / (beta^2 q^{2n}; q)_{m-n}
 *   M^beta_{m,n}  = beta^{m-n} q^{(m-1)(m-n)}
 *                   C_{m-n}(x; beta^{-1} q^{1-m} | q) / (beta^2 q^{m+n-1}; q)_{m-n}
 *   L^0_{m,n}     = H_{m-n}(x|q) / (q;q)_{m-n}
 *   M^0_{m,n}     = (-1)^{m-n} q^{binom(m-n,2)} H_{m-n}(x|q^{-1}) / (q;q)_{m-n}
 * plus the finite pair of build_example42. All have unit diagonals, and
 * L^beta M^beta = I = M^beta L^beta (likewise the 0-superscript pair).
 */
#ifndef QTRI_MATRICES_HPP
#define QTRI_MATRICES_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "qtri/trigpoly.hpp"

namespace qtri {

class TriMatrix {
public:
    TriMatrix(long lo, long hi, Mode m);
    static TriMatrix identity(long lo, long hi, Mode m);

    long lo() const { return lo_; }
    long hi() const { return hi_; }
    Mode mode() const { return mode_; }

    const TrigPoly& at(long m, long n) const;
    void set(long m, long n, TrigPoly p);

    bool is_unitriangular() const;
    bool is_identity() const;
    /// Largest |coefficient| of (*this - I) over the window.
    Scalar max_residual_vs_identity() const;
    /// Largest |coefficient| of (*this - other), entrywise.
    Scalar max_residual_vs(const TriMatrix& other) const;

private:
    std::size_t index(long m, long n) const;

    long lo_, hi_;
    Mode mode_;
    std::vector<TrigPoly> entries_;
};

/// Collects Float-mode near-singular warnings (|factor| < 1e-12) where Exact
/// mode would raise ExcludedParameter.
using WarningSink = std::vector<std::string>;

TriMatrix build_L(const Scalar& beta, const Scalar& q, long lo, long hi,
                  WarningSink* warnings = nullptr);
TriMatrix build_M(const Scalar& beta, const Scalar& q, long lo, long hi,
                  WarningSink* warnings = nullptr);
TriMatrix build_L0(const Scalar& q, long lo, long hi);
TriMatrix build_M0(const Scalar& q, long lo, long hi);

/// The finite pair L, L^{-1} on [0, N]:
///   L_{m,n}      = q^{m-n} (q^2;q^2)_m (q^2;q^2)_{2n+1} /
///                  [(q^2;q^2)_{m+n+1} (q^2;q^2)_n] C_{m-n}(x; q^{2n+2} | q^2)
///   L^{-1}_{m,n} = q^{(2m+1)(m-n)} (q^2;q^2)_m (q^2;q^2)_{m+n} /
///                  [(q^2;q^2)_{2m} (q^2;q^2)_n] C_{m-n}(x; q^{-2m} | q^2)
std::pair<TriMatrix, TriMatrix> build_example42(const Scalar& q, long N);

/// (AB)_{m,n} = sum_{k=n}^{m} A_{m,k} B_{k,n}; exact on the whole window.
TriMatrix band_product(const TriMatrix& A, const TriMatrix& B);

/// Forward-substitution inverse of a unitriangular matrix; needs no
/// closed-form knowledge and serves as the oracle for the builders above.
TriMatrix invert_unitriangular(const TriMatrix& A);

/// The key sum
///   sum_{k=0}^{m-n} (1 - beta^2 q^{2n+2k-1}) / (beta^2 q^{2n+k-1}; q)_{m-n+1}
///     * beta^k q^{k(k+n-1)} C_{m-n-k}(x; beta q^{k+n} | q)
///     * C_k(x; beta^{-1} q^{1-k-n} | q)
/// which equals delta_{m,n} as a polynomial. The numerator equals the j = k
/// factor of the denominator chain and is cancelled structurally, keeping
/// the boundary point beta^2 = q^{1-2n} finite.
TrigPoly lemma32_sum(long m, long n, const Scalar& beta, const Scalar& q);

/// Coefficients d(0..n) with
///   sum_k c(k) C_{n-k}(x; alpha_k | q) C_k(x; beta_k | q)
///     = sum_p d(p) e^{i(n-2p) theta},
/// each d(p) evaluated through the two-branch terminating 4phi3 formula.
std::vector<Scalar> dp_coefficients(long n,
                                    const std::vector<Scalar>& alphas,
                                    const std::vector<Scalar>& betas,
                                    const std::vector<Scalar>& cs,
                                    const Scalar& q);

nlohmann::json matrix_to_json(const TriMatrix& A);

/// Flat (m, n, k, coeff) rows, one per Laurent coefficient.
void matrix_to_csv(const TriMatrix& A, std::ostream& os,
                   const std::string& label = "");

} // namespace qtri

#endif // QTRI_MATRICES_HPP
