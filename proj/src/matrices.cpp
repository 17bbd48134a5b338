#include "qtri/matrices.hpp"

#include <cmath>
#include <ostream>
#include <string>

#include <nlohmann/json.hpp>

#include "qtri/polyfamilies.hpp"
#include "qtri/qseries.hpp"

namespace qtri {

namespace {

constexpr double kNearSingularTol = 1e-12;

// Denominator chain (base_term; q)_len with eager exclusion scanning:
// exact zeros raise ExcludedParameter; float near-zeros append a warning.
Scalar excluded_checked_qpoch(const Scalar& base_term, const Scalar& q, long len,
                              const std::string& what, long m, long n,
                              WarningSink* warnings) {
    const Mode mode = q.mode();
    const Scalar one = Scalar::one(mode);
    Scalar r = one;
    Scalar f = base_term;
    for (long j = 0; j < len; ++j) {
        Scalar factor = one - f;
        if (mode == Mode::Exact) {
            if (factor.is_zero())
                throw Error(ErrorKind::ExcludedParameter,
                            what + " factor vanished at m=" + std::to_string(m) +
                                " n=" + std::to_string(n) + " j=" + std::to_string(j));
        } else if (std::fabs(factor.dbl()) < kNearSingularTol) {
            if (warnings)
                warnings->push_back("NearSingular: " + what + " factor ~0 at m=" +
                                    std::to_string(m) + " n=" + std::to_string(n) +
                                    " j=" + std::to_string(j));
        }
        r *= factor;
        f *= q;
    }
    return r;
}

} // namespace

TriMatrix::TriMatrix(long lo, long hi, Mode m) : lo_(lo), hi_(hi), mode_(m) {
    if (hi < lo) throw Error(ErrorKind::InvalidParameter, "window with hi < lo");
    std::size_t rows = static_cast<std::size_t>(hi - lo + 1);
    entries_.assign(rows * (rows + 1) / 2, TrigPoly(0, m));
}

TriMatrix TriMatrix::identity(long lo, long hi, Mode m) {
    TriMatrix I(lo, hi, m);
    for (long d = lo; d <= hi; ++d)
        I.set(d, d, TrigPoly::one(m));
    return I;
}

std::size_t TriMatrix::index(long m, long n) const {
    if (n < lo_ || m > hi_ || n > m)
        throw Error(ErrorKind::InvalidParameter,
                    "entry (" + std::to_string(m) + "," + std::to_string(n) +
                        ") outside lower-triangular window [" + std::to_string(lo_) +
                        "," + std::to_string(hi_) + "]");
    std::size_t r = static_cast<std::size_t>(m - lo_);
    return r * (r + 1) / 2 + static_cast<std::size_t>(n - lo_);
}

const TrigPoly& TriMatrix::at(long m, long n) const { return entries_[index(m, n)]; }

void TriMatrix::set(long m, long n, TrigPoly p) {
    if (p.mode() != mode_) throw Error(ErrorKind::MixedMode, "matrix entry mode");
    entries_[index(m, n)] = std::move(p);
}

bool TriMatrix::is_unitriangular() const {
    for (long d = lo_; d <= hi_; ++d)
        if (!at(d, d).is_constant_one()) return false;
    return true;
}

bool TriMatrix::is_identity() const {
    for (long m = lo_; m <= hi_; ++m)
        for (long n = lo_; n <= m; ++n) {
            if (m == n ? !at(m, n).is_constant_one() : !at(m, n).is_zero())
                return false;
        }
    return true;
}

Scalar TriMatrix::max_residual_vs_identity() const {
    return max_residual_vs(identity(lo_, hi_, mode_));
}

Scalar TriMatrix::max_residual_vs(const TriMatrix& other) const {
    if (other.lo_ != lo_ || other.hi_ != hi_)
        throw Error(ErrorKind::WindowMismatch, "residual across different windows");
    if (other.mode_ != mode_)
        throw Error(ErrorKind::MixedMode, "residual across modes");
    Scalar r = Scalar::zero(mode_);
    for (long m = lo_; m <= hi_; ++m)
        for (long n = lo_; n <= m; ++n) {
            Scalar e = (at(m, n) - other.at(m, n)).max_abs_coeff();
            if (r < e) r = e;
        }
    return r;
}

TriMatrix build_L(const Scalar& beta, const Scalar& q, long lo, long hi,
                  WarningSink* warnings) {
    if (beta.is_zero())
        throw Error(ErrorKind::InvalidParameter, "beta must be nonzero (use build_L0 for the limit)");
    TriMatrix L(lo, hi, q.mode());
    Scalar beta2 = beta * beta;
    for (long m = lo; m <= hi; ++m)
        for (long n = lo; n <= m; ++n) {
            Scalar den = excluded_checked_qpoch(beta2 * pow(q, 2 * n), q, m - n,
                                                "(beta^2 q^{2n};q)_{m-n}", m, n, warnings);
            Scalar inv = div_named(Scalar::one(q.mode()), den, "(beta^2 q^{2n};q)_{m-n}");
            L.set(m, n, inv * c_ultra(m - n, beta * pow(q, n), q));
        }
    return L;
}

TriMatrix build_M(const Scalar& beta, const Scalar& q, long lo, long hi,
                  WarningSink* warnings) {
    if (beta.is_zero())
        throw Error(ErrorKind::InvalidParameter, "beta must be nonzero (use build_M0 for the limit)");
    TriMatrix M(lo, hi, q.mode());
    Scalar beta2 = beta * beta;
    Scalar beta_inv = Scalar::one(q.mode()) / beta;
    for (long m = lo; m <= hi; ++m)
        for (long n = lo; n <= m; ++n) {
            Scalar den = excluded_checked_qpoch(beta2 * pow(q, m + n - 1), q, m - n,
                                                "(beta^2 q^{m+n-1};q)_{m-n}", m, n, warnings);
            Scalar pre = div_named(pow(beta, m - n) * pow(q, (m - 1) * (m - n)), den,
                                   "(beta^2 q^{m+n-1};q)_{m-n}");
            M.set(m, n, pre * c_ultra(m - n, beta_inv * pow(q, 1 - m), q));
        }
    return M;
}

TriMatrix build_L0(const Scalar& q, long lo, long hi) {
    TriMatrix L(lo, hi, q.mode());
    // Toeplitz: entries depend on m-n only.
    std::vector<TrigPoly> band;
    for (long d = 0; d <= hi - lo; ++d)
        band.push_back(div_named(Scalar::one(q.mode()), qpoch(q, q, d), "(q;q)_{m-n}") *
                       c_hermite(d, q));
    for (long m = lo; m <= hi; ++m)
        for (long n = lo; n <= m; ++n)
            L.set(m, n, band[static_cast<std::size_t>(m - n)]);
    return L;
}

TriMatrix build_M0(const Scalar& q, long lo, long hi) {
    TriMatrix M(lo, hi, q.mode());
    std::vector<TrigPoly> band;
    for (long d = 0; d <= hi - lo; ++d) {
        Scalar sign = Scalar::integer(d % 2 == 0 ? 1 : -1, q.mode());
        Scalar pre = div_named(sign * pow(q, d * (d - 1) / 2), qpoch(q, q, d), "(q;q)_{m-n}");
        band.push_back(pre * c_hermite_qinv(d, q));
    }
    for (long m = lo; m <= hi; ++m)
        for (long n = lo; n <= m; ++n)
            M.set(m, n, band[static_cast<std::size_t>(m - n)]);
    return M;
}

std::pair<TriMatrix, TriMatrix> build_example42(const Scalar& q, long N) {
    if (N < 0) throw Error(ErrorKind::NegativeIndex, "N = " + std::to_string(N));
    const Mode mode = q.mode();
    Scalar q2 = q * q;
    std::vector<Scalar> qp2; // (q^2;q^2)_j for j = 0..2N+1
    qp2.push_back(Scalar::one(mode));
    for (long j = 1; j <= 2 * N + 1; ++j)
        qp2.push_back(qp2.back() * (Scalar::one(mode) - pow(q2, j)));

    TriMatrix L(0, N, mode), Linv(0, N, mode);
    for (long m = 0; m <= N; ++m)
        for (long n = 0; n <= m; ++n) {
            Scalar pre = pow(q, m - n) * qp2[m] * qp2[2 * n + 1] /
                         (qp2[m + n + 1] * qp2[n]);
            L.set(m, n, pre * c_ultra(m - n, pow(q, 2 * n + 2), q2));

            Scalar ipre = pow(q, (2 * m + 1) * (m - n)) * qp2[m] * qp2[m + n] /
                          (qp2[2 * m] * qp2[n]);
            Linv.set(m, n, ipre * c_ultra(m - n, pow(q, -2 * m), q2));
        }
    return {std::move(L), std::move(Linv)};
}

TriMatrix band_product(const TriMatrix& A, const TriMatrix& B) {
    if (A.lo() != B.lo() || A.hi() != B.hi())
        throw Error(ErrorKind::WindowMismatch,
                    "product of windows [" + std::to_string(A.lo()) + "," +
                        std::to_string(A.hi()) + "] and [" + std::to_string(B.lo()) +
                        "," + std::to_string(B.hi()) + "]");
    if (A.mode() != B.mode()) throw Error(ErrorKind::MixedMode, "matrix product");
    TriMatrix C(A.lo(), A.hi(), A.mode());
    for (long m = A.lo(); m <= A.hi(); ++m)
        for (long n = A.lo(); n <= m; ++n) {
            TrigPoly acc(0, A.mode());
            for (long k = n; k <= m; ++k)
                acc += tp_mul(A.at(m, k), B.at(k, n));
            C.set(m, n, std::move(acc));
        }
    return C;
}

TriMatrix invert_unitriangular(const TriMatrix& A) {
    for (long d = A.lo(); d <= A.hi(); ++d)
        if (!A.at(d, d).is_constant_one())
            throw Error(ErrorKind::NonUnitDiagonal,
                        "diagonal entry at " + std::to_string(d) + " is not the constant 1");
    TriMatrix B(A.lo(), A.hi(), A.mode());
    for (long n = A.lo(); n <= A.hi(); ++n) {
        B.set(n, n, TrigPoly::one(A.mode()));
        for (long m = n + 1; m <= A.hi(); ++m) {
            TrigPoly acc(0, A.mode());
            for (long k = n; k < m; ++k)
                acc += tp_mul(A.at(m, k), B.at(k, n));
            B.set(m, n, Scalar::integer(-1, A.mode()) * acc);
        }
    }
    return B;
}

TrigPoly lemma32_sum(long m, long n, const Scalar& beta, const Scalar& q) {
    if (m < n) throw Error(ErrorKind::InvalidParameter, "needs n <= m");
    const Mode mode = q.mode();
    const Scalar one = Scalar::one(mode);
    Scalar beta2 = beta * beta;
    Scalar beta_inv = one / beta;
    TrigPoly acc(0, mode);
    for (long k = 0; k <= m - n; ++k) {
        // (beta^2 q^{2n+k-1};q)_{m-n+1} with the j = k factor cancelled
        // against the numerator (1 - beta^2 q^{2n+2k-1}).
        Scalar den = one;
        for (long j = 0; j <= m - n; ++j) {
            if (j == k) continue;
            Scalar factor = one - beta2 * pow(q, 2 * n + k - 1 + j);
            if (mode == Mode::Exact && factor.is_zero())
                throw Error(ErrorKind::ExcludedParameter,
                            "beta^2 = q^{-" + std::to_string(2 * n + k - 1 + j) +
                                "} lies in the excluded set (k=" + std::to_string(k) +
                                " j=" + std::to_string(j) + ")");
            den *= factor;
        }
        Scalar c = div_named(pow(beta, k) * pow(q, k * (k + n - 1)), den,
                             "(beta^2 q^{2n+k-1};q)_{m-n+1}");
        acc += c * tp_mul(c_ultra(m - n - k, beta * pow(q, k + n), q),
                          c_ultra(k, beta_inv * pow(q, 1 - k - n), q));
    }
    return acc;
}

std::vector<Scalar> dp_coefficients(long n,
                                    const std::vector<Scalar>& alphas,
                                    const std::vector<Scalar>& betas,
                                    const std::vector<Scalar>& cs,
                                    const Scalar& q) {
    if (n < 0) throw Error(ErrorKind::NegativeIndex, "n = " + std::to_string(n));
    auto sz = static_cast<std::size_t>(n) + 1;
    if (alphas.size() != sz || betas.size() != sz || cs.size() != sz)
        throw Error(ErrorKind::InvalidParameter, "parameter lists must have length n+1");
    const Mode mode = q.mode();
    const Scalar one = Scalar::one(mode);
    for (std::size_t k = 0; k < sz; ++k)
        if (alphas[k].is_zero() || betas[k].is_zero())
            throw Error(ErrorKind::InvalidParameter,
                        "alpha_k, beta_k must be nonzero (argument q^2/(alpha_k beta_k))");

    std::vector<Scalar> qp; // (q;q)_j
    qp.push_back(one);
    for (long j = 1; j <= n; ++j)
        qp.push_back(qp.back() * (one - pow(q, j)));

    std::vector<Scalar> out;
    out.reserve(sz);
    for (long p = 0; p <= n; ++p) {
        Scalar d = Scalar::zero(mode);
        for (long k = 0; k <= n - p; ++k) {
            const Scalar& a = alphas[static_cast<std::size_t>(k)];
            const Scalar& b = betas[static_cast<std::size_t>(k)];
            Scalar ai = one / a, bi = one / b;
            Scalar pre = qpoch(a, q, p) / qp[static_cast<std::size_t>(p)] *
                         qpoch(a, q, n - p - k) / qp[static_cast<std::size_t>(n - p - k)] *
                         qpoch(b, q, k) / qp[static_cast<std::size_t>(k)];
            PhiSeries s({pow(q, -p), a * pow(q, n - p - k), pow(q, -k), b},
                        {pow(q, 1 - p) * ai, pow(q, 1 - k) * bi, pow(q, n - p - k + 1)},
                        q, q * q * ai * bi, std::min(p, k));
            d += cs[static_cast<std::size_t>(k)] * pre * phi_terminating(s);
        }
        for (long k = n - p + 1; k <= n; ++k) {
            const Scalar& a = alphas[static_cast<std::size_t>(k)];
            const Scalar& b = betas[static_cast<std::size_t>(k)];
            Scalar ai = one / a, bi = one / b;
            Scalar pre = qpoch(a, q, n - k) / qp[static_cast<std::size_t>(n - k)] *
                         qpoch(b, q, p - n + k) / qp[static_cast<std::size_t>(p - n + k)] *
                         qpoch(b, q, n - p) / qp[static_cast<std::size_t>(n - p)];
            PhiSeries s({pow(q, k - n), pow(q, p - n), a, b * pow(q, k + p - n)},
                        {pow(q, 1 - n + k) * ai, pow(q, k + p - n + 1), pow(q, 1 - n + p) * bi},
                        q, q * q * ai * bi, std::min(n - k, n - p));
            d += cs[static_cast<std::size_t>(k)] * pre * phi_terminating(s);
        }
        out.push_back(std::move(d));
    }
    return out;
}

nlohmann::json matrix_to_json(const TriMatrix& A) {
    nlohmann::json entries = nlohmann::json::array();
    for (long m = A.lo(); m <= A.hi(); ++m)
        for (long n = A.lo(); n <= m; ++n)
            entries.push_back({{"m", m}, {"n", n}, {"poly", tp_to_json(A.at(m, n))}});
    return nlohmann::json{{"lo", A.lo()}, {"hi", A.hi()}, {"entries", std::move(entries)}};
}

void matrix_to_csv(const TriMatrix& A, std::ostream& os, const std::string& label) {
    for (long m = A.lo(); m <= A.hi(); ++m)
        for (long n = A.lo(); n <= m; ++n) {
            const TrigPoly& p = A.at(m, n);
            for (long k = -p.degree(); k <= p.degree(); ++k) {
                if (!label.empty()) os << label << ",";
                os << m << "," << n << "," << k << "," << p.coeff(k).str() << "\n";
            }
        }
}

} // namespace qtri
