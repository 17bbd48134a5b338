/**
 * @file trigpoly.hpp
 * @brief Laurent polynomials in e^{i theta}, Chebyshev views, and truncated
 *        power series in an auxiliary variable t.
 *
 * A TrigPoly stores the coefficients of e^{ik theta} for k in [-n, n].
 * Every polynomial-family constructor emits symmetric coefficients
 * (coeff(k) == coeff(-k)), which makes the value a real polynomial in
 * x = cos(theta); Chebyshev conversion requires that symmetry.
 */
#ifndef QTRI_TRIGPOLY_HPP
#define QTRI_TRIGPOLY_HPP

#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "qtri/scalar.hpp"

namespace qtri {

class TrigPoly {
public:
    /// Zero polynomial on the coefficient window [-degree, degree].
    TrigPoly(long degree, Mode m);

    static TrigPoly constant(const Scalar& c);
    static TrigPoly one(Mode m) { return constant(Scalar::one(m)); }

    long degree() const { return degree_; }
    Mode mode() const { return mode_; }

    /// Coefficient of e^{ik theta}; zero outside the stored window.
    Scalar coeff(long k) const;
    void set_coeff(long k, const Scalar& v);

    bool is_zero() const;
    bool is_constant_one() const;
    bool is_symmetric() const;

    /// max_k |coeff(k)|, used for residual reporting.
    Scalar max_abs_coeff() const;

    TrigPoly& operator+=(const TrigPoly& o);
    TrigPoly& operator-=(const TrigPoly& o);
    friend TrigPoly operator+(TrigPoly a, const TrigPoly& b) { return a += b; }
    friend TrigPoly operator-(TrigPoly a, const TrigPoly& b) { return a -= b; }
    friend TrigPoly operator*(const Scalar& s, const TrigPoly& p);

    /// Compares as Laurent polynomials; the stored windows may differ.
    friend bool operator==(const TrigPoly& a, const TrigPoly& b);
    friend bool operator!=(const TrigPoly& a, const TrigPoly& b) { return !(a == b); }

private:
    long degree_;
    Mode mode_;
    std::vector<Scalar> c_; // index k + degree_
};

/// Laurent convolution; degree adds.
TrigPoly tp_mul(const TrigPoly& a, const TrigPoly& b);
inline TrigPoly operator*(const TrigPoly& a, const TrigPoly& b) { return tp_mul(a, b); }

/// Chebyshev-T expansion: coeffs[p] multiplies T_p(x).
struct ChebSeries {
    Mode mode;
    std::vector<Scalar> coeffs;
};

/// Requires a symmetric input: T_p(cos theta) = (e^{ip theta}+e^{-ip theta})/2.
ChebSeries tp_to_cheb(const TrigPoly& p);
TrigPoly cheb_to_tp(const ChebSeries& c);

/// Value at x = cos(theta) via the recurrence T_{p+1} = 2x T_p - T_{p-1}.
Scalar tp_eval(const TrigPoly& p, const Scalar& x);

/// Power series in t with TrigPoly coefficients, truncated at a fixed order;
/// all arithmetic discards terms beyond it.
class TruncSeries {
public:
    TruncSeries(long order, Mode m);
    static TruncSeries one(long order, Mode m);

    long order() const { return order_; }
    Mode mode() const { return mode_; }
    const TrigPoly& coeff(long j) const;
    void set_coeff(long j, TrigPoly p);

private:
    long order_;
    Mode mode_;
    std::vector<TrigPoly> c_;
};

/// Truncated Cauchy product.
TruncSeries ts_mul(const TruncSeries& a, const TruncSeries& b);

/// Truncated reciprocal; the t^0 coefficient must be a nonzero constant.
TruncSeries ts_inv(const TruncSeries& a);

/// t-expansion of the infinite product (c t e^{i s theta}; q)_infinity:
/// coefficient of t^j is (-1)^j q^{j(j-1)/2} c^j e^{i s j theta} / (q;q)_j
/// (Euler), exact at every order. theta_sign s is +1 or -1.
TruncSeries qpoch_inf_series(const Scalar& c, const Scalar& q, int theta_sign, long order);

/// t-expansion of 1 / (c t e^{i s theta}; q)_infinity:
/// coefficient of t^j is c^j e^{i s j theta} / (q;q)_j.
TruncSeries qpoch_inf_inv_series(const Scalar& c, const Scalar& q, int theta_sign, long order);

nlohmann::json tp_to_json(const TrigPoly& p);

} // namespace qtri

#endif // QTRI_TRIGPOLY_HPP
