#include "qtri/trigpoly.hpp"

#include <algorithm>
#include <string>

#include <nlohmann/json.hpp>

#include "qtri/qseries.hpp"

namespace qtri {

TrigPoly::TrigPoly(long degree, Mode m)
    : degree_(degree), mode_(m), c_(2 * static_cast<std::size_t>(degree) + 1, Scalar::zero(m)) {
    if (degree < 0)
        throw Error(ErrorKind::InvalidParameter, "negative TrigPoly degree");
}

TrigPoly TrigPoly::constant(const Scalar& c) {
    TrigPoly p(0, c.mode());
    p.c_[0] = c;
    return p;
}

Scalar TrigPoly::coeff(long k) const {
    if (k < -degree_ || k > degree_) return Scalar::zero(mode_);
    return c_[static_cast<std::size_t>(k + degree_)];
}

void TrigPoly::set_coeff(long k, const Scalar& v) {
    if (k < -degree_ || k > degree_)
        throw Error(ErrorKind::InvalidParameter,
                    "coefficient index " + std::to_string(k) + " outside degree window " +
                        std::to_string(degree_));
    if (v.mode() != mode_)
        throw Error(ErrorKind::MixedMode, "setting coefficient of different mode");
    c_[static_cast<std::size_t>(k + degree_)] = v;
}

bool TrigPoly::is_zero() const {
    for (const Scalar& v : c_)
        if (!v.is_zero()) return false;
    return true;
}

bool TrigPoly::is_constant_one() const {
    for (long k = -degree_; k <= degree_; ++k)
        if (k != 0 ? !coeff(k).is_zero() : !coeff(k).is_one()) return false;
    return true;
}

bool TrigPoly::is_symmetric() const {
    for (long k = 1; k <= degree_; ++k)
        if (coeff(k) != coeff(-k)) return false;
    return true;
}

Scalar TrigPoly::max_abs_coeff() const {
    Scalar m = Scalar::zero(mode_);
    for (const Scalar& v : c_) {
        Scalar a = abs(v);
        if (m < a) m = a;
    }
    return m;
}

TrigPoly& TrigPoly::operator+=(const TrigPoly& o) {
    if (mode_ != o.mode_) throw Error(ErrorKind::MixedMode, "adding TrigPolys");
    if (o.degree_ > degree_) {
        TrigPoly grown(o.degree_, mode_);
        for (long k = -degree_; k <= degree_; ++k)
            grown.set_coeff(k, coeff(k));
        *this = std::move(grown);
    }
    for (long k = -o.degree_; k <= o.degree_; ++k)
        c_[static_cast<std::size_t>(k + degree_)] += o.coeff(k);
    return *this;
}

TrigPoly& TrigPoly::operator-=(const TrigPoly& o) {
    Scalar minus_one = Scalar::integer(-1, mode_);
    return *this += minus_one * o;
}

TrigPoly operator*(const Scalar& s, const TrigPoly& p) {
    if (s.mode() != p.mode()) throw Error(ErrorKind::MixedMode, "scaling TrigPoly");
    TrigPoly r(p.degree_, p.mode_);
    for (long k = -p.degree_; k <= p.degree_; ++k)
        r.set_coeff(k, s * p.coeff(k));
    return r;
}

bool operator==(const TrigPoly& a, const TrigPoly& b) {
    if (a.mode_ != b.mode_) throw Error(ErrorKind::MixedMode, "comparing TrigPolys");
    long d = std::max(a.degree_, b.degree_);
    for (long k = -d; k <= d; ++k)
        if (a.coeff(k) != b.coeff(k)) return false;
    return true;
}

TrigPoly tp_mul(const TrigPoly& a, const TrigPoly& b) {
    if (a.mode() != b.mode()) throw Error(ErrorKind::MixedMode, "multiplying TrigPolys");
    TrigPoly r(a.degree() + b.degree(), a.mode());
    for (long i = -a.degree(); i <= a.degree(); ++i) {
        Scalar ai = a.coeff(i);
        if (ai.is_zero()) continue;
        for (long j = -b.degree(); j <= b.degree(); ++j) {
            Scalar bj = b.coeff(j);
            if (bj.is_zero()) continue;
            r.set_coeff(i + j, r.coeff(i + j) + ai * bj);
        }
    }
    return r;
}

ChebSeries tp_to_cheb(const TrigPoly& p) {
    if (!p.is_symmetric())
        throw Error(ErrorKind::AsymmetricInput, "Chebyshev conversion needs coeff(k) == coeff(-k)");
    ChebSeries c{p.mode(), {}};
    c.coeffs.reserve(static_cast<std::size_t>(p.degree()) + 1);
    c.coeffs.push_back(p.coeff(0));
    const Scalar two = Scalar::integer(2, p.mode());
    for (long k = 1; k <= p.degree(); ++k)
        c.coeffs.push_back(two * p.coeff(k));
    return c;
}

TrigPoly cheb_to_tp(const ChebSeries& c) {
    long deg = static_cast<long>(c.coeffs.size()) - 1;
    if (deg < 0)
        throw Error(ErrorKind::InvalidParameter, "empty ChebSeries");
    TrigPoly p(deg, c.mode);
    p.set_coeff(0, c.coeffs[0]);
    const Scalar two = Scalar::integer(2, c.mode);
    for (long k = 1; k <= deg; ++k) {
        Scalar half = c.coeffs[static_cast<std::size_t>(k)] / two;
        p.set_coeff(k, half);
        p.set_coeff(-k, half);
    }
    return p;
}

Scalar tp_eval(const TrigPoly& p, const Scalar& x) {
    ChebSeries c = tp_to_cheb(p);
    const Mode m = p.mode();
    if (x.mode() != m) throw Error(ErrorKind::MixedMode, "evaluating TrigPoly");
    Scalar total = c.coeffs[0];
    if (c.coeffs.size() == 1) return total;
    Scalar t_prev = Scalar::one(m); // T_0
    Scalar t_cur = x;               // T_1
    const Scalar two = Scalar::integer(2, m);
    total += c.coeffs[1] * t_cur;
    for (std::size_t k = 2; k < c.coeffs.size(); ++k) {
        Scalar t_next = two * x * t_cur - t_prev;
        total += c.coeffs[k] * t_next;
        t_prev = t_cur;
        t_cur = t_next;
    }
    return total;
}

TruncSeries::TruncSeries(long order, Mode m)
    : order_(order), mode_(m),
      c_(static_cast<std::size_t>(order) + 1, TrigPoly(0, m)) {
    if (order < 0)
        throw Error(ErrorKind::InvalidParameter, "negative series order");
}

TruncSeries TruncSeries::one(long order, Mode m) {
    TruncSeries s(order, m);
    s.c_[0] = TrigPoly::one(m);
    return s;
}

const TrigPoly& TruncSeries::coeff(long j) const {
    if (j < 0 || j > order_)
        throw Error(ErrorKind::InvalidParameter,
                    "series coefficient " + std::to_string(j) + " outside order " +
                        std::to_string(order_));
    return c_[static_cast<std::size_t>(j)];
}

void TruncSeries::set_coeff(long j, TrigPoly p) {
    if (j < 0 || j > order_)
        throw Error(ErrorKind::InvalidParameter, "series coefficient outside order");
    if (p.mode() != mode_) throw Error(ErrorKind::MixedMode, "series coefficient mode");
    c_[static_cast<std::size_t>(j)] = std::move(p);
}

TruncSeries ts_mul(const TruncSeries& a, const TruncSeries& b) {
    if (a.mode() != b.mode()) throw Error(ErrorKind::MixedMode, "multiplying series");
    long T = std::min(a.order(), b.order());
    TruncSeries r(T, a.mode());
    for (long j = 0; j <= T; ++j) {
        TrigPoly acc(0, a.mode());
        for (long i = 0; i <= j; ++i)
            acc += tp_mul(a.coeff(i), b.coeff(j - i));
        r.set_coeff(j, std::move(acc));
    }
    return r;
}

TruncSeries ts_inv(const TruncSeries& a) {
    const TrigPoly& a0 = a.coeff(0);
    for (long k = -a0.degree(); k <= a0.degree(); ++k)
        if (k != 0 && !a0.coeff(k).is_zero())
            throw Error(ErrorKind::NonUnitConstantTerm,
                        "t^0 coefficient is not a constant polynomial");
    Scalar c0 = a0.coeff(0);
    if (c0.is_zero())
        throw Error(ErrorKind::NonUnitConstantTerm, "t^0 coefficient is zero");
    Scalar inv0 = Scalar::one(a.mode()) / c0;
    Scalar neg_inv0 = -inv0;

    TruncSeries r(a.order(), a.mode());
    r.set_coeff(0, TrigPoly::constant(inv0));
    for (long j = 1; j <= a.order(); ++j) {
        TrigPoly acc(0, a.mode());
        for (long i = 1; i <= j; ++i)
            acc += tp_mul(a.coeff(i), r.coeff(j - i));
        r.set_coeff(j, neg_inv0 * acc);
    }
    return r;
}

namespace {

TruncSeries euler_series(const Scalar& c, const Scalar& q, int theta_sign, long order,
                         bool inverse) {
    if (theta_sign != 1 && theta_sign != -1)
        throw Error(ErrorKind::InvalidParameter, "theta_sign must be +1 or -1");
    const Mode m = c.mode();
    TruncSeries s(order, m);
    Scalar coef = Scalar::one(m);
    s.set_coeff(0, TrigPoly::constant(coef));
    for (long j = 1; j <= order; ++j) {
        // ratio of successive Euler coefficients:
        //   (a;q)_inf:   c_{j} = c_{j-1} * (-c q^{j-1}) / (1 - q^j)
        //   1/(a;q)_inf: c_{j} = c_{j-1} * c / (1 - q^j)
        Scalar step = inverse ? c : -(c * pow(q, j - 1));
        Scalar denom = Scalar::one(m) - pow(q, j);
        if (denom.is_zero())
            throw Error(ErrorKind::VanishingDenominatorFactor,
                        "(q;q) factor 1 - q^" + std::to_string(j) + " vanished");
        coef = coef * step / denom;
        TrigPoly term(j, m);
        term.set_coeff(theta_sign * j, coef);
        s.set_coeff(j, std::move(term));
    }
    return s;
}

} // namespace

TruncSeries qpoch_inf_series(const Scalar& c, const Scalar& q, int theta_sign, long order) {
    return euler_series(c, q, theta_sign, order, false);
}

TruncSeries qpoch_inf_inv_series(const Scalar& c, const Scalar& q, int theta_sign, long order) {
    return euler_series(c, q, theta_sign, order, true);
}

nlohmann::json tp_to_json(const TrigPoly& p) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (long k = -p.degree(); k <= p.degree(); ++k)
        coeffs.push_back(p.coeff(k).str());
    return nlohmann::json{{"degree", p.degree()}, {"coeffs", std::move(coeffs)}};
}

} // namespace qtri
