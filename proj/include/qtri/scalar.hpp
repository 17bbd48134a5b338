/**
 * @file scalar.hpp
 * @brief Dual-mode number system: exact arbitrary-precision rationals or doubles.
 *
 * Every quantity in the library (q, beta, polynomial coefficients, ...) is a
 * Scalar. A Scalar is either Exact (a rational in lowest terms with positive
 * denominator, backed by GMP) or Float (a double). The two modes never mix:
 * arithmetic between an Exact and a Float value throws, it is never coerced.
 */
#ifndef QTRI_SCALAR_HPP
#define QTRI_SCALAR_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <variant>

#include "qtri/error.hpp"

namespace qtri {

enum class Mode { Exact, Float };

const char* mode_name(Mode m);

class Scalar {
public:
    static Scalar zero(Mode m);
    static Scalar one(Mode m);
    static Scalar integer(long v, Mode m);
    static Scalar exact(long num, long den = 1);
    static Scalar exact(mpq_class v);
    static Scalar real(double v);

    /// Parses "p/q", an integer, or (Float mode) a decimal literal.
    static Scalar parse(const std::string& text, Mode m);

    Mode mode() const { return std::holds_alternative<mpq_class>(v_) ? Mode::Exact : Mode::Float; }
    bool is_zero() const;
    bool is_one() const;
    int sign() const;

    const mpq_class& rat() const;   // Exact mode only
    double dbl() const;             // Float mode only
    double to_double() const;       // either mode

    std::string str() const;

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    friend bool operator<(const Scalar& a, const Scalar& b);

private:
    explicit Scalar(mpq_class v) : v_(std::move(v)) {}
    explicit Scalar(double v) : v_(v) {}

    std::variant<mpq_class, double> v_;
};

/// base^exp for signed exp; exact in Exact mode for arbitrarily large exponents.
Scalar pow(const Scalar& base, long exp);

Scalar abs(const Scalar& a);

/// Exact mode: true iff a == b (rel_tol ignored).
/// Float mode: |a-b| <= rel_tol * max(1, |a|, |b|).
bool close(const Scalar& a, const Scalar& b, double rel_tol);

/// Division that names the vanished factor in the error, e.g.
/// div_named(x, f, "q-Pochhammer factor (beta^2 q^{2n};q)_{m-n}").
Scalar div_named(const Scalar& num, const Scalar& den, const std::string& factor_name);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

} // namespace qtri

#endif // QTRI_SCALAR_HPP
