#include "qtri/scalar.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace qtri {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::MixedMode: return "MixedMode";
        case ErrorKind::ZeroToNegativePower: return "ZeroToNegativePower";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::NegativeIndex: return "NegativeIndex";
        case ErrorKind::VanishingDenominatorFactor: return "VanishingDenominatorFactor";
        case ErrorKind::ExcludedParameter: return "ExcludedParameter";
        case ErrorKind::WindowMismatch: return "WindowMismatch";
        case ErrorKind::NonUnitDiagonal: return "NonUnitDiagonal";
        case ErrorKind::AsymmetricInput: return "AsymmetricInput";
        case ErrorKind::NonUnitConstantTerm: return "NonUnitConstantTerm";
        case ErrorKind::DegenerateCentral: return "DegenerateCentral";
        case ErrorKind::InvalidParameter: return "InvalidParameter";
    }
    return "UnknownError";
}

const char* mode_name(Mode m) { return m == Mode::Exact ? "exact" : "float"; }

namespace {

void require_same_mode(const Scalar& a, const Scalar& b, const char* op) {
    if (a.mode() != b.mode()) {
        throw Error(ErrorKind::MixedMode,
                    std::string("cannot ") + op + " " + mode_name(a.mode()) +
                        " and " + mode_name(b.mode()) + " values");
    }
}

} // namespace

Scalar Scalar::zero(Mode m) { return integer(0, m); }
Scalar Scalar::one(Mode m) { return integer(1, m); }

Scalar Scalar::integer(long v, Mode m) {
    if (m == Mode::Exact) return Scalar(mpq_class(v));
    return Scalar(static_cast<double>(v));
}

Scalar Scalar::exact(long num, long den) {
    if (den == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
    mpq_class v(num, den);
    v.canonicalize();
    return Scalar(std::move(v));
}

Scalar Scalar::exact(mpq_class v) {
    if (v.get_den() == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
    v.canonicalize();
    return Scalar(std::move(v));
}

Scalar Scalar::real(double v) { return Scalar(v); }

Scalar Scalar::parse(const std::string& text, Mode m) {
    if (text.empty()) throw Error(ErrorKind::InvalidParameter, "empty scalar literal");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        mpq_class v;
        if (v.set_str(text, 10) != 0 || v.get_den() == 0)
            throw Error(ErrorKind::InvalidParameter, "cannot parse rational '" + text + "'");
        v.canonicalize();
        if (m == Mode::Exact) return Scalar(std::move(v));
        return Scalar(v.get_d());
    }
    if (m == Mode::Exact) {
        // Integer only: decimals are a Float-mode notation.
        mpq_class v;
        if (v.set_str(text, 10) != 0)
            throw Error(ErrorKind::InvalidParameter,
                        "cannot parse exact scalar '" + text + "' (use p/q or an integer)");
        return Scalar(std::move(v));
    }
    try {
        std::size_t pos = 0;
        double d = std::stod(text, &pos);
        if (pos != text.size()) throw std::invalid_argument(text);
        return Scalar(d);
    } catch (const std::exception&) {
        throw Error(ErrorKind::InvalidParameter, "cannot parse float scalar '" + text + "'");
    }
}

bool Scalar::is_zero() const {
    if (mode() == Mode::Exact) return std::get<mpq_class>(v_) == 0;
    return std::get<double>(v_) == 0.0;
}

bool Scalar::is_one() const {
    if (mode() == Mode::Exact) return std::get<mpq_class>(v_) == 1;
    return std::get<double>(v_) == 1.0;
}

int Scalar::sign() const {
    if (mode() == Mode::Exact) return sgn(std::get<mpq_class>(v_));
    double d = std::get<double>(v_);
    return d > 0.0 ? 1 : (d < 0.0 ? -1 : 0);
}

const mpq_class& Scalar::rat() const {
    if (mode() != Mode::Exact)
        throw Error(ErrorKind::MixedMode, "rat() on a float-mode scalar");
    return std::get<mpq_class>(v_);
}

double Scalar::dbl() const {
    if (mode() != Mode::Float)
        throw Error(ErrorKind::MixedMode, "dbl() on an exact-mode scalar");
    return std::get<double>(v_);
}

double Scalar::to_double() const {
    if (mode() == Mode::Exact) return std::get<mpq_class>(v_).get_d();
    return std::get<double>(v_);
}

std::string Scalar::str() const {
    if (mode() == Mode::Exact) {
        const mpq_class& v = std::get<mpq_class>(v_);
        if (v.get_den() == 1) return v.get_num().get_str();
        return v.get_num().get_str() + "/" + v.get_den().get_str();
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", std::get<double>(v_));
    return buf;
}

Scalar Scalar::operator-() const {
    if (mode() == Mode::Exact) return Scalar(mpq_class(-std::get<mpq_class>(v_)));
    return Scalar(-std::get<double>(v_));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    require_same_mode(a, b, "add");
    if (a.mode() == Mode::Exact)
        return Scalar(mpq_class(std::get<mpq_class>(a.v_) + std::get<mpq_class>(b.v_)));
    return Scalar(std::get<double>(a.v_) + std::get<double>(b.v_));
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    require_same_mode(a, b, "subtract");
    if (a.mode() == Mode::Exact)
        return Scalar(mpq_class(std::get<mpq_class>(a.v_) - std::get<mpq_class>(b.v_)));
    return Scalar(std::get<double>(a.v_) - std::get<double>(b.v_));
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    require_same_mode(a, b, "multiply");
    if (a.mode() == Mode::Exact)
        return Scalar(mpq_class(std::get<mpq_class>(a.v_) * std::get<mpq_class>(b.v_)));
    return Scalar(std::get<double>(a.v_) * std::get<double>(b.v_));
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    require_same_mode(a, b, "divide");
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
    if (a.mode() == Mode::Exact)
        return Scalar(mpq_class(std::get<mpq_class>(a.v_) / std::get<mpq_class>(b.v_)));
    return Scalar(std::get<double>(a.v_) / std::get<double>(b.v_));
}

bool operator==(const Scalar& a, const Scalar& b) {
    require_same_mode(a, b, "compare");
    if (a.mode() == Mode::Exact)
        return std::get<mpq_class>(a.v_) == std::get<mpq_class>(b.v_);
    return std::get<double>(a.v_) == std::get<double>(b.v_);
}

bool operator<(const Scalar& a, const Scalar& b) {
    require_same_mode(a, b, "compare");
    if (a.mode() == Mode::Exact)
        return std::get<mpq_class>(a.v_) < std::get<mpq_class>(b.v_);
    return std::get<double>(a.v_) < std::get<double>(b.v_);
}

Scalar pow(const Scalar& base, long exp) {
    if (exp == 0) return Scalar::one(base.mode());
    if (base.is_zero() && exp < 0)
        throw Error(ErrorKind::ZeroToNegativePower,
                    "0 raised to exponent " + std::to_string(exp));
    if (base.mode() == Mode::Float)
        return Scalar::real(std::pow(base.dbl(), static_cast<double>(exp)));

    const mpq_class& v = base.rat();
    unsigned long e = exp < 0 ? static_cast<unsigned long>(-(exp + 1)) + 1UL
                              : static_cast<unsigned long>(exp);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), v.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), v.get_den().get_mpz_t(), e);
    mpq_class r = exp < 0 ? mpq_class(den, num) : mpq_class(num, den);
    r.canonicalize();
    return Scalar::exact(std::move(r));
}

Scalar abs(const Scalar& a) { return a.sign() < 0 ? -a : a; }

bool close(const Scalar& a, const Scalar& b, double rel_tol) {
    if (a.mode() != b.mode())
        throw Error(ErrorKind::MixedMode, "close() across modes");
    if (a.mode() == Mode::Exact) return a == b;
    double x = a.dbl(), y = b.dbl();
    double scale = std::max({1.0, std::fabs(x), std::fabs(y)});
    return std::fabs(x - y) <= rel_tol * scale;
}

Scalar div_named(const Scalar& num, const Scalar& den, const std::string& factor_name) {
    if (den.is_zero())
        throw Error(ErrorKind::DivisionByZero, factor_name + " vanished");
    return num / den;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

} // namespace qtri
