#pragma once

// Sign + base-10 exponent arithmetic for quantities spanning hundreds of
// decades (Planck-scale prefactors, e^{-10^9} suppression factors, 10^47
// operation rates). Base 10 so that values read directly as orders of
// magnitude.

#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <numeric>
#include <utility>

#include "gravbound/errors.hpp"

namespace gravbound {

/// Exact rational exponent (4/3, 3/7, ...). Stored reduced.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational(long long n, long long d = 1) : num(n), den(d) {
        if (den == 0) throw DomainError("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        const long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    [[nodiscard]] bool is_integer() const { return den == 1; }
    [[nodiscard]] double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    [[nodiscard]] Rational inverse() const {
        if (num == 0) throw DomainError("Rational: inverse of zero");
        return {den, num};
    }
};

struct LogScalar {
    int sign = 0;           // -1, 0 or +1
    double log10_mag = 0.0; // meaningful only when sign != 0; zero is (0, 0)

    static LogScalar zero() { return {0, 0.0}; }
    static LogScalar one() { return {+1, 0.0}; }

    static LogScalar from_log10(int sign, double log10_mag) {
        if (sign == 0) return zero();
        if (!std::isfinite(log10_mag)) throw DomainError("LogScalar: non-finite exponent");
        return {sign > 0 ? +1 : -1, log10_mag};
    }

    static LogScalar from_real(double x) {
        if (!std::isfinite(x)) throw DomainError("LogScalar: non-finite value");
        if (x == 0.0) return zero();
        return {x > 0.0 ? +1 : -1, std::log10(std::fabs(x))};
    }

    [[nodiscard]] bool is_zero() const { return sign == 0; }
};

enum class RangeFlag {
    ExactRange,       // value representable in native double
    UnderflowToZero,  // magnitude below native range, clamped to 0
    OverflowToInf     // magnitude above native range, clamped to +-inf
};

struct RealValue {
    double value = 0.0;
    RangeFlag flag = RangeFlag::ExactRange;
};

/// Native-precision value plus an explicit clamping flag. Callers that care
/// about extreme magnitudes must inspect the flag.
inline RealValue to_real(const LogScalar& a) {
    if (a.sign == 0) return {0.0, RangeFlag::ExactRange};
    const double mag = std::pow(10.0, a.log10_mag);
    if (mag == 0.0) return {0.0, RangeFlag::UnderflowToZero};
    if (std::isinf(mag)) {
        return {a.sign > 0 ? mag : -mag, RangeFlag::OverflowToInf};
    }
    return {a.sign > 0 ? mag : -mag, RangeFlag::ExactRange};
}

inline LogScalar log_mul(const LogScalar& a, const LogScalar& b) {
    if (a.sign == 0 || b.sign == 0) return LogScalar::zero();
    return {a.sign * b.sign, a.log10_mag + b.log10_mag};
}

inline LogScalar log_div(const LogScalar& a, const LogScalar& b) {
    if (b.sign == 0) throw DomainError("log_div: division by zero");
    if (a.sign == 0) return LogScalar::zero();
    return {a.sign * b.sign, a.log10_mag - b.log10_mag};
}

/// a^p for rational p. Negative bases require an integer exponent.
inline LogScalar log_pow(const LogScalar& a, const Rational& p) {
    if (p.num == 0) {
        return LogScalar::one(); // includes 0^0 = 1, pow() convention
    }
    if (a.sign == 0) {
        if (p.num < 0) throw DomainError("log_pow: zero base with negative exponent");
        return LogScalar::zero();
    }
    int sign = +1;
    if (a.sign < 0) {
        if (!p.is_integer()) {
            throw DomainError("log_pow: negative base with non-integer exponent");
        }
        sign = (p.num % 2 != 0) ? -1 : +1;
    }
    const double mag = a.log10_mag * static_cast<double>(p.num) / static_cast<double>(p.den);
    if (!std::isfinite(mag)) throw DomainError("log_pow: exponent overflow");
    return {sign, mag};
}

namespace detail {
// Opposite-sign addition cancelling more than this many decades below the
// operands collapses to canonical zero (below native relative precision).
inline constexpr double kCancellationDecades = 15.0;
} // namespace detail

/// a + b via shift-and-sum on the exponents. Stable for arbitrarily large
/// exponent gaps: the far term contributes exactly 0 once the gap exceeds
/// native precision.
inline LogScalar log_add(const LogScalar& a, const LogScalar& b) {
    if (a.sign == 0) return b;
    if (b.sign == 0) return a;
    const LogScalar& big = (a.log10_mag >= b.log10_mag) ? a : b;
    const LogScalar& small = (a.log10_mag >= b.log10_mag) ? b : a;
    const double gap = big.log10_mag - small.log10_mag; // >= 0
    const double rel = (a.sign == b.sign ? 1.0 : -1.0) * std::pow(10.0, -gap);
    // factor = 1 + rel, in [0, 2]; log1p keeps precision near cancellation
    const double factor_ln = std::log1p(rel);
    if (!std::isfinite(factor_ln)) return LogScalar::zero(); // exact cancellation
    const double factor_log10 = factor_ln / std::numbers::ln10;
    if (factor_log10 < -detail::kCancellationDecades) return LogScalar::zero();
    return {big.sign, big.log10_mag + factor_log10};
}

inline LogScalar log_sub(const LogScalar& a, const LogScalar& b) {
    return log_add(a, LogScalar{-b.sign, b.log10_mag});
}

inline LogScalar log_neg(const LogScalar& a) { return {-a.sign, a.log10_mag}; }

/// Three-way comparison: -1 if a < b, 0 if equal, +1 if a > b.
inline int compare(const LogScalar& a, const LogScalar& b) {
    if (a.sign != b.sign) return a.sign < b.sign ? -1 : +1;
    if (a.sign == 0) return 0;
    if (a.log10_mag == b.log10_mag) return 0;
    const bool mag_less = a.log10_mag < b.log10_mag;
    if (a.sign > 0) return mag_less ? -1 : +1;
    return mag_less ? +1 : -1; // for negatives a larger magnitude is smaller
}

inline bool operator<(const LogScalar& a, const LogScalar& b) { return compare(a, b) < 0; }
inline bool operator>(const LogScalar& a, const LogScalar& b) { return compare(a, b) > 0; }
inline LogScalar operator*(const LogScalar& a, const LogScalar& b) { return log_mul(a, b); }
inline LogScalar operator/(const LogScalar& a, const LogScalar& b) { return log_div(a, b); }
inline LogScalar operator+(const LogScalar& a, const LogScalar& b) { return log_add(a, b); }
inline LogScalar operator-(const LogScalar& a, const LogScalar& b) { return log_sub(a, b); }

} // namespace gravbound
