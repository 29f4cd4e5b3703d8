#pragma once

#include <cmath>
#include <stdexcept>

namespace orbexp {

/// Sign-tracked log-magnitude scalar. Factorial/Pochhammer ratios are assembled
/// in this form and exponentiated once, so coefficients survive past n ~ 20
/// where the plain products overflow.
struct LogSigned {
    double lg = 0.0;
    int sign = 1;  // -1, 0, +1

    static LogSigned zero() { return {0.0, 0}; }
    static LogSigned one() { return {0.0, 1}; }
    static LogSigned of(double v) {
        if (v == 0.0) return zero();
        return {std::log(std::abs(v)), v > 0.0 ? 1 : -1};
    }
    friend LogSigned operator*(const LogSigned& a, const LogSigned& b) {
        if (a.sign == 0 || b.sign == 0) return zero();
        return {a.lg + b.lg, a.sign * b.sign};
    }
    friend LogSigned operator/(const LogSigned& a, const LogSigned& b) {
        if (b.sign == 0) throw std::domain_error("LogSigned: division by zero");
        if (a.sign == 0) return zero();
        return {a.lg - b.lg, a.sign * b.sign};
    }
    LogSigned sqrt() const {
        if (sign < 0) throw std::domain_error("LogSigned: sqrt of negative");
        if (sign == 0) return zero();
        return {0.5 * lg, 1};
    }
    double value() const { return sign == 0 ? 0.0 : sign * std::exp(lg); }
};

/// Gamma(a) with sign, valid for any non-pole argument.
inline LogSigned lgamma_signed(double a) {
    if (a <= 0.0 && a == std::floor(a))
        throw std::domain_error("lgamma_signed: pole at non-positive integer");
    int sign;
    double lg = lgamma_r(a, &sign);
    return {lg, sign};
}

/// Gamma(x+1) for x > -1.
inline LogSigned lfactorial(double x) { return lgamma_signed(x + 1.0); }

/// Pochhammer (a)_n as a signed product; exact zero when a is a non-positive
/// integer with -a < n.
inline LogSigned pochhammer_ls(double a, int n) {
    LogSigned r = LogSigned::one();
    for (int i = 0; i < n; ++i) r = r * LogSigned::of(a + i);
    return r;
}
inline double pochhammer(double a, int n) { return pochhammer_ls(a, n).value(); }

/// Binomial coefficient with real upper argument.
inline double binom_real(double a, int k) {
    if (k < 0) return 0.0;
    return (pochhammer_ls(a - k + 1, k) / lfactorial(double(k))).value();
}

inline double factorial(int n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    return std::exp(std::lgamma(n + 1.0));
}

/// n!! with (-1)!! = 0!! = 1.
inline double double_factorial(int n) {
    double r = 1.0;
    for (int k = n; k > 1; k -= 2) r *= k;
    return r;
}

inline int parity(int m) { return (m % 2 == 0) ? 1 : -1; }

inline bool is_integer(double x, double tol = 1e-12) {
    return std::abs(x - std::round(x)) <= tol;
}

}  // namespace orbexp
