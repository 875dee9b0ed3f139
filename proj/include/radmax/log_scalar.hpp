#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace radmax {

// Nonnegative extended real stored in log scale. The carrier for every
// moment-type quantity: integrals against t^{n-1} at n ~ 1e6 produce
// magnitudes far outside double range, so all products, ratios and powers
// stay in log space and additions go through log-sum-exp.
//
// Exactly one of three states holds: zero (log = -inf), infinite
// (log = +inf), or finite-positive with a real log value. NaN never enters.
class LogScalar {
public:
    LogScalar() : log_(-std::numeric_limits<double>::infinity()) {}

    static LogScalar zero() { return LogScalar(); }

    static LogScalar infinity() {
        LogScalar s;
        s.log_ = std::numeric_limits<double>::infinity();
        return s;
    }

    static LogScalar from_log(double log_value) {
        if (std::isnan(log_value))
            throw std::domain_error("LogScalar: NaN log value");
        LogScalar s;
        s.log_ = log_value;
        return s;
    }

    static LogScalar from_value(double v) {
        if (std::isnan(v) || v < 0.0)
            throw std::domain_error("LogScalar: value must be in [0, +inf]");
        LogScalar s;
        s.log_ = std::log(v);
        return s;
    }

    bool is_zero() const { return std::isinf(log_) && log_ < 0.0; }
    bool is_infinite() const { return std::isinf(log_) && log_ > 0.0; }
    bool is_finite_positive() const { return std::isfinite(log_); }

    // log of the magnitude; -inf for zero, +inf for infinite.
    double log() const { return log_; }

    // May underflow to 0 or overflow to +inf; that is the caller's problem.
    double value() const { return std::exp(log_); }

    friend LogScalar operator*(LogScalar a, LogScalar b) {
        // 0 * inf is malformed for measures; flag it rather than guess.
        if ((a.is_zero() && b.is_infinite()) || (a.is_infinite() && b.is_zero()))
            throw std::domain_error("LogScalar: 0 * inf");
        return from_log_unchecked(a.log_ + b.log_);
    }

    friend LogScalar operator/(LogScalar a, LogScalar b) {
        if ((a.is_zero() && b.is_zero()) || (a.is_infinite() && b.is_infinite()))
            throw std::domain_error("LogScalar: 0/0 or inf/inf");
        if (b.is_zero()) return infinity();
        return from_log_unchecked(a.log_ - b.log_);
    }

    LogScalar pow(double e) const {
        if (e == 0.0) return from_log(0.0);
        if (is_zero()) return e > 0.0 ? zero() : infinity();
        if (is_infinite()) return e > 0.0 ? infinity() : zero();
        return from_log_unchecked(log_ * e);
    }

    // log-sum-exp; never overflows for finite log values.
    friend LogScalar operator+(LogScalar a, LogScalar b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.is_infinite() || b.is_infinite()) return infinity();
        const double hi = a.log_ > b.log_ ? a.log_ : b.log_;
        const double lo = a.log_ > b.log_ ? b.log_ : a.log_;
        return from_log_unchecked(hi + std::log1p(std::exp(lo - hi)));
    }

    LogScalar& operator+=(LogScalar b) { return *this = *this + b; }

    // this - b for b <= this; log1p(-exp(.)). Differences that vanish to
    // rounding collapse to zero.
    LogScalar sub(LogScalar b) const {
        if (b.is_zero()) return *this;
        if (is_infinite()) {
            if (b.is_infinite()) throw std::domain_error("LogScalar: inf - inf");
            return infinity();
        }
        const double d = b.log_ - log_;
        if (d >= 0.0) {
            if (d < 1e-12) return zero();
            throw std::domain_error("LogScalar: subtraction would go negative");
        }
        return from_log_unchecked(log_ + std::log1p(-std::exp(d)));
    }

    friend bool operator<(LogScalar a, LogScalar b) { return a.log_ < b.log_; }
    friend bool operator>(LogScalar a, LogScalar b) { return a.log_ > b.log_; }
    friend bool operator<=(LogScalar a, LogScalar b) { return a.log_ <= b.log_; }
    friend bool operator>=(LogScalar a, LogScalar b) { return a.log_ >= b.log_; }
    friend bool operator==(LogScalar a, LogScalar b) { return a.log_ == b.log_; }

private:
    static LogScalar from_log_unchecked(double lv) {
        LogScalar s;
        // inf + (-inf) etc. surface as NaN; normalize loudly.
        if (std::isnan(lv)) throw std::domain_error("LogScalar: indeterminate result");
        s.log_ = lv;
        return s;
    }

    double log_;
};

} // namespace radmax
