#pragma once

#include <cmath>
#include <compare>
#include <stdexcept>
#include <string>

namespace mqpsh {

/* Extended real value in [-inf, +inf).  The lower extreme is a dedicated
 * sentinel rather than an IEEE infinity, so arithmetic contracts stay
 * explicit and NaN can never leak into field data.  +inf and NaN are
 * unrepresentable and rejected at construction. */
class ExtReal {
public:
    constexpr ExtReal() noexcept : value_(0.0), neg_inf_(false) {}

    explicit ExtReal(double v) : value_(v), neg_inf_(false) {
        if (!std::isfinite(v))
            throw std::invalid_argument("ExtReal: value must be finite (got " +
                                        std::to_string(v) + ")");
    }

    static constexpr ExtReal neg_inf() noexcept {
        ExtReal r;
        r.neg_inf_ = true;
        r.value_ = 0.0;
        return r;
    }

    // Maps IEEE -inf to the sentinel; still rejects NaN and +inf.
    static ExtReal from_double(double v) {
        if (std::isnan(v) || v == HUGE_VAL)
            throw std::invalid_argument("ExtReal: NaN/+inf rejected");
        if (v == -HUGE_VAL) return neg_inf();
        return ExtReal(v);
    }

    constexpr bool is_neg_inf() const noexcept { return neg_inf_; }
    constexpr bool is_finite() const noexcept { return !neg_inf_; }

    double value() const {
        if (neg_inf_) throw std::logic_error("ExtReal: value() on -inf");
        return value_;
    }
    constexpr double value_or(double fallback) const noexcept {
        return neg_inf_ ? fallback : value_;
    }
    // For serialization / interop: the sentinel becomes IEEE -inf.
    constexpr double to_double() const noexcept {
        return neg_inf_ ? -HUGE_VAL : value_;
    }

    friend ExtReal operator+(ExtReal a, ExtReal b) {
        if (a.neg_inf_ || b.neg_inf_) return neg_inf();
        return ExtReal(a.value_ + b.value_);
    }
    friend ExtReal operator+(ExtReal a, double b) { return a + ExtReal(b); }
    friend ExtReal operator-(ExtReal a, double b) {
        if (a.neg_inf_) return neg_inf();
        return ExtReal(a.value_ - b);
    }

    // Total order with -inf below every finite value.
    friend constexpr bool operator<(ExtReal a, ExtReal b) noexcept {
        if (a.neg_inf_) return !b.neg_inf_;
        if (b.neg_inf_) return false;
        return a.value_ < b.value_;
    }
    friend constexpr bool operator>(ExtReal a, ExtReal b) noexcept { return b < a; }
    friend constexpr bool operator<=(ExtReal a, ExtReal b) noexcept { return !(b < a); }
    friend constexpr bool operator>=(ExtReal a, ExtReal b) noexcept { return !(a < b); }
    friend constexpr bool operator==(ExtReal a, ExtReal b) noexcept {
        if (a.neg_inf_ || b.neg_inf_) return a.neg_inf_ && b.neg_inf_;
        return a.value_ == b.value_;
    }
    friend constexpr bool operator!=(ExtReal a, ExtReal b) noexcept { return !(a == b); }

    friend constexpr ExtReal max(ExtReal a, ExtReal b) noexcept { return a < b ? b : a; }
    friend constexpr ExtReal min(ExtReal a, ExtReal b) noexcept { return b < a ? b : a; }

private:
    double value_;
    bool neg_inf_;
};

inline std::string to_string(ExtReal v) {
    if (v.is_neg_inf()) return "-inf";
    return std::to_string(v.value());
}

}  // namespace mqpsh
