#include "mqpsh/kernel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mqpsh {

Kernel Kernel::quadratic(double theta) {
    if (!(theta > 0)) throw std::invalid_argument("Kernel::quadratic: theta must be > 0");
    Kernel k;
    k.kind_ = Kind::Quadratic;
    k.theta_ = theta;
    k.semiconvex_delta_ = theta;
    return k;
}

Kernel Kernel::radial_decreasing(RadialProfile f, std::optional<double> semiconvex_delta) {
    if (!f) throw std::invalid_argument("Kernel::radial_decreasing: profile required");
    Kernel k;
    k.kind_ = Kind::RadialDecreasing;
    k.profile_ = std::move(f);
    k.semiconvex_delta_ = semiconvex_delta;
    return k;
}

Kernel Kernel::tabulated(ScalarField table, std::optional<double> semiconvex_delta) {
    const BoxGrid& g = table.grid();
    for (int a = 0; a < g.dim_real(); ++a)
        if (std::abs(g.lo()[a] + g.hi()[a]) > 1e-12 * (std::abs(g.hi()[a]) + 1.0))
            throw std::invalid_argument("Kernel::tabulated: table box must be centered at 0");
    Kernel k;
    k.kind_ = Kind::Tabulated;
    k.table_ = std::make_shared<const ScalarField>(std::move(table));
    k.semiconvex_delta_ = semiconvex_delta;
    return k;
}

double Kernel::theta() const {
    if (kind_ != Kind::Quadratic) throw std::logic_error("Kernel::theta: not a quadratic kernel");
    return theta_;
}

ExtReal Kernel::eval(std::span<const double> v) const {
    switch (kind_) {
        case Kind::Quadratic:
            return ExtReal(-theta_ * norm_sq(v));
        case Kind::RadialDecreasing:
            return profile_(std::sqrt(norm_sq(v)));
        case Kind::Tabulated: {
            if (!table_->grid().contains(v, 1e-12)) return ExtReal::neg_inf();
            return table_->at(table_->grid().nearest_node(v));
        }
    }
    return ExtReal::neg_inf();
}

ExtReal Kernel::eval_diff(std::span<const double> y, std::span<const double> x) const {
    if (kind_ == Kind::Quadratic) return ExtReal(-theta_ * distance_sq(y, x));
    if (kind_ == Kind::RadialDecreasing) return profile_(std::sqrt(distance_sq(y, x)));
    Point d(y.size());
    for (std::size_t a = 0; a < d.size(); ++a) d[a] = y[a] - x[a];
    return eval(d);
}

ExtReal Kernel::at_zero() const {
    if (kind_ == Kind::Quadratic) return ExtReal(0.0);
    if (kind_ == Kind::RadialDecreasing) return profile_(0.0);
    Point z(table_->grid().dim_real(), 0.0);
    return eval(z);
}

bool Kernel::nonpositive() const {
    switch (kind_) {
        case Kind::Quadratic:
            return true;
        case Kind::RadialDecreasing:
            // Nonincreasing profile: sup Phi = f(0).
            return profile_(0.0) <= ExtReal(0.0);
        case Kind::Tabulated: {
            for (const ExtReal& v : table_->values())
                if (v > ExtReal(0.0)) return false;
            return true;
        }
    }
    return false;
}

bool Kernel::identically_neg_inf() const {
    switch (kind_) {
        case Kind::Quadratic:
            return false;
        case Kind::RadialDecreasing:
            // f nonincreasing with f(0) = -inf forces f == -inf.
            return profile_(0.0).is_neg_inf();
        case Kind::Tabulated:
            return table_->all_neg_inf();
    }
    return false;
}

void Kernel::check_radial_monotone(double tmax, int ladder) const {
    if (kind_ != Kind::RadialDecreasing) return;
    if (!(tmax > 0) || ladder < 2) return;
    ExtReal prev = profile_(0.0);
    for (int i = 1; i <= ladder; ++i) {
        const double t = tmax * i / ladder;
        const ExtReal cur = profile_(t);
        if (cur > prev)
            throw std::invalid_argument("Kernel: radial profile increases near t = " +
                                        std::to_string(t));
        prev = cur;
    }
}

}  // namespace mqpsh
