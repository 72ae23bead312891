#pragma once

#include <functional>
#include <memory>
#include <optional>

#include "mqpsh/field.hpp"

namespace mqpsh {

// Radial profile f: [0, inf) -> [-inf, inf); must be u.s.c. and monotone
// nonincreasing (verified on a sample ladder at the point of use).
using RadialProfile = std::function<ExtReal(double)>;

/* Convolution profile Phi: one of
 *   Quadratic(theta):          Phi(v) = -theta ||v||^2
 *   RadialDecreasing(f):       Phi(v) = f(||v||)
 *   Tabulated(field):          nearest-node lookup on a centered box,
 *                              -inf outside the box (u.s.c. extension).
 * semiconvex_delta, when known, is a delta > 0 with Phi + delta||.||^2
 * convex; Quadratic(theta) always carries delta = theta. */
class Kernel {
public:
    enum class Kind { Quadratic, RadialDecreasing, Tabulated };

    static Kernel quadratic(double theta);
    static Kernel radial_decreasing(RadialProfile f,
                                    std::optional<double> semiconvex_delta = std::nullopt);
    static Kernel tabulated(ScalarField table,
                            std::optional<double> semiconvex_delta = std::nullopt);

    Kind kind() const { return kind_; }
    double theta() const;  // Quadratic only
    std::optional<double> semiconvex_delta() const { return semiconvex_delta_; }

    ExtReal eval(std::span<const double> v) const;
    // Phi(y - x) without materializing the difference vector.
    ExtReal eval_diff(std::span<const double> y, std::span<const double> x) const;

    ExtReal at_zero() const;
    // Phi <= 0 everywhere (known analytically for Quadratic; f(0) <= 0 for
    // radial profiles; table scan otherwise).
    bool nonpositive() const;
    bool identically_neg_inf() const;

    // Verifies the radial profile is nonincreasing on a ladder over
    // [0, tmax]; throws on violation.  No-op for other kinds.
    void check_radial_monotone(double tmax, int ladder = 64) const;

private:
    Kernel() = default;
    Kind kind_ = Kind::Quadratic;
    double theta_ = 0.0;
    RadialProfile profile_;
    std::shared_ptr<const ScalarField> table_;
    std::optional<double> semiconvex_delta_;
};

}  // namespace mqpsh
