#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "mqpsh/ext_real.hpp"
#include "mqpsh/grid.hpp"

namespace mqpsh {

// Pointwise-evaluable function on real coordinates (x_1..x_n, y_1..y_n).
using PointFn = std::function<ExtReal(const Point&)>;

/* Grid-sampled function into [-inf, inf).  Values are immutable after
 * construction apart from the declared upper bound; every operation on
 * fields is a pure function of its inputs. */
class ScalarField {
public:
    ScalarField(BoxGrid grid, std::vector<ExtReal> values);

    const BoxGrid& grid() const { return grid_; }
    const std::vector<ExtReal>& values() const { return values_; }
    ExtReal at(std::size_t node) const { return values_[node]; }

    std::optional<double> upper_bound() const { return upper_bound_; }
    // Declares a finite bound M with values <= M; throws if violated.
    void set_upper_bound(double m);
    void clear_upper_bound() { upper_bound_.reset(); }
    // Max finite value, or nullopt when the field is identically -inf.
    std::optional<double> max_finite() const;

    bool all_neg_inf() const;

private:
    BoxGrid grid_;
    std::vector<ExtReal> values_;
    std::optional<double> upper_bound_;
};

// Samples f at every grid node.  NaN / +inf evaluations are rejected.
ScalarField sample(const PointFn& f, const BoxGrid& grid);

/* Pointwise supremum of fields on one grid followed by the discrete upper
 * regularization (max over each node and its axis neighbors).  The one-ring
 * max is the grid surrogate of the u.s.c. regularization [sup]* and is
 * grid-dependent by construction. */
ScalarField usc_sup_star(const std::vector<ScalarField>& fields);

// One-ring neighbor max of a single field (the regularization step alone).
ScalarField neighbor_max(const ScalarField& f);

// Pointwise combinators.
ScalarField map_field(const ScalarField& f, const std::function<ExtReal(ExtReal)>& fn);
ScalarField zip_fields(const ScalarField& a, const ScalarField& b,
                       const std::function<ExtReal(ExtReal, ExtReal)>& fn);
ScalarField max_field(const ScalarField& a, const ScalarField& b);
ScalarField min_field(const ScalarField& a, const ScalarField& b);
ScalarField add_fields(const ScalarField& a, const ScalarField& b);
// c*u for c >= 0; c == 0 yields the zero field (0 * -inf := 0).
ScalarField scale_field(const ScalarField& f, double c);
// u + g with g evaluated at node coordinates (g must be finite).
ScalarField add_pointwise(const ScalarField& f, const std::function<double(const Point&)>& g);

}  // namespace mqpsh
