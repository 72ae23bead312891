#pragma once

#include <stdexcept>
#include <vector>

#include "mqpsh/field.hpp"
#include "mqpsh/hermitian.hpp"
#include "mqpsh/grid.hpp"

namespace mqpsh {

// Second-order central-difference stencil with per-axis steps.
struct Stencil {
    std::vector<double> step;

    // Default step 1e-4 * (1 + ||x||_inf), the usual truncation/rounding
    // balance for double precision on O(1) domains.
    static Stencil default_for(std::span<const double> x, int dim_real);
    static Stencil uniform(int dim_real, double h);
    void validate(int dim_real) const;
};

// Thrown when a stencil evaluation returns -inf: the function is not smooth
// there and no Hessian surrogate is produced.
struct NonsmoothPointError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RealSymMatrix {
    int dim = 0;
    std::vector<double> a;  // row-major dim*dim

    RealSymMatrix() = default;
    explicit RealSymMatrix(int d) : dim(d), a(static_cast<std::size_t>(d) * d, 0.0) {}
    double& at(int i, int j) { return a[static_cast<std::size_t>(i) * dim + j]; }
    double at(int i, int j) const { return a[static_cast<std::size_t>(i) * dim + j]; }
};

// Central second differences of f at x, symmetrized; entry error O(h^2) for
// C^4 functions.
RealSymMatrix real_hessian(const PointFn& f, std::span<const double> x, const Stencil& stencil);

/* Real 2n x 2n Hessian (axis order x_1..x_n, y_1..y_n) -> complex n x n
 * Hessian:
 *   H_{kl} = 1/4 [ (Hxx + Hyy)_{kl} + i (Hxy - Hyx)_{kl} ],
 * the matrix of the quadratic form 1/4 [xi; i xi]* H^R [xi; i xi]. */
HermitianMatrix real_to_complex_hessian(const RealSymMatrix& h);

HermitianMatrix complex_hessian(const PointFn& f, std::span<const double> x,
                                const Stencil& stencil);
HermitianMatrix complex_hessian(const PointFn& f, std::span<const double> x);

}  // namespace mqpsh
