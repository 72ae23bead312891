#include "mqpsh/hessian.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace mqpsh {

Stencil Stencil::default_for(std::span<const double> x, int dim_real) {
    double sup = 0.0;
    for (double v : x) sup = std::max(sup, std::abs(v));
    return uniform(dim_real, 1e-4 * (1.0 + sup));
}

Stencil Stencil::uniform(int dim_real, double h) {
    Stencil s;
    s.step.assign(static_cast<std::size_t>(dim_real), h);
    s.validate(dim_real);
    return s;
}

void Stencil::validate(int dim_real) const {
    if (static_cast<int>(step.size()) != dim_real)
        throw std::invalid_argument("Stencil: one step per real axis required");
    for (double h : step)
        if (!(h > 0)) throw std::invalid_argument("Stencil: steps must be positive");
}

namespace {

double eval_finite(const PointFn& f, const Point& p) {
    const ExtReal v = f(p);
    if (v.is_neg_inf())
        throw NonsmoothPointError("finite-difference stencil hit a -inf value (nonsmooth point)");
    return v.value();
}

}  // namespace

RealSymMatrix real_hessian(const PointFn& f, std::span<const double> x, const Stencil& stencil) {
    const int d = static_cast<int>(x.size());
    stencil.validate(d);
    RealSymMatrix h(d);
    Point p(x.begin(), x.end());
    const double f0 = eval_finite(f, p);

    for (int i = 0; i < d; ++i) {
        const double hi = stencil.step[i];
        p[i] = x[i] + hi;
        const double fp = eval_finite(f, p);
        p[i] = x[i] - hi;
        const double fm = eval_finite(f, p);
        p[i] = x[i];
        h.at(i, i) = (fp - 2.0 * f0 + fm) / (hi * hi);
    }
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            const double hi = stencil.step[i], hj = stencil.step[j];
            p[i] = x[i] + hi;
            p[j] = x[j] + hj;
            const double fpp = eval_finite(f, p);
            p[j] = x[j] - hj;
            const double fpm = eval_finite(f, p);
            p[i] = x[i] - hi;
            const double fmm = eval_finite(f, p);
            p[j] = x[j] + hj;
            const double fmp = eval_finite(f, p);
            p[i] = x[i];
            p[j] = x[j];
            const double v = (fpp - fpm - fmp + fmm) / (4.0 * hi * hj);
            h.at(i, j) = v;
            h.at(j, i) = v;
        }
    }
    return h;
}

HermitianMatrix real_to_complex_hessian(const RealSymMatrix& h) {
    if (h.dim % 2 != 0)
        throw std::invalid_argument("real_to_complex_hessian: dimension must be even");
    const int n = h.dim / 2;
    std::vector<Complex> a(static_cast<std::size_t>(n) * n);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
            const double re = 0.25 * (h.at(k, l) + h.at(n + k, n + l));
            const double im = 0.25 * (h.at(k, n + l) - h.at(n + k, l));
            a[static_cast<std::size_t>(k) * n + l] = Complex(re, im);
        }
    // Exactly Hermitian whenever h is symmetric; allow FD asymmetry residue.
    return HermitianMatrix(n, std::move(a), 1e-6);
}

HermitianMatrix complex_hessian(const PointFn& f, std::span<const double> x,
                                const Stencil& stencil) {
    return real_to_complex_hessian(real_hessian(f, x, stencil));
}

HermitianMatrix complex_hessian(const PointFn& f, std::span<const double> x) {
    return complex_hessian(f, x, Stencil::default_for(x, static_cast<int>(x.size())));
}

}  // namespace mqpsh
