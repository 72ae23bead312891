#include "mqpsh/slice.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mqpsh {

void SliceSpec::validate(int dim_complex) const {
    const std::size_t n = static_cast<std::size_t>(dim_complex);
    if (base.size() != n) throw std::invalid_argument("SliceSpec: base dimension mismatch");
    if (frame.empty() || frame.size() > n)
        throw std::invalid_argument("SliceSpec: frame must have 1..n directions");
    for (const auto& v : frame)
        if (v.size() != n) throw std::invalid_argument("SliceSpec: frame vector dimension mismatch");
    for (std::size_t i = 0; i < frame.size(); ++i)
        for (std::size_t j = i; j < frame.size(); ++j) {
            std::complex<double> g = 0.0;
            for (std::size_t k = 0; k < n; ++k) g += frame[i][k] * std::conj(frame[j][k]);
            const double want = (i == j) ? 1.0 : 0.0;
            if (std::abs(g - want) > 1e-12)
                throw std::invalid_argument("SliceSpec: frame not orthonormal over C");
        }
}

bool SliceSpec::axis_aligned(std::vector<int>* axes_out) const {
    std::vector<int> axes;
    for (const auto& v : frame) {
        int axis = -1;
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (v[k] == std::complex<double>(1.0, 0.0)) {
                if (axis >= 0) return false;
                axis = static_cast<int>(k);
            } else if (v[k] != std::complex<double>(0.0, 0.0)) {
                return false;
            }
        }
        if (axis < 0) return false;
        axes.push_back(axis);
    }
    if (axes_out) *axes_out = axes;
    return true;
}

CPoint SliceSpec::map_to_parent(std::span<const double> w) const {
    const std::size_t s = frame.size();
    CPoint z = base;
    for (std::size_t j = 0; j < s; ++j) {
        const std::complex<double> wj(w[j], w[s + j]);
        for (std::size_t k = 0; k < z.size(); ++k) z[k] += wj * frame[j][k];
    }
    return z;
}

std::vector<CPoint> axis_frame(int dim_complex, const std::vector<int>& axes) {
    std::vector<CPoint> frame;
    for (int a : axes) {
        CPoint v(dim_complex, 0.0);
        v.at(a) = 1.0;
        frame.push_back(std::move(v));
    }
    return frame;
}

BoxGrid default_slice_grid(const BoxGrid& parent, const SliceSpec& spec) {
    spec.validate(parent.dim_complex());
    const int s = spec.slice_dim();
    std::vector<int> axes;
    if (spec.axis_aligned(&axes)) {
        std::vector<double> lo(2 * s), hi(2 * s);
        std::vector<int> counts(2 * s);
        for (int j = 0; j < s; ++j) {
            for (int part = 0; part < 2; ++part) {
                const int pa = axes[j] + part * parent.dim_complex();  // parent real axis
                const int sa = j + part * s;                           // slice real axis
                lo[sa] = parent.lo()[pa];
                hi[sa] = parent.hi()[pa];
                counts[sa] = parent.counts()[pa];
            }
        }
        return BoxGrid(s, std::move(lo), std::move(hi), std::move(counts));
    }
    // General frame: largest centered cube [-L, L]^{2s} whose image stays in
    // the parent box, via per-axis support of the affine map.
    const int n = parent.dim_complex();
    const Point base_xy = to_real(spec.base);
    double limit = HUGE_VAL;
    for (int k = 0; k < n; ++k) {
        double cx = 0.0, cy = 0.0;
        for (const auto& v : spec.frame) {
            cx += std::abs(v[k].real()) + std::abs(v[k].imag());
            cy += std::abs(v[k].imag()) + std::abs(v[k].real());
        }
        if (cx > 0) {
            const double room = std::min(parent.hi()[k] - base_xy[k], base_xy[k] - parent.lo()[k]);
            limit = std::min(limit, room / cx);
        }
        if (cy > 0) {
            const double room =
                std::min(parent.hi()[n + k] - base_xy[n + k], base_xy[n + k] - parent.lo()[n + k]);
            limit = std::min(limit, room / cy);
        }
    }
    if (!(limit > 0)) throw std::invalid_argument("default_slice_grid: base too close to box edge");
    const double L = limit * 0.999;
    const double h = parent.min_spacing();
    int half = static_cast<int>(std::floor(L / h));
    if (half < 1) half = 1;
    const double ext = half * h;
    std::vector<double> lo(2 * s, -ext), hi(2 * s, ext);
    std::vector<int> counts(2 * s, 2 * half + 1);
    return BoxGrid(s, std::move(lo), std::move(hi), std::move(counts));
}

SliceField restrict_to_slice(const ScalarField& parent, const SliceSpec& spec) {
    return restrict_to_slice(parent, spec, default_slice_grid(parent.grid(), spec));
}

SliceField restrict_to_slice(const ScalarField& parent, const SliceSpec& spec,
                             const BoxGrid& slice_grid) {
    const BoxGrid& pg = parent.grid();
    spec.validate(pg.dim_complex());
    if (slice_grid.dim_complex() != spec.slice_dim())
        throw std::invalid_argument("restrict_to_slice: slice grid dimension mismatch");

    const int n = pg.dim_complex();
    const int s = spec.slice_dim();
    SliceField out{ScalarField(slice_grid, std::vector<ExtReal>(slice_grid.node_count())), false,
                   std::vector<std::size_t>(slice_grid.node_count())};

    std::vector<ExtReal> vals(slice_grid.node_count());
    Point w(2 * s), xy(2 * n);
    const double snap_tol = 1e-9 * (1.0 + pg.max_spacing());
    bool approx = false;
    for (std::size_t i = 0; i < slice_grid.node_count(); ++i) {
        slice_grid.coord_of(i, w);
        const CPoint z = spec.map_to_parent(w);
        xy = to_real(z);
        if (!pg.contains(xy, 0.5 * pg.min_spacing() * 1e-6))
            throw std::invalid_argument("restrict_to_slice: slice point " + std::to_string(i) +
                                        " outside parent box");
        double dist = 0.0;
        const std::size_t node = pg.nearest_node(xy, &dist);
        if (dist > snap_tol) approx = true;
        vals[i] = parent.at(node);
        out.parent_nodes[i] = node;
    }
    out.field = ScalarField(slice_grid, std::move(vals));
    out.approximate = approx;
    return out;
}

}  // namespace mqpsh
