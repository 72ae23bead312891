#include "mqpsh/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mqpsh {

CPoint to_complex(std::span<const double> xy) {
    if (xy.size() % 2 != 0)
        throw std::invalid_argument("to_complex: odd-length coordinate vector");
    const std::size_t n = xy.size() / 2;
    CPoint z(n);
    for (std::size_t k = 0; k < n; ++k) z[k] = {xy[k], xy[n + k]};
    return z;
}

Point to_real(std::span<const std::complex<double>> z) {
    const std::size_t n = z.size();
    Point xy(2 * n);
    for (std::size_t k = 0; k < n; ++k) {
        xy[k] = z[k].real();
        xy[n + k] = z[k].imag();
    }
    return xy;
}

double norm_sq(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return s;
}

double distance_sq(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

BoxGrid::BoxGrid(int dim_complex, std::vector<double> lo, std::vector<double> hi,
                 std::vector<int> counts)
    : dim_complex_(dim_complex), lo_(std::move(lo)), hi_(std::move(hi)),
      counts_(std::move(counts)) {
    if (dim_complex_ < 1) throw std::invalid_argument("BoxGrid: dim_complex must be >= 1");
    const std::size_t d = static_cast<std::size_t>(2 * dim_complex_);
    if (lo_.size() != d || hi_.size() != d || counts_.size() != d)
        throw std::invalid_argument("BoxGrid: lo/hi/counts must have length 2*dim_complex");
    spacing_.resize(d);
    for (std::size_t a = 0; a < d; ++a) {
        if (!(lo_[a] < hi_[a]))
            throw std::invalid_argument("BoxGrid: lo < hi required on axis " + std::to_string(a));
        if (counts_[a] < 2)
            throw std::invalid_argument("BoxGrid: counts >= 2 required on axis " + std::to_string(a));
        spacing_[a] = (hi_[a] - lo_[a]) / (counts_[a] - 1);
    }
    strides_.resize(d);
    std::size_t s = 1;
    for (std::size_t a = d; a-- > 0;) {
        strides_[a] = s;
        s *= static_cast<std::size_t>(counts_[a]);
    }
    node_count_ = s;
}

double BoxGrid::max_spacing() const {
    return *std::max_element(spacing_.begin(), spacing_.end());
}

double BoxGrid::min_spacing() const {
    return *std::min_element(spacing_.begin(), spacing_.end());
}

std::size_t BoxGrid::index_of(std::span<const int> multi) const {
    std::size_t idx = 0;
    for (std::size_t a = 0; a < strides_.size(); ++a) {
        if (multi[a] < 0 || multi[a] >= counts_[a])
            throw std::out_of_range("BoxGrid::index_of: multi-index out of range");
        idx += strides_[a] * static_cast<std::size_t>(multi[a]);
    }
    return idx;
}

std::vector<int> BoxGrid::multi_of(std::size_t linear) const {
    std::vector<int> m(strides_.size());
    multi_of(linear, m);
    return m;
}

void BoxGrid::multi_of(std::size_t linear, std::span<int> out) const {
    if (linear >= node_count_) throw std::out_of_range("BoxGrid::multi_of: index out of range");
    for (std::size_t a = 0; a < strides_.size(); ++a) {
        out[a] = static_cast<int>(linear / strides_[a]);
        linear %= strides_[a];
    }
}

Point BoxGrid::coord_of(std::size_t linear) const {
    Point p(strides_.size());
    coord_of(linear, p);
    return p;
}

void BoxGrid::coord_of(std::size_t linear, std::span<double> out) const {
    if (linear >= node_count_) throw std::out_of_range("BoxGrid::coord_of: index out of range");
    for (std::size_t a = 0; a < strides_.size(); ++a) {
        const int i = static_cast<int>(linear / strides_[a]);
        linear %= strides_[a];
        out[a] = lo_[a] + spacing_[a] * i;
    }
}

bool BoxGrid::is_interior(std::size_t linear) const { return is_interior(linear, 1); }

bool BoxGrid::is_interior(std::size_t linear, int ring) const {
    for (std::size_t a = 0; a < strides_.size(); ++a) {
        const int i = static_cast<int>(linear / strides_[a]);
        linear %= strides_[a];
        if (i < ring || i > counts_[a] - 1 - ring) return false;
    }
    return true;
}

bool BoxGrid::contains(std::span<const double> pt, double tol) const {
    for (std::size_t a = 0; a < lo_.size(); ++a)
        if (pt[a] < lo_[a] - tol || pt[a] > hi_[a] + tol) return false;
    return true;
}

std::size_t BoxGrid::nearest_node(std::span<const double> pt, double* dist_out) const {
    std::size_t idx = 0;
    double d2 = 0.0;
    for (std::size_t a = 0; a < strides_.size(); ++a) {
        int i = static_cast<int>(std::lround((pt[a] - lo_[a]) / spacing_[a]));
        i = std::clamp(i, 0, counts_[a] - 1);
        const double d = pt[a] - (lo_[a] + spacing_[a] * i);
        d2 += d * d;
        idx += strides_[a] * static_cast<std::size_t>(i);
    }
    if (dist_out) *dist_out = std::sqrt(d2);
    return idx;
}

bool BoxGrid::operator==(const BoxGrid& o) const {
    return dim_complex_ == o.dim_complex_ && lo_ == o.lo_ && hi_ == o.hi_ && counts_ == o.counts_;
}

}  // namespace mqpsh
