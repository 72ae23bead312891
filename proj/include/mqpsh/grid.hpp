#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace mqpsh {

using Point = std::vector<double>;                 // 2n real coordinates (x_1..x_n, y_1..y_n)
using CPoint = std::vector<std::complex<double>>;  // n complex coordinates

// Real coordinate vector -> complex, under the fixed axis order (x_1..x_n, y_1..y_n).
CPoint to_complex(std::span<const double> xy);
Point to_real(std::span<const std::complex<double>> z);

double norm_sq(std::span<const double> v);
double distance_sq(std::span<const double> a, std::span<const double> b);

/* Uniform rectangular grid on a box in R^{2n}, n the complex dimension.
 * Nodes are addressed by a linear index in C order (axis 0 slowest), with a
 * total, invertible linear <-> multi-index map.  Interior nodes are those
 * whose multi-index is strictly inside on every axis (full finite-difference
 * stencils available). */
class BoxGrid {
public:
    BoxGrid(int dim_complex, std::vector<double> lo, std::vector<double> hi,
            std::vector<int> counts);

    int dim_complex() const { return dim_complex_; }
    int dim_real() const { return 2 * dim_complex_; }
    std::size_t node_count() const { return node_count_; }

    const std::vector<double>& lo() const { return lo_; }
    const std::vector<double>& hi() const { return hi_; }
    const std::vector<int>& counts() const { return counts_; }
    const std::vector<double>& spacing() const { return spacing_; }
    double max_spacing() const;
    double min_spacing() const;

    std::size_t index_of(std::span<const int> multi) const;
    std::vector<int> multi_of(std::size_t linear) const;
    void multi_of(std::size_t linear, std::span<int> out) const;

    double coord(int axis, int i) const { return lo_[axis] + spacing_[axis] * i; }
    Point coord_of(std::size_t linear) const;
    void coord_of(std::size_t linear, std::span<double> out) const;

    bool is_interior(std::size_t linear) const;
    // Interior with a margin of `ring` nodes on every side.
    bool is_interior(std::size_t linear, int ring) const;

    bool contains(std::span<const double> pt, double tol = 0.0) const;
    // Nearest node to an arbitrary point; *dist_out (if given) receives the
    // Euclidean distance from pt to that node.
    std::size_t nearest_node(std::span<const double> pt, double* dist_out = nullptr) const;

    bool operator==(const BoxGrid& other) const;

private:
    int dim_complex_;
    std::vector<double> lo_, hi_;
    std::vector<int> counts_;
    std::vector<double> spacing_;
    std::vector<std::size_t> strides_;
    std::size_t node_count_;
};

}  // namespace mqpsh
