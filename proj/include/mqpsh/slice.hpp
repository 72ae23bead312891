#pragma once

#include <optional>
#include <vector>

#include "mqpsh/field.hpp"
#include "mqpsh/grid.hpp"

namespace mqpsh {

/* A (q+1)-dimensional complex affine slice of C^n: an orthonormal complex
 * frame through a base point, plus the ball geometry used when probing the
 * maximum property on the slice. */
struct SliceSpec {
    CPoint base;                    // in C^n
    std::vector<CPoint> frame;      // q+1 orthonormal complex directions
    double ball_radius = 0.0;
    int boundary_samples = 8;       // minimum band population for a usable ball

    int slice_dim() const { return static_cast<int>(frame.size()); }
    void validate(int dim_complex) const;

    // True when every frame vector is exactly a standard basis vector e_k;
    // axes_out (if given) receives the complex axis of each frame vector.
    bool axis_aligned(std::vector<int>* axes_out = nullptr) const;

    // Slice real coordinates (2(q+1) values) -> point in C^n.
    CPoint map_to_parent(std::span<const double> w) const;
};

struct SliceField {
    ScalarField field;                       // sampled on the slice grid
    bool approximate = false;                // true when nearest-node lookup was used
    std::vector<std::size_t> parent_nodes;   // per slice node: parent linear index
};

/* Samples a parent field on a slice.  Axis-aligned slices with an on-node
 * base use exact node lookup over the full parent extent of the slice axes;
 * general frames sample a centered box in slice coordinates by nearest-node
 * lookup and are flagged approximate.  Points leaving the parent box are an
 * error. */
SliceField restrict_to_slice(const ScalarField& parent, const SliceSpec& spec);
SliceField restrict_to_slice(const ScalarField& parent, const SliceSpec& spec,
                             const BoxGrid& slice_grid);

// Default slice grid for a spec (full parent extent when axis-aligned,
// otherwise the largest centered box fitting inside the parent).
BoxGrid default_slice_grid(const BoxGrid& parent, const SliceSpec& spec);

// Identity frame e_1..e_n restricted to the given complex axes.
std::vector<CPoint> axis_frame(int dim_complex, const std::vector<int>& axes);

}  // namespace mqpsh
