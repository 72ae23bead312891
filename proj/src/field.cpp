#include "mqpsh/field.hpp"

#include <stdexcept>

#include "mqpsh/parallel.hpp"

namespace mqpsh {

ScalarField::ScalarField(BoxGrid grid, std::vector<ExtReal> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
    if (values_.size() != grid_.node_count())
        throw std::invalid_argument("ScalarField: values length must equal node count");
}

void ScalarField::set_upper_bound(double m) {
    if (!std::isfinite(m)) throw std::invalid_argument("ScalarField: upper bound must be finite");
    for (const ExtReal& v : values_)
        if (v.is_finite() && v.value() > m)
            throw std::invalid_argument("ScalarField: declared upper bound violated");
    upper_bound_ = m;
}

std::optional<double> ScalarField::max_finite() const {
    std::optional<double> m;
    for (const ExtReal& v : values_)
        if (v.is_finite() && (!m || v.value() > *m)) m = v.value();
    return m;
}

bool ScalarField::all_neg_inf() const {
    for (const ExtReal& v : values_)
        if (v.is_finite()) return false;
    return true;
}

ScalarField sample(const PointFn& f, const BoxGrid& grid) {
    std::vector<ExtReal> vals(grid.node_count());
    parallel_for(grid.node_count(), [&](std::size_t begin, std::size_t end) {
        Point p(grid.dim_real());
        for (std::size_t i = begin; i < end; ++i) {
            grid.coord_of(i, p);
            vals[i] = f(p);
        }
    });
    return ScalarField(grid, std::move(vals));
}

ScalarField neighbor_max(const ScalarField& f) {
    const BoxGrid& g = f.grid();
    const int d = g.dim_real();
    std::vector<ExtReal> out(g.node_count());
    parallel_for(g.node_count(), [&](std::size_t begin, std::size_t end) {
        std::vector<int> m(d);
        for (std::size_t i = begin; i < end; ++i) {
            g.multi_of(i, m);
            ExtReal best = f.at(i);
            for (int a = 0; a < d; ++a) {
                for (int step : {-1, +1}) {
                    const int j = m[a] + step;
                    if (j < 0 || j >= g.counts()[a]) continue;
                    m[a] = j;
                    best = max(best, f.at(g.index_of(m)));
                    m[a] -= step;
                }
            }
            out[i] = best;
        }
    });
    return ScalarField(g, std::move(out));
}

ScalarField usc_sup_star(const std::vector<ScalarField>& fields) {
    if (fields.empty()) throw std::invalid_argument("usc_sup_star: empty collection");
    const BoxGrid& g = fields.front().grid();
    for (const auto& f : fields)
        if (!(f.grid() == g)) throw std::invalid_argument("usc_sup_star: fields on different grids");
    std::vector<ExtReal> sup(g.node_count(), ExtReal::neg_inf());
    for (const auto& f : fields)
        for (std::size_t i = 0; i < sup.size(); ++i) sup[i] = max(sup[i], f.at(i));
    return neighbor_max(ScalarField(g, std::move(sup)));
}

ScalarField map_field(const ScalarField& f, const std::function<ExtReal(ExtReal)>& fn) {
    std::vector<ExtReal> out(f.values().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = fn(f.at(i));
    return ScalarField(f.grid(), std::move(out));
}

ScalarField zip_fields(const ScalarField& a, const ScalarField& b,
                       const std::function<ExtReal(ExtReal, ExtReal)>& fn) {
    if (!(a.grid() == b.grid())) throw std::invalid_argument("zip_fields: grid mismatch");
    std::vector<ExtReal> out(a.values().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = fn(a.at(i), b.at(i));
    return ScalarField(a.grid(), std::move(out));
}

ScalarField max_field(const ScalarField& a, const ScalarField& b) {
    return zip_fields(a, b, [](ExtReal x, ExtReal y) { return max(x, y); });
}

ScalarField min_field(const ScalarField& a, const ScalarField& b) {
    return zip_fields(a, b, [](ExtReal x, ExtReal y) { return min(x, y); });
}

ScalarField add_fields(const ScalarField& a, const ScalarField& b) {
    return zip_fields(a, b, [](ExtReal x, ExtReal y) { return x + y; });
}

ScalarField scale_field(const ScalarField& f, double c) {
    if (c < 0) throw std::invalid_argument("scale_field: factor must be >= 0");
    if (c == 0.0)
        return map_field(f, [](ExtReal) { return ExtReal(0.0); });
    return map_field(f, [c](ExtReal v) {
        return v.is_neg_inf() ? ExtReal::neg_inf() : ExtReal(c * v.value());
    });
}

ScalarField add_pointwise(const ScalarField& f, const std::function<double(const Point&)>& g) {
    const BoxGrid& grid = f.grid();
    std::vector<ExtReal> out(grid.node_count());
    Point p(grid.dim_real());
    for (std::size_t i = 0; i < out.size(); ++i) {
        grid.coord_of(i, p);
        out[i] = f.at(i) + ExtReal(g(p));
    }
    return ScalarField(grid, std::move(out));
}

}  // namespace mqpsh
