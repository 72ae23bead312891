#include "mqpsh/supconv.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "mqpsh/parallel.hpp"
#include "envelope_line.hpp"

namespace mqpsh {

using detail::upper_envelope_line;

namespace {

// Product of counts on axes after `axis` (distance between neighbors along it).
std::size_t axis_stride(const BoxGrid& g, int axis) {
    std::size_t s = 1;
    for (int a = axis + 1; a < g.dim_real(); ++a) s *= static_cast<std::size_t>(g.counts()[a]);
    return s;
}

/* Upper envelope of the concave parabolas p_i(t) = g[i] - theta (t-pos[i])^2,
 * evaluated at every pos[j].  g entries of -inf contribute no parabola.
 * Parabolas share the curvature, so any two cross exactly once and the
 * winner sequence is ordered by center; the hull scan is linear. */
void upper_envelope_line(std::span<const double> g, std::span<const double> pos, double theta,
                         std::span<double> out, std::span<int> winner, std::vector<int>& hull,
                         std::vector<double>& zleft) {
    const int m = static_cast<int>(g.size());
    hull.resize(m);
    zleft.resize(m);
    int k = -1;
    for (int j = 0; j < m; ++j) {
        if (g[j] == -HUGE_VAL) continue;
        double s = 0.0;
        while (k >= 0) {
            const int i = hull[k];
            s = 0.5 * ((g[i] - g[j]) / (theta * (pos[j] - pos[i])) + pos[i] + pos[j]);
            if (k > 0 && s <= zleft[k]) {
                --k;
                continue;
            }
            break;
        }
        if (k < 0) {
            k = 0;
            hull[0] = j;
            zleft[0] = -HUGE_VAL;
        } else {
            ++k;
            hull[k] = j;
            zleft[k] = s;
        }
    }
    if (k < 0) {
        for (int j = 0; j < m; ++j) {
            out[j] = -HUGE_VAL;
            winner[j] = -1;
        }
        return;
    }
    int cur = 0;
    for (int j = 0; j < m; ++j) {
        const double t = pos[j];
        while (cur < k && zleft[cur + 1] <= t) ++cur;
        const int i = hull[cur];
        const double d = t - pos[i];
        out[j] = g[i] - theta * d * d;
        winner[j] = i;
    }
}

}  // namespace

EnvelopeResult sup_convolve_bruteforce(const ScalarField& u, const Kernel& kernel,
                                       const BoxGrid& query) {
    const BoxGrid& sg = u.grid();
    if (sg.dim_real() != query.dim_real())
        throw std::invalid_argument("sup_convolve_bruteforce: coordinate dimension mismatch");
    if (sg.node_count() == 0) throw std::invalid_argument("sup_convolve_bruteforce: empty source set");

    // Ladder check for radial profiles over the realizable distance range.
    {
        double far2 = 0.0;
        for (int a = 0; a < sg.dim_real(); ++a) {
            const double lo = std::min(sg.lo()[a], query.lo()[a]);
            const double hi = std::max(sg.hi()[a], query.hi()[a]);
            far2 += (hi - lo) * (hi - lo);
        }
        kernel.check_radial_monotone(std::sqrt(far2));
    }

    const std::optional<double> m_bound = u.upper_bound();
    const bool quad = kernel.kind() == Kernel::Kind::Quadratic;
    const double theta = quad ? kernel.theta() : 0.0;
    const std::size_t nq = query.node_count();
    const std::size_t ns = sg.node_count();

    EnvelopeResult res(ScalarField(query, std::vector<ExtReal>(nq)), nq);
    std::vector<ExtReal> vals(nq);

    parallel_for(nq, [&](std::size_t begin, std::size_t end) {
        Point y(query.dim_real()), x(sg.dim_real());
        for (std::size_t qi = begin; qi < end; ++qi) {
            query.coord_of(qi, y);
            ExtReal best = ExtReal::neg_inf();
            std::size_t best_idx = kNoArgmax;
            for (std::size_t xi = 0; xi < ns; ++xi) {
                const ExtReal uv = u.at(xi);
                if (uv.is_neg_inf()) continue;
                sg.coord_of(xi, x);
                ExtReal cand;
                if (quad) {
                    const double d2 = distance_sq(y, x);
                    // Radius bound: with u <= M no candidate beyond
                    // theta d^2 > M - best can reach the current best.
                    if (m_bound && best.is_finite() && theta * d2 > *m_bound - best.value())
                        continue;
                    cand = ExtReal(uv.value() - theta * d2);
                } else {
                    const ExtReal phi = kernel.eval_diff(y, x);
                    if (phi.is_neg_inf()) continue;
                    cand = uv + phi;
                }
                if (cand > best) {
                    best = cand;
                    best_idx = xi;
                }
            }
            vals[qi] = best;
            res.argmax[qi] = best_idx;
            res.attained[qi] = best.is_finite() ? 1 : 0;
            if (quad && m_bound && best.is_finite()) {
                sg.coord_of(best_idx, x);
                if (theta * distance_sq(y, x) > *m_bound - best.value() + 1e-9)
                    throw std::logic_error("sup_convolve_bruteforce: maximizer outside radius bound");
            }
            res.proper_interior[qi] =
                (best.is_finite() && query.is_interior(qi) && sg.is_interior(best_idx)) ? 1 : 0;
        }
    });

    res.values = ScalarField(query, std::move(vals));
    if (m_bound && kernel.nonpositive()) res.values.set_upper_bound(*m_bound);
    return res;
}

EnvelopeResult moreau_envelope_fast(const ScalarField& u, double theta) {
    if (!(theta > 0)) throw std::invalid_argument("moreau_envelope_fast: theta must be > 0");
    const BoxGrid& g = u.grid();
    const int d = g.dim_real();
    const std::size_t n = g.node_count();

    std::vector<double> val(n);
    std::vector<std::size_t> src(n);
    for (std::size_t i = 0; i < n; ++i) {
        const ExtReal v = u.at(i);
        val[i] = v.to_double();
        src[i] = v.is_finite() ? i : kNoArgmax;
    }

    std::vector<double> nval(n);
    std::vector<std::size_t> nsrc(n);
    for (int axis = 0; axis < d; ++axis) {
        const int m = g.counts()[axis];
        const std::size_t stride = axis_stride(g, axis);
        const std::size_t lines = n / static_cast<std::size_t>(m);
        std::vector<double> pos(m);
        for (int i = 0; i < m; ++i) pos[i] = g.coord(axis, i);

        parallel_for(lines, [&](std::size_t lbegin, std::size_t lend) {
            std::vector<double> gline(m), out(m);
            std::vector<int> win(m), hull;
            std::vector<double> zleft;
            for (std::size_t line = lbegin; line < lend; ++line) {
                const std::size_t outer = line / stride;
                const std::size_t inner = line % stride;
                const std::size_t base = outer * stride * static_cast<std::size_t>(m) + inner;
                for (int i = 0; i < m; ++i) gline[i] = val[base + stride * i];
                upper_envelope_line(gline, pos, theta, out, win, hull, zleft);
                for (int i = 0; i < m; ++i) {
                    const std::size_t node = base + stride * i;
                    nval[node] = out[i];
                    nsrc[node] = win[i] < 0 ? kNoArgmax : src[base + stride * win[i]];
                }
            }
        });
        val.swap(nval);
        src.swap(nsrc);
    }

    EnvelopeResult res(ScalarField(g, std::vector<ExtReal>(n)), n);
    std::vector<ExtReal> vals(n);
    parallel_for(n, [&](std::size_t begin, std::size_t end) {
        Point y(d), x(d);
        for (std::size_t i = begin; i < end; ++i) {
            const std::size_t xi = src[i];
            if (xi == kNoArgmax) {
                vals[i] = ExtReal::neg_inf();
                continue;
            }
            // Recompute from the maximizer so the attainment identity is exact
            // and matches the brute-force arithmetic.
            g.coord_of(i, y);
            g.coord_of(xi, x);
            vals[i] = ExtReal(u.at(xi).value() - theta * distance_sq(y, x));
            res.argmax[i] = xi;
            res.attained[i] = 1;
            res.proper_interior[i] = (g.is_interior(i) && g.is_interior(xi)) ? 1 : 0;
        }
    });
    res.values = ScalarField(g, std::move(vals));
    if (u.upper_bound()) res.values.set_upper_bound(*u.upper_bound());
    return res;
}

std::pair<std::vector<EnvelopeResult>, ThetaFamilyReport> theta_family(
    const ScalarField& u, const std::vector<double>& thetas, double floor) {
    if (!u.upper_bound())
        throw std::invalid_argument("theta_family: field must declare a finite upper bound");
    if (thetas.empty()) throw std::invalid_argument("theta_family: empty theta list");
    for (std::size_t i = 0; i < thetas.size(); ++i) {
        if (!(thetas[i] > 0)) throw std::invalid_argument("theta_family: thetas must be positive");
        if (i > 0 && !(thetas[i] > thetas[i - 1]))
            throw std::invalid_argument("theta_family: thetas must be strictly increasing");
    }

    std::vector<EnvelopeResult> envs;
    envs.reserve(thetas.size());
    for (double t : thetas) envs.push_back(moreau_envelope_fast(u, t));

    ThetaFamilyReport rep;
    rep.thetas = thetas;
    rep.floor = floor;
    const std::size_t n = u.grid().node_count();

    for (std::size_t ti = 0; ti < thetas.size(); ++ti) {
        double gap = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (!u.at(i).is_finite()) continue;
            const ExtReal f = envs[ti].values.at(i);
            if (f.is_neg_inf() || f.value() < u.at(i).value() - 1e-12) rep.lower_bounded = false;
            if (f.is_finite()) gap = std::max(gap, f.value() - u.at(i).value());
        }
        rep.max_gap.push_back(gap);
        if (ti == 0) continue;
        for (std::size_t i = 0; i < n; ++i) {
            const ExtReal prev = envs[ti - 1].values.at(i);
            const ExtReal cur = envs[ti].values.at(i);
            if (cur.is_neg_inf()) continue;
            if (prev.is_neg_inf() || cur.value() > prev.value() + 1e-12) {
                ++rep.monotone_violations;
                if (prev.is_finite())
                    rep.worst_monotone_violation =
                        std::max(rep.worst_monotone_violation, cur.value() - prev.value());
            }
        }
    }

    // -inf nodes: nearest finite sample and the first theta crossing the floor.
    std::vector<std::size_t> finite_nodes;
    for (std::size_t i = 0; i < n; ++i)
        if (u.at(i).is_finite()) finite_nodes.push_back(i);
    Point a(u.grid().dim_real()), b(u.grid().dim_real());
    for (std::size_t i = 0; i < n; ++i) {
        if (u.at(i).is_finite()) continue;
        ThetaFamilyReport::NegInfNode info;
        info.node = i;
        double best = HUGE_VAL;
        u.grid().coord_of(i, a);
        for (std::size_t j : finite_nodes) {
            u.grid().coord_of(j, b);
            best = std::min(best, distance_sq(a, b));
        }
        info.nearest_finite_dist = std::isfinite(best) ? std::sqrt(best) : HUGE_VAL;
        for (std::size_t ti = 0; ti < thetas.size(); ++ti) {
            if (envs[ti].values.at(i) < ExtReal(floor)) {
                info.theta_below_floor = thetas[ti];
                break;
            }
        }
        rep.neg_inf_nodes.push_back(std::move(info));
    }
    return {std::move(envs), std::move(rep)};
}

EnvelopeAxiomReport check_envelope_axioms(const ScalarField& u, const Kernel& kernel,
                                          const EnvelopeResult& result, double tol) {
    EnvelopeAxiomReport rep;
    const ScalarField& env = result.values;
    const bool same_grid = env.grid() == u.grid();

    rep.clause1_applicable = same_grid && kernel.at_zero() == ExtReal(0.0);
    if (rep.clause1_applicable) {
        for (std::size_t i = 0; i < u.grid().node_count(); ++i) {
            if (!u.at(i).is_finite()) continue;
            const ExtReal e = env.at(i);
            const double gap = e.is_neg_inf() ? HUGE_VAL : u.at(i).value() - e.value();
            if (gap > tol) rep.violations.push_back({1, i, gap});
        }
    }

    rep.clause2_applicable = kernel.nonpositive() && u.upper_bound().has_value();
    if (rep.clause2_applicable) {
        const double m = *u.upper_bound();
        for (std::size_t i = 0; i < env.grid().node_count(); ++i) {
            const ExtReal e = env.at(i);
            if (e.is_finite() && e.value() > m + tol) rep.violations.push_back({2, i, e.value() - m});
        }
    }

    rep.clause3_ok = env.all_neg_inf() == (u.all_neg_inf() || kernel.identically_neg_inf());

    for (std::size_t i = 0; i < env.grid().node_count(); ++i)
        if (result.attained[i] && !env.at(i).is_finite()) {
            rep.clause4_ok = false;
            rep.violations.push_back({4, i, 0.0});
        }
    return rep;
}

SemiconvexityReport semiconvexity_check(const ScalarField& f, double delta, int random_triples,
                                        std::uint64_t seed, double tol) {
    const BoxGrid& g = f.grid();
    const int d = g.dim_real();
    SemiconvexityReport rep;

    std::vector<double> shifted(g.node_count());
    Point p(d);
    std::vector<ExtReal> gvals(g.node_count());
    for (std::size_t i = 0; i < g.node_count(); ++i) {
        if (f.at(i).is_neg_inf()) {
            gvals[i] = ExtReal::neg_inf();
        } else {
            g.coord_of(i, p);
            gvals[i] = ExtReal(f.at(i).value() + delta * norm_sq(p));
        }
    }

    auto check_triple = [&](std::size_t ia, std::size_t imid, std::size_t ib) {
        const ExtReal a = gvals[ia], m = gvals[imid], b = gvals[ib];
        if (a.is_neg_inf() || b.is_neg_inf() || m.is_neg_inf()) {
            ++rep.triples_skipped;
            return;
        }
        ++rep.triples_checked;
        const double lhs = m.value();
        const double rhs = 0.5 * (a.value() + b.value());
        if (lhs > rhs + tol) rep.violations.push_back({ia, imid, ib, lhs - rhs});
    };

    // Every interior node against its two axis neighbors.
    std::vector<int> mi(d);
    for (std::size_t i = 0; i < g.node_count(); ++i) {
        g.multi_of(i, mi);
        for (int a = 0; a < d; ++a) {
            if (mi[a] < 1 || mi[a] > g.counts()[a] - 2) continue;
            mi[a] -= 1;
            const std::size_t left = g.index_of(mi);
            mi[a] += 2;
            const std::size_t right = g.index_of(mi);
            mi[a] -= 1;
            check_triple(left, i, right);
        }
    }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> step_dist(-2, 2);
    std::uniform_int_distribution<int> k_dist(1, 2);
    std::uniform_int_distribution<std::size_t> node_dist(0, g.node_count() - 1);
    std::vector<int> ma(d), mb(d), mm(d);
    for (int t = 0; t < random_triples; ++t) {
        for (int attempt = 0; attempt < 16; ++attempt) {
            const std::size_t ia = node_dist(rng);
            g.multi_of(ia, ma);
            bool nonzero = false;
            const int k = k_dist(rng);
            bool in_range = true;
            for (int a = 0; a < d; ++a) {
                const int s = step_dist(rng);
                nonzero = nonzero || s != 0;
                mm[a] = ma[a] + k * s;
                mb[a] = ma[a] + 2 * k * s;
                if (mm[a] < 0 || mm[a] >= g.counts()[a] || mb[a] < 0 || mb[a] >= g.counts()[a])
                    in_range = false;
            }
            if (!nonzero || !in_range) continue;
            check_triple(ia, g.index_of(mm), g.index_of(mb));
            break;
        }
    }
    return rep;
}

ScalarField crop_field(const ScalarField& f, const std::vector<int>& lo,
                       const std::vector<int>& hi) {
    const BoxGrid& g = f.grid();
    const int d = g.dim_real();
    if (static_cast<int>(lo.size()) != d || static_cast<int>(hi.size()) != d)
        throw std::invalid_argument("crop_field: window arity mismatch");
    std::vector<double> nlo(d), nhi(d);
    std::vector<int> counts(d);
    for (int a = 0; a < d; ++a) {
        if (lo[a] < 0 || hi[a] >= g.counts()[a] || hi[a] - lo[a] < 1)
            throw std::invalid_argument("crop_field: window out of range or degenerate");
        nlo[a] = g.coord(a, lo[a]);
        nhi[a] = g.coord(a, hi[a]);
        counts[a] = hi[a] - lo[a] + 1;
    }
    BoxGrid sub(g.dim_complex(), std::move(nlo), std::move(nhi), std::move(counts));
    std::vector<ExtReal> vals(sub.node_count());
    std::vector<int> mi(d);
    for (std::size_t i = 0; i < sub.node_count(); ++i) {
        sub.multi_of(i, mi);
        for (int a = 0; a < d; ++a) mi[a] += lo[a];
        vals[i] = f.at(g.index_of(mi));
    }
    return ScalarField(std::move(sub), std::move(vals));
}

}  // namespace mqpsh
