#pragma once

#include <cmath>
#include <span>
#include <vector>

namespace mqpsh::detail {

/* Upper envelope of the concave parabolas p_i(t) = g[i] - theta (t-pos[i])^2,
 * evaluated at every pos[j].  g entries of -inf contribute no parabola.
 * Equal curvature means any two parabolas cross exactly once, so the winner
 * sequence is ordered by center and a single hull scan suffices.  The same
 * routine evaluates lower envelopes of convex parabolas (squared-distance
 * passes) through negation. */
inline void upper_envelope_line(std::span<const double> g, std::span<const double> pos,
                                double theta, std::span<double> out, std::span<int> winner,
                                std::vector<int>& hull, std::vector<double>& zleft) {
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

}  // namespace mqpsh::detail
