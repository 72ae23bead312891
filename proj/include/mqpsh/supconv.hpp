#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "mqpsh/kernel.hpp"

namespace mqpsh {

inline constexpr std::size_t kNoArgmax = std::numeric_limits<std::size_t>::max();

/* Envelope u^Phi on a query grid.  argmax ties break to the first source
 * node in linear order.  On a finite sample set the supremum is attained
 * whenever any candidate is finite; the discretization of the proper set of
 * definition that actually matters is proper_interior_mask: attained, with
 * the maximizer strictly inside the source box and the query strictly inside
 * the query box (boundary-attained maxima are truncation artifacts). */
struct EnvelopeResult {
    ScalarField values;
    std::vector<std::size_t> argmax;     // kNoArgmax when nothing finite
    std::vector<char> attained;
    std::vector<char> proper_interior;

    EnvelopeResult(ScalarField v, std::size_t n)
        : values(std::move(v)), argmax(n, kNoArgmax), attained(n, 0), proper_interior(n, 0) {}
};

/* Exact discrete supremum sup_x { u(x) + Phi(y - x) } over all source
 * samples, one query node at a time.  With a declared upper bound M and a
 * quadratic kernel, candidates outside the radius bound
 * theta d^2 > M - best are skipped; the bound is also asserted against the
 * returned maximizer. */
EnvelopeResult sup_convolve_bruteforce(const ScalarField& u, const Kernel& kernel,
                                       const BoxGrid& query);

/* Separable evaluation of the quadratic-kernel envelope: one upper-envelope-
 * of-parabolas pass per axis, linear in node count per pass.  Values agree
 * with the brute force engine to 1e-9 (exactly, whenever the maximizers
 * match). */
EnvelopeResult moreau_envelope_fast(const ScalarField& u, double theta);

struct ThetaFamilyReport {
    std::vector<double> thetas;
    std::vector<double> max_gap;       // per theta: max over finite-u nodes of F_theta - u
    std::size_t monotone_violations = 0;  // node/theta pairs with F growing beyond 1e-12
    double worst_monotone_violation = 0.0;
    bool lower_bounded = true;         // F_theta >= u at finite nodes (1e-12 slack)

    struct NegInfNode {
        std::size_t node = 0;
        double nearest_finite_dist = 0.0;            // +inf when u == -inf everywhere
        std::optional<double> theta_below_floor;     // first theta with F < floor
    };
    std::vector<NegInfNode> neg_inf_nodes;
    double floor = -1e6;

    bool ok() const { return monotone_violations == 0 && lower_bounded; }
};

// Requires a declared upper bound (Phi = -theta||.||^2 needs u <= M for the
// localization argument); thetas must be strictly increasing and positive.
std::pair<std::vector<EnvelopeResult>, ThetaFamilyReport> theta_family(
    const ScalarField& u, const std::vector<double>& thetas, double floor = -1e6);

struct EnvelopeAxiomReport {
    struct Violation {
        int clause;
        std::size_t node;
        double amount;
    };
    std::vector<Violation> violations;
    bool clause1_applicable = false;  // Phi(0) = 0: u <= u^Phi on source nodes
    bool clause2_applicable = false;  // Phi <= 0, u <= M: u^Phi <= M
    bool clause3_ok = true;           // u^Phi == -inf  iff  u == -inf or Phi == -inf
    bool clause4_ok = true;           // finite values where attained
    bool ok() const { return violations.empty() && clause3_ok && clause4_ok; }
};

EnvelopeAxiomReport check_envelope_axioms(const ScalarField& u, const Kernel& kernel,
                                          const EnvelopeResult& result, double tol = 1e-9);

struct SemiconvexityReport {
    std::size_t triples_checked = 0;
    std::size_t triples_skipped = 0;  // -inf endpoints
    struct Violation {
        std::size_t a, mid, b;
        double amount;
    };
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

/* Midpoint convexity of G = F + delta||.||^2 along every axis-aligned node
 * triple plus seeded random grid-collinear triples:
 * G(mid) <= (G(a)+G(b))/2 + tol. */
SemiconvexityReport semiconvexity_check(const ScalarField& f, double delta,
                                        int random_triples = 200, std::uint64_t seed = 1,
                                        double tol = 1e-9);

// Sub-field over a closed index window [lo, hi] per axis.
ScalarField crop_field(const ScalarField& f, const std::vector<int>& lo,
                       const std::vector<int>& hi);

}  // namespace mqpsh
