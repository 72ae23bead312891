#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "mqpsh/grid.hpp"

namespace mqpsh {

/* Sparse multivariate real polynomial, exact term algebra.  Used both as a
 * smooth test-function family and as the independent derivative oracle for
 * finite differences. */
class RealPolynomial {
public:
    struct Term {
        double coeff;
        std::vector<int> exponents;  // one per variable
    };

    RealPolynomial(int vars, std::vector<Term> terms);

    int vars() const { return vars_; }
    const std::vector<Term>& terms() const { return terms_; }
    int degree() const;

    double eval(std::span<const double> x) const;
    RealPolynomial derivative(int axis) const;

    // Dense random polynomial of total degree <= degree with coefficients
    // uniform in [-amp, amp].
    static RealPolynomial random(int vars, int degree, double amp, std::mt19937_64& rng);

private:
    int vars_;
    std::vector<Term> terms_;
};

/* Holomorphic polynomial C^n -> C: complex coefficients on zbar-free
 * monomials, so holomorphy is structural. */
class HoloPoly {
public:
    struct Term {
        std::complex<double> coeff;
        std::vector<int> exponents;  // powers of z_1..z_n
    };

    HoloPoly(int vars, std::vector<Term> terms);
    static HoloPoly zero(int vars) { return HoloPoly(vars, {}); }
    static HoloPoly monomial(int vars, std::complex<double> coeff, std::vector<int> exponents);

    int vars() const { return vars_; }
    int degree() const;
    const std::vector<Term>& terms() const { return terms_; }

    std::complex<double> eval(std::span<const std::complex<double>> z) const;

    static HoloPoly random(int vars, int degree, double amp, std::mt19937_64& rng);

private:
    int vars_;
    std::vector<Term> terms_;
};

/* sign * Re(p) for a holomorphic polynomial p; pluriharmonic by
 * construction, with identically vanishing complex Hessian. */
struct PluriharmonicPoly {
    HoloPoly poly;
    int sign = +1;

    int vars() const { return poly.vars(); }
    double eval_complex(std::span<const std::complex<double>> z) const {
        return sign * poly.eval(z).real();
    }
    // Evaluation on real coordinates (x_1..x_n, y_1..y_n).
    double eval(std::span<const double> xy) const;
};

/* Canonical pool: the zero polynomial plus +/-1, +/-i, +/-1/2 multiples of
 * z_k, z_k^2 and the pair products z_j z_k.  The seeded random pool draws
 * degree <= degree_cap coefficients from [-amp, amp]. */
std::vector<PluriharmonicPoly> canonical_poly_pool(int vars);
std::vector<PluriharmonicPoly> random_poly_pool(int vars, int count, int degree_cap, double amp,
                                                std::uint64_t seed);
std::vector<PluriharmonicPoly> default_poly_pool(int vars, std::uint64_t seed,
                                                 int random_count = 6, int degree_cap = 3,
                                                 double amp = 2.0);

}  // namespace mqpsh
