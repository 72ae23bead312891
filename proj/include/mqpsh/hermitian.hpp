#pragma once

#include <complex>
#include <vector>

namespace mqpsh {

using Complex = std::complex<double>;

/* Dense n x n complex Hermitian matrix.  Construction symmetrizes the input
 * as (A + A*)/2 after checking the deviation from Hermitian symmetry; the
 * stored entries satisfy a[k][l] == conj(a[l][k]) exactly and the diagonal
 * is exactly real.  Finite-difference Hessians are only approximately
 * Hermitian, hence the explicit deviation budget. */
class HermitianMatrix {
public:
    HermitianMatrix(int n, std::vector<Complex> row_major, double deviation_tol = 1e-12);

    static HermitianMatrix zero(int n);
    static HermitianMatrix identity(int n);
    static HermitianMatrix diagonal(const std::vector<double>& d);

    int dim() const { return n_; }
    Complex at(int k, int l) const { return a_[static_cast<std::size_t>(k) * n_ + l]; }
    const std::vector<Complex>& entries() const { return a_; }

    double frobenius_norm() const;
    // Default eigenvalue zero-threshold: 1e-10 * max(1, ||A||_F).
    double default_tol() const;

    // xi* A xi; real for Hermitian A (the tiny imaginary residue is dropped).
    double quad_form(const std::vector<Complex>& xi) const;

    HermitianMatrix operator+(const HermitianMatrix& o) const;
    HermitianMatrix operator-(const HermitianMatrix& o) const;
    HermitianMatrix scaled(double c) const;

private:
    int n_;
    std::vector<Complex> a_;
};

/* Eigenvalue sign counts of a Hermitian matrix under an explicit zero
 * threshold: lambda < -tol counts negative, lambda > +tol positive, the rest
 * zero.  The counting operators are discontinuous, so the classification
 * boundary is part of the contract rather than hidden. */
struct InertiaSignature {
    int negative = 0;
    int zero = 0;
    int positive = 0;
    double tol = 0.0;

    int dim() const { return negative + zero + positive; }
    bool operator==(const InertiaSignature&) const = default;
};

// All eigenvalues, descending.  Cyclic complex Jacobi rotations; accurate to
// ~1e-14 * ||A||_F and deterministic for a given input.
std::vector<double> eigenvalues(const HermitianMatrix& a);

InertiaSignature inertia(const HermitianMatrix& a);          // default threshold
InertiaSignature inertia(const HermitianMatrix& a, double tol);

// Loewner order: true iff min eigenvalue of A - B >= -tol.
bool loewner_geq(const HermitianMatrix& a, const HermitianMatrix& b, double tol = 0.0);

/* Degenerate-ellipticity report for a pair A >= B (Loewner): the negative
 * count must not grow, the positive count must not shrink, and the sorted
 * spectra must interlace as lambda_k(A) >= lambda_k(B) - tol. */
struct EllipticDegenerateReport {
    InertiaSignature inertia_a, inertia_b;
    bool negative_monotone = false;
    bool positive_monotone = false;
    bool eigenvalue_dominance = false;
    double worst_eigenvalue_gap = 0.0;  // max over k of lambda_k(B) - lambda_k(A)

    bool ok() const { return negative_monotone && positive_monotone && eigenvalue_dominance; }
};

// Precondition A >= B (Loewner, within tol) is enforced; violation is an
// error, not a property failure.
EllipticDegenerateReport check_elliptic_degenerate(const HermitianMatrix& a,
                                                   const HermitianMatrix& b, double tol);

}  // namespace mqpsh
