#include "mqpsh/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mqpsh {

HermitianMatrix::HermitianMatrix(int n, std::vector<Complex> row_major, double deviation_tol)
    : n_(n), a_(std::move(row_major)) {
    if (n_ < 1) throw std::invalid_argument("HermitianMatrix: dimension must be >= 1");
    if (a_.size() != static_cast<std::size_t>(n_) * n_)
        throw std::invalid_argument("HermitianMatrix: entry count must be n*n");
    double dev = 0.0;
    for (int k = 0; k < n_; ++k)
        for (int l = k; l < n_; ++l) {
            const Complex u = a_[static_cast<std::size_t>(k) * n_ + l];
            const Complex v = a_[static_cast<std::size_t>(l) * n_ + k];
            dev = std::max(dev, std::abs(u - std::conj(v)));
        }
    if (dev > deviation_tol)
        throw std::invalid_argument("HermitianMatrix: deviation from Hermitian symmetry " +
                                    std::to_string(dev) + " exceeds tolerance");
    for (int k = 0; k < n_; ++k) {
        a_[static_cast<std::size_t>(k) * n_ + k] = Complex(a_[static_cast<std::size_t>(k) * n_ + k].real(), 0.0);
        for (int l = k + 1; l < n_; ++l) {
            const Complex m = 0.5 * (a_[static_cast<std::size_t>(k) * n_ + l] +
                                     std::conj(a_[static_cast<std::size_t>(l) * n_ + k]));
            a_[static_cast<std::size_t>(k) * n_ + l] = m;
            a_[static_cast<std::size_t>(l) * n_ + k] = std::conj(m);
        }
    }
}

HermitianMatrix HermitianMatrix::zero(int n) {
    return HermitianMatrix(n, std::vector<Complex>(static_cast<std::size_t>(n) * n, 0.0));
}

HermitianMatrix HermitianMatrix::identity(int n) {
    std::vector<Complex> a(static_cast<std::size_t>(n) * n, 0.0);
    for (int k = 0; k < n; ++k) a[static_cast<std::size_t>(k) * n + k] = 1.0;
    return HermitianMatrix(n, std::move(a));
}

HermitianMatrix HermitianMatrix::diagonal(const std::vector<double>& d) {
    const int n = static_cast<int>(d.size());
    std::vector<Complex> a(static_cast<std::size_t>(n) * n, 0.0);
    for (int k = 0; k < n; ++k) a[static_cast<std::size_t>(k) * n + k] = d[k];
    return HermitianMatrix(n, std::move(a));
}

double HermitianMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const Complex& v : a_) s += std::norm(v);
    return std::sqrt(s);
}

double HermitianMatrix::default_tol() const { return 1e-10 * std::max(1.0, frobenius_norm()); }

double HermitianMatrix::quad_form(const std::vector<Complex>& xi) const {
    if (xi.size() != static_cast<std::size_t>(n_))
        throw std::invalid_argument("quad_form: vector dimension mismatch");
    Complex s = 0.0;
    for (int k = 0; k < n_; ++k)
        for (int l = 0; l < n_; ++l) s += std::conj(xi[k]) * at(k, l) * xi[l];
    return s.real();
}

HermitianMatrix HermitianMatrix::operator+(const HermitianMatrix& o) const {
    if (n_ != o.n_) throw std::invalid_argument("HermitianMatrix: dimension mismatch");
    std::vector<Complex> a(a_.size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = a_[i] + o.a_[i];
    return HermitianMatrix(n_, std::move(a));
}

HermitianMatrix HermitianMatrix::operator-(const HermitianMatrix& o) const {
    if (n_ != o.n_) throw std::invalid_argument("HermitianMatrix: dimension mismatch");
    std::vector<Complex> a(a_.size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = a_[i] - o.a_[i];
    return HermitianMatrix(n_, std::move(a));
}

HermitianMatrix HermitianMatrix::scaled(double c) const {
    std::vector<Complex> a(a_.size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = c * a_[i];
    return HermitianMatrix(n_, std::move(a));
}

/* Cyclic Jacobi for complex Hermitian matrices.  Each sweep visits every
 * off-diagonal pair (p, q) and applies the unitary plane rotation
 *   J_pp = c,  J_pq = -s e^{i alpha},  J_qp = s e^{-i alpha},  J_qq = c,
 * alpha = arg(a_pq), chosen to zero a_pq in A <- J* A J.  Quadratic
 * convergence; matrices here are small (n <= 8 in practice). */
std::vector<double> eigenvalues(const HermitianMatrix& a) {
    const int n = a.dim();
    std::vector<Complex> m(a.entries());
    auto at = [&](int k, int l) -> Complex& { return m[static_cast<std::size_t>(k) * n + l]; };

    const double scale = std::max(1.0, a.frobenius_norm());
    const double stop = 1e-15 * scale;

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(at(p, q)));
        if (off <= stop) break;

        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const Complex apq = at(p, q);
                const double mag = std::abs(apq);
                if (mag <= stop * 1e-2) continue;
                const Complex phase = apq / mag;  // e^{i alpha}
                const double app = at(p, p).real();
                const double aqq = at(q, q).real();
                const double tau = (app - aqq) / (2.0 * mag);
                double t;
                if (tau >= 0)
                    t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
                else
                    t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // Rotate rows/columns p and q.
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const Complex akp = at(k, p);
                    const Complex akq = at(k, q);
                    const Complex nkp = c * akp + s * std::conj(phase) * akq;
                    const Complex nkq = -s * phase * akp + c * akq;
                    at(k, p) = nkp;
                    at(p, k) = std::conj(nkp);
                    at(k, q) = nkq;
                    at(q, k) = std::conj(nkq);
                }
                const double npp = app * c * c + 2.0 * mag * s * c + aqq * s * s;
                const double nqq = app * s * s - 2.0 * mag * s * c + aqq * c * c;
                at(p, p) = npp;
                at(q, q) = nqq;
                at(p, q) = 0.0;
                at(q, p) = 0.0;
            }
        }
    }

    std::vector<double> ev(n);
    for (int k = 0; k < n; ++k) ev[k] = at(k, k).real();
    std::sort(ev.begin(), ev.end(), std::greater<double>());
    return ev;
}

InertiaSignature inertia(const HermitianMatrix& a) { return inertia(a, a.default_tol()); }

InertiaSignature inertia(const HermitianMatrix& a, double tol) {
    if (tol < 0) throw std::invalid_argument("inertia: tol must be >= 0");
    InertiaSignature sig;
    sig.tol = tol;
    for (double ev : eigenvalues(a)) {
        if (ev < -tol)
            ++sig.negative;
        else if (ev > tol)
            ++sig.positive;
        else
            ++sig.zero;
    }
    return sig;
}

bool loewner_geq(const HermitianMatrix& a, const HermitianMatrix& b, double tol) {
    if (a.dim() != b.dim()) throw std::invalid_argument("loewner_geq: dimension mismatch");
    const std::vector<double> ev = eigenvalues(a - b);
    return ev.back() >= -tol;
}

EllipticDegenerateReport check_elliptic_degenerate(const HermitianMatrix& a,
                                                   const HermitianMatrix& b, double tol) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("check_elliptic_degenerate: dimension mismatch");
    if (!loewner_geq(a, b, std::max(tol, a.default_tol())))
        throw std::invalid_argument("check_elliptic_degenerate: precondition A >= B (Loewner) fails");

    EllipticDegenerateReport rep;
    rep.inertia_a = inertia(a, tol > 0 ? tol : a.default_tol());
    rep.inertia_b = inertia(b, tol > 0 ? tol : b.default_tol());
    rep.negative_monotone = rep.inertia_a.negative <= rep.inertia_b.negative;
    rep.positive_monotone = rep.inertia_a.positive >= rep.inertia_b.positive;

    const std::vector<double> ea = eigenvalues(a);
    const std::vector<double> eb = eigenvalues(b);
    double worst = 0.0;
    for (std::size_t k = 0; k < ea.size(); ++k) worst = std::max(worst, eb[k] - ea[k]);
    rep.worst_eigenvalue_gap = worst;
    rep.eigenvalue_dominance = worst <= tol;
    return rep;
}

}  // namespace mqpsh
