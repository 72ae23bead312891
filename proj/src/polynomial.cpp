#include "mqpsh/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mqpsh {

namespace {

// Enumerates all exponent vectors with total degree <= degree.
void enumerate_exponents(int vars, int degree, std::vector<int>& cur,
                         std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == vars) {
        out.push_back(cur);
        return;
    }
    int used = 0;
    for (int e : cur) used += e;
    for (int e = 0; e + used <= degree; ++e) {
        cur.push_back(e);
        enumerate_exponents(vars, degree, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> all_exponents(int vars, int degree) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    enumerate_exponents(vars, degree, cur, out);
    return out;
}

}  // namespace

RealPolynomial::RealPolynomial(int vars, std::vector<Term> terms)
    : vars_(vars), terms_(std::move(terms)) {
    for (const Term& t : terms_)
        if (static_cast<int>(t.exponents.size()) != vars_)
            throw std::invalid_argument("RealPolynomial: exponent arity mismatch");
}

int RealPolynomial::degree() const {
    int d = 0;
    for (const Term& t : terms_) {
        int td = 0;
        for (int e : t.exponents) td += e;
        d = std::max(d, td);
    }
    return d;
}

double RealPolynomial::eval(std::span<const double> x) const {
    double s = 0.0;
    for (const Term& t : terms_) {
        double m = t.coeff;
        for (int a = 0; a < vars_; ++a)
            for (int e = 0; e < t.exponents[a]; ++e) m *= x[a];
        s += m;
    }
    return s;
}

RealPolynomial RealPolynomial::derivative(int axis) const {
    std::vector<Term> out;
    for (const Term& t : terms_) {
        if (t.exponents[axis] == 0) continue;
        Term d = t;
        d.coeff *= d.exponents[axis];
        d.exponents[axis] -= 1;
        out.push_back(std::move(d));
    }
    return RealPolynomial(vars_, std::move(out));
}

RealPolynomial RealPolynomial::random(int vars, int degree, double amp, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> dist(-amp, amp);
    std::vector<Term> terms;
    for (auto& e : all_exponents(vars, degree)) terms.push_back({dist(rng), e});
    return RealPolynomial(vars, std::move(terms));
}

HoloPoly::HoloPoly(int vars, std::vector<Term> terms) : vars_(vars), terms_(std::move(terms)) {
    for (const Term& t : terms_)
        if (static_cast<int>(t.exponents.size()) != vars_)
            throw std::invalid_argument("HoloPoly: exponent arity mismatch");
}

HoloPoly HoloPoly::monomial(int vars, std::complex<double> coeff, std::vector<int> exponents) {
    return HoloPoly(vars, {Term{coeff, std::move(exponents)}});
}

int HoloPoly::degree() const {
    int d = 0;
    for (const Term& t : terms_) {
        int td = 0;
        for (int e : t.exponents) td += e;
        d = std::max(d, td);
    }
    return d;
}

std::complex<double> HoloPoly::eval(std::span<const std::complex<double>> z) const {
    std::complex<double> s = 0.0;
    for (const Term& t : terms_) {
        std::complex<double> m = t.coeff;
        for (int a = 0; a < vars_; ++a)
            for (int e = 0; e < t.exponents[a]; ++e) m *= z[a];
        s += m;
    }
    return s;
}

HoloPoly HoloPoly::random(int vars, int degree, double amp, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> dist(-amp, amp);
    std::vector<Term> terms;
    for (auto& e : all_exponents(vars, degree)) {
        int td = 0;
        for (int x : e) td += x;
        if (td == 0) continue;  // constants do not affect maximum properties
        terms.push_back({std::complex<double>(dist(rng), dist(rng)), e});
    }
    return HoloPoly(vars, std::move(terms));
}

double PluriharmonicPoly::eval(std::span<const double> xy) const {
    const CPoint z = to_complex(xy);
    return eval_complex(z);
}

std::vector<PluriharmonicPoly> canonical_poly_pool(int vars) {
    std::vector<PluriharmonicPoly> pool;
    pool.push_back({HoloPoly::zero(vars), +1});
    const std::complex<double> units[] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {0.5, 0}, {-0.5, 0}};
    for (int k = 0; k < vars; ++k) {
        std::vector<int> lin(vars, 0);
        lin[k] = 1;
        std::vector<int> quad(vars, 0);
        quad[k] = 2;
        for (const auto& u : units) {
            pool.push_back({HoloPoly::monomial(vars, u, lin), +1});
            pool.push_back({HoloPoly::monomial(vars, u, quad), +1});
        }
    }
    for (int j = 0; j < vars; ++j)
        for (int k = j + 1; k < vars; ++k) {
            std::vector<int> cross(vars, 0);
            cross[j] = 1;
            cross[k] = 1;
            pool.push_back({HoloPoly::monomial(vars, {1, 0}, cross), +1});
            pool.push_back({HoloPoly::monomial(vars, {0, 1}, cross), +1});
        }
    return pool;
}

std::vector<PluriharmonicPoly> random_poly_pool(int vars, int count, int degree_cap, double amp,
                                                std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<PluriharmonicPoly> pool;
    for (int i = 0; i < count; ++i) {
        const int sign = (i % 2 == 0) ? +1 : -1;
        pool.push_back({HoloPoly::random(vars, degree_cap, amp, rng), sign});
    }
    return pool;
}

std::vector<PluriharmonicPoly> default_poly_pool(int vars, std::uint64_t seed, int random_count,
                                                 int degree_cap, double amp) {
    std::vector<PluriharmonicPoly> pool = canonical_poly_pool(vars);
    auto rnd = random_poly_pool(vars, random_count, degree_cap, amp, seed);
    pool.insert(pool.end(), rnd.begin(), rnd.end());
    return pool;
}

}  // namespace mqpsh
