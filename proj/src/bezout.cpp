#include "sylvinv/bezout.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sylvinv/dyadic_inverse.hpp"
#include "sylvinv/errors.hpp"
#include "sylvinv/interpolation.hpp"
#include "sylvinv/linalg.hpp"
#include "sylvinv/sylvester.hpp"

namespace sylvinv {

namespace {

void validate_c_degree(const Polynomial& c, std::size_t m, std::size_t n) {
    if (!c.is_zero() && c.degree() > m + n - 1) {
        throw ValidationError("degree of c is " + std::to_string(c.degree()) + "; must be at most m+n-1 = " +
                              std::to_string(m + n - 1));
    }
}

double binomial(std::size_t top, std::size_t bottom) {
    double acc = 1.0;
    for (std::size_t t = 1; t <= bottom; ++t) {
        acc *= static_cast<double>(top - bottom + t) / static_cast<double>(t);
    }
    return acc;
}

BezoutSolution finish(const Polynomial& a, const Polynomial& b, const Polynomial& c, Polynomial x, Polynomial y,
                      BezoutMethod method) {
    const double r = residual(a, b, c, x, y);
    return {std::move(x), std::move(y), r, method};
}

}  // namespace

std::string_view to_string(BezoutMethod method) noexcept {
    switch (method) {
        case BezoutMethod::lagrange: return "lagrange";
        case BezoutMethod::hermite: return "hermite";
        case BezoutMethod::oracle: return "oracle";
        case BezoutMethod::dyadic: return "dyadic";
    }
    return "unknown";
}

double residual(const Polynomial& a, const Polynomial& b, const Polynomial& c, const Polynomial& x,
                const Polynomial& y) {
    return (a * x + b * y - c).max_abs_coeff();
}

double bezout_scale(const Polynomial& a, const Polynomial& b, const Polynomial& c) {
    return std::max({a.max_abs_coeff(), b.max_abs_coeff(), c.max_abs_coeff()});
}

BezoutSolution solve_lagrange(const FactoredPolynomial& a, const FactoredPolynomial& b, const Polynomial& c,
                              const Guards& guards) {
    const std::size_t m = a.degree();
    const std::size_t n = b.degree();
    if (m < 1 || n < 1) throw DegenerateInput("both polynomials must have degree >= 1");
    if (!a.all_simple() || !b.all_simple()) throw ValidationError("Lagrange solution requires simple zeros");
    validate_c_degree(c, m, n);
    check_sylvester_guard(a, b, guards);

    Polynomial x;
    for (std::size_t j = 0; j < n; ++j) {
        const Complex beta = b.zeros()[j].value;
        x = x + scale(lagrange_fundamental(b, j, guards), eval(c, beta) / a.eval(beta));
    }
    Polynomial y;
    for (std::size_t i = 0; i < m; ++i) {
        const Complex alpha = a.zeros()[i].value;
        y = y + scale(lagrange_fundamental(a, i, guards), eval(c, alpha) / b.eval(alpha));
    }
    return finish(from_factored(a), from_factored(b), c, std::move(x), std::move(y), BezoutMethod::lagrange);
}

std::vector<Complex> quotient_derivatives(const Polynomial& c, const Polynomial& a, Complex z, std::size_t order,
                                          const Guards& guards) {
    const std::vector<Complex> ad = derivatives_at(a, z, order + 1);
    const std::vector<Complex> cd = derivatives_at(c, z, order + 1);
    if (std::abs(ad[0]) < guards.singular_tol * (1.0 + a.max_abs_coeff())) {
        throw SingularSylvester("denominator vanishes at an interpolation node: a and b (nearly) share a zero");
    }
    std::vector<Complex> f(order + 1);
    for (std::size_t r = 0; r <= order; ++r) {
        Complex acc = cd[r];
        for (std::size_t i = 0; i < r; ++i) acc -= binomial(r, i) * f[i] * ad[r - i];
        f[r] = acc / ad[0];
    }
    return f;
}

BezoutSolution solve_hermite(const FactoredPolynomial& a, const FactoredPolynomial& b, const Polynomial& c,
                             const Guards& guards) {
    const std::size_t m = a.degree();
    const std::size_t n = b.degree();
    if (m < 1 || n < 1) throw DegenerateInput("both polynomials must have degree >= 1");
    validate_c_degree(c, m, n);
    check_sylvester_guard(a, b, guards);
    const Polynomial a_poly = from_factored(a);
    const Polynomial b_poly = from_factored(b);

    auto interpolate_quotient = [&](const FactoredPolynomial& nodes_of, const Polynomial& denom) {
        HermiteData data{{nodes_of.zeros().begin(), nodes_of.zeros().end()}, {}};
        for (const Zero& z : nodes_of.zeros()) {
            data.samples.push_back(
                quotient_derivatives(c, denom, z.value, static_cast<std::size_t>(z.multiplicity - 1), guards));
        }
        return hermite_interpolate(data, guards);
    };
    Polynomial x = interpolate_quotient(b, a_poly);
    Polynomial y = interpolate_quotient(a, b_poly);
    return finish(a_poly, b_poly, c, std::move(x), std::move(y), BezoutMethod::hermite);
}

BezoutSolution solve_oracle(const Polynomial& a, const Polynomial& b, const Polynomial& c) {
    const SylvesterLayout s = build_sylvester(a, b);
    const RowVector d = d_vector(c, s.m, s.n);
    const RowVector z = solve_row_system(s.matrix, d);
    auto [x, y] = split_z(z, s.m, s.n);
    return finish(a, b, c, std::move(x), std::move(y), BezoutMethod::oracle);
}

BezoutSolution solve_dyadic(const FactoredPolynomial& a, const FactoredPolynomial& b, const Polynomial& c,
                            const Guards& guards) {
    const std::size_t m = a.degree();
    const std::size_t n = b.degree();
    if (m < 1 || n < 1) throw DegenerateInput("both polynomials must have degree >= 1");
    validate_c_degree(c, m, n);
    const DyadicDecomposition dec = a.all_simple() && b.all_simple() ? inverse_simple(a, b, guards)
                                                                      : inverse_general(a, b, guards);
    const RowVector z = apply_left(dec, d_vector(c, m, n));
    auto [x, y] = split_z(z, m, n);
    return finish(from_factored(a), from_factored(b), c, std::move(x), std::move(y), BezoutMethod::dyadic);
}

}  // namespace sylvinv
