#include "sylvinv/confluence.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <string>

#include "sylvinv/bezout.hpp"
#include "sylvinv/dyadic_inverse.hpp"
#include "sylvinv/errors.hpp"
#include "sylvinv/interpolation.hpp"

namespace sylvinv {

namespace {

std::vector<Zero> with_moving_zero(Complex moving, const std::vector<Zero>& fixed) {
    std::vector<Zero> zeros{{moving, 1}};
    zeros.insert(zeros.end(), fixed.begin(), fixed.end());
    return zeros;
}

double zero_scale(const ConfluenceFamily& family) {
    double scale = std::max(1.0, std::abs(family.theta));
    for (const Zero& z : family.fixed_a) scale = std::max(scale, std::abs(z.value));
    for (const Zero& z : family.fixed_b) scale = std::max(scale, std::abs(z.value));
    return scale;
}

}  // namespace

Complex ZeroPath::at(Complex theta, double tau) const noexcept {
    Complex acc{};
    for (std::size_t k = drift.size(); k-- > 0;) acc = (acc + drift[k]) * tau;
    return theta + acc;
}

std::size_t ConfluenceFamily::m() const noexcept {
    std::size_t deg = 1;
    for (const Zero& z : fixed_a) deg += static_cast<std::size_t>(z.multiplicity);
    return deg;
}

std::size_t ConfluenceFamily::n() const noexcept {
    std::size_t deg = 1;
    for (const Zero& z : fixed_b) deg += static_cast<std::size_t>(z.multiplicity);
    return deg;
}

void ConfluenceFamily::validate(const Guards& guards) const {
    if (leading_a == Complex{} || leading_b == Complex{}) throw ValidationError("leading coefficient must be nonzero");
    const double sep = guards.separation_tol * zero_scale(*this);
    auto check_distinct = [&](const std::vector<Zero>& zs, const char* side) {
        for (std::size_t k = 0; k < zs.size(); ++k) {
            if (zs[k].multiplicity < 1) throw ValidationError("zero multiplicity must be positive");
            if (std::abs(zs[k].value - theta) < sep) {
                throw ValidationError(std::string("a fixed zero of ") + side +
                                      " coincides with the merging point theta");
            }
            for (std::size_t l = 0; l < k; ++l) {
                if (std::abs(zs[k].value - zs[l].value) < sep) {
                    throw ValidationError(std::string("fixed zeros of ") + side + " must be pairwise distinct");
                }
            }
        }
    };
    check_distinct(fixed_a, "a");
    check_distinct(fixed_b, "b");
    for (const Zero& za : fixed_a) {
        for (const Zero& zb : fixed_b) {
            if (std::abs(za.value - zb.value) < sep) {
                throw ValidationError("a* and b* share a zero other than theta; the merging pair must be unique");
            }
        }
    }
    const std::size_t len = std::max(alpha_path.drift.size(), beta_path.drift.size());
    bool differ = false;
    for (std::size_t k = 0; k < len && !differ; ++k) {
        const Complex da = k < alpha_path.drift.size() ? alpha_path.drift[k] : Complex{};
        const Complex db = k < beta_path.drift.size() ? beta_path.drift[k] : Complex{};
        differ = da != db;
    }
    if (!differ) throw ValidationError("alpha_1(tau) and beta_1(tau) paths coincide");
    const double scale = std::max(a_star().max_abs_coeff(), b_star().max_abs_coeff());
    if (std::abs(limit_denominator()) < guards.singular_tol * (1.0 + scale)) {
        throw ValidationError("limit denominator (a* b* / (lambda - theta)^2)(theta) vanishes");
    }
}

FactoredPolynomial ConfluenceFamily::a_at(double tau) const {
    return FactoredPolynomial(leading_a, with_moving_zero(alpha_path.at(theta, tau), fixed_a));
}

FactoredPolynomial ConfluenceFamily::b_at(double tau) const {
    return FactoredPolynomial(leading_b, with_moving_zero(beta_path.at(theta, tau), fixed_b));
}

Polynomial ConfluenceFamily::a_star_reduced() const { return from_factored(FactoredPolynomial(leading_a, fixed_a)); }
Polynomial ConfluenceFamily::b_star_reduced() const { return from_factored(FactoredPolynomial(leading_b, fixed_b)); }
Polynomial ConfluenceFamily::a_star() const { return a_star_reduced() * Polynomial::linear_factor(theta); }
Polynomial ConfluenceFamily::b_star() const { return b_star_reduced() * Polynomial::linear_factor(theta); }

Complex ConfluenceFamily::limit_denominator() const {
    return FactoredPolynomial(leading_a, fixed_a).eval(theta) * FactoredPolynomial(leading_b, fixed_b).eval(theta);
}

DenseMatrix limit_inverse(const ConfluenceFamily& family, const Guards& guards) {
    family.validate(guards);
    const std::size_t m = family.m();
    const std::size_t n = family.n();
    const Column column = lambda_column(m + n, family.theta);
    const Complex inv_denom = 1.0 / family.limit_denominator();

    RowVector row = family.b_star_reduced().padded(n);
    for (Complex& v : row) v = -v;
    const RowVector tail = family.a_star_reduced().padded(m);
    row.insert(row.end(), tail.begin(), tail.end());

    DenseMatrix out(m + n, m + n);
    for (std::size_t r = 0; r < m + n; ++r) {
        for (std::size_t c = 0; c < m + n; ++c) out(r, c) = column[r] * inv_denom * row[c];
    }
    return out;
}

LimitSolutions limit_solutions(const ConfluenceFamily& family, const Polynomial& c, const Guards& guards) {
    family.validate(guards);
    const std::size_t m = family.m();
    const std::size_t n = family.n();
    if (!c.is_zero() && c.degree() > m + n - 1) throw ValidationError("degree of c must be at most m+n-1");
    const Complex factor = eval(c, family.theta) / family.limit_denominator();
    return {scale(family.b_star_reduced(), -factor), scale(family.a_star_reduced(), factor)};
}

ConvergenceReport convergence_experiment(const ConfluenceFamily& family, const Polynomial& c,
                                         std::span<const double> taus, const Guards& guards) {
    if (taus.empty()) throw ValidationError("at least one tau is required");
    for (std::size_t i = 0; i < taus.size(); ++i) {
        if (!(taus[i] > 0.0)) throw ValidationError("tau values must be positive");
        if (i > 0 && !(taus[i] < taus[i - 1])) throw ValidationError("tau values must be strictly decreasing");
    }
    const DenseMatrix limit = limit_inverse(family, guards);
    const LimitSolutions limits = limit_solutions(family, c, guards);

    ConvergenceReport report;
    report.rows.resize(taus.size());
    // Each tau is independent; rows land in their own slot.
    const auto count = static_cast<std::ptrdiff_t>(taus.size());
    std::vector<std::exception_ptr> failures(taus.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t t = 0; t < count; ++t) {
        const auto i = static_cast<std::size_t>(t);
        try {
            const FactoredPolynomial a = family.a_at(taus[i]);
            const FactoredPolynomial b = family.b_at(taus[i]);
            const Complex gap = a.zeros()[0].value - b.zeros()[0].value;
            const DenseMatrix scaled = gap * materialize(inverse_general(a, b, guards));
            const BezoutSolution sol = solve_hermite(a, b, c, guards);
            report.rows[i] = {taus[i], max_norm_distance(scaled, limit),
                              max_coeff_distance(scale(sol.x, gap), limits.x),
                              max_coeff_distance(scale(sol.y, gap), limits.y)};
        } catch (...) {
            failures[i] = std::current_exception();
        }
    }
    for (const std::exception_ptr& failure : failures) {
        if (failure) std::rethrow_exception(failure);
    }

    std::vector<double> inv, xs, ys;
    for (const ConvergenceRow& row : report.rows) {
        inv.push_back(row.inverse_error);
        xs.push_back(row.x_error);
        ys.push_back(row.y_error);
    }
    report.inverse_slope = fit_loglog_slope(taus, inv);
    report.x_slope = fit_loglog_slope(taus, xs);
    report.y_slope = fit_loglog_slope(taus, ys);
    return report;
}

bool ConvergenceReport::inverse_errors_decrease(double slack) const noexcept {
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].inverse_error > slack * rows[i - 1].inverse_error) return false;
    }
    return true;
}

std::optional<double> fit_loglog_slope(std::span<const double> taus, std::span<const double> errors) {
    if (taus.size() != errors.size() || taus.size() < 2) return std::nullopt;
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < taus.size(); ++i) {
        if (!(errors[i] > 0.0) || !(taus[i] > 0.0)) return std::nullopt;
        const double x = std::log(taus[i]);
        const double y = std::log(errors[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const auto k = static_cast<double>(taus.size());
    const double denom = k * sxx - sx * sx;
    if (denom == 0.0) return std::nullopt;
    return (k * sxy - sx * sy) / denom;
}

}  // namespace sylvinv
