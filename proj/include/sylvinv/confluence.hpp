#ifndef SYLVINV_CONFLUENCE_HPP
#define SYLVINV_CONFLUENCE_HPP

#include <optional>
#include <span>
#include <vector>

#include "sylvinv/guards.hpp"
#include "sylvinv/linalg.hpp"
#include "sylvinv/polynomial.hpp"

namespace sylvinv {

/// tau -> theta + drift[0] tau + drift[1] tau^2 + ...
struct ZeroPath {
    std::vector<Complex> drift;

    Complex at(Complex theta, double tau) const noexcept;
};

/// a_tau = leading_a (lambda - alpha_1(tau)) prod fixed_a, b_tau likewise, with
/// alpha_1(tau), beta_1(tau) -> theta as tau -> 0.
struct ConfluenceFamily {
    Complex leading_a{1.0, 0.0};
    Complex leading_b{1.0, 0.0};
    Complex theta;
    ZeroPath alpha_path;
    ZeroPath beta_path;
    std::vector<Zero> fixed_a;
    std::vector<Zero> fixed_b;

    std::size_t m() const noexcept;
    std::size_t n() const noexcept;

    /// Throws ValidationError when the merging pair is not the only shared
    /// zero of the limits a*, b*, or when the two paths coincide.
    void validate(const Guards& guards = {}) const;

    FactoredPolynomial a_at(double tau) const;
    FactoredPolynomial b_at(double tau) const;
    Polynomial a_star() const;
    Polynomial b_star() const;
    /// a* / (lambda - theta) and b* / (lambda - theta).
    Polynomial a_star_reduced() const;
    Polynomial b_star_reduced() const;
    /// (a* b* / (lambda - theta)^2) at theta.
    Complex limit_denominator() const;
};

/// lim (alpha_1 - beta_1) S(a_tau, b_tau)^-1, a rank-one matrix.
DenseMatrix limit_inverse(const ConfluenceFamily& family, const Guards& guards = {});

struct LimitSolutions {
    Polynomial x;
    Polynomial y;
};

/// lim (alpha_1 - beta_1) x_tau and lim (alpha_1 - beta_1) y_tau.
LimitSolutions limit_solutions(const ConfluenceFamily& family, const Polynomial& c, const Guards& guards = {});

struct ConvergenceRow {
    double tau = 0.0;
    double inverse_error = 0.0;
    double x_error = 0.0;
    double y_error = 0.0;
};

struct ConvergenceReport {
    std::vector<ConvergenceRow> rows;
    /// Least-squares slope of log(error) against log(tau); absent with fewer
    /// than two rows or when some error is exactly zero.
    std::optional<double> inverse_slope;
    std::optional<double> x_slope;
    std::optional<double> y_slope;

    /// Each inverse error is at most `slack` times the previous one.
    bool inverse_errors_decrease(double slack = 2.0) const noexcept;
};

/// For each tau (strictly decreasing, positive), compares the scaled dyadic
/// inverse and scaled Hermite solutions with their limits.
ConvergenceReport convergence_experiment(const ConfluenceFamily& family, const Polynomial& c,
                                         std::span<const double> taus, const Guards& guards = {});

std::optional<double> fit_loglog_slope(std::span<const double> taus, std::span<const double> errors);

}  // namespace sylvinv

#endif
