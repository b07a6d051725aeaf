#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "sylvinv/errors.hpp"
#include "sylvinv/polynomial.hpp"

namespace sylvinv {

namespace {

// Horner for p and p' together.
std::pair<Complex, Complex> eval_with_derivative(std::span<const Complex> c, Complex z) {
    Complex p = c[0];
    Complex dp{};
    for (std::size_t i = 1; i < c.size(); ++i) {
        dp = dp * z + p;
        p = p * z + c[i];
    }
    return {p, dp};
}

double magnitude_scale(std::span<const Complex> c, double r) {
    double acc = 0.0;
    for (const Complex& ck : c) acc = acc * r + std::abs(ck);
    return acc;
}

bool residuals_ok(const Polynomial& p, const std::vector<Complex>& z, double tol) {
    return std::all_of(z.begin(), z.end(), [&](Complex zi) {
        return std::abs(eval(p, zi)) <= tol * magnitude_scale(p.coeffs(), std::abs(zi));
    });
}

std::vector<Complex> initial_guesses(const Polynomial& p) {
    const auto c = p.coeffs();
    const std::size_t n = p.degree();
    const Complex center = -c[1] / (static_cast<double>(n) * c[0]);
    double radius = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
        radius = std::max(radius, std::pow(std::abs(c[k] / c[0]), 1.0 / static_cast<double>(k)));
    }
    radius = std::max(radius, 1e-3);
    std::vector<Complex> z(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.4;
        z[k] = center + std::polar(radius, angle);
    }
    return z;
}

}  // namespace

std::vector<Complex> refine_roots(const Polynomial& p, std::vector<Complex> z, const RootOptions& options) {
    if (p.degree() < 1) throw ValidationError("root finding requires degree >= 1");
    if (z.size() != p.degree()) throw ValidationError("number of initial approximations must equal the degree");
    const auto c = p.coeffs();
    if (p.degree() == 1) return {-c[1] / c[0]};

    bool converged = false;
    for (int iter = 0; iter < options.max_iterations && !converged; ++iter) {
        double max_step = 0.0;
        for (std::size_t i = 0; i < z.size(); ++i) {
            const auto [pz, dpz] = eval_with_derivative(c, z[i]);
            if (pz == Complex{}) continue;
            Complex repulsion{};
            for (std::size_t j = 0; j < z.size(); ++j) {
                if (j != i) repulsion += 1.0 / (z[i] - z[j]);
            }
            Complex step;
            if (dpz == Complex{}) {
                step = Complex{1e-8 * (1.0 + std::abs(z[i])), 0.0};
            } else {
                const Complex ratio = pz / dpz;
                const Complex denom = 1.0 - ratio * repulsion;
                step = denom == Complex{} ? ratio : ratio / denom;
            }
            z[i] -= step;
            max_step = std::max(max_step, std::abs(step) / (1.0 + std::abs(z[i])));
        }
        converged = max_step <= options.step_tol;
    }
    if (!residuals_ok(p, z, options.tol)) {
        throw RootFindingFailed("Aberth-Ehrlich iteration did not converge within " +
                                std::to_string(options.max_iterations) + " iterations");
    }
    return z;
}

std::vector<Complex> find_roots(const Polynomial& p, const RootOptions& options) {
    if (p.degree() < 1) throw ValidationError("root finding requires degree >= 1");
    return refine_roots(p, initial_guesses(p), options);
}

}  // namespace sylvinv
