#ifndef SYLVINV_BEZOUT_HPP
#define SYLVINV_BEZOUT_HPP

#include <cstddef>
#include <string_view>
#include <vector>

#include "sylvinv/guards.hpp"
#include "sylvinv/polynomial.hpp"

namespace sylvinv {

enum class BezoutMethod { lagrange, hermite, oracle, dyadic };

std::string_view to_string(BezoutMethod method) noexcept;

/// x, y with a x + b y = c, deg x <= n-1, deg y <= m-1.
struct BezoutSolution {
    Polynomial x;
    Polynomial y;
    /// Max coefficient magnitude of a x + b y - c, always recomputed.
    double residual = 0.0;
    BezoutMethod method = BezoutMethod::oracle;
};

/// max |coefficient| of a x + b y - c.
double residual(const Polynomial& a, const Polynomial& b, const Polynomial& c, const Polynomial& x,
                const Polynomial& y);

/// Tolerance scale: largest coefficient magnitude among a, b, c.
double bezout_scale(const Polynomial& a, const Polynomial& b, const Polynomial& c);

/// Lagrange formulas: x interpolates c/a on the zeros of b, y interpolates c/b on the zeros of a.
BezoutSolution solve_lagrange(const FactoredPolynomial& a, const FactoredPolynomial& b, const Polynomial& c,
                              const Guards& guards = {});

/// f(z), f'(z), ..., f^[order](z) for f = c / a, by the Leibniz recurrence.
/// Throws SingularSylvester when |a(z)| is below the guard.
std::vector<Complex> quotient_derivatives(const Polynomial& c, const Polynomial& a, Complex z, std::size_t order,
                                          const Guards& guards = {});

/// Hermite interpolation of c/a over the zeros of b (with multiplicity), and
/// of c/b over the zeros of a.
BezoutSolution solve_hermite(const FactoredPolynomial& a, const FactoredPolynomial& b, const Polynomial& c,
                             const Guards& guards = {});

/// Dense route: z S = d(c) by LU. Throws SingularMatrix when a and b share a zero.
BezoutSolution solve_oracle(const Polynomial& a, const Polynomial& b, const Polynomial& c);

/// z = d(c) * S^-1 through the dyadic decomposition of the inverse.
BezoutSolution solve_dyadic(const FactoredPolynomial& a, const FactoredPolynomial& b, const Polynomial& c,
                            const Guards& guards = {});

}  // namespace sylvinv

#endif
