#include "sylvinv/sylvester.hpp"

#include <string>

#include "sylvinv/errors.hpp"

namespace sylvinv {

SylvesterLayout build_sylvester(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) throw DegenerateInput("leading coefficient must be nonzero");
    if (a.degree() < 1 || b.degree() < 1) throw DegenerateInput("both polynomials must have degree >= 1");
    const std::size_t m = a.degree();
    const std::size_t n = b.degree();
    SylvesterLayout layout{m, n, DenseMatrix(m + n, m + n)};
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t j = 0; j <= m; ++j) layout.matrix(r, r + j) = a[j];
    }
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t j = 0; j <= n; ++j) layout.matrix(n + r, r + j) = b[j];
    }
    return layout;
}

RowVector d_vector(const Polynomial& c, std::size_t m, std::size_t n) {
    if (!c.is_zero() && c.degree() > m + n - 1) {
        throw ValidationError("degree of c is " + std::to_string(c.degree()) + "; must be at most m+n-1 = " +
                              std::to_string(m + n - 1));
    }
    return c.padded(m + n);
}

RowVector z_vector(const Polynomial& x, const Polynomial& y, std::size_t m, std::size_t n) {
    if (!x.is_zero() && x.degree() + 1 > n) throw ValidationError("degree of x must be at most n-1");
    if (!y.is_zero() && y.degree() + 1 > m) throw ValidationError("degree of y must be at most m-1");
    RowVector z = x.padded(n);
    const RowVector tail = y.padded(m);
    z.insert(z.end(), tail.begin(), tail.end());
    return z;
}

std::pair<Polynomial, Polynomial> split_z(std::span<const Complex> z, std::size_t m, std::size_t n) {
    if (z.size() != m + n) throw ValidationError("z has length " + std::to_string(z.size()) + ", expected m+n");
    return {Polynomial(std::vector<Complex>(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(n))),
            Polynomial(std::vector<Complex>(z.begin() + static_cast<std::ptrdiff_t>(n), z.end()))};
}

Complex det_via_roots(const FactoredPolynomial& a, const FactoredPolynomial& b) {
    Complex acc = int_power(a.leading(), static_cast<int>(b.degree()));
    for (const Zero& alpha : a.zeros()) acc *= int_power(b.eval(alpha.value), alpha.multiplicity);
    return acc;
}

Complex det_via_roots_b_side(const FactoredPolynomial& a, const FactoredPolynomial& b) {
    const std::size_t mn = a.degree() * b.degree();
    Complex acc = int_power(b.leading(), static_cast<int>(a.degree()));
    if (mn % 2 == 1) acc = -acc;
    for (const Zero& beta : b.zeros()) acc *= int_power(a.eval(beta.value), beta.multiplicity);
    return acc;
}

}  // namespace sylvinv
