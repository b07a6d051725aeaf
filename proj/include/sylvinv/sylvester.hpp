#ifndef SYLVINV_SYLVESTER_HPP
#define SYLVINV_SYLVESTER_HPP

#include <cstddef>
#include <span>
#include <utility>

#include "sylvinv/linalg.hpp"
#include "sylvinv/polynomial.hpp"

namespace sylvinv {

/// Sylvester matrix of a (degree m) and b (degree n).
///
/// Row r < n holds a_0..a_m starting at column r; row n + r holds b_0..b_n
/// starting at column r. With z = (coefficients of x | coefficients of y),
/// z S = d(c) holds exactly when a x + b y = c.
struct SylvesterLayout {
    std::size_t m = 0;
    std::size_t n = 0;
    DenseMatrix matrix;

    std::size_t size() const noexcept { return m + n; }
};

/// Throws DegenerateInput when a or b has zero leading coefficient or degree 0.
SylvesterLayout build_sylvester(const Polynomial& a, const Polynomial& b);

/// Coefficients of c, descending, left-padded to length m + n.
RowVector d_vector(const Polynomial& c, std::size_t m, std::size_t n);

/// n coefficients of x followed by m coefficients of y.
RowVector z_vector(const Polynomial& x, const Polynomial& y, std::size_t m, std::size_t n);
std::pair<Polynomial, Polynomial> split_z(std::span<const Complex> z, std::size_t m, std::size_t n);

/// Resultant from the zeros: a_0^n * prod_i b(alpha_i), zeros counted with multiplicity.
Complex det_via_roots(const FactoredPolynomial& a, const FactoredPolynomial& b);
/// The same quantity from the other side: (-1)^(mn) * b_0^m * prod_j a(beta_j).
Complex det_via_roots_b_side(const FactoredPolynomial& a, const FactoredPolynomial& b);

}  // namespace sylvinv

#endif
