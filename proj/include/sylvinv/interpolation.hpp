#ifndef SYLVINV_INTERPOLATION_HPP
#define SYLVINV_INTERPOLATION_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "sylvinv/guards.hpp"
#include "sylvinv/linalg.hpp"
#include "sylvinv/polynomial.hpp"

namespace sylvinv {

/// r-th derivative of the column (z^(k-1), z^(k-2), ..., z, 1)^T.
Column lambda_column(std::size_t k, Complex z, std::size_t r = 0);

/// Confluent Vandermonde matrix of height `size`. Columns run node by node,
/// each node contributing its derivative orders 0..multiplicity-1.
DenseMatrix generalized_vandermonde(std::span<const Zero> nodes, std::size_t size);

/// Throws SingularMatrix when two node values are closer than the separation guard.
void check_node_separation(std::span<const Zero> nodes, const Guards& guards = {});

/// Lagrange basis polynomial for zero j of f (all zeros simple):
/// (f / (lambda - beta_j)) normalized to 1 at beta_j.
Polynomial lagrange_fundamental(const FactoredPolynomial& f, std::size_t j, const Guards& guards = {});

/// Hermite fundamental polynomials u_{k,i}: u_{k,i}^[j](node_l) = delta_kl delta_ij,
/// each of degree at most (total multiplicity - 1).
struct FundamentalSet {
    std::vector<Zero> nodes;
    /// polys[k][i] is u_{k,i}.
    std::vector<std::vector<Polynomial>> polys;

    std::size_t total_degree() const noexcept;
    const Polynomial& at(std::size_t node, std::size_t order) const { return polys.at(node).at(order); }
};

/// Solves the transposed confluent Vandermonde system once per unit right-hand side.
FundamentalSet hermite_fundamentals(std::span<const Zero> nodes, const Guards& guards = {});
inline FundamentalSet hermite_fundamentals(const FactoredPolynomial& f, const Guards& guards = {}) {
    return hermite_fundamentals(f.zeros(), guards);
}

/// Function values and derivatives at the nodes: samples[k][i] = f^[i](node_k).
struct HermiteData {
    std::vector<Zero> nodes;
    std::vector<std::vector<Complex>> samples;

    /// Throws ValidationError when sample counts do not match multiplicities.
    void validate() const;
};

/// p = sum_{k,i} samples[k][i] * u_{k,i}.
Polynomial hermite_interpolate(const HermiteData& data, const Guards& guards = {});
Polynomial hermite_interpolate(const FundamentalSet& basis, const std::vector<std::vector<Complex>>& samples);

}  // namespace sylvinv

#endif
