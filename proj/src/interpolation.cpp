#include "sylvinv/interpolation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sylvinv/errors.hpp"

namespace sylvinv {

Column lambda_column(std::size_t k, Complex z, std::size_t r) {
    if (k == 0) throw ValidationError("lambda column height must be positive");
    Column out(k);
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t power = k - 1 - i;
        if (power < r) continue;
        double falling = 1.0;
        for (std::size_t t = 0; t < r; ++t) falling *= static_cast<double>(power - t);
        out[i] = falling * int_power(z, static_cast<int>(power - r));
    }
    return out;
}

DenseMatrix generalized_vandermonde(std::span<const Zero> nodes, std::size_t size) {
    std::size_t total = 0;
    for (const Zero& z : nodes) {
        if (z.multiplicity < 1) throw ValidationError("node multiplicity must be positive");
        total += static_cast<std::size_t>(z.multiplicity);
    }
    if (total != size) {
        throw ValidationError("sum of multiplicities (" + std::to_string(total) + ") does not equal size (" +
                              std::to_string(size) + ")");
    }
    DenseMatrix v(size, size);
    std::size_t col = 0;
    for (const Zero& z : nodes) {
        for (int r = 0; r < z.multiplicity; ++r, ++col) {
            const Column c = lambda_column(size, z.value, static_cast<std::size_t>(r));
            for (std::size_t i = 0; i < size; ++i) v(i, col) = c[i];
        }
    }
    return v;
}

void check_node_separation(std::span<const Zero> nodes, const Guards& guards) {
    double scale = 1.0;
    for (const Zero& z : nodes) scale = std::max(scale, std::abs(z.value));
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        for (std::size_t l = 0; l < k; ++l) {
            if (std::abs(nodes[k].value - nodes[l].value) < guards.separation_tol * scale) {
                throw SingularMatrix("interpolation nodes " + std::to_string(l) + " and " + std::to_string(k) +
                                     " nearly coincide");
            }
        }
    }
}

Polynomial lagrange_fundamental(const FactoredPolynomial& f, std::size_t j, const Guards& guards) {
    if (!f.all_simple()) throw ValidationError("Lagrange basis requires simple zeros");
    const auto zeros = f.zeros();
    if (j >= zeros.size()) throw ValidationError("zero index out of range");
    check_node_separation(zeros, guards);
    std::vector<Complex> acc{Complex{1.0, 0.0}};
    Complex norm{1.0, 0.0};
    for (std::size_t s = 0; s < zeros.size(); ++s) {
        if (s == j) continue;
        acc.push_back(Complex{});
        for (std::size_t i = acc.size() - 1; i > 0; --i) acc[i] -= zeros[s].value * acc[i - 1];
        norm *= zeros[j].value - zeros[s].value;
    }
    for (Complex& c : acc) c /= norm;
    return Polynomial(std::move(acc));
}

std::size_t FundamentalSet::total_degree() const noexcept {
    std::size_t total = 0;
    for (const Zero& z : nodes) total += static_cast<std::size_t>(z.multiplicity);
    return total;
}

FundamentalSet hermite_fundamentals(std::span<const Zero> nodes, const Guards& guards) {
    if (nodes.empty()) throw ValidationError("fundamental polynomials need at least one node");
    check_node_separation(nodes, guards);
    FundamentalSet set{std::vector<Zero>(nodes.begin(), nodes.end()), {}};
    const std::size_t m = set.total_degree();

    // Row u of the coefficient matrix satisfies u V = e^T, i.e. V^T u^T = e.
    const LuDecomposition lu(transpose(generalized_vandermonde(nodes, m)));
    if (lu.singular()) throw SingularMatrix("confluent Vandermonde matrix is singular");

    std::vector<Polynomial> flat(m);
    const auto count = static_cast<std::ptrdiff_t>(m);
#pragma omp parallel for schedule(static) if (m > 32)
    for (std::ptrdiff_t col = 0; col < count; ++col) {
        Column unit(m);
        unit[static_cast<std::size_t>(col)] = 1.0;
        flat[static_cast<std::size_t>(col)] = Polynomial(lu.solve(unit));
    }

    std::size_t col = 0;
    set.polys.reserve(nodes.size());
    for (const Zero& z : nodes) {
        std::vector<Polynomial>& per_node = set.polys.emplace_back();
        for (int i = 0; i < z.multiplicity; ++i) per_node.push_back(std::move(flat[col++]));
    }
    return set;
}

void HermiteData::validate() const {
    if (nodes.size() != samples.size()) throw ValidationError("one sample list per node is required");
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        if (static_cast<int>(samples[k].size()) != nodes[k].multiplicity) {
            throw ValidationError("node " + std::to_string(k) + " needs " + std::to_string(nodes[k].multiplicity) +
                                  " samples, got " + std::to_string(samples[k].size()));
        }
    }
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        for (std::size_t l = 0; l < k; ++l) {
            if (nodes[k].value == nodes[l].value) throw ValidationError("node values must be pairwise distinct");
        }
    }
}

Polynomial hermite_interpolate(const FundamentalSet& basis, const std::vector<std::vector<Complex>>& samples) {
    if (samples.size() != basis.polys.size()) throw ValidationError("one sample list per node is required");
    const std::size_t m = basis.total_degree();
    std::vector<Complex> acc(m);
    for (std::size_t k = 0; k < basis.polys.size(); ++k) {
        if (samples[k].size() != basis.polys[k].size()) throw ValidationError("sample count does not match multiplicity");
        for (std::size_t i = 0; i < samples[k].size(); ++i) {
            const std::vector<Complex> u = basis.polys[k][i].padded(m);
            for (std::size_t p = 0; p < m; ++p) acc[p] += samples[k][i] * u[p];
        }
    }
    return Polynomial(std::move(acc));
}

Polynomial hermite_interpolate(const HermiteData& data, const Guards& guards) {
    data.validate();
    return hermite_interpolate(hermite_fundamentals(data.nodes, guards), data.samples);
}

}  // namespace sylvinv
