#ifndef SYLVINV_DYADIC_INVERSE_HPP
#define SYLVINV_DYADIC_INVERSE_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "sylvinv/guards.hpp"
#include "sylvinv/interpolation.hpp"
#include "sylvinv/linalg.hpp"
#include "sylvinv/polynomial.hpp"

namespace sylvinv {

/// Which polynomial's zero a dyad belongs to.
enum class Side { a, b };

enum class DecompositionKind { inverse, adjugate };

/// One rank-one summand: column * weight * row.
///
/// `column` is the (m+n)-high lambda column, differentiated `order` times,
/// at `node`. `row` is `row_poly`'s coefficients padded to m+n: a-side rows
/// occupy the last m slots, b-side rows the first n.
struct Dyad {
    Side side = Side::a;
    std::size_t node_index = 0;
    std::size_t order = 0;
    Complex node;
    Column column;
    Complex weight;
    Polynomial row_poly;
    RowVector row;
};

/// Exactly m+n dyads: a-side first (node order as given, ascending
/// derivative order), then b-side.
struct DyadicDecomposition {
    std::size_t m = 0;
    std::size_t n = 0;
    DecompositionKind kind = DecompositionKind::inverse;
    std::vector<Dyad> dyads;

    std::size_t size() const noexcept { return m + n; }
};

/// adj S(a, b) for simple zeros on both sides; valid when det S = 0.
/// Throws ValidationError when either side declares a multiple zero.
DyadicDecomposition adj_simple(const FactoredPolynomial& a, const FactoredPolynomial& b);

/// S(a, b)^-1 for simple zeros on both sides.
/// Throws SingularSylvester when some |b(alpha_i)| or |a(beta_j)| is below the guard.
DyadicDecomposition inverse_simple(const FactoredPolynomial& a, const FactoredPolynomial& b,
                                   const Guards& guards = {});

/// U_{k,i} (side a, other = b) or V_{l,j} (side b, other = a) from the
/// fundamental polynomials of f, via the downward recurrence
///   U_{k,i} = [u_{k,i} - sum_{i1 > i} C(i1, i) other^[i1-i](node_k) U_{k,i1}] / other(node_k).
/// result[k][i] pairs with u.at(k, i).
std::vector<std::vector<Polynomial>> capital_fundamentals(Side side, const FactoredPolynomial& f,
                                                          const Polynomial& other, const FundamentalSet& u,
                                                          const Guards& guards = {});

/// S(a, b)^-1 for arbitrary multiplicities; each dyad has weight 1 and row U or V.
DyadicDecomposition inverse_general(const FactoredPolynomial& a, const FactoredPolynomial& b,
                                    const Guards& guards = {});

/// Dense sum of the dyads, OpenMP-parallel over output rows.
DenseMatrix materialize(const DyadicDecomposition& dec);
/// Single-threaded reference for materialize().
DenseMatrix materialize_serial(const DyadicDecomposition& dec);

/// d * (sum of dyads) without forming the matrix. d * column is the
/// polynomial with coefficient row d (or its derivative) evaluated at the node.
RowVector apply_left(const DyadicDecomposition& dec, std::span<const Complex> d);
/// apply_left for many right-hand sides, OpenMP-parallel over the batch.
std::vector<RowVector> apply_left_batch(const DyadicDecomposition& dec, std::span<const RowVector> ds);
std::vector<RowVector> apply_left_batch_serial(const DyadicDecomposition& dec, std::span<const RowVector> ds);

/// Throws SingularSylvester when a and b (numerically) share a zero.
void check_sylvester_guard(const FactoredPolynomial& a, const FactoredPolynomial& b, const Guards& guards = {});

}  // namespace sylvinv

#endif
