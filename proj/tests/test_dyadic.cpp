#include "doctest.h"
#include "support/oracles.hpp"
#include "sylvinv/dyadic_inverse.hpp"
#include "sylvinv/errors.hpp"
#include "sylvinv/interpolation.hpp"
#include "sylvinv/sylvester.hpp"

using namespace sylvinv;

namespace {

DenseMatrix sylvester_of(const FactoredPolynomial& a, const FactoredPolynomial& b) {
    return oracle::sylvester(oracle::to_vec(from_factored(a)), oracle::to_vec(from_factored(b)));
}

}  // namespace

TEST_SUITE("dyadic_inverse") {

TEST_CASE("a = lambda^2, b = lambda - 1: U_1 = -lambda, U_0 = -1 - lambda") {
    const FactoredPolynomial a(1.0, {{0.0, 2}});
    const FactoredPolynomial b(1.0, {{1.0, 1}});
    const DyadicDecomposition dec = inverse_general(a, b);
    REQUIRE(dec.dyads.size() == 3);
    CHECK(dec.dyads[0].side == Side::a);
    CHECK(dec.dyads[0].order == 0);
    CHECK(dec.dyads[1].order == 1);
    CHECK(dec.dyads[1].node == Complex{0.0});
    CHECK(dec.dyads[2].side == Side::b);
    CHECK(max_coeff_distance(dec.dyads[0].row_poly, Polynomial({-1.0, -1.0})) < 1e-14);
    CHECK(max_coeff_distance(dec.dyads[1].row_poly, Polynomial({-1.0, 0.0})) < 1e-14);
    CHECK(max_coeff_distance(dec.dyads[2].row_poly, Polynomial({1.0})) < 1e-14);
    const DenseMatrix expect = DenseMatrix::from_rows({{1.0, 0.0, 0.0}, {1.0, -1.0, 0.0}, {1.0, -1.0, -1.0}});
    CHECK(oracle::max_diff(materialize(dec), expect) < 1e-14);
}

TEST_CASE("U_{k,0} for a double zero: the plus-sign closed form") {
    // U_0 = abar / (b abar(alpha)) [1 - (lambda - alpha)(abar'/abar + b'/b)] at alpha,
    // here abar = 1, b = lambda - 1, alpha = 0: U_0 = -(1 + lambda).
    const FactoredPolynomial a(1.0, {{0.0, 2}});
    const Polynomial b({1.0, -1.0});
    const auto caps = capital_fundamentals(Side::a, a, b, hermite_fundamentals(a));
    const Complex bv = eval(b, 0.0);
    const Complex db = eval(derivative(b), 0.0);
    const Polynomial closed = (1.0 / bv) * (Polynomial::constant(1.0) - (db / bv) * Polynomial::linear_factor(0.0));
    CHECK(max_coeff_distance(caps[0][0], closed) < 1e-14);
}

TEST_CASE("simple zeros: 2x2 case has two dyads and inverts exactly") {
    const FactoredPolynomial a = FactoredPolynomial::from_simple_zeros(1.0, std::vector<Complex>{1.0});
    const FactoredPolynomial b = FactoredPolynomial::from_simple_zeros(1.0, std::vector<Complex>{-1.0});
    const DyadicDecomposition dec = inverse_simple(a, b);
    CHECK(dec.dyads.size() == 2);
    const DenseMatrix s = sylvester_of(a, b);
    CHECK(distance_to_scaled_identity(oracle::matmul(s, materialize(dec)), 1.0) < 1e-12);
}

TEST_CASE("inverse_simple and inverse_general agree and invert S") {
    oracle::Generator g(51);
    for (int t = 0; t < 40; ++t) {
        const auto pr = g.pair(static_cast<std::size_t>(g.integer(1, 6)), static_cast<std::size_t>(g.integer(1, 6)), 1,
                               2.0, 0.2);
        const DenseMatrix s = sylvester_of(pr.a, pr.b);
        const DenseMatrix simple = materialize(inverse_simple(pr.a, pr.b));
        const DenseMatrix general = materialize(inverse_general(pr.a, pr.b));
        CHECK(distance_to_scaled_identity(oracle::matmul(s, simple), 1.0) < 1e-9);
        CHECK(oracle::max_diff(simple, general) < 1e-8 * std::max(1.0, oracle::max_abs(simple)));
    }
}

TEST_CASE("recurrence rows match the uniqueness derivation") {
    oracle::Generator g(52);
    for (int t = 0; t < 30; ++t) {
        const auto pr = g.pair(static_cast<std::size_t>(g.integer(2, 6)), static_cast<std::size_t>(g.integer(1, 5)), 3,
                               1.5, 0.3);
        const DyadicDecomposition dec = inverse_general(pr.a, pr.b);
        const DenseMatrix r = oracle::wide::uniqueness_rows(pr.a, pr.b);
        for (std::size_t k = 0; k < dec.dyads.size(); ++k)
            for (std::size_t c = 0; c < dec.size(); ++c)
                CHECK(std::abs(dec.dyads[k].row[c] - r(k, c)) < 1e-8 * std::max(1.0, oracle::max_abs(r)));
    }
}

TEST_CASE("S Lambda^[i](alpha_k) and U rows: d(c) Lambda(alpha) = c(alpha)") {
    const FactoredPolynomial a(2.0, {{0.5, 2}, {-0.5, 1}});
    const FactoredPolynomial b(1.0, {{{0.0, 1.0}, 1}, {0.0, 1}});
    const DyadicDecomposition dec = inverse_general(a, b);
    const DenseMatrix s = sylvester_of(a, b);
    CHECK(distance_to_scaled_identity(oracle::matmul(s, materialize(dec)), 1.0) < 1e-10);
}

TEST_CASE("adjugate: a = lambda - 1, b = lambda + 1") {
    const FactoredPolynomial a = FactoredPolynomial::from_simple_zeros(1.0, std::vector<Complex>{1.0});
    const FactoredPolynomial b = FactoredPolynomial::from_simple_zeros(1.0, std::vector<Complex>{-1.0});
    const DenseMatrix adj = materialize(adj_simple(a, b));
    CHECK(oracle::max_diff(adj, DenseMatrix::from_rows({{1.0, 1.0}, {-1.0, 1.0}})) < 1e-15);
}

TEST_CASE("adjugate survives a shared zero") {
    const FactoredPolynomial a = FactoredPolynomial::from_simple_zeros(1.0, std::vector<Complex>{1.0});
    const DenseMatrix adj = materialize(adj_simple(a, a));
    CHECK(oracle::max_diff(adj, DenseMatrix::from_rows({{-1.0, 1.0}, {-1.0, 1.0}})) < 1e-15);
    const DenseMatrix s = sylvester_of(a, a);
    CHECK(oracle::max_abs(oracle::matmul(s, adj)) < 1e-15);
}

TEST_CASE("adjugate matches cofactors with non-monic leading coefficients") {
    oracle::Generator g(53);
    for (int t = 0; t < 30; ++t) {
        const auto pr = g.pair(static_cast<std::size_t>(g.integer(1, 5)), static_cast<std::size_t>(g.integer(1, 5)), 1,
                               2.0, 0.2);
        const DenseMatrix ref = oracle::cofactor_adjugate(sylvester_of(pr.a, pr.b));
        CHECK(oracle::max_diff(materialize(adj_simple(pr.a, pr.b)), ref) < 1e-9 * std::max(1.0, oracle::max_abs(ref)));
    }
}

TEST_CASE("adjugate refuses multiple zeros") {
    const FactoredPolynomial a(1.0, {{0.0, 2}});
    const FactoredPolynomial b(1.0, {{1.0, 1}});
    CHECK_THROWS_AS(adj_simple(a, b), ValidationError);
}

TEST_CASE("guard trips on a shared zero") {
    const FactoredPolynomial a = FactoredPolynomial::from_simple_zeros(1.0, std::vector<Complex>{1.0, 2.0});
    const FactoredPolynomial b = FactoredPolynomial::from_simple_zeros(1.0, std::vector<Complex>{1.0 + 1e-13});
    CHECK_THROWS_AS(inverse_simple(a, b), SingularSylvester);
    CHECK_THROWS_AS(inverse_general(a, b), SingularSylvester);
    CHECK_THROWS_AS(check_sylvester_guard(a, b), SingularSylvester);
}

TEST_CASE("apply_left equals d times the materialized matrix") {
    oracle::Generator g(54);
    for (int t = 0; t < 20; ++t) {
        const auto pr = g.pair(static_cast<std::size_t>(g.integer(1, 5)), static_cast<std::size_t>(g.integer(1, 5)), 2,
                               1.5, 0.25);
        const DyadicDecomposition dec = inverse_general(pr.a, pr.b);
        const auto d = g.coefficients(dec.size(), 1.0);
        const RowVector fast = apply_left(dec, d);
        const RowVector dense = multiply(d, materialize(dec));
        for (std::size_t i = 0; i < d.size(); ++i) CHECK(std::abs(fast[i] - dense[i]) < 1e-9);
    }
}

TEST_CASE("dyad order is deterministic") {
    const FactoredPolynomial a(1.0, {{0.5, 2}, {-0.5, 1}});
    const FactoredPolynomial b(1.0, {{0.0, 1}, {2.0, 1}});
    const DyadicDecomposition d1 = inverse_general(a, b);
    const DyadicDecomposition d2 = inverse_general(a, b);
    for (std::size_t k = 0; k < d1.dyads.size(); ++k) CHECK(d1.dyads[k].row == d2.dyads[k].row);
    CHECK(materialize(d1) == materialize(d2));
}


TEST_CASE("m + n dyads; simple and general agree dyad-wise; apply_left solves z S = d") {
    oracle::Generator g(55);
    for (int t = 0; t < 30; ++t) {
        const auto pr = g.pair(static_cast<std::size_t>(g.integer(1, 6)), static_cast<std::size_t>(g.integer(1, 6)),
                               t % 2 == 0 ? 1 : 3, 2.0, 0.2);
        const DyadicDecomposition gen = inverse_general(pr.a, pr.b);
        CHECK(gen.dyads.size() == pr.a.degree() + pr.b.degree());
        const DenseMatrix s = build_sylvester(from_factored(pr.a), from_factored(pr.b)).matrix;
        const auto d = g.coefficients(gen.size(), 1.0);
        const RowVector z1 = apply_left(gen, d);
        const RowVector z2 = solve_row_system(s, d);
        for (std::size_t i = 0; i < d.size(); ++i) CHECK(std::abs(z1[i] - z2[i]) < 1e-8);
        if (pr.a.all_simple() && pr.b.all_simple()) {
            const DyadicDecomposition sim = inverse_simple(pr.a, pr.b);
            CHECK(sim.dyads.size() == gen.dyads.size());
            CHECK(adj_simple(pr.a, pr.b).dyads.size() == gen.dyads.size());
            for (std::size_t k = 0; k < sim.dyads.size(); ++k) {
                CHECK(sim.dyads[k].node == gen.dyads[k].node);
                for (std::size_t c = 0; c < sim.size(); ++c)
                    CHECK(std::abs(sim.dyads[k].weight * sim.dyads[k].row[c] - gen.dyads[k].row[c]) < 1e-10);
            }
        }
    }
}

}
