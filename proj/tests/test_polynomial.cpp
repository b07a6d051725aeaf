#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "support/oracles.hpp"
#include "sylvinv/errors.hpp"
#include "sylvinv/polynomial.hpp"

using namespace sylvinv;

TEST_SUITE("poly_core") {

TEST_CASE("leading zeros are stripped and the zero polynomial is {0}") {
    const Polynomial p({0.0, 0.0, 1.0, 2.0});
    CHECK(p.degree() == 1);
    CHECK(p.leading() == Complex{1.0});
    const Polynomial z({0.0, 0.0});
    CHECK(z.is_zero());
    CHECK(z.degree() == 0);
}

TEST_CASE("non-finite coefficients are rejected") {
    CHECK_THROWS_AS(Polynomial({1.0, std::nan("")}), ValidationError);
    CHECK_THROWS_AS(Polynomial({HUGE_VAL, 1.0}), ValidationError);
}

TEST_CASE("padded left-pads and refuses to truncate") {
    const Polynomial p({1.0, 2.0});
    const auto v = p.padded(4);
    CHECK(v == std::vector<Complex>{0.0, 0.0, 1.0, 2.0});
    CHECK_THROWS_AS(p.padded(1), ValidationError);
}

TEST_CASE("Horner evaluation matches the power sum") {
    oracle::Generator g(11);
    for (int t = 0; t < 50; ++t) {
        const auto c = g.coefficients(static_cast<std::size_t>(g.integer(1, 9)), 2.0);
        const Complex z = g.in_disc(1.5);
        CHECK(std::abs(eval(Polynomial(c), z) - oracle::nth_derivative(c, z, 0)) < 1e-12);
    }
}

TEST_CASE("derivatives_at returns plain derivatives") {
    oracle::Generator g(12);
    for (int t = 0; t < 30; ++t) {
        auto c = g.coefficients(static_cast<std::size_t>(g.integer(2, 8)), 2.0);
        c[0] += 1.0;
        const Polynomial p(c);
        const Complex z = g.in_disc(1.5);
        const auto d = derivatives_at(p, z, p.degree() + 2);
        for (std::size_t r = 0; r <= p.degree(); ++r) {
            const Complex ref = oracle::nth_derivative(c, z, r);
            CHECK(std::abs(d[r] - ref) <= 1e-10 * std::max(1.0, std::abs(ref)));
            CHECK(std::abs(eval(derivative(p, r), z) - ref) <= 1e-10 * std::max(1.0, std::abs(ref)));
        }
        CHECK(d[p.degree() + 1] == Complex{});
    }
}

TEST_CASE("int_power is exact at zero") {
    CHECK(int_power(0.0, 0) == Complex{1.0});
    CHECK(int_power(0.0, 3) == Complex{});
    CHECK(std::abs(int_power({0.0, 1.0}, 7) - Complex{0.0, -1.0}) < 1e-15);
}

TEST_CASE("deflation: p = (lambda - r) q + remainder") {
    const Polynomial p({1.0, -3.0, 2.0});  // (l-1)(l-2)
    const Deflation d = deflate(p, 1.0);
    CHECK(d.remainder == Complex{});
    CHECK(d.quotient == Polynomial({1.0, -2.0}));
    const Deflation e = deflate(p, 0.0);
    CHECK(e.remainder == Complex{2.0});
    CHECK(max_coeff_distance(Polynomial::linear_factor(0.0) * e.quotient + Polynomial::constant(e.remainder), p) == 0.0);
}

TEST_CASE("arithmetic aligns by power") {
    const Polynomial p({1.0, 0.0, -1.0});
    const Polynomial q({2.0, 1.0});
    CHECK(p + q == Polynomial({1.0, 2.0, 0.0}));
    CHECK(p - p == Polynomial());
    CHECK(p * q == Polynomial({2.0, 1.0, -2.0, -1.0}));
    CHECK(Complex{2.0} * q == Polynomial({4.0, 2.0}));
}

TEST_CASE("factored form invariants") {
    CHECK_THROWS_AS(FactoredPolynomial(0.0, {{1.0, 1}}), DegenerateInput);
    CHECK_THROWS_AS(FactoredPolynomial(1.0, {{1.0, 0}}), ValidationError);
    CHECK_THROWS_AS(FactoredPolynomial(1.0, {{1.0, 1}, {1.0, 2}}), ValidationError);
    const FactoredPolynomial f(2.0, {{0.0, 2}, {1.0, 1}});
    CHECK(f.degree() == 3);
    CHECK_FALSE(f.all_simple());
    CHECK(from_factored(f) == Polynomial({2.0, -2.0, 0.0, 0.0}));
    CHECK(f.eval(2.0) == Complex{8.0});
    CHECK(f.min_separation() == doctest::Approx(1.0));
}

TEST_CASE("expansion matches the product oracle") {
    oracle::Generator g(13);
    for (int t = 0; t < 30; ++t) {
        const auto pr = g.pair(static_cast<std::size_t>(g.integer(1, 6)), 1, 3, 2.0, 0.2);
        const std::vector<Zero> zs(pr.a.zeros().begin(), pr.a.zeros().end());
        CHECK(oracle::coeff_distance(oracle::to_vec(from_factored(pr.a)), oracle::expand(pr.a.leading(), zs)) < 1e-12);
    }
}

TEST_CASE("root finder recovers separated simple zeros") {
    oracle::Generator g(14);
    for (int t = 0; t < 40; ++t) {
        const std::size_t deg = static_cast<std::size_t>(g.integer(1, 10));
        std::vector<Complex> zs = g.separated(deg, 2.0, 0.2);
        const Polynomial p = from_factored(FactoredPolynomial::from_simple_zeros(g.leading(), zs));
        std::vector<Complex> found = find_roots(p);
        REQUIRE(found.size() == deg);
        for (const Complex& z : zs) {
            double best = 1e300;
            for (const Complex& w : found) best = std::min(best, std::abs(z - w));
            CHECK(best < 1e-8);
        }
    }
}

TEST_CASE("refine_roots tracks a small perturbation") {
    const std::vector<Complex> zs{{1.0, 0.0}, {-0.5, 0.7}, {0.2, -1.1}};
    std::vector<Complex> moved = zs;
    for (Complex& z : moved) z += Complex{1e-3, -2e-3};
    const Polynomial p = from_factored(FactoredPolynomial::from_simple_zeros(1.0, moved));
    const auto r = refine_roots(p, zs);
    for (std::size_t i = 0; i < zs.size(); ++i) CHECK(std::abs(r[i] - moved[i]) < 1e-12);
}

TEST_CASE("degree-0 input is rejected by the root finder") {
    CHECK_THROWS_AS(find_roots(Polynomial::constant(3.0)), ValidationError);
}

TEST_CASE("sort_canonical orders by real then imaginary part") {
    std::vector<Complex> v{{1.0, 1.0}, {0.0, 2.0}, {1.0, -1.0}};
    sort_canonical(v);
    CHECK(v[0] == Complex{0.0, 2.0});
    CHECK(v[1] == Complex{1.0, -1.0});
    CHECK(v[2] == Complex{1.0, 1.0});
}


TEST_CASE("declared zeros evaluate to ~0 after expansion") {
    oracle::Generator g(15);
    for (int t = 0; t < 40; ++t) {
        const auto pr = g.pair(static_cast<std::size_t>(g.integer(1, 8)), 1, 3, 2.0, 0.1);
        const Polynomial p = from_factored(pr.a);
        for (const Zero& z : pr.a.zeros()) {
            double scale = 0.0;
            for (std::size_t k = 0; k <= p.degree(); ++k)
                scale += std::abs(p.coefficient_of_power(k)) * std::pow(std::abs(z.value), static_cast<double>(k));
            CHECK(std::abs(eval(p, z.value)) <= 1e-13 * scale);
        }
    }
}

TEST_CASE("deflate then re-multiply reproduces p") {
    oracle::Generator g(16);
    for (int t = 0; t < 40; ++t) {
        auto c = g.coefficients(static_cast<std::size_t>(g.integer(2, 10)), 2.0);
        c[0] += 1.0;
        const Polynomial p(c);
        const Complex r = g.in_disc(2.0);
        const Deflation d = deflate(p, r);
        const Polynomial back = Polynomial::linear_factor(r) * d.quotient + Polynomial::constant(d.remainder);
        CHECK(max_coeff_distance(back, p) <= 1e-12 * std::max(1.0, p.max_abs_coeff()));
    }
}

TEST_CASE("derivative is linear") {
    oracle::Generator g(17);
    for (int t = 0; t < 30; ++t) {
        const Polynomial p(g.coefficients(static_cast<std::size_t>(g.integer(1, 8)), 2.0));
        const Polynomial q(g.coefficients(static_cast<std::size_t>(g.integer(1, 8)), 2.0));
        CHECK(max_coeff_distance(derivative(p + q), derivative(p) + derivative(q)) < 1e-13);
    }
}

TEST_CASE("canonically sorted roots match declared zeros at separation 0.1") {
    oracle::Generator g(18);
    for (int t = 0; t < 40; ++t) {
        std::vector<Complex> zs = g.separated(static_cast<std::size_t>(g.integer(1, 8)), 1.5, 0.1);
        const Polynomial p = from_factored(FactoredPolynomial::from_simple_zeros(g.leading(), zs));
        std::vector<Complex> found = find_roots(p);
        sort_canonical(zs);
        sort_canonical(found);
        REQUIRE(found.size() == zs.size());
        for (std::size_t i = 0; i < zs.size(); ++i) CHECK(std::abs(found[i] - zs[i]) < 1e-8);
    }
}

}
