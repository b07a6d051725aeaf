#include <vector>

#include "doctest.h"
#include "support/oracles.hpp"
#include "sylvinv/confluence.hpp"
#include "sylvinv/errors.hpp"

using namespace sylvinv;

namespace {

// a = lambda - tau, b = lambda + tau.
ConfluenceFamily plus_minus_tau() {
    ConfluenceFamily f;
    f.theta = 0.0;
    f.alpha_path.drift = {1.0};
    f.beta_path.drift = {-1.0};
    return f;
}

const std::vector<double> kTaus{1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6};

}  // namespace

TEST_SUITE("confluence") {

TEST_CASE("zero path evaluation") {
    const ZeroPath p{{2.0, {0.0, 1.0}}};
    CHECK(std::abs(p.at(1.0, 0.5) - Complex{2.0, 0.25}) < 1e-15);
    CHECK(p.at(1.0, 0.0) == Complex{1.0});
}

TEST_CASE("lambda -/+ tau: limit [[0,0],[-1,1]] and error equal to tau") {
    const ConfluenceFamily f = plus_minus_tau();
    CHECK(oracle::max_diff(limit_inverse(f), DenseMatrix::from_rows({{0.0, 0.0}, {-1.0, 1.0}})) == 0.0);
    const ConvergenceReport r = convergence_experiment(f, Polynomial({1.0}), kTaus);
    REQUIRE(r.rows.size() == kTaus.size());
    for (const ConvergenceRow& row : r.rows) CHECK(row.inverse_error == doctest::Approx(row.tau).epsilon(1e-6));
    REQUIRE(r.inverse_slope.has_value());
    CHECK(*r.inverse_slope == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(r.inverse_errors_decrease());
}

TEST_CASE("limit solutions: scaled x and y converge") {
    ConfluenceFamily f;
    f.leading_a = 2.0;
    f.leading_b = {0.0, 1.0};
    f.theta = {0.3, 0.1};
    f.alpha_path.drift = {1.0, 0.5};
    f.beta_path.drift = {{0.0, -1.0}};
    f.fixed_a = {{-1.0, 1}, {1.0, 2}};
    f.fixed_b = {{{0.0, 1.5}, 1}};
    const Polynomial c({1.0, -0.5, 0.25});
    const ConvergenceReport r = convergence_experiment(f, c, kTaus);
    REQUIRE(r.inverse_slope.has_value());
    CHECK(*r.inverse_slope >= 0.8);
    CHECK(*r.inverse_slope <= 1.2);
    CHECK(r.rows.back().inverse_error < 1e-5);
    CHECK(r.rows.back().x_error < 1e-5);
    CHECK(r.rows.back().y_error < 1e-5);
}

TEST_CASE("limit is rank one with the documented column") {
    ConfluenceFamily f;
    f.theta = 0.5;
    f.alpha_path.drift = {1.0};
    f.beta_path.drift = {2.0};
    f.fixed_a = {{-1.0, 1}};
    f.fixed_b = {{1.5, 1}};
    const DenseMatrix l = limit_inverse(f);
    // Every column is a multiple of Lambda(theta).
    for (std::size_t c = 0; c < l.cols(); ++c) {
        const Complex s = l(l.rows() - 1, c);
        for (std::size_t r = 0; r < l.rows(); ++r) {
            CHECK(std::abs(l(r, c) - s * int_power(0.5, static_cast<int>(l.rows() - 1 - r))) < 1e-14);
        }
    }
}

TEST_CASE("single tau: one row, no slope") {
    const std::vector<double> one{1e-3};
    const ConvergenceReport r = convergence_experiment(plus_minus_tau(), Polynomial({1.0}), one);
    CHECK(r.rows.size() == 1);
    CHECK_FALSE(r.inverse_slope.has_value());
}

TEST_CASE("violated premises") {
    ConfluenceFamily shared = plus_minus_tau();
    shared.fixed_a = {{1.0, 1}};
    shared.fixed_b = {{1.0, 1}};
    CHECK_THROWS_AS(shared.validate(), ValidationError);

    ConfluenceFamily at_theta = plus_minus_tau();
    at_theta.fixed_a = {{0.0, 1}};
    CHECK_THROWS_AS(at_theta.validate(), ValidationError);

    ConfluenceFamily same_path = plus_minus_tau();
    same_path.beta_path.drift = {1.0};
    CHECK_THROWS_AS(same_path.validate(), ValidationError);

    const std::vector<double> increasing{1e-3, 1e-2};
    CHECK_THROWS_AS(convergence_experiment(plus_minus_tau(), Polynomial({1.0}), increasing), ValidationError);
    const std::vector<double> none;
    CHECK_THROWS_AS(convergence_experiment(plus_minus_tau(), Polynomial({1.0}), none), ValidationError);
}

TEST_CASE("log-log slope fit") {
    const std::vector<double> t{1.0, 0.1, 0.01};
    const std::vector<double> e{2.0, 0.02, 0.0002};
    CHECK(*fit_loglog_slope(t, e) == doctest::Approx(2.0));
    const std::vector<double> z{1.0, 0.0, 1.0};
    CHECK_FALSE(fit_loglog_slope(t, z).has_value());
}


TEST_CASE("limit inverse 2x2 minors vanish; scaled limits cancel") {
    oracle::Generator g(81);
    for (int t = 0; t < 10; ++t) {
        ConfluenceFamily f;
        f.leading_a = g.leading();
        f.leading_b = g.leading();
        f.theta = g.in_disc(1.0);
        f.alpha_path.drift = {1.0};
        f.beta_path.drift = {-1.0};
        const std::vector<Complex> pts = g.separated(4, 2.0, 0.3, {f.theta});
        f.fixed_a = {{pts[0], 1}, {pts[1], 2}};
        f.fixed_b = {{pts[2], 1}, {pts[3], 1}};
        const DenseMatrix l = limit_inverse(f);
        const double scale = std::max(1.0, l.max_abs());
        for (std::size_t r1 = 0; r1 < l.rows(); ++r1)
            for (std::size_t r2 = r1 + 1; r2 < l.rows(); ++r2)
                for (std::size_t c1 = 0; c1 < l.cols(); ++c1)
                    for (std::size_t c2 = c1 + 1; c2 < l.cols(); ++c2)
                        CHECK(std::abs(l(r1, c1) * l(r2, c2) - l(r1, c2) * l(r2, c1)) <= 1e-10 * scale * scale);
        const Polynomial c(g.coefficients(f.m() + f.n(), 1.0));
        const LimitSolutions lim = limit_solutions(f, c);
        const Polynomial sum = f.a_star() * lim.x + f.b_star() * lim.y;
        const double s = std::max({1.0, f.a_star().max_abs_coeff(), f.b_star().max_abs_coeff(), lim.x.max_abs_coeff(),
                                   lim.y.max_abs_coeff()});
        CHECK(sum.max_abs_coeff() <= 1e-10 * s * s);
    }
}

}
