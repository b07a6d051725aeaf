#ifndef SYLVINV_BENCH_SCENARIO_HPP
#define SYLVINV_BENCH_SCENARIO_HPP

#include <cstddef>
#include <vector>

#include "sylvinv/guards.hpp"
#include "sylvinv/json_io.hpp"
#include "sylvinv/polynomial.hpp"

namespace sylvinv {

/// z(t) = start + velocity t + amplitude sin(frequency t).
struct DriftingZero {
    Complex start;
    Complex velocity;
    Complex amplitude;
    double frequency = 0.0;

    Complex at(double t) const noexcept;
};

/// Time-varying a_t, b_t, c_t for the zero-tracking benchmark. Each tick the
/// controller sees only coefficients; zeros are tracked from the previous tick.
struct BenchScenario {
    Complex leading_a{1.0, 0.0};
    Complex leading_b{1.0, 0.0};
    std::vector<DriftingZero> a_zeros;
    std::vector<DriftingZero> b_zeros;
    std::size_t ticks = 1;
    double dt = 1e-3;
    Polynomial c;
    /// c_t = c + t * c_drift.
    Polynomial c_drift;

    /// Reads {"leading_a", "leading_b", "a_zeros": [{"start", "velocity", "amplitude", "frequency"}],
    /// "b_zeros": [...], "ticks", "dt", "c", "c_drift"}.
    static BenchScenario from_json(const json& j);
};

struct PipelineStats {
    double seconds = 0.0;
    /// max over ticks of residual / scale.
    double max_relative_residual = 0.0;
};

struct BenchReport {
    std::size_t ticks = 0;
    std::size_t m = 0;
    std::size_t n = 0;
    PipelineStats tracking;  ///< tracked zeros + Lagrange formulas
    PipelineStats oracle;    ///< fresh dense solve of z S = d each tick
    /// max over ticks of the coefficient distance between the two solutions.
    double agreement = 0.0;
};

/// Throws SingularSylvester naming the first tick whose zeros cross the guard.
BenchReport run_bench(const BenchScenario& scenario, const Guards& guards = {});

}  // namespace sylvinv

#endif
