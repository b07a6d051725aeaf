#include "sylvinv/bench_scenario.hpp"

#include <chrono>
#include <cmath>
#include <exception>
#include <string>

#include "sylvinv/bezout.hpp"
#include "sylvinv/dyadic_inverse.hpp"
#include "sylvinv/errors.hpp"
#include "sylvinv/interpolation.hpp"

namespace sylvinv {

namespace {

DriftingZero drifting_zero_from_json(const json& j) {
    if (!j.is_object() || !j.contains("start")) throw ValidationError("each drifting zero needs a \"start\"");
    DriftingZero z;
    z.start = complex_from_json(j["start"]);
    if (j.contains("velocity")) z.velocity = complex_from_json(j["velocity"]);
    if (j.contains("amplitude")) z.amplitude = complex_from_json(j["amplitude"]);
    if (j.contains("frequency")) z.frequency = j["frequency"].get<double>();
    return z;
}

std::vector<Complex> positions(const std::vector<DriftingZero>& zs, double t) {
    std::vector<Complex> out;
    out.reserve(zs.size());
    for (const DriftingZero& z : zs) out.push_back(z.at(t));
    return out;
}

struct Tick {
    Polynomial a;
    Polynomial b;
    Polynomial c;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

Complex DriftingZero::at(double t) const noexcept {
    return start + velocity * t + amplitude * std::sin(frequency * t);
}

BenchScenario BenchScenario::from_json(const json& j) {
    if (!j.is_object()) throw ValidationError("bench scenario must be a JSON object");
    BenchScenario s;
    if (j.contains("leading_a")) s.leading_a = complex_from_json(j["leading_a"]);
    if (j.contains("leading_b")) s.leading_b = complex_from_json(j["leading_b"]);
    if (s.leading_a == Complex{} || s.leading_b == Complex{}) throw DegenerateInput("leading coefficient must be nonzero");
    for (const char* key : {"a_zeros", "b_zeros"}) {
        if (!j.contains(key) || !j[key].is_array() || j[key].empty()) {
            throw ValidationError(std::string("scenario needs a nonempty \"") + key + "\" list");
        }
    }
    for (const json& z : j["a_zeros"]) s.a_zeros.push_back(drifting_zero_from_json(z));
    for (const json& z : j["b_zeros"]) s.b_zeros.push_back(drifting_zero_from_json(z));
    if (j.contains("ticks")) {
        if (!j["ticks"].is_number_integer() || j["ticks"].get<long long>() < 1) {
            throw ValidationError("\"ticks\" must be a positive integer");
        }
        s.ticks = j["ticks"].get<std::size_t>();
    }
    if (j.contains("dt")) s.dt = j["dt"].get<double>();
    if (!j.contains("c")) throw ValidationError("scenario needs a \"c\" polynomial");
    s.c = parse_polynomial_document(j["c"]).coefficients();
    if (j.contains("c_drift")) s.c_drift = parse_polynomial_document(j["c_drift"]).coefficients();
    const std::size_t limit = s.a_zeros.size() + s.b_zeros.size() - 1;
    if ((!s.c.is_zero() && s.c.degree() > limit) || (!s.c_drift.is_zero() && s.c_drift.degree() > limit)) {
        throw ValidationError("degree of c must be at most m+n-1");
    }
    return s;
}

BenchReport run_bench(const BenchScenario& scenario, const Guards& guards) {
    const std::size_t ticks = scenario.ticks;
    BenchReport report;
    report.ticks = ticks;
    report.m = scenario.a_zeros.size();
    report.n = scenario.b_zeros.size();

    // The coefficient stream the controller observes; the exact zeros are
    // used only to report where the configuration turns singular.
    std::vector<Tick> stream(ticks);
    for (std::size_t k = 0; k < ticks; ++k) {
        const double t = static_cast<double>(k) * scenario.dt;
        const auto a = FactoredPolynomial::from_simple_zeros(scenario.leading_a, positions(scenario.a_zeros, t));
        const auto b = FactoredPolynomial::from_simple_zeros(scenario.leading_b, positions(scenario.b_zeros, t));
        try {
            check_node_separation(a.zeros(), guards);
            check_node_separation(b.zeros(), guards);
            check_sylvester_guard(a, b, guards);
        } catch (const Error& e) {
            throw SingularSylvester("tick " + std::to_string(k) + ": " + e.what());
        }
        stream[k] = {from_factored(a), from_factored(b), scenario.c + scale(scenario.c_drift, t)};
    }

    std::vector<BezoutSolution> tracked(ticks);
    {
        const auto start = std::chrono::steady_clock::now();
        std::vector<Complex> za;
        std::vector<Complex> zb;
        for (std::size_t k = 0; k < ticks; ++k) {
            const Tick& tk = stream[k];
            try {
                za = k == 0 ? find_roots(tk.a) : refine_roots(tk.a, std::move(za));
                zb = k == 0 ? find_roots(tk.b) : refine_roots(tk.b, std::move(zb));
                tracked[k] = solve_lagrange(FactoredPolynomial::from_simple_zeros(tk.a.leading(), za),
                                            FactoredPolynomial::from_simple_zeros(tk.b.leading(), zb), tk.c, guards);
            } catch (const Error& e) {
                throw SingularSylvester("tick " + std::to_string(k) + ": " + e.what());
            }
        }
        report.tracking.seconds = seconds_since(start);
    }

    std::vector<BezoutSolution> dense(ticks);
    {
        const auto start = std::chrono::steady_clock::now();
        for (std::size_t k = 0; k < ticks; ++k) {
            try {
                dense[k] = solve_oracle(stream[k].a, stream[k].b, stream[k].c);
            } catch (const Error& e) {
                throw SingularSylvester("tick " + std::to_string(k) + ": " + e.what());
            }
        }
        report.oracle.seconds = seconds_since(start);
    }

    std::vector<double> rel_tracking(ticks), rel_oracle(ticks), agreement(ticks);
    const auto count = static_cast<std::ptrdiff_t>(ticks);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        const auto k = static_cast<std::size_t>(i);
        const double s = bezout_scale(stream[k].a, stream[k].b, stream[k].c);
        rel_tracking[k] = tracked[k].residual / s;
        rel_oracle[k] = dense[k].residual / s;
        agreement[k] = std::max(max_coeff_distance(tracked[k].x, dense[k].x), max_coeff_distance(tracked[k].y, dense[k].y));
    }
    for (std::size_t k = 0; k < ticks; ++k) {
        report.tracking.max_relative_residual = std::max(report.tracking.max_relative_residual, rel_tracking[k]);
        report.oracle.max_relative_residual = std::max(report.oracle.max_relative_residual, rel_oracle[k]);
        report.agreement = std::max(report.agreement, agreement[k]);
    }
    return report;
}

}  // namespace sylvinv
