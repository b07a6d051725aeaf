// Serial reference kernels against their OpenMP versions, plus the two
// Bezout routes the bench command compares.
#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "support/oracles.hpp"
#include "sylvinv/bezout.hpp"
#include "sylvinv/dyadic_inverse.hpp"
#include "sylvinv/linalg.hpp"

using namespace sylvinv;

namespace {

// Zeros on two circles so the decomposition stays well scaled at any size.
DyadicDecomposition circle_inverse(int m, int n) {
    std::vector<Complex> za, zb;
    for (int k = 0; k < m; ++k) za.push_back(std::polar(1.0, 2.0 * M_PI * (k + 0.3) / m));
    for (int k = 0; k < n; ++k) zb.push_back(std::polar(0.5, 2.0 * M_PI * k / n));
    return inverse_simple(FactoredPolynomial::from_simple_zeros(1.0, za), FactoredPolynomial::from_simple_zeros(1.0, zb));
}

DenseMatrix random_matrix(std::size_t n, std::uint64_t seed) {
    oracle::Generator g(seed);
    DenseMatrix m(n, n);
    for (Complex& v : m.data()) v = g.in_disc(1.0);
    return m;
}

void BM_MaterializeSerial(benchmark::State& state) {
    const auto dec = circle_inverse(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(materialize_serial(dec));
}

void BM_MaterializeOpenMP(benchmark::State& state) {
    const auto dec = circle_inverse(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(materialize(dec));
}

void BM_MultiplySerial(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const DenseMatrix a = random_matrix(n, 1), b = random_matrix(n, 2);
    for (auto _ : state) benchmark::DoNotOptimize(multiply_serial(a, b));
}

void BM_MultiplyOpenMP(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const DenseMatrix a = random_matrix(n, 1), b = random_matrix(n, 2);
    for (auto _ : state) benchmark::DoNotOptimize(multiply(a, b));
}

std::vector<RowVector> batch(const DyadicDecomposition& dec, std::size_t count) {
    oracle::Generator g(3);
    std::vector<RowVector> ds(count);
    for (RowVector& d : ds) d = g.coefficients(dec.size(), 1.0);
    return ds;
}

void BM_ApplyBatchSerial(benchmark::State& state) {
    const auto dec = circle_inverse(16, 16);
    const auto ds = batch(dec, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(apply_left_batch_serial(dec, ds));
}

void BM_ApplyBatchOpenMP(benchmark::State& state) {
    const auto dec = circle_inverse(16, 16);
    const auto ds = batch(dec, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(apply_left_batch(dec, ds));
}

struct Instance {
    FactoredPolynomial a;
    FactoredPolynomial b;
    Polynomial c;
};

Instance instance(std::size_t m) {
    oracle::Generator g(4);
    const auto pr = g.pair(m, m, 1, 2.0, 0.2);
    return {pr.a, pr.b, Polynomial(g.coefficients(2 * m, 1.0))};
}

void BM_SolveLagrange(benchmark::State& state) {
    const Instance in = instance(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(solve_lagrange(in.a, in.b, in.c));
}

void BM_SolveOracle(benchmark::State& state) {
    const Instance in = instance(static_cast<std::size_t>(state.range(0)));
    const Polynomial a = from_factored(in.a), b = from_factored(in.b);
    for (auto _ : state) benchmark::DoNotOptimize(solve_oracle(a, b, in.c));
}

}  // namespace

BENCHMARK(BM_MaterializeSerial)->Arg(8)->Arg(24)->Arg(40);
BENCHMARK(BM_MaterializeOpenMP)->Arg(8)->Arg(24)->Arg(40);
BENCHMARK(BM_MultiplySerial)->Arg(32)->Arg(128)->Arg(256);
BENCHMARK(BM_MultiplyOpenMP)->Arg(32)->Arg(128)->Arg(256);
BENCHMARK(BM_ApplyBatchSerial)->Arg(64)->Arg(1024);
BENCHMARK(BM_ApplyBatchOpenMP)->Arg(64)->Arg(1024);
BENCHMARK(BM_SolveLagrange)->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(BM_SolveOracle)->Arg(4)->Arg(8)->Arg(16);

BENCHMARK_MAIN();
