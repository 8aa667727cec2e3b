#include <benchmark/benchmark.h>

#include <random>

#include "pmonoid/fixtures.hpp"
#include "pmonoid/pmonoid.hpp"

using namespace pmonoid;

namespace {

// Deterministic small-entry matrices so runs are comparable.
Matrix sample_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    std::uniform_int_distribution<long> d(-3, 3);
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = Scalar(mpq_class(d(rng)), mpq_class(d(rng)));
    return m;
}

Matrix sample_rank(std::mt19937_64& rng, std::size_t n, std::size_t r) {
    return sample_matrix(rng, n, r) * sample_matrix(rng, r, n);
}

PMSeq sample_seq(std::mt19937_64& rng, std::size_t n) {
    for (;;) {
        std::vector<Matrix> terms{sample_rank(rng, n, n / 2), sample_rank(rng, n, n - n / 2), sample_rank(rng, n, 1)};
        try {
            return projectivize(pi(RawSeq::make(std::move(terms))));
        } catch (const CommonKernelNonzero&) {
        }
    }
}

}  // namespace

static void BM_Rref(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const auto n = static_cast<std::size_t>(state.range(0));
    const Matrix m = sample_matrix(rng, n, n);
    for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->DenseRange(2, 8, 2);

static void BM_Compound(benchmark::State& state) {
    std::mt19937_64 rng(2);
    const auto n = static_cast<std::size_t>(state.range(0));
    const Matrix m = sample_matrix(rng, n, n);
    for (auto _ : state) benchmark::DoNotOptimize(compound(m, n / 2));
}
BENCHMARK(BM_Compound)->DenseRange(2, 6, 1);

static void BM_Mul(benchmark::State& state) {
    std::mt19937_64 rng(3);
    const auto n = static_cast<std::size_t>(state.range(0));
    const PMSeq a = sample_seq(rng, n);
    const PMSeq b = sample_seq(rng, n);
    for (auto _ : state) benchmark::DoNotOptimize(mul(a, b));
}
BENCHMARK(BM_Mul)->DenseRange(2, 5, 1);

static void BM_PhiApply(benchmark::State& state) {
    std::mt19937_64 rng(4);
    const auto n = static_cast<std::size_t>(state.range(0));
    const PMSeq a = sample_seq(rng, n);
    const ProjPoint x(sample_matrix(rng, n, 1).column(0));
    for (auto _ : state) benchmark::DoNotOptimize(phi_apply(a, x));
}
BENCHMARK(BM_PhiApply)->DenseRange(2, 5, 1);

static void BM_LimitPencil(benchmark::State& state) {
    const EpsFamily f = EpsFamily::make({fixtures::pencil3::A0(), fixtures::pencil3::A1()});
    for (auto _ : state) benchmark::DoNotOptimize(limit(f));
}
BENCHMARK(BM_LimitPencil);

static void BM_Varphi(benchmark::State& state) {
    const MSeq a = pi(RawSeq::make({fixtures::wedge4::A0(), fixtures::wedge4::A1()}));
    for (auto _ : state) benchmark::DoNotOptimize(varphi(a));
}
BENCHMARK(BM_Varphi);

static void BM_Lambda(benchmark::State& state) {
    std::mt19937_64 rng(5);
    const auto n = static_cast<std::size_t>(state.range(0));
    const MSeq a = sample_seq(rng, n).seq();
    for (auto _ : state) benchmark::DoNotOptimize(lambda(a));
}
BENCHMARK(BM_Lambda)->DenseRange(2, 5, 1);

BENCHMARK_MAIN();
