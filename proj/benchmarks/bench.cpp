#include <benchmark/benchmark.h>

#include <random>

#include "esm2d/esm.hpp"
#include "esm2d/forward.hpp"
#include "esm2d/specfun.hpp"

using namespace esm2d;

namespace {

const Material kMat{};

ElasticFarField disk_data() {
    const auto th = direction_grid(52);
    ElasticFarField out;
    out.m = 52;
    out.up.assign(52, cd{});
    out.us.assign(52, cd{});
    for (int inc = 0; inc < 2; ++inc) {
        PlaneWave pw;
        pw.ap = (inc == 0) ? 1.0 : 0.0;
        pw.as = (inc == 0) ? 0.0 : 1.0;
        const auto mode = (inc == 0) ? IncidenceMode::compressional : IncidenceMode::shear;
        for (int j = 0; j < 52; ++j) {
            auto v = rigid_disk_farfield(kMat, 1.0, pw, th[(std::size_t)j]);
            v = translate_elastic(v, kMat, {-2.0, 3.0}, th[(std::size_t)j], pw.dir.theta, mode);
            out.up[(std::size_t)j] += v.first;
            out.us[(std::size_t)j] += v.second;
        }
    }
    return out;
}

void BM_BesselSeq(benchmark::State& state) {
    const int n = (int)state.range(0);
    for (auto _ : state) {
        auto v = bessel_j_seq(n, 7.7);
        benchmark::DoNotOptimize(v.data());
    }
}
BENCHMARK(BM_BesselSeq)->Arg(20)->Arg(60)->Arg(120);

void BM_AssembleIPF(benchmark::State& state) {
    for (auto _ : state) {
        auto op = assemble_base_ipf(kMat, 1.2, 52);
        benchmark::DoNotOptimize(op.base.data());
    }
}
BENCHMARK(BM_AssembleIPF)->Unit(benchmark::kMillisecond);

void BM_SolveFast(benchmark::State& state) {
    const auto op = assemble_base_ipf(kMat, 1.2, 52);
    const auto rhs = prepare_rhs(ProbeMode::ipf, disk_data(), kMat);
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    for (auto _ : state) {
        const auto r = solve_at_point(op, {u(rng), u(rng)}, rhs, 1e-5);
        benchmark::DoNotOptimize(r.second);
    }
}
BENCHMARK(BM_SolveFast);

void BM_NormsGrid(benchmark::State& state) {
    const auto op = assemble_base_ipf(kMat, 1.2, 52);
    const auto rhs = prepare_rhs(ProbeMode::ipf, disk_data(), kMat);
    const SamplingGrid grid{};
    for (auto _ : state) {
        auto v = norms_on_grid(op, grid, rhs, 1e-5);
        benchmark::DoNotOptimize(v.data());
    }
}
BENCHMARK(BM_NormsGrid)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
