// Serial reference vs OpenMP product kernel on dense random elements.

#include <benchmark/benchmark.h>

#include "qkwc/kernels.hpp"
#include "qkwc/randgen.hpp"

namespace {

using namespace qkwc;

RingElem dense(gen::Rng &rng, const RingSpecPtr &spec, int terms)
{
    RingElem a(spec);
    while (static_cast<int>(a.size()) < terms) {
        a += gen::random_elem(rng, spec, 8, 3);
    }
    return a;
}

struct Operands {
    RingSpecPtr spec;
    RingElem a;
    RingElem b;
};

Operands operands(int terms)
{
    auto spec = make_ring({{"nu", 4}}, {"L", "M"}, 4, 8);
    gen::Rng rng(static_cast<std::uint64_t>(terms));
    return {spec, dense(rng, spec, terms), dense(rng, spec, terms)};
}

void BM_multiply_serial(benchmark::State &state)
{
    const auto op = operands(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::multiply_serial(*op.spec, op.a.terms(), op.b.terms()));
    }
    state.counters["pairs"] = static_cast<double>(op.a.size() * op.b.size());
}

void BM_multiply_parallel(benchmark::State &state)
{
    const auto op = operands(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::multiply_parallel(*op.spec, op.a.terms(), op.b.terms()));
    }
    state.counters["pairs"] = static_cast<double>(op.a.size() * op.b.size());
    state.counters["threads"] = kernels::max_threads();
}

} // namespace

BENCHMARK(BM_multiply_serial)->Arg(16)->Arg(64)->Arg(256);
BENCHMARK(BM_multiply_parallel)->Arg(16)->Arg(64)->Arg(256);

BENCHMARK_MAIN();
