// Microbenchmarks for the hot paths: ring construction, normal forms,
// zero-divisor searches, flag certification, and cell enumeration.

#include "grasstc/bounds.hpp"
#include "grasstc/cells.hpp"
#include "grasstc/flag_oracle.hpp"
#include "grasstc/grassmann_ring.hpp"
#include "grasstc/tensor_ring.hpp"

#include <benchmark/benchmark.h>

using namespace grasstc;

namespace {

void BM_RingBuild(benchmark::State& state) {
    const unsigned k = static_cast<unsigned>(state.range(0));
    const unsigned n = static_cast<unsigned>(state.range(1));
    for (auto _ : state) {
        GrassmannRing ring(k, n);
        for (unsigned d = 0; d <= ring.dim(); ++d)
            benchmark::DoNotOptimize(ring.basis_size(d));
    }
}
BENCHMARK(BM_RingBuild)->Args({2, 10})->Args({3, 10})->Args({4, 12});

void BM_NormalForm(benchmark::State& state) {
    GrassmannRing ring(3, 10);
    for (unsigned d = 0; d <= ring.dim(); ++d)
        ring.basis_size(d); // exclude construction from the measurement
    // A dense mid-degree input: the sum of every degree-10 monomial.
    auto p = Polynomial::from_monomials(ring.space(),
                                        monomials_of_degree(*ring.space(), 10));
    for (auto _ : state)
        benchmark::DoNotOptimize(ring.normal_form(p));
}
BENCHMARK(BM_NormalForm);

void BM_CupLength(benchmark::State& state) {
    GrassmannRing ring(3, 9);
    for (unsigned d = 0; d <= ring.dim(); ++d)
        ring.basis_size(d);
    for (auto _ : state)
        benchmark::DoNotOptimize(ring.max_monomial_cup_length().length);
}
BENCHMARK(BM_CupLength);

void BM_ZclBasic(benchmark::State& state) {
    const unsigned k = static_cast<unsigned>(state.range(0));
    const unsigned n = static_cast<unsigned>(state.range(1));
    GrassmannRing ring(k, n);
    TensorRing tr(ring);
    tr.zcl_basic(); // warm the degree blocks
    for (auto _ : state)
        benchmark::DoNotOptimize(tr.zcl_basic().length);
}
BENCHMARK(BM_ZclBasic)->Args({2, 8})->Args({3, 8});

void BM_TensorNonzero(benchmark::State& state) {
    GrassmannRing ring(3, 10);
    TensorRing tr(ring);
    tr.tensor_is_nonzero({15, 12, 0});
    for (auto _ : state)
        benchmark::DoNotOptimize(tr.tensor_is_nonzero({15, 12, 0}));
}
BENCHMARK(BM_TensorNonzero);

void BM_FlagCertify(benchmark::State& state) {
    auto sp = VarSpace::graded_w(2);
    auto p = Polynomial::from_monomial(sp, Monomial{{6, 1}});
    for (auto _ : state)
        benchmark::DoNotOptimize(grassmann_nonzero_via_flag(2, 6, p).status);
}
BENCHMARK(BM_FlagCertify);

void BM_CellEnumeration(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_symbols(4, 16).size());
}
BENCHMARK(BM_CellEnumeration);

} // namespace

BENCHMARK_MAIN();
