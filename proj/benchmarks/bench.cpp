// Microbenchmarks for the hot paths: element arithmetic, point enumeration,
// fixed-line computation, axiom checking, coupling detection, quantization.
#include <benchmark/benchmark.h>

#include "ringline/algebra.hpp"
#include "ringline/hermline.hpp"
#include "ringline/jordan.hpp"
#include "ringline/jordan_lie.hpp"
#include "ringline/parse.hpp"
#include "ringline/projline.hpp"

using namespace ringline;

namespace {

void BM_matrix_ring_multiply(benchmark::State& state) {
    RingPtr R = parse_ring("Mat(2,F5)");
    Elem a = R->element_at(123);
    Elem b = R->element_at(456);
    for (auto _ : state) {
        Elem c = a * b;
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_matrix_ring_multiply);

void BM_rational_matrix_multiply(benchmark::State& state) {
    RingPtr R = parse_ring("Mat(2,Q)");
    Elem a = parse_element(R, "[[1/2,3],[-5,7/11]]");
    Elem b = parse_element(R, "[[2/3,-1],[4,9/13]]");
    for (auto _ : state) {
        Elem c = a * b;
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_rational_matrix_multiply);

void BM_enumerate_points(benchmark::State& state) {
    for (auto _ : state) {
        ProjectiveLine line(parse_ring("Mat(2,F2)"));
        benchmark::DoNotOptimize(line.all_points().size());
    }
}
BENCHMARK(BM_enumerate_points);

void BM_fixed_points(benchmark::State& state) {
    for (auto _ : state) {
        ProjectiveLine line(parse_ring("Fq(3,2)"));
        SesquiForm omega = SesquiForm::symplectic(line);
        benchmark::DoNotOptimize(omega.fixed_points().size());
    }
}
BENCHMARK(BM_fixed_points);

void BM_orthocomplement(benchmark::State& state) {
    ProjectiveLine line(parse_ring("Mat(2,F2)"));
    SesquiForm omega = SesquiForm::symplectic(line);
    Point x = *line.point_from_vector(line.ring()->one(), line.ring()->element_at(7));
    for (auto _ : state) {
        Point y = omega.orthocomplement(x);
        benchmark::DoNotOptimize(y);
    }
}
BENCHMARK(BM_orthocomplement);

void BM_check_triple_system(benchmark::State& state) {
    TripleSystem t = rect_triple(2, 2, parse_ring("Q"));
    for (auto _ : state) {
        CheckReport r = check_jts(t);
        benchmark::DoNotOptimize(r.pass());
    }
}
BENCHMARK(BM_check_triple_system);

void BM_detect_coupling(benchmark::State& state) {
    TwoProductAlgebra v = jordan_lie_from_assoc(as_algebra(parse_ring("Mat(2,Q)")).algebra);
    for (auto _ : state) {
        CouplingResult r = detect_coupling(v);
        benchmark::DoNotOptimize(r.kind);
    }
}
BENCHMARK(BM_detect_coupling);

void BM_quantize(benchmark::State& state) {
    TwoProductAlgebra v = jordan_lie_from_assoc(as_algebra(parse_ring("Mat(2,Q)")).algebra);
    for (auto _ : state) {
        QuantizedAlgebra q = quantize(v, *v.coupling);
        benchmark::DoNotOptimize(q.algebra.dim);
    }
}
BENCHMARK(BM_quantize);

}  // namespace

BENCHMARK_MAIN();
