#include <benchmark/benchmark.h>

#include "vinberg/kernels.hpp"
#include "vinberg/sampling.hpp"

using namespace vinberg;

namespace {

ConeDescriptor rank3(int dv) {
  return ConeDescriptor(rank3_special(build_clifford_module(dv, Signature::euclidean(dv), 1)));
}

template <RoundtripStats (*Kernel)(const ConeDescriptor&, const std::vector<TriangularMatrix>&)>
void roundtrip(benchmark::State& state) {
  const ConeDescriptor cone = rank3(static_cast<int>(state.range(0)));
  const auto elements = sample_group_elements(cone.algebra_ref(), 2000, 1);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(cone, elements));
  state.SetItemsProcessed(state.iterations() * 2000);
}

template <std::vector<PointResult> (*Kernel)(const InvariantCubic&, const std::vector<Vec>&)>
void classify_diagonal(benchmark::State& state) {
  const InvariantCubic q = InvariantCubic::normalized(rank3(static_cast<int>(state.range(0))), 1.0, -0.5);
  DiagonalGrid grid;
  grid.points = 40;
  const auto points = diagonal_slice(q, grid);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(q, points));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(points.size()));
}

template <std::vector<ScanRow> (*Kernel)(const ConeDescriptor&, const std::vector<double>&, const std::vector<double>&,
                                         const DiagonalGrid&, const WitnessSearch&)>
void scan(benchmark::State& state) {
  const ConeDescriptor cone = rank3(1);
  DiagonalGrid grid;
  grid.points = 30;
  const auto e1 = ParamRange{-2, 2, 1}.values();
  const auto e2 = ParamRange{-1, 1, 0.5}.values();
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(cone, e1, e2, grid, {}));
}

}  // namespace

BENCHMARK(roundtrip<serial_roundtrip>)->Name("roundtrip/serial")->Arg(1)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(roundtrip<parallel_roundtrip>)->Name("roundtrip/parallel")->Arg(1)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(classify_diagonal<serial_classify_diagonal>)->Name("classify_diagonal/serial")->Arg(1)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(classify_diagonal<parallel_classify_diagonal>)->Name("classify_diagonal/parallel")->Arg(1)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(scan<serial_scan>)->Name("scan/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(scan<parallel_scan>)->Name("scan/parallel")->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
