#include <benchmark/benchmark.h>

#include "lopsp/apply.hpp"
#include "lopsp/catalog.hpp"
#include "lopsp/verify.hpp"

using namespace lopsp;

namespace {

const EmbeddedMap& cube() {
  static const EmbeddedMap m = standard_hosts()[1];
  return m;
}

const EmbeddedMap& dodecahedron() {
  static const EmbeddedMap m = standard_hosts()[2];
  return m;
}

void BM_apply(benchmark::State& state, const char* op_name, const EmbeddedMap& host) {
  const auto& op = catalog_entry(op_name).op;
  for (auto _ : state) benchmark::DoNotOptimize(apply_lopsp(op, host).result.vertex_count());
}

void BM_barycentric(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(barycentric_subdivision(dodecahedron()).map().vertex_count());
}

void BM_canonical_form(benchmark::State& state) {
  const EmbeddedMap m = apply_lopsp(catalog_entry("truncation").op, dodecahedron()).result;
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(m));
}

void BM_is_3connected(benchmark::State& state) {
  const EmbeddedMap m = apply_lopsp(catalog_entry("gyro").op, dodecahedron()).result;
  for (auto _ : state) benchmark::DoNotOptimize(is_k_connected(m, 3));
}

void BM_cut_path(benchmark::State& state, const char* op_name) {
  const auto& op = catalog_entry(op_name).op;
  for (auto _ : state) benchmark::DoNotOptimize(find_cut_path(op).size());
}

BENCHMARK_CAPTURE(BM_apply, ambo_cube, "ambo", cube());
BENCHMARK_CAPTURE(BM_apply, gyro_cube, "gyro", cube());
BENCHMARK_CAPTURE(BM_apply, gyro_dodecahedron, "gyro", dodecahedron());
BENCHMARK_CAPTURE(BM_apply, chamfer_dodecahedron, "chamfer", dodecahedron());
BENCHMARK(BM_barycentric);
BENCHMARK(BM_canonical_form);
BENCHMARK(BM_is_3connected);
BENCHMARK_CAPTURE(BM_cut_path, gyro, "gyro");
BENCHMARK_CAPTURE(BM_cut_path, chamfer, "chamfer");

}  // namespace

BENCHMARK_MAIN();
