#include <benchmark/benchmark.h>

#include "cmkit/curves.hpp"
#include "cmkit/int_poly.hpp"
#include "cmkit/motive.hpp"
#include "cmkit/quadfield.hpp"
#include "cmkit/ranks.hpp"

namespace {

using namespace cmkit;

const EllipticCurveData& e0() {
  static EllipticCurveData e = validate_weierstrass(5, 1, 1, 0);
  return e;
}

void BM_ComposedProduct(benchmark::State& state) {
  // chi of H^(2i-1)(E^g) against a genus-1 numerator
  unsigned g = static_cast<unsigned>(state.range(0));
  IntPoly chi = IntPoly::one();
  for (const auto& [s, m] : kunneth(g, 2 * g - 1, Level::Q).entries)
    chi = chi * summand_charpoly(s, e0()).pow(m);
  IntPoly p1{1, -2, 5};
  for (auto _ : state) benchmark::DoNotOptimize(composed_product(p1, chi));
}
BENCHMARK(BM_ComposedProduct)->Arg(1)->Arg(2)->Arg(3);

void BM_NaivePointCount(benchmark::State& state) {
  unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(point_count(e0(), n));
}
BENCHMARK(BM_NaivePointCount)->Arg(4)->Arg(6)->Arg(8);

void BM_AssembleZeta(benchmark::State& state) {
  unsigned g = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(assemble_zeta(e0(), g));
}
BENCHMARK(BM_AssembleZeta)->Arg(2)->Arg(3)->Arg(4);

void BM_WeilEnumerate(benchmark::State& state) {
  QuadField f = make_quad_field(-1);
  unsigned w = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(weil_enumerate(f, 13, w));
}
BENCHMARK(BM_WeilEnumerate)->Arg(1)->Arg(3)->Arg(5);

void BM_EulerCheck(benchmark::State& state) {
  CurveDescriptor ce = descriptor_of(e0());
  for (auto _ : state)
    benchmark::DoNotOptimize(l_euler_check(e0(), 2, 2, ce, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_EulerCheck)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
