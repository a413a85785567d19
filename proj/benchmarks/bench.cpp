#include <benchmark/benchmark.h>

#include <random>

#include "g2cubics/braid.hpp"
#include "g2cubics/fano.hpp"
#include "g2cubics/fricke.hpp"
#include "g2cubics/g2class.hpp"
#include "g2cubics/sampling.hpp"

using namespace g2cubics;

namespace {

Octonion<Cplx> random_oct(std::mt19937& rng) {
  Octonion<Cplx> q;
  for (int i = 0; i < 8; ++i) q.c[i] = random_cplx(rng);
  return q;
}

void BM_OctMul(benchmark::State& state) {
  std::mt19937 rng(1);
  const Octonion<Cplx> a = random_oct(rng), b = random_oct(rng);
  for (auto _ : state) benchmark::DoNotOptimize(oct_mul(a, b));
}
BENCHMARK(BM_OctMul);

void BM_ConjMap(benchmark::State& state) {
  std::mt19937 rng(2);
  const Vector7<Cplx> v = random_norm3(rng);
  for (auto _ : state) benchmark::DoNotOptimize(conj_map(v));
}
BENCHMARK(BM_ConjMap);

void BM_Matrix7Mul(benchmark::State& state) {
  std::mt19937 rng(3);
  const Matrix7<Cplx> a = conj_map(random_norm3(rng));
  const Matrix7<Cplx> b = conj_map(random_norm3(rng));
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_Matrix7Mul);

void BM_AlphaBetaFromP(benchmark::State& state) {
  std::mt19937 rng(4);
  const Vector7<Cplx> v1 = random_norm3(rng), v2 = random_norm3(rng),
                      v3 = random_norm3(rng);
  const PInvariants<Cplx> p = p_invariants(v1, v2, v3);
  for (auto _ : state) benchmark::DoNotOptimize(alpha_beta_from_p(p));
}
BENCHMARK(BM_AlphaBetaFromP);

void BM_PrFiberNumeric(benchmark::State& state) {
  const AlphaBeta<Cplx> ab{Cplx(2.5, 0.5), Cplx(-1.0, 0.25)};
  for (auto _ : state) benchmark::DoNotOptimize(pr_fiber(ab));
}
BENCHMARK(BM_PrFiberNumeric);

void BM_BraidOrbitKlein(benchmark::State& state) {
  const PInvariants<Rat> p{Rat(1), Rat(1), Rat(1), Rat(-2)};
  for (auto _ : state) benchmark::DoNotOptimize(braid_orbit_p(p, 100));
}
BENCHMARK(BM_BraidOrbitKlein);

void BM_GroupClosure(benchmark::State& state) {
  std::vector<ExactG2Matrix> gens;
  for (const FanoLine& l : lines_through(7)) gens.push_back(line_to_generator(l).second);
  for (auto _ : state) benchmark::DoNotOptimize(group_closure(gens, 10000));
}
BENCHMARK(BM_GroupClosure);

}  // namespace

BENCHMARK_MAIN();
