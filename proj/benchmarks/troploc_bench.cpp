#include <benchmark/benchmark.h>

#include <random>

#include "troploc/arc.hpp"
#include "troploc/cone.hpp"
#include "troploc/fan.hpp"
#include "troploc/newton.hpp"
#include "troploc/splice.hpp"
#include "troploc/tropicalization.hpp"

using namespace troploc;

namespace {

Series pham_brieskorn(long a, long b, long c) {
  return Series::over_orthant(3, {{{a, 0, 0}, 1}, {{0, b, 0}, 1}, {{0, 0, c}, 1}});
}

// Dense random series over the n-orthant; a fixed seed keeps runs comparable.
Series random_series(std::size_t rank, std::size_t terms, long max_exp) {
  std::mt19937_64 rng(rank * 1000 + terms);
  std::uniform_int_distribution<long> e(0, max_exp), c(1, 9);
  std::vector<std::pair<std::vector<long>, Rational>> t;
  for (std::size_t i = 0; i < rank; ++i) {
    std::vector<long> m(rank, 0);
    m[i] = e(rng) + 1;
    t.emplace_back(m, 1);
  }
  while (t.size() < terms) {
    std::vector<long> m(rank);
    for (auto& x : m) x = e(rng);
    t.emplace_back(m, Rational(c(rng)));
  }
  return Series::over_orthant(rank, t);
}

SpliceDiagram two_node() {
  using V = Vertex;
  return SpliceDiagram::make(4, {"u", "v"},
                             {{V::leaf(0), V::node(0)}, {V::leaf(1), V::node(0)}, {V::node(0), V::node(1)},
                              {V::node(1), V::leaf(2)}, {V::node(1), V::leaf(3)}},
                             {{0, V::leaf(0), 2}, {0, V::leaf(1), 3}, {0, V::node(1), 7},
                              {1, V::leaf(2), 5}, {1, V::leaf(3), 2}, {1, V::node(0), 11}});
}

void BM_DualCone(benchmark::State& state) {
  const std::size_t rank = static_cast<std::size_t>(state.range(0));
  std::vector<LatticeVector> gens;
  for (std::size_t i = 0; i < rank; ++i) gens.push_back(LatticeVector::unit(rank, i));
  for (std::size_t i = 0; i + 1 < rank; ++i) {
    std::vector<Integer> v(rank, 1);
    v[i] = 0;
    v[i + 1] = 2;
    gens.emplace_back(v);
  }
  const Cone c = Cone::from_generators(rank, gens);
  for (auto _ : state) benchmark::DoNotOptimize(dual_cone(c));
}
BENCHMARK(BM_DualCone)->DenseRange(2, 6);

void BM_NewtonPolyhedron(benchmark::State& state) {
  const Series f = random_series(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)), 8);
  for (auto _ : state) benchmark::DoNotOptimize(newton_polyhedron(f));
}
BENCHMARK(BM_NewtonPolyhedron)->Args({2, 10})->Args({2, 40})->Args({3, 10})->Args({3, 30});

void BM_DivisorPhamBrieskorn(benchmark::State& state) {
  const Series f = pham_brieskorn(2, 3, 7);
  for (auto _ : state) benchmark::DoNotOptimize(troploc_divisor(f));
}
BENCHMARK(BM_DivisorPhamBrieskorn);

void BM_DivisorRandom(benchmark::State& state) {
  const Series f = random_series(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)), 6);
  for (auto _ : state) benchmark::DoNotOptimize(troploc_divisor(f));
}
BENCHMARK(BM_DivisorRandom)->Args({2, 12})->Args({3, 8})->Args({4, 6});

void BM_StarSubdivide(benchmark::State& state) {
  const std::size_t rank = static_cast<std::size_t>(state.range(0));
  const Fan o = Fan::face_fan(Cone::orthant(rank));
  std::vector<Integer> ones(rank, 1);
  const LatticeVector r(ones);
  for (auto _ : state) benchmark::DoNotOptimize(star_subdivide(o, r));
}
BENCHMARK(BM_StarSubdivide)->DenseRange(2, 5);

void BM_SpliceCrosscheck(benchmark::State& state) {
  const SpliceDiagram d = two_node();
  for (auto _ : state) benchmark::DoNotOptimize(crosscheck_tropicalization(d));
}
BENCHMARK(BM_SpliceCrosscheck);

void BM_Puiseux(benchmark::State& state) {
  const Series cusp = Series::over_orthant(2, {{{0, 2}, 1}, {{3, 0}, -2}, {{2, 1}, 1}});
  PuiseuxOptions opt;
  opt.depth = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(puiseux_expand_exact(cusp, opt));
}
BENCHMARK(BM_Puiseux)->Arg(10)->Arg(40);

}  // namespace

BENCHMARK_MAIN();
