#include <benchmark/benchmark.h>

#include "hallmark/arith.hpp"
#include "hallmark/catalog.hpp"
#include "hallmark/oracle.hpp"
#include "hallmark/subgroups.hpp"

using namespace hallmark;

namespace {

arith::PrimeSet ps(std::initializer_list<arith::Int> v) {
  return arith::PrimeSet(std::vector<arith::Int>(v));
}

}  // namespace

static void BM_stabilizer_chain_psl2(benchmark::State& state) {
  const arith::Int q = state.range(0);
  for (auto _ : state) {
    PermGroup g = catalog::projective_line_group(q, catalog::LinearKind::PSL);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_stabilizer_chain_psl2)->Arg(7)->Arg(17)->Arg(31)->Arg(61);

static void BM_element_enumeration(benchmark::State& state) {
  PermGroup g = catalog::projective_line_group(state.range(0), catalog::LinearKind::PSL);
  for (auto _ : state) {
    auto elems = g.elements();
    benchmark::DoNotOptimize(elems.size());
  }
}
BENCHMARK(BM_element_enumeration)->Arg(7)->Arg(17)->Arg(31);

static void BM_soluble_enumeration_a5(benchmark::State& state) {
  PermGroup a5(5, {Perm::from_cycles(5, "(1 2 3 4 5)"), Perm::from_cycles(5, "(1 2 3)")});
  for (auto _ : state) {
    auto classes = enumerate_soluble_subgroups(a5, [](arith::Int) { return true; });
    benchmark::DoNotOptimize(classes.size());
  }
}
BENCHMARK(BM_soluble_enumeration_a5);

static void BM_hall_search_psl27(benchmark::State& state) {
  PermGroup g = catalog::projective_line_group(7, catalog::LinearKind::PSL);
  for (auto _ : state) {
    auto res = check_E_C_D(g, ps({2, 3}));
    benchmark::DoNotOptimize(res.E);
  }
}
BENCHMARK(BM_hall_search_psl27);

static void BM_hall_search_psl217(benchmark::State& state) {
  PermGroup g = catalog::projective_line_group(17, catalog::LinearKind::PSL);
  for (auto _ : state) {
    auto res = check_E_C_D(g, ps({2, 3}));
    benchmark::DoNotOptimize(res.E);
  }
}
BENCHMARK(BM_hall_search_psl217);

static void BM_factorize(benchmark::State& state) {
  arith::Int n = 1;
  for (auto _ : state) {
    n = (n * 2862933555777941757LL + 3037000493LL) & ((arith::Int{1} << 40) - 1);
    if (n < 2) n = 2;
    benchmark::DoNotOptimize(arith::factorize(n).terms.size());
  }
}
BENCHMARK(BM_factorize);

static void BM_classify_psl27_sweep(benchmark::State& state) {
  auto factors = classifier::FactorList::of({catalog::SimpleGroupId::psl(2, 7)});
  for (auto _ : state) {
    for (auto pi : {ps({2}), ps({3}), ps({7}), ps({2, 3}), ps({3, 7}), ps({2, 7})}) {
      auto rep = classifier::full_report(factors, pi);
      benchmark::DoNotOptimize(rep.verdicts.size());
    }
  }
}
BENCHMARK(BM_classify_psl27_sweep);

static void BM_is_simple_psl28(benchmark::State& state) {
  PermGroup g = catalog::projective_line_group(8, catalog::LinearKind::PSL);
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_simple(g));
  }
}
BENCHMARK(BM_is_simple_psl28);

BENCHMARK_MAIN();
