#include <benchmark/benchmark.h>

#include "qsh/classify.hpp"
#include "qsh/torsion.hpp"

using namespace qsh;

namespace {

void BM_QuatMatMul(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  QMat a(n, n), b(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      a.at(r, c) = Quat(Rational(r - c), Rational(1, c + 1), Rational(r, 2), 1);
      b.at(r, c) = Quat(1, Rational(c, 3), Rational(-r), Rational(r + c));
    }
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_QuatMatMul)->Arg(4)->Arg(8);

void BM_SpanInsert(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  std::vector<RatVec> rows;
  for (int r = 0; r < n; ++r) {
    RatVec v(static_cast<size_t>(n));
    for (int c = 0; c < n; ++c) v[static_cast<size_t>(c)] = Rational((r * 7 + c * 3) % 11 - 5, (c % 4) + 1);
    rows.push_back(std::move(v));
  }
  for (auto _ : state) {
    Subspace s(n);
    for (const RatVec& v : rows) s.insert(v);
    benchmark::DoNotOptimize(s.dim());
  }
}
BENCHMARK(BM_SpanInsert)->Arg(32)->Arg(64);

void BM_Symtest(benchmark::State& state) {
  CatalogCase cc = make_case(parse_tag("m2:4,2,2"));
  for (auto _ : state) benchmark::DoNotOptimize(symtest(cc.tau).pass);
}
BENCHMARK(BM_Symtest);

void BM_BuildTila(benchmark::State& state) {
  CatalogCase cc = make_case(parse_tag("ns-even:2,1,0"));
  for (auto _ : state) {
    Tila t = build_tila(cc.tau, cc.form);
    benchmark::DoNotOptimize(t.g.dim);
  }
}
BENCHMARK(BM_BuildTila);

void BM_KillingForm(benchmark::State& state) {
  CatalogCase cc = make_case(parse_tag("m1:3"));
  Tila t = build_tila(cc.tau, cc.form);
  for (auto _ : state) benchmark::DoNotOptimize(killing_form(t.g));
}
BENCHMARK(BM_KillingForm);

void BM_ClassifyScan(benchmark::State& state) {
  Grid grid{2, 1};  // small grid keeps single iterations meaningful
  for (auto _ : state) benchmark::DoNotOptimize(classify_scan(2, grid, 1).size());
}
BENCHMARK(BM_ClassifyScan);

}  // namespace

BENCHMARK_MAIN();
