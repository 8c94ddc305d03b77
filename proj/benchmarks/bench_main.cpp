#include <benchmark/benchmark.h>

#include <random>

#include "homext/audit.hpp"

using namespace homext;

namespace {

const Field Q{FieldSpec::rational()};

AlgebraPtr quantum_q2() {
  static AlgebraPtr a =
      std::make_shared<AlgebraPresentation>(build_quantum_ci(Q, Scalar(2)));
  return a;
}

AlgebraPtr kxy22() {
  static AlgebraPtr a =
      std::make_shared<AlgebraPresentation>(build_truncated_polynomial(Q, {2, 2}));
  return a;
}

ModuleRep schulz() {
  AlgebraPtr a = quantum_q2();
  Vec gen(4, Q.zero());
  gen[1] = Q.one();
  gen[2] = Q.one();
  return cyclic_quotient(a, {gen}, "M");
}

ModuleRep simple(const AlgebraPtr& a) {
  std::vector<Vec> gens;
  for (std::size_t r : a->radical_indices) {
    Vec e(a->dim, a->field.zero());
    e[r] = a->field.one();
    gens.push_back(e);
  }
  return cyclic_quotient(a, gens, "k");
}

void BM_rref_rational(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(12);
  Mat m(Q, n, n);
  for (Scalar& s : m.data) s = Q.from_int(static_cast<long>(rng() % 19) - 9);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m).rank);
}
BENCHMARK(BM_rref_rational)->Arg(8)->Arg(24)->Arg(48);

void BM_resolve_schulz(benchmark::State& state) {
  ModuleRep m = schulz();
  const std::size_t upto = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    Resolution r(m);
    r.extend(upto);
    benchmark::DoNotOptimize(r.steps_computed());
  }
}
BENCHMARK(BM_resolve_schulz)->Arg(10)->Arg(20)->Arg(40);

void BM_resolve_simple_growing_betti(benchmark::State& state) {
  ModuleRep k = simple(kxy22());
  const std::size_t upto = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    Resolution r(k);
    r.extend(upto);
    benchmark::DoNotOptimize(r.betti().back());
  }
}
BENCHMARK(BM_resolve_simple_growing_betti)->Arg(8)->Arg(12)->Arg(16);

void BM_ext_self_schulz(benchmark::State& state) {
  ModuleRep m = schulz();
  const std::size_t cutoff = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ext_dims(m, m, cutoff).dims.size());
}
BENCHMARK(BM_ext_self_schulz)->Arg(10)->Arg(20);

void BM_self_ext_degree_certified(benchmark::State& state) {
  ModuleRep k = simple(std::make_shared<AlgebraPresentation>(
      build_truncated_polynomial(Q, {2})));
  for (auto _ : state)
    benchmark::DoNotOptimize(self_ext_degree(k, 20, 0).certificate.kind);
}
BENCHMARK(BM_self_ext_degree_certified);

void BM_family_audit_quantum(benchmark::State& state) {
  AlgebraPtr a = quantum_q2();
  std::vector<Scalar> coeffs{Scalar(-1), Scalar(0), Scalar(1), Scalar(2)};
  for (auto _ : state) {
    auto family = enumerate_cyclic_family(a, coeffs, 1, 5000, 0);
    benchmark::DoNotOptimize(audit_family(a, family, 12, 0).fed_lower_bound);
  }
}
BENCHMARK(BM_family_audit_quantum)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
