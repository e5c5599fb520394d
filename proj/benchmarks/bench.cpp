// Benchmarks for the exact kernels: elimination, cocycle solving, identity
// scans and the brute-force isomorphism search.

#include <benchmark/benchmark.h>

#include "nilalg/catalog.hpp"
#include "nilalg/cohomology.hpp"
#include "nilalg/degeneration.hpp"
#include "nilalg/rng.hpp"

using namespace nilalg;

namespace {

Matrix random_matrix(Rng& rng, const FieldSpec& f, std::size_t n, std::size_t m) {
  Matrix a(f, n, m);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < m; ++c) a.at(r, c) = rng.scalar(f);
  return a;
}

void BM_RrefRational(benchmark::State& state) {
  Rng rng(kDefaultSeed);
  Matrix m = random_matrix(rng, FieldSpec::rational(), state.range(0), state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_RrefRational)->Arg(8)->Arg(16)->Arg(32);

void BM_RrefPrime(benchmark::State& state) {
  Rng rng(kDefaultSeed);
  Matrix m = random_matrix(rng, FieldSpec::prime(101), state.range(0), state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_RrefPrime)->Arg(8)->Arg(16)->Arg(32);

void BM_CocycleSolveBL(benchmark::State& state) {
  Algebra a = build_entry("L_5_8", FieldSpec::rational());
  for (auto _ : state) benchmark::DoNotOptimize(z2(a, CocycleFlavor::BL));
}
BENCHMARK(BM_CocycleSolveBL);

void BM_CocycleSolveM6(benchmark::State& state) {
  Algebra a = build_entry("B_6_3", FieldSpec::rational());
  for (auto _ : state) benchmark::DoNotOptimize(z2(a, CocycleFlavor::M));
}
BENCHMARK(BM_CocycleSolveM6);

void BM_IdentityScanMalcev(benchmark::State& state) {
  Algebra a = build_entry("B_6_3", FieldSpec::rational());
  for (auto _ : state) benchmark::DoNotOptimize(check_identity(a, IdentityKind::Malcev));
}
BENCHMARK(BM_IdentityScanMalcev);

void BM_Derivations(benchmark::State& state) {
  Algebra a = build_entry("g_6", FieldSpec::rational());
  for (auto _ : state) benchmark::DoNotOptimize(derivations(a).dim);
}
BENCHMARK(BM_Derivations);

void BM_Fingerprint(benchmark::State& state) {
  Algebra a = build_entry("M_5_1", FieldSpec::prime(3));
  for (auto _ : state) benchmark::DoNotOptimize(fingerprint(a));
}
BENCHMARK(BM_Fingerprint);

void BM_BruteIsoNegative(benchmark::State& state) {
  FieldSpec f = FieldSpec::prime(3);
  Algebra a = build_entry("B_6_1", {{"alpha", Scalar::residue(1, 3)}}, f);
  Algebra b = build_entry("B_6_1", {{"alpha", Scalar::residue(2, 3)}}, f);
  for (auto _ : state) benchmark::DoNotOptimize(brute_iso(a, b).has_value());
}
BENCHMARK(BM_BruteIsoNegative);

void BM_TransportedConstants(benchmark::State& state) {
  FieldSpec q = FieldSpec::rational();
  Algebra a = build_entry("B_6_3", q);
  ParametrizedBasis p = ParametrizedBasis::identity(q, 6);
  p.rows[0][0] = RatFunc::t(q);
  p.rows[1][1] = RatFunc::constant(Scalar::one(q)) / RatFunc::t(q);
  for (auto _ : state) benchmark::DoNotOptimize(transported_constants(a, p));
}
BENCHMARK(BM_TransportedConstants);

}  // namespace

BENCHMARK_MAIN();
