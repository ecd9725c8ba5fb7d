#include <random>

#include <benchmark/benchmark.h>

#include "abelcode/code.hpp"
#include "abelcode/gamma.hpp"
#include "abelcode/mindist.hpp"
#include "abelcode/permdec.hpp"
#include "fixtures.hpp"

using namespace abelcode;

namespace {

void BM_BuildGammaLength45(benchmark::State& state) {
  const Ambient amb = fixtures::len45_abelian_ambient();
  const auto def = fixtures::from_orbits(amb, fixtures::translation_code_reps());
  for (auto _ : state) benchmark::DoNotOptimize(build_gamma(def));
}
BENCHMARK(BM_BuildGammaLength45);

void BM_BuildGammaLength65(benchmark::State& state) {
  const Ambient amb = fixtures::len65_ambient();
  const auto def = fixtures::from_orbits(amb, fixtures::len65_codes().front());
  for (auto _ : state) benchmark::DoNotOptimize(build_gamma(def));
}
BENCHMARK(BM_BuildGammaLength65);

void BM_ParityMatrixLength65(benchmark::State& state) {
  const Ambient amb = fixtures::len65_ambient();
  const AbelianCode code(fixtures::from_orbits(amb, fixtures::len65_codes().front()));
  for (auto _ : state) benchmark::DoNotOptimize(parity_matrix(code));
}
BENCHMARK(BM_ParityMatrixLength65)->Unit(benchmark::kMicrosecond);

void BM_GrayDistance(benchmark::State& state) {
  const Ambient amb = fixtures::len45_cyclic_ambient();
  const AbelianCode code(fixtures::from_orbits(amb, fixtures::len45_cyclic_codes().front()));
  const MatrixGF g = generator_matrix(code);
  DistanceOptions opt;
  opt.method = DistanceMethod::Gray;
  opt.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(min_distance(g, opt));
}
BENCHMARK(BM_GrayDistance)->Unit(benchmark::kMillisecond);

void BM_BrouwerZimmermannDistance(benchmark::State& state) {
  const Ambient amb = fixtures::len65_ambient();
  const AbelianCode code(fixtures::from_orbits(amb, fixtures::len65_codes().front()));
  const MatrixGF g = generator_matrix(code);
  DistanceOptions opt;
  opt.method = DistanceMethod::BrouwerZimmermann;
  for (auto _ : state) benchmark::DoNotOptimize(min_distance(g, opt));
}
BENCHMARK(BM_BrouwerZimmermannDistance)->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_PdCheckTranslations(benchmark::State& state) {
  const Ambient amb = fixtures::len45_abelian_ambient();
  const CheckSet cs = build_gamma(fixtures::from_orbits(amb, fixtures::translation_code_reps()));
  const auto info = information_set(cs);
  const auto shifts = enumerate_translations(amb);
  for (auto _ : state) benchmark::DoNotOptimize(is_pd_set(amb, shifts, info, 2));
}
BENCHMARK(BM_PdCheckTranslations)->Unit(benchmark::kMillisecond);

void BM_LemmaFastPath(benchmark::State& state) {
  const Ambient amb = fixtures::len65_ambient();
  const CheckSet cs = build_gamma(fixtures::from_orbits(amb, fixtures::len65_codes().front()));
  for (auto _ : state) benchmark::DoNotOptimize(lemma_fast_path(cs, 3));
}
BENCHMARK(BM_LemmaFastPath)->Unit(benchmark::kMicrosecond);

void BM_DecodeTwoErrors(benchmark::State& state) {
  const Ambient amb = fixtures::len45_abelian_ambient();
  const auto def = fixtures::from_orbits(amb, fixtures::translation_code_reps());
  const AbelianCode code(def);
  const CheckSet cs = build_gamma(def);
  const PermutationDecoder dec(amb, standard_form_parity(code, cs), enumerate_translations(amb), 2);
  const auto& sf = dec.standard_form();
  std::mt19937_64 rng(11);
  std::vector<Codeword> received;
  for (int i = 0; i < 64; ++i) {
    std::vector<Sym> info(sf.info_columns.size());
    for (auto& x : info) x = static_cast<Sym>(rng() % 2);
    Codeword r = encode(sf, info);
    r[rng() % r.size()] ^= 1;
    r[rng() % r.size()] ^= 1;
    received.push_back(std::move(r));
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(dec.decode(received[i++ % received.size()]));
}
BENCHMARK(BM_DecodeTwoErrors)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
