#include <benchmark/benchmark.h>

#include <fstream>
#include <iterator>
#include <string>

#include "kancat/completion.hpp"
#include "kancat/io.hpp"
#include "kancat/kan.hpp"
#include "kancat/nf_enum.hpp"

using namespace kancat;

namespace {

  Presentation load(char const* name) {
    std::ifstream in(std::string(KANCAT_DATA_DIR) + "/" + name);
    return parse_presentation(std::string(std::istreambuf_iterator<char>(in), {}));
  }

  void BM_CompleteHecke(benchmark::State& state) {
    auto p = load("hecke.kan");
    for (auto _ : state) {
      benchmark::DoNotOptimize(buchberger(p.system()));
    }
  }
  BENCHMARK(BM_CompleteHecke);

  void BM_CompleteFiveObjects(benchmark::State& state) {
    auto p = load("five-objects.kan");
    for (auto _ : state) {
      benchmark::DoNotOptimize(buchberger(p.system()));
    }
  }
  BENCHMARK(BM_CompleteFiveObjects);

  // Runs into the rule limit; measures how fast a runaway is cut off.
  void BM_RunawayToLimit(benchmark::State& state) {
    auto p = load("runaway.kan");
    Limits limits{std::size_t(state.range(0)), 50, 1000};
    for (auto _ : state) {
      benchmark::DoNotOptimize(buchberger(p.system(), limits));
    }
  }
  BENCHMARK(BM_RunawayToLimit)->Arg(10)->Arg(20)->Arg(40);

  // Normal form of the longest word of H4's basis times a generator.
  void BM_NormalFormHecke(benchmark::State& state) {
    auto p   = load("hecke.kan");
    auto sys = buchberger(p.system()).system;
    auto f   = parse_polynomial("e3*e2*e1*e3*e2*e1*e3*e2*e1*e3 - 5 e1*e2*e3*e1*e2*e3", p.order);
    for (auto _ : state) {
      benchmark::DoNotOptimize(normal_form(f, sys));
    }
  }
  BENCHMARK(BM_NormalFormHecke);

  void BM_IrreducibleTermsHecke(benchmark::State& state) {
    auto p   = load("hecke.kan");
    auto sys = buchberger(p.system()).system;
    for (auto _ : state) {
      benchmark::DoNotOptimize(irreducible_terms(sys, std::nullopt, std::nullopt, 16));
    }
  }
  BENCHMARK(BM_IrreducibleTermsHecke);

  void BM_HomTableFiveObjects(benchmark::State& state) {
    auto p   = load("five-objects.kan");
    auto sys = buchberger(p.system()).system;
    for (auto _ : state) {
      benchmark::DoNotOptimize(hom_table(sys, std::size_t(state.range(0))));
    }
  }
  BENCHMARK(BM_HomTableFiveObjects)->Arg(8)->Arg(64);

  void BM_KanExtensionHecke(benchmark::State& state) {
    auto p = load("hecke-q.kan");
    for (auto _ : state) {
      benchmark::DoNotOptimize(kan_extension(p.kan(), p.order, 16));
    }
  }
  BENCHMARK(BM_KanExtensionHecke);

}  // namespace

BENCHMARK_MAIN();
