#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>
#include <string>

#include "rsdl/enumerate.hpp"
#include "rsdl/generator.hpp"
#include "rsdl/oracle.hpp"
#include "rsdl/parser.hpp"

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(RSDL_CORPUS_DIR) + "/" + name, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

rsdl::Theory corpus(const std::string& name) { return rsdl::parse_theory(slurp(name)).theory; }

void BM_Parse(benchmark::State& state) {
  const auto text = slurp("business_process.rsdl");
  for (auto _ : state) benchmark::DoNotOptimize(rsdl::parse_theory(text));
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(text.size()));
}
BENCHMARK(BM_Parse);

void BM_Enumerate(benchmark::State& state, const char* name) {
  const auto t = corpus(name);
  for (auto _ : state) benchmark::DoNotOptimize(rsdl::enumerate_extensions(t));
}
BENCHMARK_CAPTURE(BM_Enumerate, vending, "vending.rsdl");
BENCHMARK_CAPTURE(BM_Enumerate, sequence_order, "sequence_order.rsdl");
BENCHMARK_CAPTURE(BM_Enumerate, energy, "energy.rsdl");
BENCHMARK_CAPTURE(BM_Enumerate, business_process, "business_process.rsdl");
BENCHMARK_CAPTURE(BM_Enumerate, login_retry, "login_retry.rsdl");

// Budget scaling on the retry loop.
void BM_LoginRetryBudget(benchmark::State& state) {
  auto t = corpus("login_retry.rsdl");
  t.config.max_steps = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rsdl::enumerate_extensions(t));
}
BENCHMARK(BM_LoginRetryBudget)->RangeMultiplier(2)->Range(8, 64);

void BM_Derive(benchmark::State& state) {
  const auto t = corpus("business_process.rsdl");
  for (auto _ : state) benchmark::DoNotOptimize(rsdl::derive_deterministic(t));
}
BENCHMARK(BM_Derive);

// Engine against the exhaustive reference on the same generated theories.
void BM_GeneratedEngine(benchmark::State& state) {
  for (auto _ : state) {
    rsdl::oracle::TheoryGenerator gen(rsdl::oracle::kCorpusSeed);
    for (int i = 0; i < 50; ++i) benchmark::DoNotOptimize(rsdl::enumerate_extensions(gen.next()));
  }
}
BENCHMARK(BM_GeneratedEngine)->Unit(benchmark::kMillisecond);

void BM_GeneratedOracle(benchmark::State& state) {
  for (auto _ : state) {
    rsdl::oracle::TheoryGenerator gen(rsdl::oracle::kCorpusSeed);
    for (int i = 0; i < 50; ++i) benchmark::DoNotOptimize(rsdl::oracle::oracle_extensions(gen.next()));
  }
}
BENCHMARK(BM_GeneratedOracle)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
