#include <benchmark/benchmark.h>

#include "kfmodal/formula.hpp"
#include "kfmodal/kftruth.hpp"
#include "kfmodal/lemmas.hpp"
#include "kfmodal/manyvalued.hpp"
#include "kfmodal/mixed.hpp"
#include "kfmodal/prover.hpp"

using namespace kfmodal;

namespace {

void BM_Decide(benchmark::State& state) {
  Formula f = parse("([]p0 /\\ ~[]~p0 -> p0) \\/ ([]p1 -> p1)");
  ClassicalLogicId id = static_cast<ClassicalLogicId>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(decide(id, f).valid);
  }
}
BENCHMARK(BM_Decide)
    ->Arg(static_cast<int>(ClassicalLogicId::BM))
    ->Arg(static_cast<int>(ClassicalLogicId::M))
    ->Arg(static_cast<int>(ClassicalLogicId::Mw));

void BM_InternalConsequence(benchmark::State& state) {
  std::vector<Formula> ant = {parse("p0 /\\ (p1 \\/ ~p2)")};
  std::vector<Formula> suc = {parse("(p0 /\\ p1) \\/ (p0 /\\ ~p2)")};
  for (auto _ : state) {
    benchmark::DoNotOptimize(internal_consequence(ant, suc, Scheme::fde).holds);
  }
}
BENCHMARK(BM_InternalConsequence);

void BM_ProveDistribution(benchmark::State& state) {
  CalculusId c{BaseCalculus::FDE, ModalKind::box};
  Sequent goal({parse("[](p0 /\\ p1)")}, {parse("[]p0 /\\ []p1")});
  for (auto _ : state) {
    benchmark::DoNotOptimize(prove(c, goal).status);
  }
}
BENCHMARK(BM_ProveDistribution);

void BM_RandomDerivation(benchmark::State& state) {
  CalculusId c{BaseCalculus::KS3, ModalKind::box};
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(random_derivation(c, ++seed).children.size());
  }
}
BENCHMARK(BM_RandomDerivation);

void BM_LeastFixedPoint(benchmark::State& state) {
  SentenceUniverse u;
  Realization star = witness_realization(u, {0, 1});
  std::vector<Formula> pool = enumerate_formulas(2, 2, true, false);
  for (const Formula& f : pool) translate(u, star, f);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lfp(u, JumpTag::sk, {}).consistent);
  }
}
BENCHMARK(BM_LeastFixedPoint);

void BM_AxiomAudit(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(axiom_audit(ClassicalLogicId::Mn, 2, 1).ok());
  }
}
BENCHMARK(BM_AxiomAudit);

}  // namespace

BENCHMARK_MAIN();
