#include <benchmark/benchmark.h>

#include "stringc/coset_table.hpp"
#include "stringc/families.hpp"
#include "stringc/perm.hpp"
#include "stringc/sggi.hpp"
#include "stringc/snf.hpp"

namespace {

using namespace stringc;

void BM_enumerate_type1(benchmark::State& state) {
    auto n = static_cast<std::uint32_t>(state.range(0));
    Presentation pres = build_type1(n, 2, 2, 3, 1);
    for (auto _ : state) {
        CosetTable table = CosetTable::enumerate(pres, {});
        benchmark::DoNotOptimize(table.size());
    }
    state.SetLabel("order " + std::to_string((std::uint64_t{1} << n) * 3));
}
BENCHMARK(BM_enumerate_type1)->Arg(7)->Arg(9)->Arg(11);

void BM_certify_type2(benchmark::State& state) {
    auto m = static_cast<std::uint64_t>(state.range(0));
    Presentation pres = build_type2(1, m);
    for (auto _ : state) {
        Certificate cert = certify(pres);
        benchmark::DoNotOptimize(cert.order);
    }
    state.SetLabel("order " + std::to_string(192 * m * m * m));
}
BENCHMARK(BM_certify_type2)->Arg(1)->Arg(2)->Arg(3);

void BM_stabilizer_chain(benchmark::State& state) {
    auto n = static_cast<std::uint32_t>(state.range(0));
    Presentation pres = build_type1(n, 2, 2, 3, 1);
    CosetTable table = CosetTable::enumerate(pres, {});
    PermutationGroup group = table.coset_action();
    for (auto _ : state) {
        StabilizerChain chain = stabilizer_chain(group);
        benchmark::DoNotOptimize(chain.order());
    }
}
BENCHMARK(BM_stabilizer_chain)->Arg(9)->Arg(11);

void BM_subgroup_abelianization(benchmark::State& state) {
    auto family = static_cast<int>(state.range(0));
    Presentation u = build_U();
    SubgroupSpec spec = subgroup_generators(family);
    for (auto _ : state) {
        CosetTable table = CosetTable::enumerate(u, spec.generators);
        IntMatrix relations = table.abelianized_subgroup_relations(u);
        AbelianInvariants inv = abelian_invariants(relations);
        benchmark::DoNotOptimize(inv.free_rank);
    }
}
BENCHMARK(BM_subgroup_abelianization)->Arg(1)->Arg(2)->Arg(3);

} // namespace

BENCHMARK_MAIN();
