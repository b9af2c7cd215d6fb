// Microbenchmarks for the rank-critical inner loops.  Run with
// --benchmark_filter=... to isolate one; times are single-threaded.

#include <qsh/combinat.hpp>
#include <qsh/filtration.hpp>
#include <qsh/homology.hpp>

#include <benchmark/benchmark.h>

using namespace qsh;

namespace {

FieldRef Q = FieldContext::rational();

BraidedVectorSpace transposition_space(long coeff) {
    GroupData G = GroupData::from_permutations({{2, 1, 3}, {1, 3, 2}});
    return BraidedVectorSpace::group_class(G, {G.element_by_label("(1 2)")},
                                           Scalar::integer(Q, coeff));
}

void bm_shuffle_product(benchmark::State& state) {
    int n = int(state.range(0));
    auto V = transposition_space(-1);
    int p = n / 2, q = n - n / 2;
    SparseVec x = sv_unit(word_space_size(V.dim(), p) - 1, Q);
    SparseVec y = sv_unit(0, Q);
    for (auto _ : state) benchmark::DoNotOptimize(shuffle_product(V, x, p, y, q));
    state.SetComplexityN(n);
}
BENCHMARK(bm_shuffle_product)->DenseRange(4, 8)->Complexity();

void bm_exact_rank(benchmark::State& state) {
    int n = int(state.range(0));
    auto V = transposition_space(-1);
    auto bc = build_bar(V, AlgebraKind::Shuffle, n);
    for (auto _ : state) benchmark::DoNotOptimize(complex_homology(bc));
    state.SetComplexityN(n);
}
BENCHMARK(bm_exact_rank)->DenseRange(2, 5)->Complexity();

void bm_modular_rank(benchmark::State& state) {
    int n = int(state.range(0));
    auto V = transposition_space(-1);
    auto bc = build_bar(V, AlgebraKind::Shuffle, n);
    HomologyOptions opt;
    opt.mode = RankMode::Modular;
    opt.seed = 7;
    for (auto _ : state) benchmark::DoNotOptimize(complex_homology(bc, opt));
    state.SetComplexityN(n);
}
BENCHMARK(bm_modular_rank)->DenseRange(2, 6)->Complexity();

void bm_orbit_bfs(benchmark::State& state) {
    int n = int(state.range(0));
    GroupData G = GroupData::from_permutations({{2, 1, 3}, {1, 3, 2}});
    std::vector<int> cls;
    int rep = G.element_by_label("(1 2)");
    for (int g = 0; g < G.size(); ++g)
        if (G.conjugacy_class(g) == G.conjugacy_class(rep)) cls.push_back(g);
    for (auto _ : state) benchmark::DoNotOptimize(orbit_enumerate(G, cls, n));
    state.SetComplexityN(n);
}
BENCHMARK(bm_orbit_bfs)->DenseRange(3, 7)->Complexity();

void bm_weight_filtration(benchmark::State& state) {
    int n = int(state.range(0));
    auto V = transposition_space(-1);
    for (auto _ : state) benchmark::DoNotOptimize(weight_filtration_A(V, n));
    state.SetComplexityN(n);
}
BENCHMARK(bm_weight_filtration)->DenseRange(2, 5)->Complexity();

void bm_nichols_symmetrizer(benchmark::State& state) {
    int n = int(state.range(0));
    auto V = transposition_space(-1);
    for (auto _ : state) benchmark::DoNotOptimize(nichols_subspace(V, n));
    state.SetComplexityN(n);
}
BENCHMARK(bm_nichols_symmetrizer)->DenseRange(2, 5)->Complexity();

} // namespace

BENCHMARK_MAIN();
