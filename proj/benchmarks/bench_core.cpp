#include <benchmark/benchmark.h>

#include "qloop/casimir.hpp"

using namespace qloop;

namespace {

QuiverSpec loops_quiver(int loops) {
    QuiverSpec q;
    q.add_vertex("i");
    for (int k = 0; k < loops; ++k) q.add_edge("i", "i");
    q.set_nu_default(Scalar(1));
    return q;
}

void BM_scalar_mul(benchmark::State& state) {
    const Scalar a = Scalar::parse("(v^8 + 3*v^4 - v + 2)/(v^5 - v^2 + 1)");
    const Scalar b = Scalar::parse("(2*v^6 - v^3 + 7)/(v^4 + v)");
    for (auto _ : state) {
        Scalar c = a * b;
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_scalar_mul);

void BM_pair_words(benchmark::State& state) {
    // cold pairing of the deepest composition words; a fresh session per
    // iteration so the memo cache does not short-circuit the measurement
    const int height = static_cast<int>(state.range(0));
    const QuiverSpec q = loops_quiver(2);
    const auto words = words_of_degree(q, q.unit_vector(0).scaled(height));
    for (auto _ : state) {
        Session s(q, height);
        Scalar acc;
        for (const Word& w : words) acc += pair_words(s, words.back(), w);
        benchmark::DoNotOptimize(acc);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_pair_words)->DenseRange(2, 5)->Complexity();

void BM_gram_table(benchmark::State& state) {
    const int height = static_cast<int>(state.range(0));
    const QuiverSpec q = loops_quiver(2);
    for (auto _ : state) {
        Session s(q, height);
        benchmark::DoNotOptimize(gram(s, q.unit_vector(0).scaled(height)).rank);
    }
}
BENCHMARK(BM_gram_table)->DenseRange(2, 5);

void BM_straighten_rule(benchmark::State& state) {
    const int level = static_cast<int>(state.range(0));
    const QuiverSpec q = loops_quiver(2);
    for (auto _ : state) {
        Session s(q, 2 * level);
        benchmark::DoNotOptimize(
            ef_straighten_rule(s, {0, level}, {0, level}).terms().size());
    }
}
BENCHMARK(BM_straighten_rule)->DenseRange(1, 4);

void BM_theta_build(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    const QuiverSpec q = loops_quiver(2);
    for (auto _ : state) {
        Session s(q, p);
        benchmark::DoNotOptimize(theta_build(s, p).components.size());
    }
}
BENCHMARK(BM_theta_build)->DenseRange(2, 4);

void BM_casimir_apply(benchmark::State& state) {
    const QuiverSpec q = loops_quiver(2);
    Session s(q, 4);
    VermaVec m;
    m.highest_weight = q.unit_vector(0);
    m.add_term(Word({{0, 1}, {0, 1}}), Scalar(1));
    casimir_apply(s, m, 3);  // warm the operator cache once
    for (auto _ : state) {
        VermaVec out = casimir_apply(s, m, 3);
        benchmark::DoNotOptimize(out);
    }
}
BENCHMARK(BM_casimir_apply);

}  // namespace

BENCHMARK_MAIN();
