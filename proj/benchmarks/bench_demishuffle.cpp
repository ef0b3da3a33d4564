#include <benchmark/benchmark.h>

#include "demishuffle/bases.hpp"
#include "demishuffle/grouplike.hpp"

using namespace demishuffle;

namespace {

const Alphabet alphabet{1};

void BM_WordShuffle(benchmark::State &state) {
    const int half = static_cast<int>(state.range(0)) / 2;
    std::vector<Letter> letters;
    for (int i = 0; i < half; ++i) {
        letters.push_back(letter_x);
        letters.push_back(y_letter(1));
    }
    const Word u(letters);
    const Word v = Word::x_power(half);
    for (auto _ : state) {
        auto result = shuffle_words(u, v);
        benchmark::DoNotOptimize(result);
    }
}
BENCHMARK(BM_WordShuffle)->DenseRange(4, 12, 2);

void BM_DemiShufflePoly(benchmark::State &state) {
    const int len = static_cast<int>(state.range(0));
    const std::vector<MultiIndex> indices = indices_up_to_length(len, alphabet);
    for (auto _ : state) {
        for (const MultiIndex &k : indices) {
            auto poly = demi_shuffle_poly(k, alphabet);
            benchmark::DoNotOptimize(poly);
        }
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(indices.size()));
}
BENCHMARK(BM_DemiShufflePoly)->DenseRange(3, 7);

void BM_MagnusPoly(benchmark::State &state) {
    const int len = static_cast<int>(state.range(0));
    const std::vector<MultiIndex> indices = indices_up_to_length(len, alphabet);
    for (auto _ : state) {
        for (const MultiIndex &k : indices) {
            auto poly = magnus_poly(k, alphabet);
            benchmark::DoNotOptimize(poly);
        }
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(indices.size()));
}
BENCHMARK(BM_MagnusPoly)->DenseRange(3, 7);

void BM_DualitySweep(benchmark::State &state) {
    const int len = static_cast<int>(state.range(0));
    const std::vector<MultiIndex> indices = indices_up_to_length(len, alphabet);
    std::vector<Polynomial> demi, magnus;
    for (const MultiIndex &k : indices) {
        demi.push_back(demi_shuffle_poly(k, alphabet));
        magnus.push_back(magnus_poly(k, alphabet));
    }
    for (auto _ : state) {
        Rational trace = 0;
        for (std::size_t i = 0; i < indices.size(); ++i)
            for (std::size_t j = 0; j < indices.size(); ++j)
                trace += pairing(demi[i], magnus[j]);
        benchmark::DoNotOptimize(trace);
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<std::int64_t>(indices.size() * indices.size()));
}
BENCHMARK(BM_DualitySweep)->DenseRange(4, 6);

void BM_VerifyReconstruction(benchmark::State &state) {
    const int cutoff = static_cast<int>(state.range(0));
    const GrouplikeSpec spec{alphabet, cutoff,
                             {{letter_x, 1}, {y_letter(1), Rational(1, 2)}, {letter_x, -2}}};
    const TruncatedSeries j = grouplike_from_spec(spec);
    for (auto _ : state) {
        auto report = verify_reconstruction(j);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_VerifyReconstruction)->DenseRange(4, 7);

} // namespace

int main(int argc, char **argv) {
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv))
        return 1;
    benchmark::RunSpecifiedBenchmarks();
    benchmark::Shutdown();
    return 0;
}
