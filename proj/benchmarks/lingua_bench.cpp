#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "lingua/alphabet.hpp"
#include "lingua/corpus.hpp"
#include "lingua/profile.hpp"
#include "lingua/semantics.hpp"
#include "lingua/syntax.hpp"

namespace {

using namespace lingua;

std::string synthetic_text(std::uint32_t seed, std::size_t words) {
    std::mt19937 rng(seed);
    const std::string letters = "abcdefghijklmnopqrstuvwxyz";
    std::uniform_int_distribution<std::size_t> letter(0, letters.size() - 1);
    std::uniform_int_distribution<std::size_t> length(2, 9);
    std::string text;
    for (std::size_t i = 0; i < words; ++i) {
        if (i > 0) text += ' ';
        const std::size_t n = length(rng);
        for (std::size_t k = 0; k < n; ++k) text += letters[letter(rng)];
    }
    return text;
}

void BM_BuildProfile(benchmark::State& state) {
    const std::string text =
        synthetic_text(7, static_cast<std::size_t>(state.range(0)));
    const TokenStream tokens = tokenize(text);
    const Alphabet alphabet = Alphabet::french_default();
    for (auto _ : state) {
        benchmark::DoNotOptimize(FrequencyProfile::build(tokens, alphabet));
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<std::int64_t>(tokens.word_count()));
}
BENCHMARK(BM_BuildProfile)->Arg(1000)->Arg(10000);

void BM_CompareProfiles(benchmark::State& state) {
    const Alphabet alphabet = Alphabet::french_default();
    const FrequencyProfile p1 =
        FrequencyProfile::build(tokenize(synthetic_text(11, 5000)), alphabet);
    const FrequencyProfile p2 =
        FrequencyProfile::build(tokenize(synthetic_text(13, 5000)), alphabet);
    for (auto _ : state) {
        benchmark::DoNotOptimize(compare_profiles(p1, p2));
    }
}
BENCHMARK(BM_CompareProfiles);

void BM_TopNgrams(benchmark::State& state) {
    const FrequencyProfile p = FrequencyProfile::build(
        tokenize(synthetic_text(17, 5000)), Alphabet::french_default());
    for (auto _ : state) {
        benchmark::DoNotOptimize(top_ngrams(p, 10));
    }
}
BENCHMARK(BM_TopNgrams);

void BM_SyntaxLearn(benchmark::State& state) {
    const std::vector<std::vector<std::string>> sentences = {
        normalize_sentence("The man has a hat."),
        normalize_sentence("A man has the hat."),
        normalize_sentence("The dog ate a biscuit."),
    };
    for (auto _ : state) {
        SyntaxState syntax;
        syntax.lexicon = seed_lexicon(
            {{"has", "verb"}, {"hat", "noun"}, {"man", "noun"}});
        for (const auto& sentence : sentences) {
            benchmark::DoNotOptimize(
                learn(sentence, syntax.lexicon, syntax.catalog));
        }
    }
}
BENCHMARK(BM_SyntaxLearn);

void BM_SemanticsIngestAndCategorize(benchmark::State& state) {
    std::mt19937 rng(23);
    std::vector<AnnotatedSentence> sentences;
    for (int i = 0; i < 200; ++i) {
        AnnotatedSentence s;
        s.subject = "n" + std::to_string(rng() % 20);
        s.verb = "v" + std::to_string(rng() % 10);
        if (rng() % 2 == 0) {
            s.object = "n" + std::to_string(rng() % 20);
            s.adjectives.push_back(
                {"j" + std::to_string(rng() % 8), Attach::Object});
        }
        sentences.push_back(std::move(s));
    }
    for (auto _ : state) {
        AssociationWeb web;
        for (const auto& sentence : sentences) web.ingest(sentence);
        benchmark::DoNotOptimize(categorize(web, 0.5));
    }
}
BENCHMARK(BM_SemanticsIngestAndCategorize);

}  // namespace

BENCHMARK_MAIN();
