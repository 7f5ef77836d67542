// Copyright 2026 The pitchdata Authors
// SPDX-License-Identifier: Apache-2.0

// Serial vs OpenMP batch kernels.
//   pitchdata_bench --benchmark_filter=Caption

#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "pitchdata/eval/kernels.hpp"

using namespace pitchdata;

namespace {

const std::vector<std::string> kVocab = {"the",   "ball",  "keeper", "shot", "corner", "cross",  "defender",
                                         "clears", "goal", "wide",   "header", "box",  "striker", "wing"};

std::vector<std::string> sentences(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::string> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::string s;
        const auto words = 10 + rng() % 40;
        for (std::size_t w = 0; w < words; ++w) s += kVocab[rng() % kVocab.size()] + (w + 1 < words ? " " : ".");
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<std::string> labels() {
    return {events::kEventClassNames.begin(), events::kEventClassNames.end()};
}

std::vector<std::string> outputs(std::size_t n) {
    std::mt19937_64 rng(9);
    const auto l = labels();
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back("The action in this clip is " + l[rng() % l.size()] + ".");
    return out;
}

void BM_CaptionSerial(benchmark::State& st) {
    const auto c = sentences(static_cast<std::size_t>(st.range(0)), 1), r = sentences(c.size(), 2);
    for (auto _ : st) benchmark::DoNotOptimize(eval::serial::caption_metrics(c, r));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_CaptionOmp(benchmark::State& st) {
    const auto c = sentences(static_cast<std::size_t>(st.range(0)), 1), r = sentences(c.size(), 2);
    for (auto _ : st) benchmark::DoNotOptimize(eval::kernels::caption_metrics(c, r));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_NormalizeSerial(benchmark::State& st) {
    const auto o = outputs(static_cast<std::size_t>(st.range(0)));
    const auto l = labels();
    for (auto _ : st) benchmark::DoNotOptimize(eval::serial::normalize_labels(o, l));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_NormalizeOmp(benchmark::State& st) {
    const auto o = outputs(static_cast<std::size_t>(st.range(0)));
    const auto l = labels();
    for (auto _ : st) benchmark::DoNotOptimize(eval::kernels::normalize_labels(o, l));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

}  // namespace

BENCHMARK(BM_CaptionSerial)->Arg(1000)->Arg(10000);
BENCHMARK(BM_CaptionOmp)->Arg(1000)->Arg(10000);
BENCHMARK(BM_NormalizeSerial)->Arg(10000)->Arg(100000);
BENCHMARK(BM_NormalizeOmp)->Arg(10000)->Arg(100000);

BENCHMARK_MAIN();
