#pragma once

#include <cstdint>
#include <string>

#include "lscd/corpus.hpp"
#include "lscd/gold.hpp"

namespace lscd {

// Desk-scale stand-in for annotated diachronic data. Pseudo-words draw their
// contexts from topic clusters: a stable target keeps its cluster across both
// corpora, a changed target switches clusters, so its context distributions
// have zero overlap between the periods.
struct SyntheticConfig {
    int vocab_size = 200;            // context pseudo-words, split over clusters
    int num_clusters = 2;
    int sentences_per_corpus = 2500;
    int sentence_length = 20;        // tokens per sentence, incl. the target
    int num_changed = 2;
    int num_stable = 8;
    // 0 = all targets equally likely per sentence; > 0 skews the draw so that
    // target i gets weight (1 + frequency_skew * i) and frequencies vary.
    double frequency_skew = 0.0;
};

struct SyntheticPair {
    Corpus corpus1;
    Corpus corpus2;
    TargetWordList targets;
    GoldRanking gold;  // changed -> 1.0, stable -> 0.0
};

SyntheticPair generate_synthetic_change_pair(const SyntheticConfig& config,
                                             std::uint64_t seed);

}  // namespace lscd
