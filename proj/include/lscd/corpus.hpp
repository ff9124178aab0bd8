#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lscd/vocab.hpp"

namespace lscd {

using Sentence = std::vector<std::string>;

// An ordered collection of sentences with a vocabulary and frequency table.
struct Corpus {
    std::vector<Sentence> sentences;
    std::string name;
    std::int64_t token_count = 0;
    Vocabulary vocab;

    // Recounts vocab and token_count from `sentences`.
    void rebuild_vocab();
};

// One word per line, no duplicates, non-empty.
struct TargetWordList {
    std::vector<std::string> words;
};

// Builds a corpus from in-memory sentences (applies the same frequency filter
// as load_corpus).
Corpus make_corpus(std::vector<Sentence> sentences, const std::string& name,
                   std::int64_t min_freq = 1);

// Reads a corpus file: one sentence per line, whitespace-separated tokens.
// Tokens whose corpus frequency is below min_freq are removed from every
// sentence; sentences left empty are dropped. Throws on I/O failure and when
// nothing survives the filter ("empty corpus").
Corpus load_corpus(const std::string& path, std::int64_t min_freq,
                   const std::string& name = "");

void save_corpus(const Corpus& corpus, const std::string& path);

TargetWordList load_target_words(const std::string& path);
void save_target_words(const TargetWordList& targets, const std::string& path);

// Sentences of both corpora in order, frequency-sum vocabulary union.
// This is the DIACHRON pre-training corpus.
Corpus concat_corpora(const Corpus& c1, const Corpus& c2);

// Period tags appended to injected target tokens. ASCII-safe on purpose.
extern const char* const kInjectTagPeriod1;
extern const char* const kInjectTagPeriod2;

struct InjectedTarget {
    std::string tagged_t1;
    std::string tagged_t2;
    std::int64_t freq_t1 = 0;  // occurrences replaced in corpus 1
    std::int64_t freq_t2 = 0;
    bool missing_everywhere() const { return freq_t1 == 0 && freq_t2 == 0; }
};

struct WordInjectResult {
    Corpus joint;
    std::map<std::string, InjectedTarget> targets;  // target -> tagged forms
    std::vector<std::string> warnings;              // e.g. target absent from both corpora
};

// Replaces every occurrence of a target word with its period-tagged form and
// shuffles the combined sentence list with a seed-determined permutation.
WordInjectResult word_inject(const Corpus& c1, const Corpus& c2,
                             const TargetWordList& targets, std::uint64_t seed);

}  // namespace lscd
