#include "lscd/synthetic.hpp"

#include <stdexcept>

#include "lscd/rng.hpp"

namespace lscd {

namespace {

struct TargetSpec {
    std::string word;
    int cluster_t1;
    int cluster_t2;
    bool changed;
};

void validate(const SyntheticConfig& config) {
    if (config.vocab_size < 1 || config.num_clusters < 1 ||
        config.sentences_per_corpus < 1 || config.sentence_length < 2)
        throw std::invalid_argument("synthetic config: sizes must be positive");
    if (config.num_changed < 0 || config.num_stable < 0 ||
        config.num_changed + config.num_stable < 1)
        throw std::invalid_argument("synthetic config: need at least one target");
    if (config.num_changed > 0 && config.num_clusters < 2)
        throw std::invalid_argument(
            "synthetic config: changed targets need >= 2 clusters");
    if (config.vocab_size < config.num_clusters)
        throw std::invalid_argument(
            "synthetic config: fewer context words than clusters");
    if (config.num_changed + config.num_stable > config.vocab_size)
        throw std::invalid_argument(
            "synthetic config: more targets than vocabulary");
}

}  // namespace

SyntheticPair generate_synthetic_change_pair(const SyntheticConfig& config,
                                             std::uint64_t seed) {
    validate(config);

    // Context vocabulary, partitioned round-robin over clusters.
    std::vector<std::vector<std::string>> clusters(config.num_clusters);
    for (int i = 0; i < config.vocab_size; ++i)
        clusters[i % config.num_clusters].push_back(
            "c" + std::to_string(i % config.num_clusters) + "w" +
            std::to_string(i / config.num_clusters));

    std::vector<TargetSpec> specs;
    for (int i = 0; i < config.num_changed; ++i)
        specs.push_back({"chg" + std::to_string(i), i % config.num_clusters,
                         (i + 1) % config.num_clusters, true});
    for (int i = 0; i < config.num_stable; ++i)
        specs.push_back({"stb" + std::to_string(i), i % config.num_clusters,
                         i % config.num_clusters, false});

    std::vector<double> weights(specs.size());
    for (std::size_t i = 0; i < specs.size(); ++i)
        weights[i] = 1.0 + config.frequency_skew * static_cast<double>(i);

    Rng rng(seed);
    auto build_corpus = [&](int period, const std::string& name) {
        std::vector<Sentence> sentences;
        sentences.reserve(config.sentences_per_corpus);
        for (int s = 0; s < config.sentences_per_corpus; ++s) {
            const auto& spec = specs[weighted_index(rng, weights)];
            const auto& pool =
                clusters[period == 1 ? spec.cluster_t1 : spec.cluster_t2];
            Sentence sentence(config.sentence_length);
            const std::size_t target_pos =
                uniform_index(rng, config.sentence_length);
            for (int t = 0; t < config.sentence_length; ++t) {
                if (static_cast<std::size_t>(t) == target_pos)
                    sentence[t] = spec.word;
                else
                    sentence[t] = pool[uniform_index(rng, pool.size())];
            }
            sentences.push_back(std::move(sentence));
        }
        return make_corpus(std::move(sentences), name, 1);
    };

    SyntheticPair pair;
    pair.corpus1 = build_corpus(1, "synthetic_t1");
    pair.corpus2 = build_corpus(2, "synthetic_t2");
    for (const auto& spec : specs) {
        pair.targets.words.push_back(spec.word);
        pair.gold.words[spec.word] = spec.changed ? 1.0 : 0.0;
    }
    return pair;
}

}  // namespace lscd
