#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lscd/corpus.hpp"
#include "lscd/rng.hpp"
#include "lscd/types.hpp"
#include "lscd/vocab.hpp"

namespace lscd {

struct TrainConfig {
    int dim = 100;
    int window = 5;
    int epochs = 5;
    int negative_samples = 5;
    double initial_lr = 0.025;
    bool subsampling = false;
    std::uint64_t seed = 1;
    // > 1 enables lock-free multi-worker updates over sentence shards; the
    // result is flagged non-deterministic. All tests train with 1.
    int num_threads = 1;

    void validate() const;
};

// Word and context vectors plus the settings they were trained with. Rows are
// aligned to vocab indices; word_matrix is what every downstream similarity
// uses.
struct EmbeddingModel {
    Vocabulary vocab;
    Matrix word_matrix;
    Matrix context_matrix;
    int dim = 0;
    int window = 0;
    int epochs = 0;
    std::uint64_t seed = 0;
    bool deterministic = true;
};

// Where initial weights come from. With a pretrained source, rows for shared
// vocabulary words copy both the word and the context vectors; words unknown
// to the source get the usual random initialization. length_normalize rescales
// every initialization word vector to unit L2 norm before training starts
// (context vectors only when normalize_context is set).
struct InitSpec {
    const EmbeddingModel* pretrained = nullptr;
    bool length_normalize = false;
    bool normalize_context = false;

    static InitSpec random() { return {}; }
    static InitSpec from(const EmbeddingModel& model, bool normalize = false) {
        return {&model, normalize, false};
    }
};

// Draws vocabulary indices i.i.d. from the smoothed unigram distribution
// frequency^exponent, normalized.
class UnigramSampler {
  public:
    explicit UnigramSampler(const Vocabulary& vocab, double exponent = 0.75);

    int sample(Rng& rng) const;
    std::vector<int> sample(Rng& rng, int k) const;

  private:
    std::vector<double> cdf_;
};

// Skip-gram with negative sampling, trained for exactly cfg.epochs full passes
// over the corpus. Deterministic for num_threads == 1.
EmbeddingModel train(const Corpus& corpus, const TrainConfig& cfg,
                     const InitSpec& init = {});

// Arithmetic mean of the L2 norms of the word vectors.
double mean_vector_length(const EmbeddingModel& model);

// Average SGNS objective (negative log loss) over a fixed probe sample of
// (center, context, negatives) triples; used to check that training improves
// the objective. Lower is better.
double probe_loss(const EmbeddingModel& model, const Corpus& corpus,
                  const TrainConfig& cfg, std::uint64_t probe_seed,
                  std::size_t num_probes = 2000);

// Persistence: word2vec text format ("|V| d" header, then token + d floats
// per line) for the word matrix; a sidecar with the same basename and a .meta
// extension stores training metadata as key-value lines followed by the
// context matrix.
void save_model(const EmbeddingModel& model, const std::string& path);
EmbeddingModel load_model(const std::string& path);

}  // namespace lscd
