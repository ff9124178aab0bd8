#include "lscd/embeddings.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace lscd {

namespace {

constexpr double kUnigramExponent = 0.75;
constexpr double kMinLrFraction = 1e-4;        // linear decay floor: lr0/10000
constexpr double kSubsampleThreshold = 1e-3;

inline double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

std::vector<std::vector<int>> to_id_sentences(const Corpus& corpus) {
    std::vector<std::vector<int>> ids;
    ids.reserve(corpus.sentences.size());
    for (const auto& sentence : corpus.sentences) {
        std::vector<int> row;
        row.reserve(sentence.size());
        for (const auto& token : sentence)
            row.push_back(corpus.vocab.index_of(token));
        ids.push_back(std::move(row));
    }
    return ids;
}

}  // namespace

void TrainConfig::validate() const {
    if (dim < 1) throw std::invalid_argument("dim must be positive");
    if (window < 1) throw std::invalid_argument("window must be positive");
    if (epochs < 0) throw std::invalid_argument("epochs must be >= 0");
    if (negative_samples < 1)
        throw std::invalid_argument("negative_samples must be positive");
    if (!(initial_lr > 0.0))
        throw std::invalid_argument("initial_lr must be positive");
    if (num_threads < 1)
        throw std::invalid_argument("num_threads must be positive");
}

UnigramSampler::UnigramSampler(const Vocabulary& vocab, double exponent) {
    if (vocab.size() == 0)
        throw std::invalid_argument("unigram table over empty vocabulary");
    cdf_.resize(vocab.size());
    double cumulative = 0.0;
    for (std::size_t i = 0; i < vocab.size(); ++i) {
        cumulative += std::pow(static_cast<double>(vocab.frequency_at(
                                   static_cast<int>(i))),
                               exponent);
        cdf_[i] = cumulative;
    }
    for (auto& value : cdf_) value /= cumulative;
    cdf_.back() = 1.0;
}

int UnigramSampler::sample(Rng& rng) const {
    const double u = uniform01(rng);
    auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    if (it == cdf_.end()) --it;
    return static_cast<int>(it - cdf_.begin());
}

std::vector<int> UnigramSampler::sample(Rng& rng, int k) const {
    std::vector<int> indices(k);
    for (int i = 0; i < k; ++i) indices[i] = sample(rng);
    return indices;
}

namespace {

// Initial weights: word rows uniform in [-0.5/d, +0.5/d] per component,
// context rows zero; entries from a pretrained source override both.
void initialize(EmbeddingModel& model, const TrainConfig& cfg,
                const InitSpec& init, Rng& rng) {
    const auto rows = static_cast<Eigen::Index>(model.vocab.size());
    model.word_matrix.resize(rows, cfg.dim);
    model.context_matrix = Matrix::Zero(rows, cfg.dim);

    const double half = 0.5 / static_cast<double>(cfg.dim);
    for (Eigen::Index r = 0; r < rows; ++r)
        for (int c = 0; c < cfg.dim; ++c)
            model.word_matrix(r, c) = uniform_real(rng, -half, half);

    if (init.pretrained != nullptr) {
        const EmbeddingModel& source = *init.pretrained;
        if (source.dim != cfg.dim)
            throw std::invalid_argument(
                "init dimension mismatch: pretrained d=" +
                std::to_string(source.dim) + ", cfg d=" +
                std::to_string(cfg.dim));
        for (Eigen::Index r = 0; r < rows; ++r) {
            const int src = source.vocab.index_of(
                model.vocab.token_at(static_cast<int>(r)));
            if (src < 0) continue;
            model.word_matrix.row(r) = source.word_matrix.row(src);
            model.context_matrix.row(r) = source.context_matrix.row(src);
        }
    }

    if (init.length_normalize) {
        for (Eigen::Index r = 0; r < rows; ++r) {
            const double norm = model.word_matrix.row(r).norm();
            if (norm > 0.0) model.word_matrix.row(r) /= norm;
        }
    }
    if (init.normalize_context) {
        for (Eigen::Index r = 0; r < rows; ++r) {
            const double norm = model.context_matrix.row(r).norm();
            if (norm > 0.0) model.context_matrix.row(r) /= norm;
        }
    }
}

struct TrainContext {
    Matrix* word;
    Matrix* ctx;
    const UnigramSampler* sampler;
    const TrainConfig* cfg;
    double inv_total_steps;  // 1 / (epochs * token_count)
    std::vector<double> keep_prob;  // per-id, only filled when subsampling
};

// One SGNS step for a (center, context) pair: positive target plus k
// negatives; the center's word vector and the targets' context vectors move.
inline void train_pair(const TrainContext& tc, int center, int context,
                       double lr, Rng& rng, Vector& grad) {
    Matrix& word = *tc.word;
    Matrix& ctx = *tc.ctx;
    grad.setZero();
    for (int k = 0; k <= tc.cfg->negative_samples; ++k) {
        int target;
        double label;
        if (k == 0) {
            target = context;
            label = 1.0;
        } else {
            target = tc.sampler->sample(rng);
            if (target == context) continue;
            label = 0.0;
        }
        const double score = word.row(center).dot(ctx.row(target));
        const double g = (label - sigmoid(score)) * lr;
        grad += g * ctx.row(target).transpose();
        ctx.row(target) += g * word.row(center);
    }
    word.row(center) += grad.transpose();
}

void train_shard(const TrainContext& tc,
                 const std::vector<std::vector<int>>& sentences,
                 std::size_t begin, std::size_t end, Rng& rng,
                 std::atomic<std::int64_t>& processed) {
    const TrainConfig& cfg = *tc.cfg;
    Vector grad(cfg.dim);
    std::vector<int> kept;
    for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
        for (std::size_t s = begin; s < end; ++s) {
            const std::vector<int>* sentence = &sentences[s];
            if (cfg.subsampling) {
                kept.clear();
                for (int id : *sentence)
                    if (uniform01(rng) < tc.keep_prob[id]) kept.push_back(id);
                sentence = &kept;
            }
            // lr progress counts every corpus token, kept or not
            const std::int64_t step = processed.fetch_add(
                static_cast<std::int64_t>(sentences[s].size()),
                std::memory_order_relaxed);
            const double progress =
                static_cast<double>(step) * tc.inv_total_steps;
            const double lr =
                cfg.initial_lr * std::max(1.0 - progress, kMinLrFraction);

            const auto len = static_cast<int>(sentence->size());
            for (int pos = 0; pos < len; ++pos) {
                // dynamic window: effective size uniform in 1..window
                const int b =
                    1 + static_cast<int>(uniform_index(rng, cfg.window));
                for (int off = -b; off <= b; ++off) {
                    if (off == 0) continue;
                    const int j = pos + off;
                    if (j < 0 || j >= len) continue;
                    train_pair(tc, (*sentence)[pos], (*sentence)[j], lr, rng,
                               grad);
                }
            }
        }
    }
}

}  // namespace

EmbeddingModel train(const Corpus& corpus, const TrainConfig& cfg,
                     const InitSpec& init) {
    cfg.validate();
    if (corpus.token_count == 0 || corpus.vocab.size() == 0)
        throw std::invalid_argument("train: empty corpus");

    EmbeddingModel model;
    model.vocab = corpus.vocab;
    model.dim = cfg.dim;
    model.window = cfg.window;
    model.epochs = cfg.epochs;
    model.seed = cfg.seed;
    model.deterministic = cfg.num_threads == 1;

    Rng rng(cfg.seed);
    initialize(model, cfg, init, rng);
    if (cfg.epochs == 0) return model;

    const auto sentences = to_id_sentences(corpus);
    UnigramSampler sampler(corpus.vocab, kUnigramExponent);

    TrainContext tc{&model.word_matrix, &model.context_matrix, &sampler, &cfg,
                    1.0 / (static_cast<double>(cfg.epochs) *
                           static_cast<double>(corpus.token_count)),
                    {}};
    if (cfg.subsampling) {
        tc.keep_prob.resize(corpus.vocab.size());
        const auto total = static_cast<double>(corpus.vocab.total_count());
        for (std::size_t i = 0; i < corpus.vocab.size(); ++i) {
            const double rel = static_cast<double>(corpus.vocab.frequency_at(
                                   static_cast<int>(i))) /
                               total;
            const double ratio = kSubsampleThreshold / rel;
            tc.keep_prob[i] = std::min(1.0, std::sqrt(ratio) + ratio);
        }
    }

    std::atomic<std::int64_t> processed{0};
    if (cfg.num_threads == 1) {
        train_shard(tc, sentences, 0, sentences.size(), rng, processed);
    } else {
        std::vector<std::thread> workers;
        const std::size_t n = sentences.size();
        for (int t = 0; t < cfg.num_threads; ++t) {
            const std::size_t begin = n * t / cfg.num_threads;
            const std::size_t end = n * (t + 1) / cfg.num_threads;
            workers.emplace_back([&, begin, end, t] {
                Rng worker_rng(cfg.seed + 0x9E3779B97F4A7C15ULL *
                                              static_cast<std::uint64_t>(t + 1));
                train_shard(tc, sentences, begin, end, worker_rng, processed);
            });
        }
        for (auto& worker : workers) worker.join();
    }

    if (!model.word_matrix.allFinite() || !model.context_matrix.allFinite())
        throw std::runtime_error("train: non-finite weights after training");
    return model;
}

double mean_vector_length(const EmbeddingModel& model) {
    if (model.word_matrix.rows() == 0) return 0.0;
    return model.word_matrix.rowwise().norm().mean();
}

double probe_loss(const EmbeddingModel& model, const Corpus& corpus,
                  const TrainConfig& cfg, std::uint64_t probe_seed,
                  std::size_t num_probes) {
    const auto sentences = to_id_sentences(corpus);
    UnigramSampler sampler(corpus.vocab, kUnigramExponent);
    Rng rng(probe_seed);

    double loss = 0.0;
    std::size_t count = 0;
    while (count < num_probes) {
        const auto& sentence =
            sentences[uniform_index(rng, sentences.size())];
        if (sentence.size() < 2) continue;
        const auto pos = uniform_index(rng, sentence.size());
        const int b = 1 + static_cast<int>(uniform_index(rng, cfg.window));
        std::vector<int> contexts;
        for (int off = -b; off <= b; ++off) {
            const auto j = static_cast<std::int64_t>(pos) + off;
            if (off == 0 || j < 0 ||
                j >= static_cast<std::int64_t>(sentence.size()))
                continue;
            contexts.push_back(sentence[j]);
        }
        if (contexts.empty()) continue;
        const int center = sentence[pos];
        const int context = contexts[uniform_index(rng, contexts.size())];

        double sample_loss = -std::log(std::max(
            sigmoid(model.word_matrix.row(center)
                        .dot(model.context_matrix.row(context))),
            1e-12));
        for (int k = 0; k < cfg.negative_samples; ++k) {
            const int negative = sampler.sample(rng);
            sample_loss -= std::log(std::max(
                sigmoid(-model.word_matrix.row(center)
                             .dot(model.context_matrix.row(negative))),
                1e-12));
        }
        loss += sample_loss;
        ++count;
    }
    return loss / static_cast<double>(num_probes);
}

namespace {

void write_double(std::ostream& out, double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    out << buffer;
}

void write_matrix_rows(std::ostream& out, const Vocabulary& vocab,
                       const Matrix& matrix, bool with_freq) {
    for (Eigen::Index r = 0; r < matrix.rows(); ++r) {
        out << vocab.token_at(static_cast<int>(r));
        if (with_freq) out << ' ' << vocab.frequency_at(static_cast<int>(r));
        for (Eigen::Index c = 0; c < matrix.cols(); ++c) {
            out << ' ';
            write_double(out, matrix(r, c));
        }
        out << '\n';
    }
}

std::filesystem::path sidecar_path(const std::string& path) {
    return std::filesystem::path(path).replace_extension(".meta");
}

}  // namespace

void save_model(const EmbeddingModel& model, const std::string& path) {
    std::ofstream vec(path);
    if (!vec) throw std::runtime_error("cannot write model file: " + path);
    vec << model.vocab.size() << ' ' << model.dim << '\n';
    write_matrix_rows(vec, model.vocab, model.word_matrix, false);
    if (!vec) throw std::runtime_error("I/O error writing: " + path);

    const auto meta_path = sidecar_path(path);
    std::ofstream meta(meta_path);
    if (!meta)
        throw std::runtime_error("cannot write sidecar: " + meta_path.string());
    meta << "dim " << model.dim << '\n'
         << "window " << model.window << '\n'
         << "epochs " << model.epochs << '\n'
         << "seed " << model.seed << '\n'
         << "deterministic " << (model.deterministic ? 1 : 0) << '\n';
    meta << "context_vectors " << model.vocab.size() << ' ' << model.dim
         << '\n';
    write_matrix_rows(meta, model.vocab, model.context_matrix, true);
    if (!meta)
        throw std::runtime_error("I/O error writing: " + meta_path.string());
}

EmbeddingModel load_model(const std::string& path) {
    std::ifstream vec(path);
    if (!vec) throw std::runtime_error("cannot open model file: " + path);
    std::size_t rows;
    int dim;
    if (!(vec >> rows >> dim))
        throw std::runtime_error("malformed model header in " + path);

    EmbeddingModel model;
    model.dim = dim;
    model.word_matrix.resize(static_cast<Eigen::Index>(rows), dim);
    std::vector<std::string> tokens(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!(vec >> tokens[r]))
            throw std::runtime_error("truncated model file: " + path);
        for (int c = 0; c < dim; ++c)
            if (!(vec >> model.word_matrix(static_cast<Eigen::Index>(r), c)))
                throw std::runtime_error("truncated model file: " + path);
    }

    const auto meta_path = sidecar_path(path);
    std::ifstream meta(meta_path);
    if (!meta)
        throw std::runtime_error("missing sidecar: " + meta_path.string());
    model.context_matrix = Matrix::Zero(static_cast<Eigen::Index>(rows), dim);
    std::vector<std::int64_t> freqs(rows, 1);
    std::string key;
    while (meta >> key) {
        if (key == "dim") {
            meta >> model.dim;
        } else if (key == "window") {
            meta >> model.window;
        } else if (key == "epochs") {
            meta >> model.epochs;
        } else if (key == "seed") {
            meta >> model.seed;
        } else if (key == "deterministic") {
            int flag;
            meta >> flag;
            model.deterministic = flag != 0;
        } else if (key == "context_vectors") {
            std::size_t crows;
            int cdim;
            meta >> crows >> cdim;
            if (crows != rows || cdim != dim)
                throw std::runtime_error("sidecar shape mismatch: " +
                                         meta_path.string());
            for (std::size_t r = 0; r < crows; ++r) {
                std::string token;
                meta >> token >> freqs[r];
                if (token != tokens[r])
                    throw std::runtime_error("sidecar vocabulary mismatch: " +
                                             meta_path.string());
                for (int c = 0; c < cdim; ++c)
                    meta >> model.context_matrix(
                        static_cast<Eigen::Index>(r), c);
            }
        } else {
            std::string skipped;
            std::getline(meta, skipped);
        }
    }
    for (std::size_t r = 0; r < rows; ++r) model.vocab.add(tokens[r], freqs[r]);
    return model;
}

}  // namespace lscd
