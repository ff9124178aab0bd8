#include "lscd/alignment.hpp"

#include <Eigen/SVD>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace lscd {

const char* to_string(AlignMethod method) {
    switch (method) {
        case AlignMethod::OP: return "op";
        case AlignMethod::VI: return "vi";
        case AlignMethod::WI: return "wi";
        case AlignMethod::NO: return "no";
    }
    return "?";
}

const char* to_string(PretrainSource source) {
    switch (source) {
        case PretrainSource::none: return "none";
        case PretrainSource::diachron: return "diachron";
        case PretrainSource::modern: return "modern";
    }
    return "?";
}

AlignMethod parse_align_method(const std::string& name) {
    if (name == "op") return AlignMethod::OP;
    if (name == "vi") return AlignMethod::VI;
    if (name == "wi") return AlignMethod::WI;
    if (name == "no") return AlignMethod::NO;
    throw std::invalid_argument("unknown alignment method: " + name);
}

PretrainSource parse_pretrain_source(const std::string& name) {
    if (name == "none") return PretrainSource::none;
    if (name == "diachron") return PretrainSource::diachron;
    if (name == "modern") return PretrainSource::modern;
    throw std::invalid_argument("unknown pretrain source: " + name);
}

Matrix solve_orthogonal_procrustes(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("procrustes: shape mismatch");
    if (a.rows() == 0) throw std::invalid_argument("procrustes: empty input");

    const Eigen::MatrixXd m = b.transpose() * a;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(
        m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Matrix w = svd.matrixU() * svd.matrixV().transpose();
    if (!w.allFinite())
        throw std::runtime_error("procrustes: SVD produced non-finite result");
    return w;
}

namespace {

void normalize_rows(Matrix& m) {
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        const double norm = m.row(r).norm();
        if (norm > 0.0) m.row(r) /= norm;
    }
}

std::vector<std::pair<int, int>> shared_vocab_rows(const Vocabulary& va,
                                                   const Vocabulary& vb) {
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < va.size(); ++i) {
        const int j = vb.index_of(va.token_at(static_cast<int>(i)));
        if (j >= 0) pairs.push_back({static_cast<int>(i), j});
    }
    return pairs;
}

Matrix gather_rows(const Matrix& m, const std::vector<std::pair<int, int>>& pairs,
                   bool second) {
    Matrix out(static_cast<Eigen::Index>(pairs.size()), m.cols());
    for (std::size_t i = 0; i < pairs.size(); ++i)
        out.row(static_cast<Eigen::Index>(i)) =
            m.row(second ? pairs[i].second : pairs[i].first);
    return out;
}

std::string cfg_note(const TrainConfig& cfg) {
    std::ostringstream ss;
    ss << "cfg d=" << cfg.dim << " w=" << cfg.window << " e=" << cfg.epochs
       << " k=" << cfg.negative_samples << " lr=" << cfg.initial_lr
       << " seed=" << cfg.seed;
    return ss.str();
}

}  // namespace

AlignedSpaces align_op(const EmbeddingModel& m1, const EmbeddingModel& m2) {
    if (m1.dim != m2.dim)
        throw std::invalid_argument("align_op: dimension mismatch");
    const auto pairs = shared_vocab_rows(m1.vocab, m2.vocab);
    if (pairs.empty())
        throw std::runtime_error("align_op: shared vocabulary is empty");

    AlignedSpaces spaces;
    spaces.method = AlignMethod::OP;
    spaces.vocab_a = m1.vocab;
    spaces.vocab_b = m2.vocab;
    spaces.matrix_a = m1.word_matrix;
    spaces.matrix_b = m2.word_matrix;

    normalize_rows(spaces.matrix_a);
    normalize_rows(spaces.matrix_b);

    // column means over the shared-vocabulary submatrices, applied everywhere
    const Matrix shared_a = gather_rows(spaces.matrix_a, pairs, false);
    const Matrix shared_b = gather_rows(spaces.matrix_b, pairs, true);
    const Eigen::RowVectorXd mean_a = shared_a.colwise().mean();
    const Eigen::RowVectorXd mean_b = shared_b.colwise().mean();
    spaces.matrix_a.rowwise() -= mean_a;
    spaces.matrix_b.rowwise() -= mean_b;

    const Matrix w = solve_orthogonal_procrustes(
        gather_rows(spaces.matrix_a, pairs, false),
        gather_rows(spaces.matrix_b, pairs, true));
    spaces.matrix_b = spaces.matrix_b * w;
    spaces.notes.push_back("shared_vocab=" + std::to_string(pairs.size()));
    return spaces;
}

AlignedSpaces align_vi(const Corpus& c1, const Corpus& c2,
                       const TrainConfig& cfg) {
    const EmbeddingModel model_a = train(c1, cfg, InitSpec::random());
    TrainConfig cfg_b = cfg;
    cfg_b.seed = cfg.seed + 1;
    const EmbeddingModel model_b = train(c2, cfg_b, InitSpec::from(model_a));

    AlignedSpaces spaces;
    spaces.method = AlignMethod::VI;
    spaces.vocab_a = model_a.vocab;
    spaces.vocab_b = model_b.vocab;
    spaces.matrix_a = model_a.word_matrix;
    spaces.matrix_b = model_b.word_matrix;
    spaces.notes.push_back(cfg_note(cfg));
    return spaces;
}

AlignedSpaces align_no(const Corpus& c1, const Corpus& c2,
                       const TrainConfig& cfg, const EmbeddingModel& pretrained,
                       bool length_normalize, bool identical_seeds) {
    InitSpec init = InitSpec::from(pretrained, length_normalize);
    const EmbeddingModel model_a = train(c1, cfg, init);
    TrainConfig cfg_b = cfg;
    if (!identical_seeds) cfg_b.seed = cfg.seed + 1;
    const EmbeddingModel model_b = train(c2, cfg_b, init);

    AlignedSpaces spaces;
    spaces.method = AlignMethod::NO;
    spaces.vocab_a = model_a.vocab;
    spaces.vocab_b = model_b.vocab;
    spaces.matrix_a = model_a.word_matrix;
    spaces.matrix_b = model_b.word_matrix;
    spaces.notes.push_back(cfg_note(cfg));
    if (length_normalize) spaces.notes.push_back("length_normalize=1");
    return spaces;
}

AlignedSpaces align_wi(const Corpus& c1, const Corpus& c2,
                       const TargetWordList& targets, const TrainConfig& cfg,
                       std::uint64_t seed) {
    if (targets.words.empty())
        throw std::invalid_argument("align_wi: empty target list");
    WordInjectResult injected = word_inject(c1, c2, targets, seed);
    const EmbeddingModel model =
        train(injected.joint, cfg, InitSpec::random());

    // Logical per-period vocabularies: the tagged form of each target is
    // exposed under the plain target name; everything else keeps its shared
    // row. Indices follow the joint vocabulary so both map into one matrix.
    auto relabel = [&](int period) {
        std::unordered_map<std::string, std::string> rename;
        for (const auto& [word, entry] : injected.targets)
            rename.emplace(period == 1 ? entry.tagged_t1 : entry.tagged_t2,
                           word);
        Vocabulary vocab;
        for (std::size_t i = 0; i < model.vocab.size(); ++i) {
            const std::string& token =
                model.vocab.token_at(static_cast<int>(i));
            auto it = rename.find(token);
            vocab.add(it == rename.end() ? token : it->second,
                      model.vocab.frequency_at(static_cast<int>(i)));
        }
        return vocab;
    };

    AlignedSpaces spaces;
    spaces.method = AlignMethod::WI;
    spaces.matrix_a = model.word_matrix;
    spaces.matrix_b = model.word_matrix;
    spaces.vocab_a = relabel(1);
    spaces.vocab_b = relabel(2);
    spaces.notes.push_back(cfg_note(cfg));
    for (const auto& warning : injected.warnings)
        spaces.notes.push_back(warning);
    for (const auto& [word, entry] : injected.targets) {
        if (entry.freq_t1 == 0 && entry.freq_t2 > 0)
            spaces.notes.push_back("target '" + word +
                                   "' has zero frequency in corpus 1");
        if (entry.freq_t2 == 0 && entry.freq_t1 > 0)
            spaces.notes.push_back("target '" + word +
                                   "' has zero frequency in corpus 2");
    }
    return spaces;
}

EmbeddingModel pretrain_workflow(PretrainSource source, const Corpus& c1,
                                 const Corpus& c2, const TrainConfig& cfg) {
    if (source != PretrainSource::diachron)
        throw std::invalid_argument(
            "pretrain_workflow: modern pre-training takes the external corpus "
            "overload");
    return train(concat_corpora(c1, c2), cfg, InitSpec::random());
}

EmbeddingModel pretrain_workflow_modern(const Corpus& modern,
                                        const TrainConfig& cfg) {
    return train(modern, cfg, InitSpec::random());
}

namespace {

void save_matrix_file(const Matrix& m, const Vocabulary& vocab,
                      const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write matrix file: " + path);
    out << vocab.size() << ' ' << m.cols() << '\n';
    char buffer[32];
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        out << vocab.token_at(static_cast<int>(r));
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            std::snprintf(buffer, sizeof(buffer), "%.17g", m(r, c));
            out << ' ' << buffer;
        }
        out << '\n';
    }
    if (!out) throw std::runtime_error("I/O error writing: " + path);
}

void load_matrix_file(const std::string& path, Matrix& m, Vocabulary& vocab) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open matrix file: " + path);
    std::size_t rows;
    Eigen::Index cols;
    if (!(in >> rows >> cols))
        throw std::runtime_error("malformed matrix header in " + path);
    m.resize(static_cast<Eigen::Index>(rows), cols);
    for (std::size_t r = 0; r < rows; ++r) {
        std::string token;
        if (!(in >> token))
            throw std::runtime_error("truncated matrix file: " + path);
        vocab.add(token);
        for (Eigen::Index c = 0; c < cols; ++c)
            if (!(in >> m(static_cast<Eigen::Index>(r), c)))
                throw std::runtime_error("truncated matrix file: " + path);
    }
}

}  // namespace

void save_spaces(const AlignedSpaces& spaces, const std::string& basename) {
    save_matrix_file(spaces.matrix_a, spaces.vocab_a, basename + ".a.vec");
    save_matrix_file(spaces.matrix_b, spaces.vocab_b, basename + ".b.vec");
    std::ofstream prov(basename + ".prov");
    if (!prov)
        throw std::runtime_error("cannot write provenance: " + basename +
                                 ".prov");
    prov << "method " << to_string(spaces.method) << '\n'
         << "pretrain " << to_string(spaces.pretrain) << '\n';
    for (const auto& note : spaces.notes) prov << "note " << note << '\n';
}

AlignedSpaces load_spaces(const std::string& basename) {
    AlignedSpaces spaces;
    load_matrix_file(basename + ".a.vec", spaces.matrix_a, spaces.vocab_a);
    load_matrix_file(basename + ".b.vec", spaces.matrix_b, spaces.vocab_b);
    std::ifstream prov(basename + ".prov");
    if (!prov)
        throw std::runtime_error("cannot open provenance: " + basename +
                                 ".prov");
    std::string line;
    while (std::getline(prov, line)) {
        std::istringstream ss(line);
        std::string key;
        ss >> key;
        if (key == "method") {
            std::string value;
            ss >> value;
            spaces.method = parse_align_method(value);
        } else if (key == "pretrain") {
            std::string value;
            ss >> value;
            spaces.pretrain = parse_pretrain_source(value);
        } else if (key == "note") {
            std::string rest;
            std::getline(ss, rest);
            if (!rest.empty() && rest.front() == ' ') rest.erase(0, 1);
            spaces.notes.push_back(rest);
        }
    }
    return spaces;
}

}  // namespace lscd
