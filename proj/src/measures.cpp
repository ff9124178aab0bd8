#include "lscd/measures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "lscd/alignment.hpp"
#include "lscd/corpus.hpp"

namespace lscd {

double cosine_similarity(const Eigen::Ref<const Vector>& u,
                         const Eigen::Ref<const Vector>& v) {
    if (u.size() != v.size())
        throw std::invalid_argument("cosine: dimension mismatch");
    const double nu = u.norm();
    const double nv = v.norm();
    if (nu == 0.0 || nv == 0.0)
        throw std::invalid_argument("cosine: degenerate vector");
    return u.dot(v) / (nu * nv);
}

double cosine_distance(const Eigen::Ref<const Vector>& u,
                       const Eigen::Ref<const Vector>& v) {
    return 1.0 - cosine_similarity(u, v);
}

std::size_t ChangeRanking::scored_count() const {
    std::size_t n = 0;
    for (const auto& [word, score] : scores)
        if (score.has_value()) ++n;
    return n;
}

std::size_t ChangeRanking::missing_count() const {
    return scores.size() - scored_count();
}

ChangeRanking score_targets(const AlignedSpaces& spaces,
                            const TargetWordList& targets) {
    ChangeRanking ranking;
    for (const auto& word : targets.words) {
        const int ia = spaces.vocab_a.index_of(word);
        const int ib = spaces.vocab_b.index_of(word);
        if (ia < 0 || ib < 0) {
            ranking.scores[word] = std::nullopt;
            continue;
        }
        const Vector u = spaces.matrix_a.row(ia).transpose();
        const Vector v = spaces.matrix_b.row(ib).transpose();
        if (u.norm() == 0.0 || v.norm() == 0.0) {
            ranking.scores[word] = std::nullopt;  // degenerate, not 0
            continue;
        }
        ranking.scores[word] = cosine_distance(u, v);
    }
    return ranking;
}

void save_change_ranking(const ChangeRanking& ranking,
                         const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write scores: " + path);
    char buffer[32];
    for (const auto& [word, score] : ranking.scores) {
        if (score.has_value()) {
            std::snprintf(buffer, sizeof(buffer), "%.17g", *score);
            out << word << '\t' << buffer << '\n';
        } else {
            out << word << '\t' << "NA" << '\n';
        }
    }
}

ChangeRanking load_change_ranking(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open scores: " + path);
    ChangeRanking ranking;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string word, value;
        if (!(ss >> word >> value))
            throw std::runtime_error("malformed score line in " + path);
        if (value == "NA")
            ranking.scores[word] = std::nullopt;
        else
            ranking.scores[word] = std::stod(value);
    }
    return ranking;
}

}  // namespace lscd
