#include "lscd/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "lscd/embeddings.hpp"

namespace lscd {

std::vector<double> average_ranks(const std::vector<double>& values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return values[a] < values[b];
    });

    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
        // tie block [i, j]: everyone gets the mean of ranks i+1..j+1
        const double rank = 0.5 * static_cast<double>(i + j) + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
        i = j + 1;
    }
    return ranks;
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw std::invalid_argument("length mismatch");
    const std::size_t n = x.size();
    if (n < 2) throw std::invalid_argument("need at least 2 points");

    double mean_x = 0.0, mean_y = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mean_x += x[i];
        mean_y += y[i];
    }
    mean_x /= static_cast<double>(n);
    mean_y /= static_cast<double>(n);

    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mean_x;
        const double dy = y[i] - mean_y;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0)
        throw std::runtime_error("undefined correlation: zero variance");
    return sxy / std::sqrt(sxx * syy);
}

double spearman(const std::vector<double>& pred,
                const std::vector<double>& gold) {
    if (pred.size() != gold.size())
        throw std::invalid_argument("spearman: length mismatch");
    if (pred.size() < 3)
        throw std::invalid_argument("spearman: need at least 3 items");
    return pearson(average_ranks(pred), average_ranks(gold));
}

EvalResult eval_similarity(const EmbeddingModel& model,
                           const GoldRanking& gold) {
    std::vector<double> sims, human;
    std::size_t dropped = 0;
    for (const auto& [pair, score] : gold.pairs) {
        const int i = model.vocab.index_of(pair.first);
        const int j = model.vocab.index_of(pair.second);
        if (i < 0 || j < 0) {
            ++dropped;
            continue;
        }
        sims.push_back(cosine_similarity(model.word_matrix.row(i).transpose(),
                                         model.word_matrix.row(j).transpose()));
        human.push_back(score);
    }
    if (sims.size() < 3)
        throw std::runtime_error("eval_similarity: fewer than 3 in-vocabulary "
                                 "pairs (coverage " +
                                 std::to_string(sims.size()) + ")");
    return {spearman(sims, human), sims.size(), dropped};
}

EvalResult eval_lscd(const ChangeRanking& ranking, const GoldRanking& gold) {
    std::vector<double> pred, truth;
    std::size_t dropped = 0;
    for (const auto& [word, score] : ranking.scores) {
        auto it = gold.words.find(word);
        if (!score.has_value() || it == gold.words.end()) {
            ++dropped;
            continue;
        }
        pred.push_back(*score);
        truth.push_back(it->second);
    }
    if (pred.size() < 3)
        throw std::runtime_error("eval_lscd: fewer than 3 targets shared with "
                                 "gold (coverage " +
                                 std::to_string(pred.size()) + ")");
    return {spearman(pred, truth), pred.size(), dropped};
}

}  // namespace lscd
