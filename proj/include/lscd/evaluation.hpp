#pragma once

#include <cstddef>
#include <vector>

#include "lscd/gold.hpp"
#include "lscd/measures.hpp"

namespace lscd {

struct EmbeddingModel;

// Average ranks of v, ties resolved fractionally (1-based).
std::vector<double> average_ranks(const std::vector<double>& values);

// Pearson correlation; throws on zero variance or length < 2.
double pearson(const std::vector<double>& x, const std::vector<double>& y);

// Tie-corrected Spearman: Pearson correlation of average-tied ranks.
// Throws on length mismatch, length < 3, and zero rank variance
// ("undefined correlation").
double spearman(const std::vector<double>& pred, const std::vector<double>& gold);

struct EvalResult {
    double rho = 0.0;
    std::size_t coverage = 0;  // items actually evaluated
    std::size_t dropped = 0;   // OOV pairs / unscored or non-gold targets
};

// Word similarity task: cosine similarity per in-vocabulary pair, Spearman
// against the human scores. Pairs with an OOV word are dropped and counted.
EvalResult eval_similarity(const EmbeddingModel& model, const GoldRanking& gold);

// Graded change task: Spearman over targets that are both scored and in gold.
EvalResult eval_lscd(const ChangeRanking& ranking, const GoldRanking& gold);

}  // namespace lscd
