#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace lscd {

// Human (or constructed) judgments: item -> score. Items are single words for
// the change task and word pairs for the similarity task.
struct GoldRanking {
    std::map<std::string, double> words;                          // change task
    std::vector<std::pair<std::pair<std::string, std::string>, double>> pairs;  // similarity task

    bool empty() const { return words.empty() && pairs.empty(); }
};

// word TAB score per line (SemEval-2020 Task 1 convention).
GoldRanking load_gold_ranking(const std::string& path);
void save_gold_ranking(const GoldRanking& gold, const std::string& path);

// word1 TAB word2 TAB score per line.
GoldRanking load_similarity_gold(const std::string& path);

}  // namespace lscd
