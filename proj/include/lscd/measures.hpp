#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lscd/types.hpp"

namespace lscd {

struct AlignedSpaces;
struct TargetWordList;

// 1 - cos(u, v), in [0, 2]. Throws "degenerate vector" on zero input.
double cosine_distance(const Eigen::Ref<const Vector>& u,
                       const Eigen::Ref<const Vector>& v);

double cosine_similarity(const Eigen::Ref<const Vector>& u,
                         const Eigen::Ref<const Vector>& v);

// Graded change scores; a target absent from either space (or with a
// degenerate vector) carries no score and is reported as missing, never as 0.
struct ChangeRanking {
    std::map<std::string, std::optional<double>> scores;

    std::size_t scored_count() const;
    std::size_t missing_count() const;
};

ChangeRanking score_targets(const AlignedSpaces& spaces,
                            const TargetWordList& targets);

// word TAB score per line; missing words as word TAB NA.
void save_change_ranking(const ChangeRanking& ranking, const std::string& path);
ChangeRanking load_change_ranking(const std::string& path);

}  // namespace lscd
