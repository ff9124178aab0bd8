#pragma once

#include <string>
#include <vector>

#include "lscd/measures.hpp"
#include "lscd/types.hpp"
#include "lscd/vocab.hpp"

namespace lscd {

// Uniformity of the vector distribution: the partition function
// Z(c) = sum_rows exp(c . row) evaluated at every unit eigenvector of X^T X
// (both signs); returns min Z / max Z, computed in log space.
double isotropy(const Matrix& x);

// Spearman correlation between change scores and target frequencies, taken
// from the given vocabulary (by convention the second target corpus).
double frequency_bias(const ChangeRanking& ranking, const Vocabulary& freqs);

// Pearson correlation of a (parameter, statistic) series; reproduces the
// alpha-vs-isotropy and m-vs-bias analyses.
double parameter_correlation(
    const std::vector<std::pair<double, double>>& series);

struct DiagnosticsReport {
    double isotropy = 0.0;
    double frequency_bias = 0.0;
    bool frequency_bias_defined = false;
    double mean_vector_length = 0.0;
    std::string meta;
};

}  // namespace lscd
