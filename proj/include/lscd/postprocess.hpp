#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lscd/types.hpp"

namespace lscd {

struct AlignedSpaces;

// Similarity order transformation X' = X Q lambda^alpha, from the
// eigendecomposition X^T X = Q lambda Q^T.
struct SotParams {
    double alpha = 0.0;
    // eigenvalues below this are clamped before lambda^alpha; keeps negative
    // alpha finite on rank-deficient input
    double eigen_clamp = 1e-10;
};

struct McPcrParams {
    int num_pcs = 0;  // 0 = mean centering only
};

// STA: transform the vertical stack of both matrices, split back.
// SEP: transform each matrix independently.
// SEP_PA: SEP followed by an orthogonal post-alignment of b' onto a'.
enum class StackingMode { STA, SEP, SEP_PA };

const char* to_string(StackingMode mode);
StackingMode parse_stacking_mode(const std::string& name);

enum class TransformKind { none, SOT, MC_PCR };

struct PostprocessSpec {
    TransformKind kind = TransformKind::none;
    SotParams sot;
    McPcrParams mcpcr;

    static PostprocessSpec make_sot(double alpha) {
        PostprocessSpec spec;
        spec.kind = TransformKind::SOT;
        spec.sot.alpha = alpha;
        return spec;
    }
    static PostprocessSpec make_mcpcr(int num_pcs) {
        PostprocessSpec spec;
        spec.kind = TransformKind::MC_PCR;
        spec.mcpcr.num_pcs = num_pcs;
        return spec;
    }
};

// Eigendecomposition of X^T X, eigenvalues sorted descending, eigenvector
// signs fixed (largest-magnitude component positive). Shared by SOT, PCR and
// the isotropy statistic.
void symmetric_eigen_sorted(const Matrix& gram, Vector& eigenvalues,
                            Matrix& eigenvectors);

Matrix sot(const Matrix& x, const SotParams& params);

Matrix mean_center(const Matrix& x);

// Mean-centers, then subtracts each row's top-m principal component
// projections (projections of the original rows, as all-but-the-top does):
// v' = (v - mu) - sum_i (p_i^T v) p_i. Variance along every removed component
// is nullified. m = 0 reduces to mean_center.
Matrix pc_remove(const Matrix& x, const McPcrParams& params);

Matrix apply_transform(const Matrix& x, const PostprocessSpec& spec);

// Applies the transform under a stacking regime. `shared_rows` pairs rows of
// a with rows of b for the SEP_PA post-alignment; when empty and both
// matrices have the same height, rows are paired by index.
std::pair<Matrix, Matrix> apply_stacked(
    const Matrix& a, const Matrix& b, const PostprocessSpec& spec,
    StackingMode mode,
    const std::vector<std::pair<int, int>>& shared_rows = {});

// AlignedSpaces-level wrapper: derives shared rows from the vocabularies; for
// WI (one underlying matrix) stacking modes collapse to a direct application
// and a warning lands in notes.
AlignedSpaces postprocess_spaces(const AlignedSpaces& spaces,
                                 const PostprocessSpec& spec,
                                 StackingMode mode);

// Documented parameter defaults. The alpha search grid covers the peak
// intervals reported for both languages; m follows the d/100 rule of thumb.
struct LanguageProfile {
    int dim = 100;
    std::string language = "generic";  // "eng", "ger" or "generic"
};

struct ParamRecommendation {
    double alpha_grid_lo = -0.4;
    double alpha_grid_hi = 0.3;
    double mean_optimal_alpha = 0.0;  // -0.2 for English, 0.0 for German
    int pcr_m_lo = 0;
    int pcr_m_hi = 5;
    int heuristic_m = 1;  // d/100
    StackingMode preferred_mode = StackingMode::STA;
};

ParamRecommendation recommend_params(const LanguageProfile& profile);

}  // namespace lscd
