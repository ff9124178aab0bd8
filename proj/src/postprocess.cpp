#include "lscd/postprocess.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

#include "lscd/alignment.hpp"

namespace lscd {

const char* to_string(StackingMode mode) {
    switch (mode) {
        case StackingMode::STA: return "sta";
        case StackingMode::SEP: return "sep";
        case StackingMode::SEP_PA: return "sep_pa";
    }
    return "?";
}

StackingMode parse_stacking_mode(const std::string& name) {
    if (name == "sta") return StackingMode::STA;
    if (name == "sep") return StackingMode::SEP;
    if (name == "sep_pa" || name == "sep+pa") return StackingMode::SEP_PA;
    throw std::invalid_argument("unknown stacking mode: " + name);
}

void symmetric_eigen_sorted(const Matrix& gram, Vector& eigenvalues,
                            Matrix& eigenvectors) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigendecomposition failed");
    const Eigen::Index d = gram.rows();
    eigenvalues.resize(d);
    eigenvectors.resize(d, d);
    // Eigen returns ascending order; flip to descending.
    for (Eigen::Index i = 0; i < d; ++i) {
        eigenvalues(i) = solver.eigenvalues()(d - 1 - i);
        eigenvectors.col(i) = solver.eigenvectors().col(d - 1 - i);
    }
    // Deterministic sign: largest-magnitude component positive.
    for (Eigen::Index i = 0; i < d; ++i) {
        Eigen::Index argmax = 0;
        eigenvectors.col(i).cwiseAbs().maxCoeff(&argmax);
        if (eigenvectors(argmax, i) < 0.0) eigenvectors.col(i) *= -1.0;
    }
}

Matrix sot(const Matrix& x, const SotParams& params) {
    if (!x.allFinite()) throw std::invalid_argument("sot: non-finite input");
    Vector eigenvalues;
    Matrix q;
    symmetric_eigen_sorted(x.transpose() * x, eigenvalues, q);
    Vector scaled(eigenvalues.size());
    for (Eigen::Index i = 0; i < eigenvalues.size(); ++i)
        scaled(i) =
            std::pow(std::max(eigenvalues(i), params.eigen_clamp), params.alpha);
    return x * q * scaled.asDiagonal();
}

Matrix mean_center(const Matrix& x) {
    if (x.rows() < 1) throw std::invalid_argument("mean_center: empty matrix");
    Matrix centered = x;
    centered.rowwise() -= Eigen::RowVectorXd(x.colwise().mean());
    return centered;
}

Matrix pc_remove(const Matrix& x, const McPcrParams& params) {
    const int d = static_cast<int>(x.cols());
    if (params.num_pcs < 0 || params.num_pcs > d)
        throw std::invalid_argument("pc_remove: m must be in [0, d]");
    Matrix centered = mean_center(x);
    if (params.num_pcs == 0) return centered;

    // sample covariance (divisor n; the eigenvectors do not depend on it)
    const Matrix covariance =
        centered.transpose() * centered / static_cast<double>(x.rows());
    Vector eigenvalues;
    Matrix q;
    symmetric_eigen_sorted(covariance, eigenvalues, q);
    const auto top = q.leftCols(params.num_pcs);
    // projections of the original rows, subtracted from the centered ones
    return centered - (x * top) * top.transpose();
}

Matrix apply_transform(const Matrix& x, const PostprocessSpec& spec) {
    switch (spec.kind) {
        case TransformKind::none: return x;
        case TransformKind::SOT: return sot(x, spec.sot);
        case TransformKind::MC_PCR: return pc_remove(x, spec.mcpcr);
    }
    throw std::invalid_argument("unknown transform");
}

std::pair<Matrix, Matrix> apply_stacked(
    const Matrix& a, const Matrix& b, const PostprocessSpec& spec,
    StackingMode mode, const std::vector<std::pair<int, int>>& shared_rows) {
    if (a.cols() != b.cols() && a.rows() > 0 && b.rows() > 0)
        throw std::invalid_argument("apply_stacked: dimension mismatch");

    if (mode == StackingMode::STA) {
        if (b.rows() == 0) return {apply_transform(a, spec), b};
        if (a.rows() == 0) return {a, apply_transform(b, spec)};
        Matrix stack(a.rows() + b.rows(), a.cols());
        stack.topRows(a.rows()) = a;
        stack.bottomRows(b.rows()) = b;
        const Matrix transformed = apply_transform(stack, spec);
        return {transformed.topRows(a.rows()),
                transformed.bottomRows(b.rows())};
    }

    Matrix ta = apply_transform(a, spec);
    Matrix tb = apply_transform(b, spec);
    if (mode == StackingMode::SEP_PA) {
        std::vector<std::pair<int, int>> pairs = shared_rows;
        if (pairs.empty()) {
            if (a.rows() != b.rows())
                throw std::invalid_argument(
                    "apply_stacked: SEP_PA needs shared row pairs when shapes "
                    "differ");
            for (int i = 0; i < a.rows(); ++i) pairs.push_back({i, i});
        }
        Matrix sa(static_cast<Eigen::Index>(pairs.size()), ta.cols());
        Matrix sb(static_cast<Eigen::Index>(pairs.size()), tb.cols());
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            sa.row(static_cast<Eigen::Index>(i)) = ta.row(pairs[i].first);
            sb.row(static_cast<Eigen::Index>(i)) = tb.row(pairs[i].second);
        }
        const Matrix w = solve_orthogonal_procrustes(sa, sb);
        tb = tb * w;
    }
    return {std::move(ta), std::move(tb)};
}

AlignedSpaces postprocess_spaces(const AlignedSpaces& spaces,
                                 const PostprocessSpec& spec,
                                 StackingMode mode) {
    AlignedSpaces out = spaces;
    if (spec.kind == TransformKind::none) return out;

    if (spaces.method == AlignMethod::WI) {
        // single underlying matrix: stacking is meaningless here
        out.matrix_a = apply_transform(spaces.matrix_a, spec);
        out.matrix_b = out.matrix_a;
        out.notes.push_back(
            "warning: stacking mode ignored for WI (single matrix)");
        return out;
    }

    std::vector<std::pair<int, int>> pairs;
    if (mode == StackingMode::SEP_PA) {
        for (std::size_t i = 0; i < spaces.vocab_a.size(); ++i) {
            const int j = spaces.vocab_b.index_of(
                spaces.vocab_a.token_at(static_cast<int>(i)));
            if (j >= 0) pairs.push_back({static_cast<int>(i), j});
        }
        if (spec.kind == TransformKind::MC_PCR)
            out.notes.push_back(
                "warning: SEP+PA is only needed for SOT; SEP suffices for "
                "MC+PCR");
    }
    auto [ta, tb] = apply_stacked(spaces.matrix_a, spaces.matrix_b, spec, mode,
                                  pairs);
    out.matrix_a = std::move(ta);
    out.matrix_b = std::move(tb);
    return out;
}

ParamRecommendation recommend_params(const LanguageProfile& profile) {
    ParamRecommendation rec;
    rec.heuristic_m = profile.dim / 100;
    rec.mean_optimal_alpha = profile.language == "eng" ? -0.2 : 0.0;
    return rec;
}

}  // namespace lscd
