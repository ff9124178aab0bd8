#pragma once

#include <Eigen/Dense>

namespace lscd {

// Row-major: embedding code works row-wise (one row per word).
using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;

}  // namespace lscd
