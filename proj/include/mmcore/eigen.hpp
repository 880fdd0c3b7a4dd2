#pragma once

#define EIGEN_DONT_PARALLELIZE 1

#include <Eigen/Dense>

namespace mmcore {

// All buffers are row-major, so every matrix view shares this layout.
template <typename S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

template <typename S>
using MatMap = Eigen::Map<Mat<S>>;

template <typename S>
using ConstMatMap = Eigen::Map<const Mat<S>>;

template <typename S>
using VecMap = Eigen::Map<Eigen::Matrix<S, Eigen::Dynamic, 1>>;

template <typename S>
using ConstVecMap = Eigen::Map<const Eigen::Matrix<S, Eigen::Dynamic, 1>>;

}  // namespace mmcore
