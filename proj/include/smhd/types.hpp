#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>
#include <Eigen/SparseCore>

namespace smhd {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Vector = Eigen::VectorXd;
using SparseMatrix = Eigen::SparseMatrix<double>;
using IncidenceMatrix = Eigen::SparseMatrix<int>;
using Triplet = Eigen::Triplet<double>;

}  // namespace smhd
