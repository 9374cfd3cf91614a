#pragma once

#include <complex>

#include <Eigen/Dense>

namespace triphase {

using Complex = std::complex<double>;
using Vec3 = Eigen::Vector3cd;
using Mat3 = Eigen::Matrix3cd;

}  // namespace triphase
