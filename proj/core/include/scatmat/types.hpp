#pragma once

#include <Eigen/Dense>
#include <complex>

namespace scatmat {

using cdouble = std::complex<double>;
using Vec3 = Eigen::Vector3d;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr cdouble kImag{0.0, 1.0};

// Outgoing free-space Helmholtz kernel g(x,y) = e^{ik|x-y|} / (4*pi*|x-y|).
inline cdouble free_kernel(double k, const Vec3& x, const Vec3& y) {
  const double r = (x - y).norm();
  return std::polar(1.0 / (4.0 * kPi * r), k * r);
}

inline cdouble plane_wave(double k, const Vec3& direction, const Vec3& x) {
  return std::polar(1.0, k * direction.dot(x));
}

}  // namespace scatmat
