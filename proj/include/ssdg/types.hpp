// Scalar and dense-array typedefs shared across the library.
#pragma once

#include <Eigen/Dense>
#include <complex>

namespace ssdg {

using Real = double;
using Complex = std::complex<Real>;

using ArrayXr = Eigen::Array<Real, Eigen::Dynamic, 1>;
using ArrayXc = Eigen::Array<Complex, Eigen::Dynamic, 1>;
using ArrayXb = Eigen::Array<bool, Eigen::Dynamic, 1>;
using Array5r = Eigen::Array<Real, 5, 1>;

using Index = Eigen::Index;

inline constexpr Complex kImaginaryUnit{0.0, 1.0};
inline constexpr Real kPi = 3.14159265358979323846;

}  // namespace ssdg
