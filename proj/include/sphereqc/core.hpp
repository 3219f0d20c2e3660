#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace sphereqc
{

using Real = double;
using Cplx = std::complex<double>;
using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;

constexpr double kPi = 3.141592653589793238462643383279502884;

/** @brief Error in mesh construction, topology, or geometry */
class MeshError : public std::runtime_error
{
public:
    explicit MeshError(const std::string& msg) : std::runtime_error(msg) {}
};

/** @brief Error raised by linear solvers and numerical kernels */
class SolverError : public std::runtime_error
{
public:
    explicit SolverError(const std::string& msg) : std::runtime_error(msg) {}
};

/** @brief File I/O or parse failure */
class ParseError : public std::runtime_error
{
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

inline double sq(double x) { return x * x; }

/** Real inner product of two complex numbers viewed as R^2 vectors. */
inline double rdot(Cplx a, Cplx b)
{
    return a.real() * b.real() + a.imag() * b.imag();
}

}  // namespace sphereqc
