// linalg.hpp: small dense complex types and hermiticity helpers

#pragma once

#include <Eigen/Dense>

#include <complex>

namespace chiralww {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Vec2 = Eigen::Vector2cd;
using MatX = Eigen::MatrixXcd;
using VecX = Eigen::VectorXcd;

inline constexpr double kHermitianTolerance = 1e-12;

// Frobenius norm of X - X^dagger.
template <typename Derived>
double hermiticity_residual(const Eigen::MatrixBase<Derived>& x) {
    return (x - x.adjoint()).norm();
}

// ||X - X^dagger|| <= rel_tol * ||X||; the zero matrix is hermitian.
template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& x, double rel_tol = kHermitianTolerance) {
    if (x.rows() != x.cols()) return false;
    return hermiticity_residual(x) <= rel_tol * x.norm();
}

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& x) {
    for (Eigen::Index i = 0; i < x.rows(); ++i)
        for (Eigen::Index j = 0; j < x.cols(); ++j) {
            const Complex z = x(i, j);
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
        }
    return true;
}

}  // namespace chiralww
