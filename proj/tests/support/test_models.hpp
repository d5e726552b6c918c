// test_models.hpp: seeded model generators and independent reference solvers for tests.
// Nothing here calls the library's spectral or propagation code.

#pragma once

#include "chiralww/linalg.hpp"
#include "chiralww/model.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cstdint>
#include <random>
#include <vector>

namespace chiralww::testing {

inline Complex random_complex(std::mt19937_64& rng, double scale = 1.0) {
    std::normal_distribution<double> normal(0.0, scale / std::sqrt(2.0));
    const double re = normal(rng);
    const double im = normal(rng);
    return {re, im};
}

inline Mat2 random_hermitian2(std::mt19937_64& rng, double scale = 1.0) {
    std::normal_distribution<double> normal(0.0, scale);
    Mat2 m;
    const double a = normal(rng);
    const double d = normal(rng);
    const Complex b = random_complex(rng, scale);
    m << a, b, std::conj(b), d;
    return m;
}

// Equal diagonals, complex off-diagonal.
inline Mat2 random_cpt2(std::mt19937_64& rng, double scale = 1.0) {
    Mat2 m = random_hermitian2(rng, scale);
    m(1, 1) = m(0, 0);
    return m;
}

// Real off-diagonal.
inline Mat2 random_t2(std::mt19937_64& rng, double scale = 1.0) {
    Mat2 m = random_hermitian2(rng, scale);
    m(0, 1) = m(0, 1).real();
    m(1, 0) = m(0, 1);
    return m;
}

inline MatX random_hermitian(std::mt19937_64& rng, Eigen::Index n, double scale = 1.0) {
    MatX a(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) a(i, j) = random_complex(rng, scale);
    return 0.5 * (a + a.adjoint());
}

// Doublet at m with a tower of levels whose energies lie in [m + e_lo, m + e_hi].
inline ModelSpec random_tower(std::uint64_t seed, int n_levels, double m = 0.0, double delta = 0.1,
                              double epsilon = 0.0, double e_lo = 5.0, double e_hi = 15.0,
                              double g_scale = 1.0) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> energy(e_lo, e_hi);
    ModelSpec spec;
    spec.doublet = DoubletSpec{m, delta, epsilon, 1.0};
    for (int k = 0; k < n_levels; ++k) {
        LevelSpec level;
        level.energy = m + energy(rng);
        level.g_L = random_complex(rng, g_scale);
        level.g_R = random_complex(rng, g_scale);
        spec.levels.push_back(level);
    }
    return spec;
}

// Fixed model for the weak-coupling order study: 5 levels, delta = 0.1, seed 2024.
inline ModelSpec order_study_model() { return random_tower(2024, 5); }

// Classical RK4 on i dpsi/dt = H psi with a fixed step.
inline VecX rk4_evolve(const MatX& h, const VecX& psi0, double t, int steps) {
    const Complex minus_i(0.0, -1.0);
    const double dt = t / steps;
    VecX psi = psi0;
    for (int s = 0; s < steps; ++s) {
        const VecX k1 = minus_i * (h * psi);
        const VecX k2 = minus_i * (h * (psi + 0.5 * dt * k1));
        const VecX k3 = minus_i * (h * (psi + 0.5 * dt * k2));
        const VecX k4 = minus_i * (h * (psi + dt * k3));
        psi += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return psi;
}

// exp(-i W t) phi0 through Eigen's Pade-based matrix exponential.
inline Vec2 expm_evolve(const Mat2& w, const Vec2& phi0, double t) {
    const Mat2 a = Complex(0.0, -t) * w;
    const Mat2 u = a.exp();
    return u * phi0;
}

// Ascending eigenvalues from Eigen's dense hermitian solver.
inline Eigen::Vector2d dense_eigenvalues(const Mat2& m) {
    Eigen::SelfAdjointEigenSolver<Mat2> solver(m);
    return solver.eigenvalues();
}

// |<u, v>| == 1 for unit vectors spanning the same ray.
inline double ray_overlap(const Vec2& u, const Vec2& v) { return std::abs(u.dot(v)); }

}  // namespace chiralww::testing
