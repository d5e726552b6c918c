// spectral.hpp: eigenstructure of the 2x2 mass matrix under CPT, T, or no symmetry

#pragma once

#include "chiralww/linalg.hpp"
#include "chiralww/model.hpp"
#include "chiralww/reduction.hpp"

#include <variant>

namespace chiralww {

inline constexpr double kDefaultInvarianceTolerance = 1e-10;

// p is the principal square root of M12; exp(-i alpha) = p / |p|.
struct CPTMixing {
    Complex p{};
    double alpha = 0.0;
};

// Psi+ = cos(phi)|L> + sin(phi)|R>, phi in [0, pi).
struct TMixing {
    double phi = 0.0;
};

struct GeneralMixing {};

using Mixing = std::variant<CPTMixing, TMixing, GeneralMixing>;

struct SpectralResult {
    double lambda_plus = 0.0;
    double lambda_minus = 0.0;
    Vec2 psi_plus = Vec2::Zero();
    Vec2 psi_minus = Vec2::Zero();
    Mixing mixing = GeneralMixing{};
    bool degenerate = false;  // lambda_plus == lambda_minus
};

struct OscillationPeriod {
    double delta_split = 0.0;
    double tau = 0.0;  // pi / delta_split, period of cos(2 delta_split t)
};

// Requires |M11 - M22| <= tol * ||M||, else Error{NotCPTSymmetric}.
// M12 == 0 returns the parity basis with degenerate set.
SpectralResult eigen_cpt(const MassMatrix& mass, double tol = kDefaultInvarianceTolerance);

// Requires |Im M12| <= tol * ||M||, else Error{NotTSymmetric}.
SpectralResult eigen_t(const MassMatrix& mass, double tol = kDefaultInvarianceTolerance);

SpectralResult eigen_general(const MassMatrix& mass);

SpectralResult eigen(const MassMatrix& mass, Invariance mode,
                     double tol = kDefaultInvarianceTolerance);

// Throws NotCPTSymmetric / NotTSymmetric when the matrix violates the mode.
void check_invariance(const MassMatrix& mass, Invariance mode,
                      double tol = kDefaultInvarianceTolerance);

// Half-splitting for a mode without precondition checks:
//   CPT: |M12|,  T: 1/2 sqrt((M11-M22)^2 + 4 Re(M12)^2),  General: 1/2 (lambda+ - lambda-).
double splitting(const MassMatrix& mass, Invariance mode);

// Checks the mode precondition, then returns delta_split and tau = pi / delta_split.
// Throws Error{ZeroSplitting} when delta_split == 0.
OscillationPeriod oscillation_period(const MassMatrix& mass, Invariance mode,
                                     double tol = kDefaultInvarianceTolerance);

}  // namespace chiralww
