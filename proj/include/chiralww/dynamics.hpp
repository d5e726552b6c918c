// dynamics.hpp: racemization dynamics and optical activity of the effective doublet
//
// All evolutions start from the pure enantiomer |L> unless a state is passed in.

#pragma once

#include "chiralww/linalg.hpp"
#include "chiralww/model.hpp"
#include "chiralww/reduction.hpp"
#include "chiralww/spectral.hpp"

#include <cstddef>
#include <vector>

namespace chiralww {

struct Probabilities {
    double p_l = 0.0;
    double p_r = 0.0;
};

struct Sample {
    double t = 0.0;
    double p_l = 0.0;
    double p_r = 0.0;
    double theta_ratio = 0.0;  // Theta / Theta_max = p_l - p_r
};

struct TimeSeries {
    std::vector<Sample> samples;
};

// Uniform grid linspace(0, t_max, steps); the last point is exactly t_max.
std::vector<double> time_grid(double t_max, std::size_t steps);

// Two-state model with H = m 1 + delta sigma_x + epsilon sigma_z.
Probabilities hs_probabilities(double delta, double epsilon, double t);
double hs_optical_activity(double delta, double epsilon, double theta_max, double t);

// exp(-i W t) phi0. Hermitian W uses its eigendecomposition; otherwise the
// closed-form exponential of a 2x2 matrix.
Vec2 evolve_effective(const EffectiveGenerator& generator, const Vec2& phi0, double t);

// T mode: closed forms (real M12 required, else NotTSymmetric).
// CPT and General: projections of evolve_effective with W = M.
Probabilities multistate_probabilities(const MassMatrix& mass, double t,
                                       Invariance mode = Invariance::T,
                                       double tol = kDefaultInvarianceTolerance);

// Theta(t). T and CPT modes use their closed forms; General is theta_max (p_l - p_r).
double optical_activity(const MassMatrix& mass, double theta_max, double t, Invariance mode,
                        double tol = kDefaultInvarianceTolerance);

// Long-time average of Theta / Theta_max. CPT mode is exactly 0.
double time_average_theta(const MassMatrix& mass, Invariance mode,
                          double tol = kDefaultInvarianceTolerance);

// Samples (p_l, p_r, theta_ratio) on a grid. A nonzero decay matrix always goes
// through the exponential of M - i Gamma; otherwise the mode selects the route as in
// multistate_probabilities.
TimeSeries racemization_series(const Reduction& reduction, Invariance mode,
                               const std::vector<double>& grid,
                               double tol = kDefaultInvarianceTolerance);

enum class KaonEnvelope {
    // Interference term damped by exp(-(g1 + g2) t / 2): amplitude product of the two states.
    Standard,
    // Interference term damped by exp(-(g1 + g2) t), as in the commonly quoted printed form.
    Full,
};

struct KaonParams {
    double m1 = 0.0;
    double m2 = 0.0;
    double gamma1 = 0.0;
    double gamma2 = 0.0;
    KaonEnvelope envelope = KaonEnvelope::Standard;

    bool operator==(const KaonParams&) const = default;
};

// Probability of the antiparticle at time t for a pure particle state at t = 0:
//   1/4 [e^{-g1 t} + e^{-g2 t} - 2 e^{-k (g1+g2) t} cos((m2 - m1) t)],  k = 1/2 or 1.
double kaon_transition_probability(const KaonParams& params, double t);

}  // namespace chiralww
