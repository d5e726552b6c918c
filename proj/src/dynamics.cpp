#include "chiralww/dynamics.hpp"

#include "chiralww/error.hpp"

#include <cmath>
#include <string>

namespace chiralww {
namespace {

constexpr Complex kI{0.0, 1.0};

Probabilities project(const Vec2& phi) { return {std::norm(phi(0)), std::norm(phi(1))}; }

Vec2 left_state() { return Vec2(1.0, 0.0); }

// exp(-i W t) for a hermitian W, built once from its eigenpairs.
class HermitianPropagator {
public:
    explicit HermitianPropagator(const Mat2& w) : spectrum_(eigen_general(MassMatrix{w})) {
        basis_.col(0) = spectrum_.psi_plus;
        basis_.col(1) = spectrum_.psi_minus;
    }

    Vec2 operator()(const Vec2& phi0, double t) const {
        Vec2 c = basis_.adjoint() * phi0;
        c(0) *= std::exp(-kI * (spectrum_.lambda_plus * t));
        c(1) *= std::exp(-kI * (spectrum_.lambda_minus * t));
        return basis_ * c;
    }

private:
    SpectralResult spectrum_;
    Mat2 basis_;
};

// exp(-i W t) = exp(-i c t) [cos(s t) 1 - i sin(s t)/s K],  W = c 1 + K,  K^2 = s^2 1.
Vec2 evolve_closed_form(const Mat2& w, const Vec2& phi0, double t) {
    const Complex c = 0.5 * w.trace();
    const Mat2 k = w - c * Mat2::Identity();
    const Complex q = k(0, 0) * k(0, 0) + k(0, 1) * k(1, 0);
    const Complex s = std::sqrt(q);
    Complex cos_st;
    Complex sinc_t;  // sin(s t) / s
    if (std::abs(s * t) < 1e-6) {
        const Complex x = q * t * t;
        cos_st = 1.0 - x / 2.0 + x * x / 24.0;
        sinc_t = t * (1.0 - x / 6.0 + x * x / 120.0);
    } else {
        cos_st = std::cos(s * t);
        sinc_t = std::sin(s * t) / s;
    }
    return std::exp(-kI * c * t) * (cos_st * phi0 - kI * sinc_t * (k * phi0));
}

struct TParts {
    double diff;   // M11 - M22
    double m12;    // real off-diagonal
    double split;  // Delta
};

TParts t_parts(const MassMatrix& mass) {
    const Mat2& m = mass.matrix;
    const double diff = m(0, 0).real() - m(1, 1).real();
    const double m12 = m(0, 1).real();
    return {diff, m12, 0.5 * std::hypot(diff, 2.0 * m12)};
}

Probabilities t_closed_form(const TParts& p, double t) {
    if (p.split == 0.0) return {1.0, 0.0};
    const double c = std::cos(p.split * t);
    const double s = std::sin(p.split * t);
    const double d2 = p.split * p.split;
    return {c * c + p.diff * p.diff / (4.0 * d2) * s * s, p.m12 * p.m12 / d2 * s * s};
}

}  // namespace

std::vector<double> time_grid(double t_max, std::size_t steps) {
    std::vector<double> grid;
    if (steps == 0) return grid;
    if (steps == 1) return {0.0};
    grid.reserve(steps);
    const double last = static_cast<double>(steps - 1);
    for (std::size_t i = 0; i + 1 < steps; ++i)
        grid.push_back(t_max * (static_cast<double>(i) / last));
    grid.push_back(t_max);
    return grid;
}

Probabilities hs_probabilities(double delta, double epsilon, double t) {
    const double d2 = delta * delta + epsilon * epsilon;
    if (d2 == 0.0) return {1.0, 0.0};
    const double split = std::sqrt(d2);
    const double c = std::cos(split * t);
    const double s = std::sin(split * t);
    return {c * c + epsilon * epsilon / d2 * s * s, delta * delta / d2 * s * s};
}

double hs_optical_activity(double delta, double epsilon, double theta_max, double t) {
    const double d2 = delta * delta + epsilon * epsilon;
    if (d2 == 0.0) return theta_max;
    const double split = std::sqrt(d2);
    return theta_max * (epsilon * epsilon + delta * delta * std::cos(2.0 * split * t)) / d2;
}

Vec2 evolve_effective(const EffectiveGenerator& generator, const Vec2& phi0, double t) {
    if (generator.is_hermitian()) return HermitianPropagator(generator.matrix)(phi0, t);
    return evolve_closed_form(generator.matrix, phi0, t);
}

Probabilities multistate_probabilities(const MassMatrix& mass, double t, Invariance mode,
                                       double tol) {
    check_invariance(mass, mode, tol);
    if (mode == Invariance::T) return t_closed_form(t_parts(mass), t);
    return project(evolve_effective(EffectiveGenerator{mass.matrix}, left_state(), t));
}

double optical_activity(const MassMatrix& mass, double theta_max, double t, Invariance mode,
                        double tol) {
    check_invariance(mass, mode, tol);
    switch (mode) {
        case Invariance::T: {
            const auto p = t_parts(mass);
            if (p.split == 0.0) return theta_max;
            const double q = 0.25 * p.diff * p.diff;
            return theta_max * (q + p.m12 * p.m12 * std::cos(2.0 * p.split * t)) /
                   (p.split * p.split);
        }
        case Invariance::CPT:
            return theta_max * std::cos(2.0 * std::abs(mass.matrix(0, 1)) * t);
        case Invariance::General: break;
    }
    const auto p = multistate_probabilities(mass, t, Invariance::General);
    return theta_max * (p.p_l - p.p_r);
}

double time_average_theta(const MassMatrix& mass, Invariance mode, double tol) {
    check_invariance(mass, mode, tol);
    if (mode == Invariance::CPT) return 0.0;
    const Mat2& m = mass.matrix;
    const double diff = m(0, 0).real() - m(1, 1).real();
    const double off = mode == Invariance::T ? m(0, 1).real() : std::abs(m(0, 1));
    const double q = 0.25 * diff * diff;
    const double denominator = q + off * off;
    if (denominator == 0.0) return 1.0;
    return q / denominator;
}

TimeSeries racemization_series(const Reduction& reduction, Invariance mode,
                               const std::vector<double>& grid, double tol) {
    check_invariance(reduction.mass, mode, tol);
    TimeSeries series;
    series.samples.reserve(grid.size());
    auto push = [&series](double t, Probabilities p) {
        series.samples.push_back({t, p.p_l, p.p_r, p.p_l - p.p_r});
    };

    if (!reduction.decay.is_zero()) {
        for (double t : grid)
            push(t, project(evolve_closed_form(reduction.generator.matrix, left_state(), t)));
    } else if (mode == Invariance::T) {
        const auto parts = t_parts(reduction.mass);
        for (double t : grid) push(t, t_closed_form(parts, t));
    } else {
        const HermitianPropagator propagate(reduction.mass.matrix);
        for (double t : grid) push(t, project(propagate(left_state(), t)));
    }
    return series;
}

double kaon_transition_probability(const KaonParams& params, double t) {
    if (params.gamma1 < 0.0 || params.gamma2 < 0.0)
        throw Error(ErrorKind::InvalidModel, "kaon decay rates must be >= 0");
    const double g = params.gamma1 + params.gamma2;
    const double damping = params.envelope == KaonEnvelope::Standard ? 0.5 * g : g;
    return 0.25 * (std::exp(-params.gamma1 * t) + std::exp(-params.gamma2 * t) -
                   2.0 * std::exp(-damping * t) * std::cos((params.m2 - params.m1) * t));
}

}  // namespace chiralww
