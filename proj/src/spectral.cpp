#include "chiralww/spectral.hpp"

#include "chiralww/error.hpp"

#include <cmath>
#include <numbers>

namespace chiralww {
namespace {

constexpr double kPi = std::numbers::pi;

SpectralResult parity_basis(double level) {
    const double s = 1.0 / std::sqrt(2.0);
    SpectralResult r;
    r.lambda_plus = level;
    r.lambda_minus = level;
    r.psi_plus << s, s;
    r.psi_minus << s, -s;
    r.degenerate = true;
    return r;
}

// Eigenpairs of [[a, b], [b, d]] with b >= 0 real, written as
// psi+ = (cos t, sin t), psi- = (-sin t, cos t) with t = atan2(2b, a - d) / 2.
struct RealRotation {
    double lambda_plus;
    double lambda_minus;
    double angle;
};

RealRotation rotate_real_symmetric(double a, double d, double b) {
    const double mean = 0.5 * (a + d);
    const double half = 0.5 * std::hypot(a - d, 2.0 * b);
    double angle = 0.5 * std::atan2(2.0 * b, a - d);
    if (angle < 0.0) angle += kPi;
    return {mean + half, mean - half, angle};
}

}  // namespace

void check_invariance(const MassMatrix& mass, Invariance mode, double tol) {
    const Mat2& m = mass.matrix;
    const double scale = m.norm();
    switch (mode) {
        case Invariance::CPT:
            if (std::abs(m(0, 0) - m(1, 1)) > tol * scale)
                throw Error(ErrorKind::NotCPTSymmetric, "CPT mode requires M11 == M22");
            break;
        case Invariance::T:
            if (std::abs(m(0, 1).imag()) > tol * scale)
                throw Error(ErrorKind::NotTSymmetric, "T mode requires a real M12");
            break;
        case Invariance::General:
            break;
    }
}

SpectralResult eigen_cpt(const MassMatrix& mass, double tol) {
    check_invariance(mass, Invariance::CPT, tol);
    const Mat2& m = mass.matrix;
    const double diag = m(0, 0).real();
    const Complex m12 = m(0, 1);
    if (m12 == Complex(0.0, 0.0)) {
        SpectralResult r = parity_basis(diag);
        r.mixing = CPTMixing{};
        return r;
    }

    const Complex p = std::sqrt(m12);
    const double modulus = std::abs(m12);
    const double norm = std::sqrt(2.0 * std::norm(p));

    SpectralResult r;
    r.lambda_plus = diag + modulus;
    r.lambda_minus = diag - modulus;
    r.psi_plus << p / norm, std::conj(p) / norm;
    r.psi_minus << p / norm, -std::conj(p) / norm;
    r.mixing = CPTMixing{p, -std::arg(p)};
    return r;
}

SpectralResult eigen_t(const MassMatrix& mass, double tol) {
    check_invariance(mass, Invariance::T, tol);
    const Mat2& m = mass.matrix;
    const auto rot = rotate_real_symmetric(m(0, 0).real(), m(1, 1).real(), m(0, 1).real());
    const double c = std::cos(rot.angle);
    const double s = std::sin(rot.angle);

    SpectralResult r;
    r.lambda_plus = rot.lambda_plus;
    r.lambda_minus = rot.lambda_minus;
    r.psi_plus << c, s;
    r.psi_minus << -s, c;
    r.mixing = TMixing{rot.angle};
    r.degenerate = rot.lambda_plus == rot.lambda_minus;
    return r;
}

SpectralResult eigen_general(const MassMatrix& mass) {
    const Mat2& m = mass.matrix;
    const Complex b = m(0, 1);
    const double modulus = std::abs(b);
    // Removing the phase of M12 from |R> leaves a real symmetric problem.
    const Complex phase = modulus > 0.0 ? std::conj(b) / modulus : Complex(1.0, 0.0);
    const auto rot = rotate_real_symmetric(m(0, 0).real(), m(1, 1).real(), modulus);
    const double c = std::cos(rot.angle);
    const double s = std::sin(rot.angle);

    SpectralResult r;
    r.lambda_plus = rot.lambda_plus;
    r.lambda_minus = rot.lambda_minus;
    r.psi_plus << c, phase * s;
    r.psi_minus << -s, phase * c;
    r.mixing = GeneralMixing{};
    r.degenerate = rot.lambda_plus == rot.lambda_minus;
    return r;
}

SpectralResult eigen(const MassMatrix& mass, Invariance mode, double tol) {
    switch (mode) {
        case Invariance::CPT: return eigen_cpt(mass, tol);
        case Invariance::T: return eigen_t(mass, tol);
        case Invariance::General: break;
    }
    return eigen_general(mass);
}

double splitting(const MassMatrix& mass, Invariance mode) {
    const Mat2& m = mass.matrix;
    const double diff = m(0, 0).real() - m(1, 1).real();
    switch (mode) {
        case Invariance::CPT: return std::abs(m(0, 1));
        case Invariance::T: return 0.5 * std::hypot(diff, 2.0 * m(0, 1).real());
        case Invariance::General: break;
    }
    return 0.5 * std::hypot(diff, 2.0 * std::abs(m(0, 1)));
}

OscillationPeriod oscillation_period(const MassMatrix& mass, Invariance mode, double tol) {
    check_invariance(mass, mode, tol);
    const double split = splitting(mass, mode);
    if (split == 0.0) throw Error(ErrorKind::ZeroSplitting, "zero splitting: no oscillation");
    return OscillationPeriod{split, kPi / split};
}

}  // namespace chiralww
