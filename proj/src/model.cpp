#include "chiralww/model.hpp"

#include "chiralww/error.hpp"

#include <cmath>
#include <string>

namespace chiralww {
namespace {

bool same_matrix(const std::optional<MatX>& a, const std::optional<MatX>& b) {
    if (a.has_value() != b.has_value()) return false;
    if (!a) return true;
    return a->rows() == b->rows() && a->cols() == b->cols() && *a == *b;
}

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_finite(double value, const std::string& name) {
    if (!std::isfinite(value)) throw Error(ErrorKind::NonFiniteValue, name + " is not finite");
}

}  // namespace

bool operator==(const ModelSpec& a, const ModelSpec& b) {
    const bool same_override = a.h_override.has_value() == b.h_override.has_value() &&
                               (!a.h_override || *a.h_override == *b.h_override);
    return a.doublet == b.doublet && a.levels == b.levels && same_override &&
           same_matrix(a.cross_couplings, b.cross_couplings) &&
           a.degeneracy_tolerance == b.degeneracy_tolerance && a.broadening == b.broadening &&
           a.invariance == b.invariance;
}

bool ValidatedModel::has_degenerate_level() const noexcept {
    for (bool d : degenerate_)
        if (d) return true;
    return false;
}

ValidatedModel validate_model(const ModelSpec& spec) {
    const auto& d = spec.doublet;
    require_finite(d.m, "doublet.m");
    require_finite(d.delta, "doublet.delta");
    require_finite(d.epsilon, "doublet.epsilon");
    require_finite(d.theta_max, "doublet.theta_max");
    if (!(d.theta_max > 0.0))
        throw Error(ErrorKind::InvalidModel, "doublet.theta_max must be > 0");

    for (std::size_t k = 0; k < spec.levels.size(); ++k) {
        const auto& level = spec.levels[k];
        const std::string where = "levels[" + std::to_string(k) + "]";
        require_finite(level.energy, where + ".energy");
        if (!finite(level.g_L) || !finite(level.g_R))
            throw Error(ErrorKind::NonFiniteValue, where + " coupling is not finite");
    }

    if (spec.h_override) {
        if (!all_finite(*spec.h_override))
            throw Error(ErrorKind::NonFiniteValue, "h_override is not finite");
        if (!is_hermitian(*spec.h_override))
            throw Error(ErrorKind::NonHermitianInput, "h_override is not hermitian");
    }

    if (spec.cross_couplings) {
        const auto& c = *spec.cross_couplings;
        const auto n = static_cast<Eigen::Index>(spec.levels.size());
        if (c.rows() != n || c.cols() != n)
            throw Error(ErrorKind::InvalidModel,
                        "cross_couplings must be " + std::to_string(n) + "x" + std::to_string(n));
        if (!all_finite(c)) throw Error(ErrorKind::NonFiniteValue, "cross_couplings is not finite");
        if (!is_hermitian(c))
            throw Error(ErrorKind::NonHermitianInput, "cross_couplings is not hermitian");
    }

    require_finite(spec.degeneracy_tolerance, "degeneracy_tolerance");
    if (spec.degeneracy_tolerance < 0.0)
        throw Error(ErrorKind::InvalidModel, "degeneracy_tolerance must be >= 0");
    if (spec.broadening) {
        require_finite(*spec.broadening, "broadening");
        if (*spec.broadening < 0.0) throw Error(ErrorKind::InvalidModel, "broadening must be >= 0");
    }

    std::vector<bool> degenerate;
    degenerate.reserve(spec.levels.size());
    for (const auto& level : spec.levels)
        degenerate.push_back(std::abs(level.energy - d.m) <= spec.degeneracy_tolerance);

    return ValidatedModel(spec, std::move(degenerate));
}

ValidatedModel validate_model(const ValidatedModel& model) { return validate_model(model.spec()); }

Mat2 doublet_block(const ValidatedModel& model) {
    if (model.spec().h_override) return *model.spec().h_override;
    const auto& d = model.doublet();
    Mat2 h;
    h << d.epsilon, d.delta, d.delta, -d.epsilon;
    return h;
}

FullHamiltonian full_hamiltonian(const ValidatedModel& model) {
    const auto& levels = model.levels();
    const auto n = static_cast<Eigen::Index>(levels.size());
    MatX h = MatX::Zero(n + 2, n + 2);

    h.topLeftCorner<2, 2>() = model.doublet().m * Mat2::Identity() + doublet_block(model);
    for (Eigen::Index k = 0; k < n; ++k) {
        const auto& level = levels[static_cast<std::size_t>(k)];
        const Eigen::Index row = k + 2;
        h(row, row) = level.energy;
        h(row, 0) = level.g_L;
        h(row, 1) = level.g_R;
        h(0, row) = std::conj(level.g_L);
        h(1, row) = std::conj(level.g_R);
    }
    // Diagonal entries of cross_couplings are ignored: level energies live in LevelSpec.
    if (const auto& cross = model.spec().cross_couplings) {
        for (Eigen::Index k = 0; k < n; ++k)
            for (Eigen::Index j = 0; j < n; ++j)
                if (j != k) h(k + 2, j + 2) = (*cross)(k, j);
    }
    return FullHamiltonian{std::move(h)};
}

ValidatedModel scale_couplings(const ValidatedModel& model, double lambda) {
    ModelSpec spec = model.spec();
    for (auto& level : spec.levels) {
        level.g_L *= lambda;
        level.g_R *= lambda;
    }
    return validate_model(spec);
}

}  // namespace chiralww
