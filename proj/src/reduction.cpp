#include "chiralww/reduction.hpp"

#include "chiralww/error.hpp"

#include <numbers>

namespace chiralww {

Dyad dyad(const LevelSpec& level, std::size_t level_index) {
    Vec2 c;
    c << level.g_L, level.g_R;
    // conj(C) * C^T
    return Dyad{c.conjugate() * c.transpose(), level_index};
}

MassMatrix mass_matrix(const ValidatedModel& model) {
    const double m = model.doublet().m;
    Mat2 shift = Mat2::Zero();
    const auto& levels = model.levels();
    for (std::size_t k = 0; k < levels.size(); ++k) {
        if (model.degenerate()[k]) continue;
        shift += dyad(levels[k], k).matrix / (levels[k].energy - m);
    }
    return MassMatrix{m * Mat2::Identity() + doublet_block(model) - shift};
}

DecayMatrix decay_matrix(const ValidatedModel& model) {
    if (!model.has_degenerate_level()) return DecayMatrix{Mat2::Zero()};
    const auto& rho = model.spec().broadening;
    if (!rho)
        throw Error(ErrorKind::DegenerateLevelWithoutBroadening,
                    "a level is degenerate with the doublet but no broadening was given");

    Mat2 sum = Mat2::Zero();
    const auto& levels = model.levels();
    for (std::size_t k = 0; k < levels.size(); ++k)
        if (model.degenerate()[k]) sum += dyad(levels[k], k).matrix;
    return DecayMatrix{2.0 * std::numbers::pi * *rho * sum};
}

EffectiveGenerator effective_generator(const MassMatrix& mass, const DecayMatrix& decay) {
    return EffectiveGenerator{mass.matrix - Complex(0.0, 1.0) * decay.matrix};
}

Reduction reduce(const ValidatedModel& model) {
    MassMatrix mass = mass_matrix(model);
    DecayMatrix decay = decay_matrix(model);
    EffectiveGenerator generator = effective_generator(mass, decay);
    return Reduction{std::move(mass), std::move(decay), std::move(generator)};
}

}  // namespace chiralww
