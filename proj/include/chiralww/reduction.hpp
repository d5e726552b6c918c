// reduction.hpp: Weisskopf-Wigner reduction of the level tower onto the chiral doublet
//
// To second order in the couplings the doublet amplitudes obey
//   i dPhi/dt = (M - i Gamma) Phi
// with
//   M     = m 1 + h - sum_{k non-degenerate} D_k / (E_k - m)
//   Gamma = 2 pi rho sum_{k degenerate} D_k
// and D_k[a][b] = conj(g_a) g_b, i.e. <a|H1|k><k|H1|b>.

#pragma once

#include "chiralww/linalg.hpp"
#include "chiralww/model.hpp"

#include <cstddef>

namespace chiralww {

struct Dyad {
    Mat2 matrix;
    std::size_t level_index = 0;
};

struct MassMatrix {
    Mat2 matrix;
};

struct DecayMatrix {
    Mat2 matrix;

    bool is_zero() const { return matrix.isZero(0.0); }
};

struct EffectiveGenerator {
    Mat2 matrix;  // M - i Gamma

    bool is_hermitian() const { return chiralww::is_hermitian(matrix); }
};

Dyad dyad(const LevelSpec& level, std::size_t level_index = 0);

// Degenerate-flagged levels do not enter the principal-part sum.
MassMatrix mass_matrix(const ValidatedModel& model);

// Throws Error{DegenerateLevelWithoutBroadening} when a level is degenerate
// with the doublet and no broadening factor was supplied.
DecayMatrix decay_matrix(const ValidatedModel& model);

EffectiveGenerator effective_generator(const MassMatrix& mass, const DecayMatrix& decay);

struct Reduction {
    MassMatrix mass;
    DecayMatrix decay;
    EffectiveGenerator generator;
};

Reduction reduce(const ValidatedModel& model);

}  // namespace chiralww
