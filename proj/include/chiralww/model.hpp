// model.hpp: problem description for a chiral doublet coupled to a tower of excited levels
//
// Units: hbar = 1, so energies and inverse times share one unit. To use
// physical energies, divide every time by hbar in the same unit system.
// Basis order for every matrix is [|L>, |R>, |1>, ..., |N>].

#pragma once

#include "chiralww/linalg.hpp"

#include <optional>
#include <vector>

namespace chiralww {

enum class Invariance { CPT, T, General };

struct DoubletSpec {
    double m = 0.0;          // common energy of |L> and |R>
    double delta = 0.0;      // tunneling element <L|H|R>
    double epsilon = 0.0;    // parity-violating shift
    double theta_max = 1.0;  // optical-activity scale

    bool operator==(const DoubletSpec&) const = default;
};

// One excited level |k> with couplings g_L = <k|H1|L>, g_R = <k|H1|R>.
struct LevelSpec {
    double energy = 0.0;
    Complex g_L{};
    Complex g_R{};

    bool operator==(const LevelSpec&) const = default;
};

inline constexpr double kDefaultDegeneracyTolerance = 1e-9;

struct ModelSpec {
    DoubletSpec doublet;
    std::vector<LevelSpec> levels;
    std::optional<Mat2> h_override;       // replaces delta*sigma_x + epsilon*sigma_z
    std::optional<MatX> cross_couplings;  // <k|H1|j>, used by the exact propagation only
    double degeneracy_tolerance = kDefaultDegeneracyTolerance;
    std::optional<double> broadening;     // density-of-states factor for degenerate levels
    Invariance invariance = Invariance::T;
};

bool operator==(const ModelSpec& a, const ModelSpec& b);

// A ModelSpec whose invariants have been checked. Only validate_model builds one.
class ValidatedModel {
public:
    const ModelSpec& spec() const noexcept { return spec_; }
    const DoubletSpec& doublet() const noexcept { return spec_.doublet; }
    const std::vector<LevelSpec>& levels() const noexcept { return spec_.levels; }

    // degenerate()[k] is true when |E_k - m| <= degeneracy_tolerance.
    const std::vector<bool>& degenerate() const noexcept { return degenerate_; }
    bool has_degenerate_level() const noexcept;

    bool operator==(const ValidatedModel& other) const {
        return spec_ == other.spec_ && degenerate_ == other.degenerate_;
    }

private:
    friend ValidatedModel validate_model(const ModelSpec& spec);
    ValidatedModel(ModelSpec spec, std::vector<bool> degenerate)
        : spec_(std::move(spec)), degenerate_(std::move(degenerate)) {}

    ModelSpec spec_;
    std::vector<bool> degenerate_;
};

// Throws Error{NonFiniteValue | NonHermitianInput | InvalidModel}.
ValidatedModel validate_model(const ModelSpec& spec);
ValidatedModel validate_model(const ValidatedModel& model);

// Hermitian block of H1 inside the doublet: h_override, or [[eps, delta], [delta, -eps]].
Mat2 doublet_block(const ValidatedModel& model);

struct FullHamiltonian {
    MatX matrix;  // (N+2) x (N+2)
};

FullHamiltonian full_hamiltonian(const ValidatedModel& model);

// Multiplies every g_L, g_R by lambda; doublet parameters and cross couplings are untouched.
ValidatedModel scale_couplings(const ValidatedModel& model, double lambda);

}  // namespace chiralww
