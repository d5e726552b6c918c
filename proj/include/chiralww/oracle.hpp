// oracle.hpp: exact propagation in the full doublet + tower space
//
// The full hamiltonian is diagonalized once; Psi(t) = V exp(-i E t) V^dagger Psi0
// carries no time-stepping error, so differences against the reduced doublet
// dynamics isolate the truncation error of the reduction.

#pragma once

#include "chiralww/linalg.hpp"
#include "chiralww/model.hpp"

#include <vector>

namespace chiralww {

struct ExactState {
    VecX amplitudes;  // basis [|L>, |R>, |1>, ..., |N>]
    double t = 0.0;

    double p_l() const { return std::norm(amplitudes(0)); }
    double p_r() const { return std::norm(amplitudes(1)); }
};

class ExactPropagator {
public:
    explicit ExactPropagator(const FullHamiltonian& hamiltonian);

    ExactState evolve(const VecX& psi0, double t) const;
    Eigen::Index dimension() const { return energies_.size(); }

private:
    Eigen::VectorXd energies_;
    MatX eigenvectors_;
};

ExactState exact_evolve(const FullHamiltonian& hamiltonian, const VecX& psi0, double t);

// |L> in the full basis of dimension n.
VecX left_state(Eigen::Index n);

struct ErrorReport {
    double max_abs_error_pl = 0.0;
    double max_abs_error_pr = 0.0;
    std::vector<double> t_grid;
    double coupling_scale = 1.0;

    double max_error() const { return std::max(max_abs_error_pl, max_abs_error_pr); }
};

// Max |P^{WW} - P^{exact}| over the grid for P_L and P_R, starting from |L>.
// Requires a vanishing decay matrix (throws InvalidModel otherwise).
ErrorReport compare_ww(const ValidatedModel& model, const std::vector<double>& t_grid,
                       double coupling_scale = 1.0);

// One report per lambda, in input order; lambda scales every g_L, g_R.
std::vector<ErrorReport> convergence_study(const ValidatedModel& model,
                                           const std::vector<double>& lambdas,
                                           const std::vector<double>& t_grid);

}  // namespace chiralww
