#include "chiralww/oracle.hpp"

#include "chiralww/dynamics.hpp"
#include "chiralww/error.hpp"
#include "chiralww/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <future>

namespace chiralww {

ExactPropagator::ExactPropagator(const FullHamiltonian& hamiltonian) {
    Eigen::SelfAdjointEigenSolver<MatX> solver(hamiltonian.matrix);
    if (solver.info() != Eigen::Success)
        throw Error(ErrorKind::InvalidModel, "full hamiltonian diagonalization failed");
    energies_ = solver.eigenvalues();
    eigenvectors_ = solver.eigenvectors();
}

ExactState ExactPropagator::evolve(const VecX& psi0, double t) const {
    VecX c = eigenvectors_.adjoint() * psi0;
    for (Eigen::Index i = 0; i < c.size(); ++i) c(i) *= std::exp(Complex(0.0, -energies_(i) * t));
    return ExactState{eigenvectors_ * c, t};
}

ExactState exact_evolve(const FullHamiltonian& hamiltonian, const VecX& psi0, double t) {
    return ExactPropagator(hamiltonian).evolve(psi0, t);
}

VecX left_state(Eigen::Index n) {
    VecX psi = VecX::Zero(n);
    psi(0) = 1.0;
    return psi;
}

ErrorReport compare_ww(const ValidatedModel& model, const std::vector<double>& t_grid,
                       double coupling_scale) {
    const Reduction reduction = reduce(model);
    if (!reduction.decay.is_zero())
        throw Error(ErrorKind::InvalidModel, "comparison requires a vanishing decay matrix");

    const ExactPropagator exact(full_hamiltonian(model));
    const VecX psi0 = left_state(exact.dimension());
    const Vec2 phi0(1.0, 0.0);

    ErrorReport report;
    report.t_grid = t_grid;
    report.coupling_scale = coupling_scale;
    for (double t : t_grid) {
        const ExactState full = exact.evolve(psi0, t);
        const Vec2 phi = evolve_effective(reduction.generator, phi0, t);
        report.max_abs_error_pl =
            std::max(report.max_abs_error_pl, std::abs(std::norm(phi(0)) - full.p_l()));
        report.max_abs_error_pr =
            std::max(report.max_abs_error_pr, std::abs(std::norm(phi(1)) - full.p_r()));
    }
    return report;
}

std::vector<ErrorReport> convergence_study(const ValidatedModel& model,
                                           const std::vector<double>& lambdas,
                                           const std::vector<double>& t_grid) {
    std::vector<std::future<ErrorReport>> pending;
    pending.reserve(lambdas.size());
    for (double lambda : lambdas)
        pending.push_back(std::async(std::launch::async, [&model, &t_grid, lambda] {
            return compare_ww(scale_couplings(model, lambda), t_grid, lambda);
        }));

    std::vector<ErrorReport> reports;
    reports.reserve(lambdas.size());
    for (auto& f : pending) reports.push_back(f.get());
    return reports;
}

}  // namespace chiralww
