// dynamics.cpp — see dynamics.hpp

#include "admed/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "admed/observables.hpp"

namespace admed {

int middle_decoupled_state(const Basis& basis) {
    const ModelParams& p = basis.params;
    std::vector<int> order(static_cast<size_t>(basis.size()));
    std::iota(order.begin(), order.end(), 0);
    // Stable sort on E0 keeps canonical basis order inside degenerate
    // multiplets (resonance makes E0 = ω(n+m) heavily degenerate).
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        const double ea = p.omega * basis.state_at(a).n + p.omega0 * basis.m_signed(a);
        const double eb = p.omega * basis.state_at(b).n + p.omega0 * basis.m_signed(b);
        return ea < eb;
    });
    return order[static_cast<size_t>(basis.size() / 2)];
}

QuenchResult evolve_pr(const Spectrum& spectrum, const Eigen::VectorXd& psi_in,
                       const std::vector<double>& times) {
    if (psi_in.size() != spectrum.dim()) {
        throw std::invalid_argument("evolve_pr: psi_in/spectrum size mismatch");
    }
    if (std::abs(psi_in.squaredNorm() - 1.0) > 1e-10) {
        throw std::invalid_argument("evolve_pr: psi_in is not normalized");
    }

    QuenchResult result;
    result.times = times;
    result.pr.reserve(times.size());
    // Record the basis position when ψ_in is a single basis vector.
    Eigen::Index max_idx = 0;
    psi_in.cwiseAbs().maxCoeff(&max_idx);
    if (std::abs(std::abs(psi_in[max_idx]) - 1.0) < 1e-12) {
        result.initial_index = static_cast<int>(max_idx);
    }

    const Eigen::VectorXd c = spectrum.vectors.transpose() * psi_in;  // ⟨k|ψ_in⟩
    const int dim = spectrum.dim();
    Eigen::VectorXd cr(dim), ci(dim);
    for (double t : times) {
        if (t == 0.0) {
            result.pr.push_back(participation_ratio(psi_in));
            continue;
        }
        for (int k = 0; k < dim; ++k) {
            cr[k] = c[k] * std::cos(spectrum.energies[k] * t);
            ci[k] = -c[k] * std::sin(spectrum.energies[k] * t);
        }
        const Eigen::VectorXd re = spectrum.vectors * cr;  // Re C_α(t)
        const Eigen::VectorXd im = spectrum.vectors * ci;  // Im C_α(t)
        const Eigen::ArrayXd prob = re.array().square() + im.array().square();
        result.max_norm_drift =
            std::max(result.max_norm_drift, std::abs(prob.sum() - 1.0));
        result.pr.push_back(1.0 / prob.square().sum());
    }
    return result;
}

double diagonal_ensemble_pr(const Spectrum& spectrum, const Eigen::VectorXd& psi_in) {
    if (psi_in.size() != spectrum.dim()) {
        throw std::invalid_argument("diagonal_ensemble_pr: psi_in/spectrum size mismatch");
    }
    if (std::abs(psi_in.squaredNorm() - 1.0) > 1e-10) {
        throw std::invalid_argument("diagonal_ensemble_pr: psi_in is not normalized");
    }
    const Eigen::ArrayXd c2 = (spectrum.vectors.transpose() * psi_in).array().square();
    // p_α = Σ_k |⟨α|k⟩|² |⟨k|ψ_in⟩|²  — the time-averaged occupation.
    const Eigen::ArrayXd p = (spectrum.vectors.array().square().matrix() * c2.matrix()).array();
    return 1.0 / p.square().sum();
}

}  // namespace admed
