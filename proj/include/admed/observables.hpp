// observables.hpp — Per-eigenvector diagnostics
// Participation ratio P = 1/Σ|ψ_j|⁴, multifractal dimensions
// D_q = (1/(1−q))·ln(Σ|ψ_j|^{2q})/ln(dim), mean photon number ⟨a†a⟩/j, and
// the spin–boson von Neumann entanglement entropy from the Schmidt
// decomposition of the reshaped coefficient matrix.

#pragma once

#include <Eigen/Dense>

#include <map>
#include <vector>

#include "admed/basis.hpp"

namespace admed {

// P = 1/Σ_j |v_j|⁴ ∈ [1, dim].  Throws if ‖v‖₂ deviates from 1 by > 1e−10.
double participation_ratio(const Eigen::VectorXd& v);

// 1/P = Σ_j |v_j|⁴ ∈ (0, 1].
double inverse_participation_ratio(const Eigen::VectorXd& v);

// Shannon participation entropy S1 = −Σ |ψ_j|² ln|ψ_j|²  (0·ln 0 := 0).
double shannon_entropy(const Eigen::VectorXd& v);

// D_q = (1/(1−q))·ln(Σ|ψ_j|^{2q})/ln(dim) for q > 0, with the q → 1
// Shannon limit D_1 = S1/ln(dim).  Throws for q ≤ 0.
double multifractal_dimension(const Eigen::VectorXd& v, double q, int dim);

// ⟨a†a⟩ = Σ_k n_k |v_k|² over the given basis (divide by j for the density).
double mean_photon_number(const Eigen::VectorXd& v, const Basis& basis);

// Von Neumann entropy of the spin reduced state: reshape v into the
// (n_max+1)×(N+1) matrix Ψ (rows n, columns m), take singular values σ_k,
// Schmidt weights p_k = σ_k² (clipped below 1e−14), return −Σ p_k ln p_k.
// Bounded by ln(min(n_max+1, N+1)).
double vnee_spins(const Eigen::VectorXd& v, const Basis& basis);

// Bundle of the above for one eigenvector.
struct EigenstateMetrics {
    double pr = 0.0;
    double ipr = 0.0;
    double photon_density = 0.0;   // <a†a>/j
    double vnee = 0.0;
    std::map<double, double> d_q;
};

EigenstateMetrics eigenstate_metrics(const Eigen::VectorXd& v, const Basis& basis,
                                     const std::vector<double>& qs = {0.5, 1.0, 2.0, 3.0});

}  // namespace admed
