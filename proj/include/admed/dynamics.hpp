// dynamics.hpp — Quench protocol
// Start from the middle excited state of the decoupled H0 = ω a†a + ω0 Jz,
// evolve under the full Hamiltonian via its spectral decomposition
// |ψ_t⟩ = Σ_k e^{−iE_k t} |k⟩⟨k|ψ_in⟩, and track PR(t) = 1/Σ_α |C_α(t)|⁴
// in the computational basis.

#pragma once

#include <Eigen/Dense>

#include <vector>

#include "admed/basis.hpp"
#include "admed/eigensolve.hpp"

namespace admed {

// Basis index of the middle excited state of H0: sort product states by
// E0(n,m) = ω·n + ω0·m with a stable tie-break on canonical basis order,
// take rank floor(N_D/2).  Deterministic also at resonance, where E0 has
// large degenerate multiplets.
int middle_decoupled_state(const Basis& basis);

struct QuenchResult {
    std::vector<double> times;
    std::vector<double> pr;        // PR(t), in [1, N_D]
    int initial_index = -1;        // basis position of ψ_in when it is a basis state, else −1
    double max_norm_drift = 0.0;   // max_t |‖ψ_t‖² − 1|
};

// Spectral evolution of a normalized ψ_in at the sampled times.  Complex
// amplitudes are carried as (real, imaginary) vector pairs; t = 0 returns
// participation_ratio(ψ_in) exactly.  Throws for unnormalized input.
QuenchResult evolve_pr(const Spectrum& spectrum, const Eigen::VectorXd& psi_in,
                       const std::vector<double>& times);

// Infinite-time average predicted by the diagonal ensemble:
//   PR_DE = 1/Σ_α (Σ_k |⟨α|k⟩|² |⟨k|ψ_in⟩|²)².
double diagonal_ensemble_pr(const Spectrum& spectrum, const Eigen::VectorXd& psi_in);

// Canonical figure sample times (units of 1/ω0).
inline const std::vector<double> kDefaultQuenchTimes = {0.01, 0.2, 1.0, 1000.0};

}  // namespace admed
