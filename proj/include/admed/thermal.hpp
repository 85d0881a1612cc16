// thermal.hpp — Thermal-phase-transition machinery
// Analytic critical temperature T_c = (ω0/2ω)/arctanh(ωω0/(g1+g2)²), the
// free-energy saddle function φ(y) with η(y) = √(1 + 4(λ1+λ2)²y/ε²) in the
// scaled variables ε = ω0/ω, λ_i = g_i/ω, Gibbs states on the full spin
// product space, partial traces, and the two-spin mutual information
// I12 = S1 + S2 − S12.

#pragma once

#include <Eigen/Dense>

#include <optional>
#include <vector>

#include "admed/eigensolve.hpp"

namespace admed {

// Hermitian PSD real symmetric matrix with unit trace.
using DensityMatrix = Eigen::MatrixXd;

// --------------------------- analytic transition -----------------------------

// T_c from the exact expression; empty when (g1+g2)² ≤ ωω0 (the arctanh
// argument reaches 1 and no thermal transition exists).
std::optional<double> analytic_tc(const ModelParams& params);

// Scaled couplings entering the saddle-point analysis.
struct SaddleParams {
    double epsilon = 1.0;   // ω0/ω
    double lambda1 = 0.0;   // g1/ω
    double lambda2 = 0.0;   // g2/ω

    static SaddleParams from(const ModelParams& params);
    double lambda_sum() const noexcept { return lambda1 + lambda2; }
};

// η(y) = √(1 + 4(λ1+λ2)²y/ε²) ≥ 1 for y ≥ 0.
double saddle_eta(const SaddleParams& sp, double y);

// φ(y) = −βy + ln(2 cosh[(βε/2)η(y)]).  Requires y ≥ 0, β > 0.
double saddle_function(const SaddleParams& sp, double beta, double y);

// φ′(y) = −β + (β(λ1+λ2)²/(ε η))·tanh(βεη/2); a positive φ′(0) signals a
// superradiant saddle (β > β_c).
double saddle_derivative(const SaddleParams& sp, double beta, double y);

// Bisection root η* > 0 of the stationarity condition
//   εη/(λ1+λ2)² = tanh(βεη/2),
// the unique positive solution when it exists; at β = β_c it is exactly 1.
// Throws std::invalid_argument when (λ1+λ2)² ≤ ε (no solution).
double solve_saddle_eta(const SaddleParams& sp, double beta);

// ------------------------------- Gibbs states --------------------------------

// ρ = exp(−H/T)/Z via eigendecomposition, computed with the shifted weights
// exp(−(E_k − E_min)/T) for overflow safety.  Throws for T ≤ 0.
DensityMatrix gibbs_state(const SymmetricMatrix& h, double temperature);

// Same, reusing an existing decomposition (one eigh serves a whole
// temperature sweep).
DensityMatrix gibbs_state(const Spectrum& spectrum, double temperature);

// --------------------------------- traces ------------------------------------

// Reduced density matrix on the kept tensor factors.  `dims` lists the
// factor dimensions with the first factor slowest (global index =
// ((d_0-digit)·dims[1] + d_1-digit)·dims[2] + ...); `keep` holds factor
// positions to retain, in ascending order.  Unit trace is preserved.
DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<int>& dims,
                            const std::vector<int>& keep);

// −Tr ρ ln ρ in natural log units; eigenvalues below 1e−14 are treated as 0.
double vn_entropy(const DensityMatrix& rho);

// ------------------------- two-spin mutual information -----------------------

// I12 = S1 + S2 − S12 for two tagged spins of the full-product-space state:
// traces out the bosonic factor first, then the remaining N−2 spins (any
// pair is equivalent by permutation symmetry).  Throws for N < 2 or when
// rho is not on the (n_max+1)·2^N space.
double mutual_information_two_spins(const DensityMatrix& rho_full,
                                    const ModelParams& params);

// ------------------------- transition from MI(T) -----------------------------

// I12 along a temperature grid with the transition estimate at the minimum
// of the central-difference derivative dI12/dT.
struct MiCurve {
    std::vector<double> temps;
    std::vector<double> mi;
    std::vector<double> dmi_dt;           // interior central differences, aligned with temps[1..n-2]
    double t_star = 0.0;                  // temperature of min dI12/dT
    std::optional<double> analytic;       // analytic_tc for comparison
    bool coarse_grid_warning = false;     // min grid spacing > 0.1
};

// One spin-product-space diagonalization serves every temperature point.
// Requires a monotone grid of ≥ 20 positive temperatures.
MiCurve mi_transition_temperature(const ModelParams& params,
                                  const std::vector<double>& temps);

// Ground-state projector |v0⟩⟨v0| of the spin-product-space Hamiltonian —
// the T = 0 state (gibbs_state itself rejects T ≤ 0).
DensityMatrix ground_state_projector(const Spectrum& spectrum);

}  // namespace admed
