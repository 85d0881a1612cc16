"""Exact diagonalization of the anisotropic Dicke model.

Thin wrapper over the compiled ``_core`` extension: basis construction,
dense Hamiltonians, full eigendecomposition, eigenstate observables
(participation ratio, multifractal dimensions, entanglement entropy),
spectral-band analysis, Gibbs states with two-spin mutual information,
and quench dynamics.
"""

from ._core import (
    BandAnalysis,
    Basis,
    BasisState,
    CentralBandR,
    CharacteristicEnergies,
    EigenstateMetrics,
    ModelParams,
    ProfilePoint,
    QuenchResult,
    ReferenceCutoffs,
    RStatistic,
    Spectrum,
    analytic_tc,
    analyze_spectrum,
    build_basis,
    build_decoupled,
    build_hamiltonian,
    build_spinspace_hamiltonian,
    central_band_r,
    characteristic_energies,
    diagonal_ensemble_pr,
    eigenstate_metrics,
    eigh,
    evolve_pr,
    gibbs_state,
    ground_state_projector,
    inverse_participation_ratio,
    mean_photon_number,
    middle_decoupled_state,
    multifractal_dimension,
    mutual_information_two_spins,
    parity_sector,
    partial_trace,
    participation_ratio,
    r_statistic,
    reference_cutoffs,
    shannon_entropy,
    solve_saddle_eta,
    saddle_function,
    spinspace_dimension,
    vn_entropy,
    vnee_profile,
    vnee_spins,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
