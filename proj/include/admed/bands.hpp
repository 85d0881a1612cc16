// bands.hpp — Whole-spectrum diagnostics for excited-state transitions
// VNEE-vs-energy profile, jump-weighted characteristic energies E_lower and
// E_upper, the χ ratios against reference cutoffs, and the consecutive
// level-spacing ratio ⟨r⟩ on the central band of the +1 parity sector.

#pragma once

#include <optional>
#include <vector>

#include "admed/eigensolve.hpp"
#include "admed/observables.hpp"

namespace admed {

// ------------------------------ VNEE profile ---------------------------------

struct ProfilePoint {
    double energy = 0.0;   // E_n
    double vnee   = 0.0;   // S_n
};

// S_n = vnee_spins(v_n) for every eigenvector, in energy order.
std::vector<ProfilePoint> vnee_profile(const Spectrum& spectrum, const Basis& basis);

// ------------------------ characteristic energies ----------------------------

// Jump-weighted mean energies over each half of the profile:
//   E_lower = Σ_{n<N_D/2} E_n|ΔS_n| / Σ|ΔS_n|,  ΔS_n = S_{n+1} − S_n,
// and likewise E_upper over the upper half; split index = floor(N_D/2).
// A half whose jumps all vanish (flat profile) yields nullopt — an explicit
// "degenerate profile" result, never a number.
struct CharacteristicEnergies {
    std::optional<double> lower;
    std::optional<double> upper;
};

CharacteristicEnergies characteristic_energies(const std::vector<ProfilePoint>& profile);

// --------------------------- reference cutoffs -------------------------------

// e_max_decoupled = ω·n_max + ω0·j (closed form: top of the g1=g2=0 ladder).
// e_normal0 = ground-state energy at the critical-line projection of
// (g1,g2): couplings rescaled by √(ωω0)/(g1+g2), preserving their ratio, so
// the projected point sits on g1+g2 = √(ωω0); points already in the normal
// phase (g1+g2 ≤ √(ωω0)) are used as-is.  g1=g2=0 projects to the symmetric
// point.  Costs one diagonalization when the projection moves the point.
struct ReferenceCutoffs {
    double e_normal0       = 0.0;
    double e_max_decoupled = 0.0;
};

ReferenceCutoffs reference_cutoffs(const ModelParams& params);

// ------------------------------- χ ratios ------------------------------------

// χ_lower = e_lower/e_normal0, χ_upper = e_upper/e_max_decoupled.
// Throws std::invalid_argument on zero denominators.
struct ChiValues {
    double lower = 0.0;
    double upper = 0.0;
};

ChiValues chi_values(double e_lower, double e_upper,
                     double e_normal0, double e_max_decoupled);

// ------------------------- level-spacing statistics --------------------------

// Mean of r_n = min(s_{n−1}, s_n)/max(s_{n−1}, s_n) over consecutive gaps
// s_n = E_{n+1} − E_n.  Zero gaps (s ≤ 1e−12·span) produce r_n = 0 by the
// min/max convention and are counted in `degenerate_gaps`.
// Throws for fewer than 3 energies.
struct RStatistic {
    double mean = 0.0;
    int degenerate_gaps = 0;   // gaps at or below the zero threshold
    int pair_count = 0;        // number of r_n values averaged
};

RStatistic r_statistic(const std::vector<double>& energies);

// ----------------------------- central band ----------------------------------

// ⟨r⟩ over the +1 parity sector energies inside [e_normal0, e_max_decoupled].
// Eigenvectors are assigned to sectors by dominant support; numerically
// degenerate multiplets (|ΔE| < 1e−10·scale) are parity-projected first and
// contribute rank(P₊·span) levels to the +1 sector.
struct CentralBandR {
    RStatistic stats;
    int band_levels = 0;        // +1 sector levels inside the window
    bool low_statistics = false;  // fewer than 50 band levels
};

CentralBandR central_band_r(const Spectrum& spectrum, const Basis& basis,
                            const ReferenceCutoffs& cutoffs);

// ------------------------------ full bundle ----------------------------------

struct BandAnalysis {
    std::vector<ProfilePoint> profile;
    std::optional<double> e_lower, e_upper;
    std::optional<double> chi_lower, chi_upper;   // absent if the profile half is degenerate
    double e_normal0       = 0.0;
    double e_max_decoupled = 0.0;
    CentralBandR central;
};

// Runs the whole pipeline on one spectrum.  `cutoffs` may be supplied to
// reuse a previously computed e_normal0 (it is independent of the in-cell
// spectrum); otherwise they are recomputed from basis.params.
BandAnalysis analyze_spectrum(const Spectrum& spectrum, const Basis& basis,
                              std::optional<ReferenceCutoffs> cutoffs = std::nullopt);

}  // namespace admed
