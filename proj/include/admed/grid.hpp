// grid.hpp — Parameter-sweep driver
// (g1,g2) and temperature grids of scalar observables, computed cell by
// cell with a deterministic merge (output independent of worker count),
// serialized as CSV + JSON manifest, resumable, and renderable as SVG.

#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "admed/bands.hpp"
#include "admed/dynamics.hpp"
#include "admed/thermal.hpp"

namespace admed {

// ------------------------------ configuration --------------------------------

enum class Observable {
    gs_energy_density,   // E_0 / N
    photon_density,      // ⟨a†a⟩/j of the selected state
    ipr_gs,              // 1/PR of the ground state
    pr_state_k,          // PR of the selected state
    d1_state_k,          // D_1 of the selected state
    vnee_profile,        // per-eigenstate S_n (single-point grids only)
    chi_lower,           // E_lower/E0_normal
    chi_upper,           // E_upper/E_max_decoupled
    r_central,           // central-band ⟨r⟩, +1 parity sector
    quench_pr,           // PR(t=1000) after the middle-state quench
    mi_grid,             // two-spin mutual information on a (g1,g2,T) grid
    tc_curve,            // analytic T_c (missing where no transition exists)
};

std::string to_string(Observable obs);
Observable observable_from_string(const std::string& name);

// Inclusive linear range with `steps` points; steps == 1 collapses to min.
struct AxisSpec {
    double min = 0.0;
    double max = 0.0;
    int steps = 1;

    std::vector<double> points() const;
};

// Parses "min:max:steps"; throws std::invalid_argument on malformed input.
AxisSpec parse_axis_spec(const std::string& text);

enum class StateSelector { ground, middle, index };

struct RunConfig {
    Observable observable = Observable::gs_energy_density;
    double omega  = 1.0;
    double omega0 = 1.0;
    int n_atoms   = 2;
    int n_max     = 0;
    AxisSpec g1, g2;
    AxisSpec temps;                  // thermal grids only
    bool has_temps = false;
    StateSelector selector = StateSelector::ground;
    int state_index = 0;             // used when selector == index
    std::vector<double> times;       // quench sample times (empty = defaults)
    std::string out_dir;
    int workers = 1;
    bool resume = false;

    // ModelParams for one grid cell.
    ModelParams cell_params(double g1_val, double g2_val) const;

    // Throws std::invalid_argument with a message on any inconsistency.
    void validate() const;
};

// Loads a config from a JSON document; unknown keys are rejected.
RunConfig config_from_json_file(const std::string& path);

// "ground" | "middle" | "<index>" ↔ (selector, state_index).
void set_state_selector(RunConfig& config, const std::string& text);
std::string state_selector_name(const RunConfig& config);

// ------------------------------- results -------------------------------------

// Row-major lattice of optional cell values: index ((i1·n2)+i2)·nt + it with
// nt = max(1, |t_axis|).  Missing cells carry a reason instead of a value.
struct PhaseGrid {
    RunConfig config;
    std::vector<double> g1_axis, g2_axis, t_axis;
    std::vector<std::optional<double>> values;
    std::map<std::string, std::string> reasons;   // "i1,i2[,it]" → why missing
    std::map<std::string, std::string> flags;     // informational (e.g. low statistics)

    // Per-eigenstate rows (k, E_k, S_k) for vnee_profile runs.
    std::vector<std::array<double, 3>> profile;

    int n1() const noexcept { return static_cast<int>(g1_axis.size()); }
    int n2() const noexcept { return static_cast<int>(g2_axis.size()); }
    int nt() const noexcept { return t_axis.empty() ? 1 : static_cast<int>(t_axis.size()); }
    bool complete() const noexcept { return reasons.empty(); }

    std::optional<double> at(int i1, int i2, int it = 0) const;
};

// ------------------------------- execution -----------------------------------

// Computes every grid cell (one diagonalization per (g1,g2) point), merges
// deterministically by cell index, writes <out>/scan.csv, manifest.json and
// reasons.json (when cells are missing or flagged).  With config.resume,
// cells already present in an existing scan.csv with matching axes are not
// recomputed.  Per-cell failures become missing cells, never an abort.
PhaseGrid run_scan(const RunConfig& config);

// Single-point quench: middle decoupled state evolved at config.times
// (defaults to {0.01, 0.2, 1, 1000}); writes quench.csv + manifest.
struct QuenchRun {
    double g1 = 0.0, g2 = 0.0;
    QuenchResult result;
    double diag_ensemble_pr = 0.0;
};
QuenchRun run_quench(const RunConfig& config);

// Single-point MI(T) curve with the derivative-minimum transition estimate;
// writes thermal.csv + manifest.  Requires strictly positive temperatures
// (T = 0 cells belong to mi_grid scans, where the Gibbs state degenerates
// to the ground-state projector).
MiCurve run_thermal(const RunConfig& config);

// Re-runs the configured observable at each boson cutoff and reports the
// max absolute cell-wise difference between consecutive cutoffs; flags
// non-convergence when those differences fail to decrease.  Cells missing
// at either cutoff are excluded from the difference.
struct ConvergenceReport {
    std::vector<int> cutoffs;
    std::vector<double> max_abs_diff;   // size = |cutoffs| − 1
    bool non_convergent = false;
};
ConvergenceReport convergence_scan(const RunConfig& config, const std::vector<int>& n_max_list);

}  // namespace admed
