// acceptance_main.cpp — end-to-end physics checks, one pass/fail line each
//
// Eight numbered criteria cover the four transitions (ground-state, excited-
// state, ergodicity, thermal) plus the saddle-point and kernel invariants.
// Every tolerance is pinned here as a literal; each criterion prints exactly
// one line "C<k> PASS — ..." or "C<k> FAIL — ..." with the measured numbers,
// and the process exits with the count of failing criteria.
//
//   acceptance              runs all eight
//   acceptance --criterion 4   runs one

#include <admed/bands.hpp>
#include <admed/basis.hpp>
#include <admed/dynamics.hpp>
#include <admed/eigensolve.hpp>
#include <admed/hamiltonian.hpp>
#include <admed/observables.hpp>
#include <admed/thermal.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

// Single-threaded BLAS keeps every number bitwise reproducible.
extern "C" void openblas_set_num_threads(int) __attribute__((weak));

namespace {

using namespace admed;

// ---- small helpers ----------------------------------------------------------

ModelParams desk_params(double g1, double g2, int n_atoms = 20, int n_max = 100) {
    ModelParams p;
    p.omega = 1.0;
    p.omega0 = 1.0;
    p.g1 = g1;
    p.g2 = g2;
    p.n_atoms = n_atoms;
    p.n_max = n_max;
    return p;
}

Spectrum spectrum_at(const ModelParams& params) {
    const Basis basis = build_basis(params);
    return eigh(build_hamiltonian(params, basis));
}

// Least-squares slope of y against x.
double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxx = 0.0, sxy = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    return sxy / sxx;
}

// Average ranks (ties share the mean rank), 1-based.
std::vector<double> average_ranks(const std::vector<double>& x) {
    const size_t n = x.size();
    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(),
              [&x](size_t a, size_t b) { return x[a] < x[b]; });
    std::vector<double> rank(n, 0.0);
    size_t i = 0;
    while (i < n) {
        size_t j = i + 1;
        while (j < n && x[order[j]] == x[order[i]]) ++j;
        const double shared = 0.5 * static_cast<double>(i + j - 1) + 1.0;
        for (size_t k = i; k < j; ++k) rank[order[k]] = shared;
        i = j;
    }
    return rank;
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    return sxy / std::sqrt(sxx * syy);
}

double spearman(const std::vector<double>& x, const std::vector<double>& y) {
    return pearson(average_ranks(x), average_ranks(y));
}

// Basis-state probabilities averaged over the sampled times, computed from
// the spectral decomposition with explicit complex phases.  This is the
// diagonal ensemble made operational: the infinite-time average of the
// density matrix is diagonal in the eigenbasis, so the averaged
// probabilities must converge to p̄_α = Σ_k |V_αk|²|c_k|².
Eigen::VectorXd time_averaged_probabilities(const Spectrum& spectrum,
                                            const Eigen::VectorXd& psi_in,
                                            const std::vector<double>& times) {
    const Eigen::VectorXd c = spectrum.vectors.transpose() * psi_in;
    Eigen::VectorXd acc = Eigen::VectorXd::Zero(spectrum.dim());
    for (double t : times) {
        const Eigen::ArrayXd phase = spectrum.energies.array() * t;
        const Eigen::VectorXd re =
            spectrum.vectors * (c.array() * phase.cos()).matrix();
        const Eigen::VectorXd im =
            spectrum.vectors * (c.array() * phase.sin()).matrix();
        acc.array() += re.array().square() + im.array().square();
    }
    return acc / static_cast<double>(times.size());
}

struct Line {
    bool ok = true;
    std::ostringstream detail;

    // Records one sub-check; on failure the label and offending value land in
    // the printed line so a red run is diagnosable from the log alone.
    void expect(bool cond, const std::string& label) {
        if (!cond) {
            ok = false;
            detail << (detail.tellp() > 0 ? "; " : "") << "failed: " << label;
        }
    }
    void note(const std::string& text) {
        detail << (detail.tellp() > 0 ? "; " : "") << text;
    }
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// ---- C1: ground-state transition markers ------------------------------------

bool criterion1() {
    Line line;

    // Normal phase: energy density pinned near −1/2 across scattered points.
    const std::vector<std::pair<double, double>> np_points = {
        {0.0, 0.0}, {0.2, 0.2}, {0.4, 0.4}, {0.6, 0.2}, {0.1, 0.7}, {0.45, 0.45}};
    double emin = std::numeric_limits<double>::infinity();
    double emax = -std::numeric_limits<double>::infinity();
    for (const auto& [g1, g2] : np_points) {
        const ModelParams p = desk_params(g1, g2);
        const Spectrum s = spectrum_at(p);
        const double density = s.energies[0] / p.n_atoms;
        emin = std::min(emin, density);
        emax = std::max(emax, density);
        line.expect(density >= -0.55 && density <= -0.45,
                    "E0/N at (" + fmt(g1) + "," + fmt(g2) + ") = " + fmt(density));
        if (g1 == 0.2 && g2 == 0.2) {
            const Basis basis = build_basis(p);
            const double ipr = inverse_participation_ratio(s.vectors.col(0));
            const double photon = mean_photon_number(s.vectors.col(0), basis) / p.j();
            line.expect(ipr > 0.95, "IPR_gs(0.2,0.2) = " + fmt(ipr));
            line.expect(photon < 0.05, "photon(0.2,0.2) = " + fmt(photon));
            line.note("ipr(0.2,0.2)=" + fmt(ipr) + " photon=" + fmt(photon));
        }
    }
    line.note("E0/N range [" + fmt(emin) + "," + fmt(emax) + "]");

    // Super-radiant point: macroscopic boson occupation.
    {
        const ModelParams p = desk_params(1.2, 0.8);
        const Basis basis = build_basis(p);
        const Spectrum s = eigh(build_hamiltonian(p, basis));
        const double photon = mean_photon_number(s.vectors.col(0), basis) / p.j();
        line.expect(photon > 0.1, "photon(1.2,0.8) = " + fmt(photon));
        line.note("photon(1.2,0.8)=" + fmt(photon));
    }

    std::printf("C1 %s — %s\n", line.ok ? "PASS" : "FAIL", line.detail.str().c_str());
    return line.ok;
}

// ---- C2: PR_gs multifractal scaling -----------------------------------------

bool criterion2() {
    Line line;
    const std::vector<int> atoms = {12, 16, 20, 24, 28};

    std::map<int, double> slope;
    for (int n_max : {300, 200}) {
        std::vector<double> ln_dim, ln_pr;
        for (int n_atoms : atoms) {
            const ModelParams p = desk_params(1.2, 0.8, n_atoms, n_max);
            const Spectrum s = spectrum_at(p);
            ln_dim.push_back(std::log(static_cast<double>(p.dimension())));
            ln_pr.push_back(std::log(participation_ratio(s.vectors.col(0))));
        }
        slope[n_max] = fit_slope(ln_dim, ln_pr);
    }

    line.expect(std::abs(slope[300] - 0.5) <= 0.1,
                "slope at n_max=300 = " + fmt(slope[300]));
    line.expect(std::abs(slope[300] - slope[200]) <= 0.03,
                "cutoff drift |" + fmt(slope[300]) + " - " + fmt(slope[200]) + "|");
    line.note("slope(n_max=300)=" + fmt(slope[300]) +
              " slope(n_max=200)=" + fmt(slope[200]));

    std::printf("C2 %s — %s\n", line.ok ? "PASS" : "FAIL", line.detail.str().c_str());
    return line.ok;
}

// ---- C3: central-band level-spacing ratios ----------------------------------

bool criterion3() {
    Line line;

    const auto band_mean = [&line](double g1, double g2) {
        const ModelParams p = desk_params(g1, g2);
        const Basis basis = build_basis(p);
        const Spectrum s = eigh(build_hamiltonian(p, basis));
        const CentralBandR band = central_band_r(s, basis, reference_cutoffs(p));
        line.note("r(" + fmt(g1) + "," + fmt(g2) + ")=" + fmt(band.stats.mean) +
                  " over " + std::to_string(band.band_levels) + " levels");
        return band.stats.mean;
    };

    const double r_integrable = band_mean(1.5, 0.0);
    line.expect(r_integrable >= 0.36 && r_integrable <= 0.43,
                "⟨r⟩(1.5,0.0) = " + fmt(r_integrable));
    const double r_chaotic = band_mean(1.5, 1.5);
    line.expect(r_chaotic >= 0.50 && r_chaotic <= 0.56,
                "⟨r⟩(1.5,1.5) = " + fmt(r_chaotic));

    // Synthetic oracle: 1e5 unit-mean exponential gaps must land on the
    // Poisson value 2 ln 2 − 1 ≈ 0.3863.
    std::mt19937 gen(6021990);
    std::exponential_distribution<double> gap(1.0);
    std::vector<double> levels(100001);
    levels[0] = 0.0;
    for (size_t k = 1; k < levels.size(); ++k) levels[k] = levels[k - 1] + gap(gen);
    const RStatistic poisson = r_statistic(levels);
    line.expect(std::abs(poisson.mean - 0.386) <= 0.005,
                "Poisson MC ⟨r⟩ = " + fmt(poisson.mean));
    line.note("poisson_mc=" + fmt(poisson.mean));

    std::printf("C3 %s — %s\n", line.ok ? "PASS" : "FAIL", line.detail.str().c_str());
    return line.ok;
}

// ---- C4: entanglement-entropy band edges ------------------------------------

bool criterion4() {
    Line line;

    // (a) Rise / plateau / fall of the VNEE profile at a super-radiant point:
    // plateau mean over the middle 80% of [e_lower, e_upper] above 0.8 of the
    // profile maximum, and the bottom/top 5% of levels at least half a nat
    // below the plateau.  The low edge is not near zero — the ground state is
    // a parity cat over two displaced condensates, so the entropy floor is
    // ~ln 2 plus the smooth-mode contribution — but both edges must sit well
    // below the plateau by more than the profile's point scatter.
    {
        const ModelParams p = desk_params(1.0, 1.1);
        const Basis basis = build_basis(p);
        const Spectrum s = eigh(build_hamiltonian(p, basis));
        const BandAnalysis analysis = analyze_spectrum(s, basis);
        line.expect(analysis.e_lower.has_value() && analysis.e_upper.has_value(),
                    "characteristic energies undefined at (1.0,1.1)");
        if (analysis.e_lower && analysis.e_upper) {
            const double lo = *analysis.e_lower, hi = *analysis.e_upper;
            line.expect(lo < hi, "e_lower " + fmt(lo) + " !< e_upper " + fmt(hi));

            double s_max = 0.0;
            for (const ProfilePoint& pt : analysis.profile) s_max = std::max(s_max, pt.vnee);
            const double width = hi - lo;
            double plateau_sum = 0.0;
            int plateau_count = 0;
            for (const ProfilePoint& pt : analysis.profile) {
                if (pt.energy >= lo + 0.1 * width && pt.energy <= hi - 0.1 * width) {
                    plateau_sum += pt.vnee;
                    ++plateau_count;
                }
            }
            const double s_plat = plateau_count > 0 ? plateau_sum / plateau_count : 0.0;
            line.expect(plateau_count > 0 && s_plat > 0.8 * s_max,
                        "plateau mean " + fmt(s_plat) + " vs max " + fmt(s_max));

            const size_t n = analysis.profile.size();
            const size_t edge = std::max<size_t>(1, n / 20);
            double rise = 0.0, fall = 0.0;
            for (size_t k = 0; k < edge; ++k) {
                rise += analysis.profile[k].vnee;
                fall += analysis.profile[n - 1 - k].vnee;
            }
            rise /= static_cast<double>(edge);
            fall /= static_cast<double>(edge);
            line.expect(s_plat - rise >= 0.5, "low-edge mean " + fmt(rise));
            line.expect(s_plat - fall >= 0.5, "high-edge mean " + fmt(fall));
            line.note("e_lower=" + fmt(lo) + " e_upper=" + fmt(hi) +
                      " plateau=" + fmt(s_plat) + " edges=" + fmt(rise) + "/" + fmt(fall));
        }
    }

    // (b) Synthetic single-jump profiles: the jump-weighted means must land on
    // the jump edges with no tolerance at all.
    {
        std::vector<ProfilePoint> profile(12);
        for (size_t k = 0; k < profile.size(); ++k) {
            profile[k].energy = static_cast<double>(k);
            profile[k].vnee = (k >= 3 && k <= 8) ? 1.0 : 0.0;
        }
        const CharacteristicEnergies ce = characteristic_energies(profile);
        line.expect(ce.lower.has_value() && *ce.lower == 2.0,
                    "synthetic lower edge != 2");
        line.expect(ce.upper.has_value() && *ce.upper == 8.0,
                    "synthetic upper edge != 8");
    }

    // (c) χ grids against the ⟨r⟩ grid: 16×16 on [0,2]², skipping the
    // isotropic band |g1−g2| ≤ 0.2, Spearman |ρ| > 0.5 for both halves.
    {
        const int steps = 16;
        std::vector<double> chi_lo, r_lo, chi_hi, r_hi;
        // e_normal0 depends only on the coupling direction, so cache it per
        // reduced (i1,i2) pair instead of re-diagonalizing 200+ times.
        std::map<std::pair<int, int>, double> normal0_cache;
        const ModelParams shape = desk_params(0.0, 0.0);
        const double e_max = shape.omega * shape.n_max + shape.omega0 * shape.j();

        for (int i1 = 0; i1 < steps; ++i1) {
            for (int i2 = 0; i2 < steps; ++i2) {
                const double g1 = 2.0 * i1 / (steps - 1);
                const double g2 = 2.0 * i2 / (steps - 1);
                if (std::abs(g1 - g2) <= 0.2) continue;

                const ModelParams p = desk_params(g1, g2);
                const Basis basis = build_basis(p);
                const Spectrum s = eigh(build_hamiltonian(p, basis));

                std::optional<ReferenceCutoffs> cutoffs;
                if (g1 + g2 > 1.0) {
                    const int d = std::gcd(i1, i2);
                    const std::pair<int, int> key{i1 / d, i2 / d};
                    auto it = normal0_cache.find(key);
                    if (it == normal0_cache.end()) {
                        it = normal0_cache.emplace(key, reference_cutoffs(p).e_normal0).first;
                    }
                    cutoffs = ReferenceCutoffs{it->second, e_max};
                }
                const BandAnalysis a = analyze_spectrum(s, basis, cutoffs);
                if (a.central.stats.pair_count == 0) continue;
                if (a.chi_lower) {
                    chi_lo.push_back(*a.chi_lower);
                    r_lo.push_back(a.central.stats.mean);
                }
                if (a.chi_upper) {
                    chi_hi.push_back(*a.chi_upper);
                    r_hi.push_back(a.central.stats.mean);
                }
            }
        }

        line.expect(chi_lo.size() >= 30 && chi_hi.size() >= 30,
                    "usable grid cells: lower " + std::to_string(chi_lo.size()) +
                        ", upper " + std::to_string(chi_hi.size()));
        if (chi_lo.size() >= 30 && chi_hi.size() >= 30) {
            const double rho_lo = spearman(chi_lo, r_lo);
            const double rho_hi = spearman(chi_hi, r_hi);
            line.expect(std::abs(rho_lo) > 0.5, "Spearman(χ_lower, r) = " + fmt(rho_lo));
            line.expect(std::abs(rho_hi) > 0.5, "Spearman(χ_upper, r) = " + fmt(rho_hi));
            line.note("spearman_lower=" + fmt(rho_lo) + " (" +
                      std::to_string(chi_lo.size()) + " cells) spearman_upper=" +
                      fmt(rho_hi) + " (" + std::to_string(chi_hi.size()) + " cells)");
        }
    }

    std::printf("C4 %s — %s\n", line.ok ? "PASS" : "FAIL", line.detail.str().c_str());
    return line.ok;
}

// ---- C5: quench toward the diagonal ensemble --------------------------------

bool criterion5() {
    Line line;

    // 201 evenly spaced samples of the late-time window [500, 1500].
    std::vector<double> window(201);
    for (size_t k = 0; k < window.size(); ++k) window[k] = 500.0 + 5.0 * static_cast<double>(k);

    const auto long_time_pr = [&](double g1, double g2) {
        const ModelParams p = desk_params(g1, g2, 12, 60);
        const Basis basis = build_basis(p);
        const Spectrum s = eigh(build_hamiltonian(p, basis));
        Eigen::VectorXd psi = Eigen::VectorXd::Zero(s.dim());
        psi[middle_decoupled_state(basis)] = 1.0;

        const QuenchResult q = evolve_pr(s, psi, {0.0, 1000.0});
        line.expect(q.pr[0] == 1.0, "PR(0) != 1 at (" + fmt(g1) + "," + fmt(g2) + ")");
        line.expect(q.max_norm_drift < 1e-10,
                    "norm drift " + fmt(q.max_norm_drift) + " at (" + fmt(g1) + "," + fmt(g2) + ")");

        const Eigen::VectorXd averaged = time_averaged_probabilities(s, psi, window);
        const double pr_lt = 1.0 / averaged.array().square().sum();
        const double pr_de = diagonal_ensemble_pr(s, psi);
        line.expect(std::abs(pr_lt - pr_de) <= 0.10 * pr_de,
                    "long-time PR " + fmt(pr_lt) + " vs DE " + fmt(pr_de) + " at (" +
                        fmt(g1) + "," + fmt(g2) + ")");
        line.note("PR_lt(" + fmt(g1) + "," + fmt(g2) + ")=" + fmt(pr_lt) +
                  " DE=" + fmt(pr_de) + " drift=" + fmt(q.max_norm_drift));
        return pr_lt;
    };

    const double pr_ergodic = long_time_pr(1.5, 1.5);
    const double pr_localized = long_time_pr(0.3, 0.0);
    line.expect(pr_ergodic >= 5.0 * pr_localized,
                "ergodic/localized ratio = " + fmt(pr_ergodic / pr_localized));
    line.note("ratio=" + fmt(pr_ergodic / pr_localized));

    std::printf("C5 %s — %s\n", line.ok ? "PASS" : "FAIL", line.detail.str().c_str());
    return line.ok;
}

// ---- C6: thermal transition via two-spin mutual information -----------------

bool criterion6() {
    Line line;
    const ModelParams p = desk_params(1.0, 0.5, 6, 40);

    // (a) Closed-form critical temperature, exact to 1e−12.
    {
        const std::optional<double> tc = analytic_tc(p);
        const double expected = 0.5 / std::atanh(1.0 / 2.25);
        line.expect(tc.has_value() && std::abs(*tc - expected) <= 1e-12,
                    "analytic_tc = " + (tc ? fmt(*tc) : std::string("none")));
        if (tc) line.note("analytic_tc=" + fmt(*tc));
    }

    // (b) I12(T): high at low T, decayed at high T, and a single pronounced
    // minimum of dI12/dT (no second dip below half the main one).
    {
        std::vector<double> temps;
        for (int k = 0; k <= 28; ++k) temps.push_back(0.2 + 0.1 * k);
        const MiCurve curve = mi_transition_temperature(p, temps);
        const double cold = curve.mi.front(), hot = curve.mi.back();
        line.expect(cold >= 0.1, "I12(0.2) = " + fmt(cold));
        line.expect(hot <= 0.5 * cold, "I12(3.0) = " + fmt(hot) + " vs cold " + fmt(cold));

        const double depth = *std::min_element(curve.dmi_dt.begin(), curve.dmi_dt.end());
        line.expect(depth < 0.0, "min dI12/dT = " + fmt(depth));
        int pronounced = 0;
        for (size_t k = 1; k + 1 < curve.dmi_dt.size(); ++k) {
            if (curve.dmi_dt[k] < curve.dmi_dt[k - 1] &&
                curve.dmi_dt[k] < curve.dmi_dt[k + 1] &&
                curve.dmi_dt[k] < 0.5 * depth) {
                ++pronounced;
            }
        }
        line.expect(pronounced == 1,
                    std::to_string(pronounced) + " pronounced dI12/dT minima");
        line.note("I12(0.2)=" + fmt(cold) + " I12(3.0)=" + fmt(hot) +
                  " t_star=" + fmt(curve.t_star));
    }

    // (c) Pure-state identity at T = 0: for the ground-state projector the
    // mutual information between one spin and everything else equals twice
    // that spin's entanglement entropy.
    {
        const Spectrum s = eigh(build_spinspace_hamiltonian(p));
        const DensityMatrix rho0 = ground_state_projector(s);
        const std::vector<int> dims = {p.n_max + 1, 2, 2, 2, 2, 2, 2};
        const double s1 = vn_entropy(partial_trace(rho0, dims, {1}));
        const double s_rest = vn_entropy(partial_trace(rho0, dims, {0, 2, 3, 4, 5, 6}));
        const double s_total = vn_entropy(rho0);
        const double mi_bipartite = s1 + s_rest - s_total;
        line.expect(std::abs(mi_bipartite - 2.0 * s1) <= 1e-8,
                    "pure-state identity residual " + fmt(std::abs(mi_bipartite - 2.0 * s1)));
        line.note("S1=" + fmt(s1) + " |I-2S1|=" + fmt(std::abs(mi_bipartite - 2.0 * s1)));
    }

    // (d) T = 0 mutual-information grid: 7×7 on [0,1.5]².  Along every row
    // and column that crosses g1+g2 = 1 inside the axis range, the first
    // cell where MI departs from the normal-phase background (10% of that
    // line's maximum) must sit within one cell pitch (0.25) of the true
    // crossing.  MI amplitude varies along the super-radiant side — the
    // g1=0 and g2=0 edges carry an extra U(1) symmetry that suppresses
    // two-spin correlations, and MI keeps growing toward the ln 2 cat-state
    // value deep in the phase — so the departure point, not the steepest
    // jump or an absolute level, is what marks the boundary.
    {
        double mi_grid[7][7];
        for (int i1 = 0; i1 < 7; ++i1) {
            for (int i2 = 0; i2 < 7; ++i2) {
                ModelParams cell = p;
                cell.g1 = 0.25 * i1;
                cell.g2 = 0.25 * i2;
                const Spectrum s = eigh(build_spinspace_hamiltonian(cell));
                mi_grid[i1][i2] =
                    mutual_information_two_spins(ground_state_projector(s), cell);
            }
        }

        double worst_offset = 0.0;
        int lines_checked = 0;
        const auto check_line = [&](const std::array<double, 7>& mi, double crossing,
                                    const std::string& label) {
            if (crossing < 0.0 || crossing > 1.5) return;
            const double peak = *std::max_element(mi.begin(), mi.end());
            line.expect(peak > 0.1, label + " peak MI " + fmt(peak));
            int first = 6;
            for (int k = 0; k < 7; ++k) {
                if (mi[static_cast<size_t>(k)] >= 0.1 * peak) {
                    first = k;
                    break;
                }
            }
            const double departure = 0.25 * first;
            const double offset = std::abs(departure - crossing);
            worst_offset = std::max(worst_offset, offset);
            ++lines_checked;
            line.expect(offset <= 0.25, label + " boundary at " + fmt(departure) +
                                            " vs " + fmt(crossing));
        };
        for (int i = 0; i < 7; ++i) {
            const double g_fixed = 0.25 * i;
            std::array<double, 7> column, row;
            for (int k = 0; k < 7; ++k) {
                column[static_cast<size_t>(k)] = mi_grid[i][k];
                row[static_cast<size_t>(k)] = mi_grid[k][i];
            }
            check_line(column, 1.0 - g_fixed, "column g1=" + fmt(g_fixed));
            check_line(row, 1.0 - g_fixed, "row g2=" + fmt(g_fixed));
        }
        line.note("boundary within " + fmt(worst_offset) + " of g1+g2=1 on " +
                  std::to_string(lines_checked) + " scan lines");
    }

    std::printf("C6 %s — %s\n", line.ok ? "PASS" : "FAIL", line.detail.str().c_str());
    return line.ok;
}

// ---- C7: saddle-point condition at the critical temperature -----------------

bool criterion7() {
    Line line;
    std::mt19937 gen(20250823);
    std::uniform_real_distribution<double> u01(0.0, 1.0);

    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        ModelParams p;
        p.omega = 0.5 + 1.5 * u01(gen);
        const double epsilon = 0.3 + 1.7 * u01(gen);
        p.omega0 = epsilon * p.omega;
        // (λ1+λ2)² > ε guaranteed by the 1.05 floor on the ratio.
        const double lambda_sum = std::sqrt(epsilon) * (1.05 + 0.95 * u01(gen));
        const double split = u01(gen);
        p.g1 = split * lambda_sum * p.omega;
        p.g2 = (1.0 - split) * lambda_sum * p.omega;
        p.n_atoms = 2;
        p.n_max = 0;

        const std::optional<double> tc = analytic_tc(p);
        if (!tc) {
            line.expect(false, "analytic_tc missing on trial " + std::to_string(trial));
            continue;
        }
        const double eta = solve_saddle_eta(SaddleParams::from(p), 1.0 / *tc);
        worst = std::max(worst, std::abs(eta - 1.0));
    }
    line.expect(worst < 1e-10, "max |η(β_c) − 1| = " + fmt(worst));
    line.note("max |η(β_c) − 1| = " + fmt(worst) + " over 20 draws");

    std::printf("C7 %s — %s\n", line.ok ? "PASS" : "FAIL", line.detail.str().c_str());
    return line.ok;
}

// ---- C8: kernel invariants --------------------------------------------------

bool criterion8() {
    Line line;

    // (a) Eigensolver invariants on random dense symmetric matrices.
    {
        std::mt19937 gen(411);
        std::uniform_int_distribution<int> dim_draw(2, 500);
        std::normal_distribution<double> entry(0.0, 1.0);
        double worst_resid = 0.0, worst_gram = 0.0, worst_trace = 0.0, worst_frob = 0.0;

        for (int trial = 0; trial < 50; ++trial) {
            const int n = dim_draw(gen);
            Eigen::MatrixXd h(n, n);
            for (int c = 0; c < n; ++c) {
                for (int r = 0; r <= c; ++r) {
                    const double v = entry(gen);
                    h(r, c) = v;
                    h(c, r) = v;
                }
            }
            const Spectrum s = eigh(h);

            bool resid_ok = true;
            for (int k = 0; k < n; ++k) {
                const double resid =
                    (h * s.vectors.col(k) - s.energies[k] * s.vectors.col(k))
                        .cwiseAbs()
                        .maxCoeff();
                const double rel = resid / std::max(1.0, std::abs(s.energies[k]));
                worst_resid = std::max(worst_resid, rel);
                resid_ok = resid_ok && rel <= 1e-8;
            }
            const double gram =
                (s.vectors.transpose() * s.vectors - Eigen::MatrixXd::Identity(n, n))
                    .cwiseAbs()
                    .maxCoeff();
            const double trace_gap = std::abs(h.trace() - s.energies.sum()) /
                                     std::max(1.0, std::abs(h.trace()));
            const double frob_gap = std::abs(h.norm() - s.energies.norm()) /
                                    std::max(1.0, h.norm());
            worst_gram = std::max(worst_gram, gram);
            worst_trace = std::max(worst_trace, trace_gap);
            worst_frob = std::max(worst_frob, frob_gap);

            line.expect(resid_ok, "residual at dim " + std::to_string(n));
            line.expect(gram <= 1e-10, "orthonormality at dim " + std::to_string(n));
            line.expect(trace_gap <= 1e-10, "trace at dim " + std::to_string(n));
            line.expect(frob_gap <= 1e-10, "Frobenius at dim " + std::to_string(n));
        }
        line.note("50 matrices: resid=" + fmt(worst_resid) + " gram=" + fmt(worst_gram) +
                  " trace=" + fmt(worst_trace) + " frob=" + fmt(worst_frob));
    }

    // (b) Parity block structure of the model Hamiltonian, both as exact
    // matrix zeros and as eigenvector sector support.
    {
        const ModelParams p = desk_params(0.9, 0.6, 6, 8);
        const Basis basis = build_basis(p);
        const SymmetricMatrix h = build_hamiltonian(p, basis);
        const int dim = static_cast<int>(h.rows());

        bool blocks_ok = true;
        for (int c = 0; c < dim; ++c) {
            for (int r = 0; r < dim; ++r) {
                if (basis.parity(r) != basis.parity(c) && h(r, c) != 0.0) blocks_ok = false;
            }
        }
        line.expect(blocks_ok, "cross-parity matrix elements present");

        const Spectrum s = eigh(h);
        const std::vector<int> plus = parity_sector(basis, +1);
        std::vector<char> in_plus(static_cast<size_t>(dim), 0);
        for (int k : plus) in_plus[static_cast<size_t>(k)] = 1;
        const double scale = std::max({1.0, std::abs(s.energies[0]),
                                       std::abs(s.energies[dim - 1])});

        int checked = 0, multiplet_levels = 0;
        bool support_ok = true, projected_ok = true;
        int k = 0;
        while (k < dim) {
            int end = k + 1;
            while (end < dim && s.energies[end] - s.energies[end - 1] < 1e-10 * scale) ++end;
            if (end - k == 1) {
                // Non-degenerate level: every component above 1e−8 must sit in
                // a single sector.
                double minority = 0.0;
                double w_plus = 0.0;
                for (int i = 0; i < dim; ++i) {
                    if (in_plus[static_cast<size_t>(i)]) w_plus += s.vectors(i, k) * s.vectors(i, k);
                }
                const bool dominant_plus = w_plus >= 0.5;
                for (int i = 0; i < dim; ++i) {
                    if (in_plus[static_cast<size_t>(i)] != static_cast<char>(dominant_plus)) {
                        minority = std::max(minority, std::abs(s.vectors(i, k)));
                    }
                }
                support_ok = support_ok && minority <= 1e-8;
                ++checked;
            } else {
                // Degenerate multiplet: the parity-projected combinations must
                // themselves be eigenvectors.
                for (int c = k; c < end; ++c) {
                    ++multiplet_levels;
                    for (int sector = 0; sector < 2; ++sector) {
                        Eigen::VectorXd proj = Eigen::VectorXd::Zero(dim);
                        for (int i = 0; i < dim; ++i) {
                            if (in_plus[static_cast<size_t>(i)] == (sector == 0 ? 1 : 0)) {
                                proj[i] = s.vectors(i, c);
                            }
                        }
                        const double norm = proj.norm();
                        if (norm <= 1e-8) continue;
                        proj /= norm;
                        const double resid =
                            (h * proj - s.energies[c] * proj).cwiseAbs().maxCoeff();
                        projected_ok = projected_ok && resid <= 1e-8 * scale;
                    }
                }
            }
            k = end;
        }
        line.expect(support_ok, "parity support leak above 1e-8");
        line.expect(projected_ok, "projected multiplet vectors not eigenvectors");
        line.note("parity: " + std::to_string(checked) + " clean levels, " +
                  std::to_string(multiplet_levels) + " in multiplets");
    }

    // (c) Partial-trace factor-order independence on a thermal state.
    {
        ModelParams p = desk_params(0.8, 0.6, 4, 3);
        const DensityMatrix rho = gibbs_state(build_spinspace_hamiltonian(p), 0.7);
        const std::vector<int> dims = {4, 2, 2, 2, 2};

        const DensityMatrix direct = partial_trace(rho, dims, {1, 2});
        const DensityMatrix boson_first = partial_trace(
            partial_trace(rho, dims, {1, 2, 3, 4}), {2, 2, 2, 2}, {0, 1});
        const DensityMatrix spins_last = partial_trace(
            partial_trace(rho, dims, {0, 1, 2}), {4, 2, 2}, {1, 2});

        const double d1 = (direct - boson_first).cwiseAbs().maxCoeff();
        const double d2 = (direct - spins_last).cwiseAbs().maxCoeff();
        line.expect(d1 <= 1e-12 && d2 <= 1e-12,
                    "trace-order differences " + fmt(d1) + ", " + fmt(d2));
        line.expect(std::abs(direct.trace() - 1.0) <= 1e-12,
                    "reduced trace " + fmt(direct.trace()));
        line.note("trace-order diffs " + fmt(d1) + "/" + fmt(d2));
    }

    std::printf("C8 %s — %s\n", line.ok ? "PASS" : "FAIL", line.detail.str().c_str());
    return line.ok;
}

}  // namespace

int main(int argc, char** argv) {
    if (openblas_set_num_threads) openblas_set_num_threads(1);

    int selected = 0;  // 0 = all
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            selected = std::atoi(argv[++i]);
            if (selected < 1 || selected > 8) {
                std::fprintf(stderr, "acceptance: --criterion takes 1..8\n");
                return 64;
            }
        } else {
            std::fprintf(stderr, "usage: acceptance [--criterion N]\n");
            return 64;
        }
    }

    bool (*const criteria[8])() = {criterion1, criterion2, criterion3, criterion4,
                                   criterion5, criterion6, criterion7, criterion8};
    int failures = 0;
    for (int k = 1; k <= 8; ++k) {
        if (selected != 0 && k != selected) continue;
        std::fflush(stdout);
        if (!criteria[k - 1]()) ++failures;
    }
    return failures;
}
