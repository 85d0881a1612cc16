// bands.cpp — see bands.hpp

#include "admed/bands.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace admed {

std::vector<ProfilePoint> vnee_profile(const Spectrum& spectrum, const Basis& basis) {
    if (spectrum.dim() != basis.size()) {
        throw std::invalid_argument("vnee_profile: spectrum/basis size mismatch");
    }
    std::vector<ProfilePoint> profile(static_cast<size_t>(spectrum.dim()));
    for (int k = 0; k < spectrum.dim(); ++k) {
        profile[static_cast<size_t>(k)] = {spectrum.energies[k],
                                           vnee_spins(spectrum.vectors.col(k), basis)};
    }
    return profile;
}

CharacteristicEnergies characteristic_energies(const std::vector<ProfilePoint>& profile) {
    const int len = static_cast<int>(profile.size());
    if (len < 4) {
        throw std::invalid_argument("characteristic_energies: profile needs >= 4 points");
    }
    // Jump n sits between states n and n+1 and carries the left-edge energy
    // E_n; the halves partition the jumps at split = floor(N_D/2):
    // lower n ∈ [0, split], upper n ∈ (split, N_D−2].
    const int split = len / 2;
    auto weighted_mean = [&](int lo, int hi) -> std::optional<double> {
        double num = 0.0, den = 0.0;
        for (int n = lo; n <= hi; ++n) {
            const double jump = std::abs(profile[static_cast<size_t>(n + 1)].vnee -
                                         profile[static_cast<size_t>(n)].vnee);
            num += profile[static_cast<size_t>(n)].energy * jump;
            den += jump;
        }
        if (den == 0.0) return std::nullopt;  // degenerate (flat) profile half
        return num / den;
    };
    return {weighted_mean(0, split), weighted_mean(split + 1, len - 2)};
}

ReferenceCutoffs reference_cutoffs(const ModelParams& params) {
    params.validate();
    ReferenceCutoffs cutoffs;
    cutoffs.e_max_decoupled = params.omega * params.n_max + params.omega0 * params.j();

    // Critical-line projection: rescale (g1,g2) radially onto g1+g2 = √(ωω0)
    // preserving the ratio; normal-phase points are already below the line
    // and are used as-is.  The origin projects to the symmetric point.
    ModelParams at = params;
    const double line = std::sqrt(params.omega * params.omega0);
    const double sum = params.g1 + params.g2;
    if (sum > line) {
        const double scale = line / sum;
        at.g1 = params.g1 * scale;
        at.g2 = params.g2 * scale;
    }
    const Basis basis = build_basis(at);
    cutoffs.e_normal0 = eigh(build_hamiltonian(at, basis)).energies[0];
    return cutoffs;
}

ChiValues chi_values(double e_lower, double e_upper,
                     double e_normal0, double e_max_decoupled) {
    if (e_normal0 == 0.0 || e_max_decoupled == 0.0) {
        throw std::invalid_argument("chi_values: zero reference energy");
    }
    return {e_lower / e_normal0, e_upper / e_max_decoupled};
}

RStatistic r_statistic(const std::vector<double>& energies) {
    const int len = static_cast<int>(energies.size());
    if (len < 3) {
        throw std::invalid_argument("r_statistic: need at least 3 energies");
    }
    const double span = energies.back() - energies.front();
    if (span < 0.0) {
        throw std::invalid_argument("r_statistic: energies must be ascending");
    }
    const double zero_tol = 1e-12 * span;

    std::vector<double> gaps(static_cast<size_t>(len - 1));
    RStatistic out;
    for (int i = 0; i < len - 1; ++i) {
        const double s = energies[static_cast<size_t>(i + 1)] - energies[static_cast<size_t>(i)];
        if (s < 0.0) {
            throw std::invalid_argument("r_statistic: energies must be ascending");
        }
        gaps[static_cast<size_t>(i)] = s;
        if (s <= zero_tol) ++out.degenerate_gaps;
    }

    double sum = 0.0;
    for (int n = 1; n < len - 1; ++n) {
        const double lo = std::min(gaps[static_cast<size_t>(n - 1)], gaps[static_cast<size_t>(n)]);
        const double hi = std::max(gaps[static_cast<size_t>(n - 1)], gaps[static_cast<size_t>(n)]);
        sum += hi <= zero_tol ? 0.0 : lo / hi;  // 0/0 ⇒ 0 by convention
        ++out.pair_count;
    }
    out.mean = sum / out.pair_count;
    return out;
}

namespace {

// Energies of the +1 parity sector.  Singleton levels are assigned by
// dominant support; numerically degenerate multiplets are parity-projected
// and contribute rank(P₊·span) of their levels.
std::vector<double> plus_sector_energies(const Spectrum& spectrum, const Basis& basis) {
    const int dim = spectrum.dim();
    const std::vector<int> plus = parity_sector(basis, +1);

    const double scale = std::max({1.0, std::abs(spectrum.energies[0]),
                                   std::abs(spectrum.energies[dim - 1])});
    const double group_tol = 1e-10 * scale;

    std::vector<double> out;
    out.reserve(static_cast<size_t>(plus.size()));
    int k = 0;
    while (k < dim) {
        int end = k + 1;  // exclusive end of the degenerate group
        while (end < dim &&
               spectrum.energies[end] - spectrum.energies[end - 1] < group_tol) {
            ++end;
        }
        const int group = end - k;
        if (group == 1) {
            double w = 0.0;
            for (int i : plus) w += spectrum.vectors(i, k) * spectrum.vectors(i, k);
            if (w >= 0.5) out.push_back(spectrum.energies[k]);
        } else {
            // Rank of the +1 projection of the degenerate span via the Gram
            // matrix of the projected vectors.
            Eigen::MatrixXd projected(static_cast<Eigen::Index>(plus.size()), group);
            for (size_t r = 0; r < plus.size(); ++r) {
                for (int c = 0; c < group; ++c) {
                    projected(static_cast<Eigen::Index>(r), c) =
                        spectrum.vectors(plus[r], k + c);
                }
            }
            const Eigen::MatrixXd gram = projected.transpose() * projected;
            const Eigen::VectorXd ev =
                Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(gram).eigenvalues();
            int rank = 0;
            for (Eigen::Index i = 0; i < ev.size(); ++i) {
                if (ev[i] > 1e-8) ++rank;
            }
            for (int c = 0; c < rank; ++c) out.push_back(spectrum.energies[k + c]);
        }
        k = end;
    }
    return out;
}

}  // namespace

CentralBandR central_band_r(const Spectrum& spectrum, const Basis& basis,
                            const ReferenceCutoffs& cutoffs) {
    std::vector<double> band;
    for (double e : plus_sector_energies(spectrum, basis)) {
        if (e >= cutoffs.e_normal0 && e <= cutoffs.e_max_decoupled) band.push_back(e);
    }
    CentralBandR out;
    out.band_levels = static_cast<int>(band.size());
    out.low_statistics = out.band_levels < 50;
    if (out.band_levels >= 3) {
        out.stats = r_statistic(band);
    }
    return out;
}

BandAnalysis analyze_spectrum(const Spectrum& spectrum, const Basis& basis,
                              std::optional<ReferenceCutoffs> cutoffs) {
    const ModelParams& params = basis.params;
    BandAnalysis analysis;
    if (!cutoffs) {
        const double line = std::sqrt(params.omega * params.omega0);
        if (params.g1 + params.g2 <= line) {
            // Already in the normal phase: e_normal0 is this spectrum's own
            // ground-state energy; no extra diagonalization needed.
            cutoffs = ReferenceCutoffs{
                spectrum.energies[0],
                params.omega * params.n_max + params.omega0 * params.j()};
        } else {
            cutoffs = reference_cutoffs(params);
        }
    }
    analysis.e_normal0 = cutoffs->e_normal0;
    analysis.e_max_decoupled = cutoffs->e_max_decoupled;

    analysis.profile = vnee_profile(spectrum, basis);
    const CharacteristicEnergies characteristic = characteristic_energies(analysis.profile);
    analysis.e_lower = characteristic.lower;
    analysis.e_upper = characteristic.upper;
    if (analysis.e_lower && analysis.e_normal0 != 0.0) {
        analysis.chi_lower = *analysis.e_lower / analysis.e_normal0;
    }
    if (analysis.e_upper && analysis.e_max_decoupled != 0.0) {
        analysis.chi_upper = *analysis.e_upper / analysis.e_max_decoupled;
    }
    analysis.central = central_band_r(spectrum, basis, *cutoffs);
    return analysis;
}

}  // namespace admed
