// thermal.cpp — see thermal.hpp

#include "admed/thermal.hpp"

#include <cblas.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "admed/hamiltonian.hpp"

namespace admed {

// --------------------------- analytic transition -----------------------------

std::optional<double> analytic_tc(const ModelParams& params) {
    params.validate();
    const double sum = params.g1 + params.g2;
    const double arg = params.omega * params.omega0 / (sum * sum);  // +inf at sum = 0
    if (!(arg < 1.0)) return std::nullopt;  // arctanh argument reaches 1: no transition
    return (params.omega0 / (2.0 * params.omega)) / std::atanh(arg);
}

SaddleParams SaddleParams::from(const ModelParams& params) {
    params.validate();
    return {params.omega0 / params.omega, params.g1 / params.omega, params.g2 / params.omega};
}

double saddle_eta(const SaddleParams& sp, double y) {
    if (y < 0.0) throw std::invalid_argument("saddle_eta: y must be >= 0");
    const double ls = sp.lambda_sum();
    return std::sqrt(1.0 + 4.0 * ls * ls * y / (sp.epsilon * sp.epsilon));
}

namespace {

// ln(2 cosh x), overflow-safe.
double log_2cosh(double x) {
    const double ax = std::abs(x);
    return ax + std::log1p(std::exp(-2.0 * ax));
}

void require_beta(double beta, const char* who) {
    if (!(beta > 0.0)) throw std::invalid_argument(std::string(who) + ": beta must be > 0");
}

}  // namespace

double saddle_function(const SaddleParams& sp, double beta, double y) {
    require_beta(beta, "saddle_function");
    return -beta * y + log_2cosh(0.5 * beta * sp.epsilon * saddle_eta(sp, y));
}

double saddle_derivative(const SaddleParams& sp, double beta, double y) {
    require_beta(beta, "saddle_derivative");
    const double ls = sp.lambda_sum();
    const double eta = saddle_eta(sp, y);
    return -beta +
           beta * ls * ls / (sp.epsilon * eta) * std::tanh(0.5 * beta * sp.epsilon * eta);
}

double solve_saddle_eta(const SaddleParams& sp, double beta) {
    require_beta(beta, "solve_saddle_eta");
    const double ls2 = sp.lambda_sum() * sp.lambda_sum();
    if (ls2 <= sp.epsilon) {
        throw std::invalid_argument("solve_saddle_eta: (lambda1+lambda2)^2 <= epsilon, no solution");
    }
    // G(η) = εη/λs² − tanh(βεη/2) has G(0) = 0; a positive root exists iff
    // G′(0) < 0, i.e. beyond the free-energy instability.
    const auto g = [&](double eta) {
        return sp.epsilon * eta / ls2 - std::tanh(0.5 * beta * sp.epsilon * eta);
    };
    if (sp.epsilon / ls2 - 0.5 * beta * sp.epsilon >= 0.0) {
        throw std::invalid_argument("solve_saddle_eta: no positive saddle at this beta");
    }
    double lo = 1e-12;           // G < 0 just above 0
    double hi = ls2 / sp.epsilon + 1.0;  // εη/λs² > 1 ≥ tanh ⇒ G > 0
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        (g(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

// ------------------------------- Gibbs states --------------------------------

DensityMatrix gibbs_state(const Spectrum& spectrum, double temperature) {
    if (!(temperature > 0.0)) {
        throw std::invalid_argument("gibbs_state: temperature must be > 0");
    }
    const int n = spectrum.dim();
    Eigen::VectorXd w(n);
    for (int k = 0; k < n; ++k) {
        // Shift by E_min so the largest weight is exactly 1 (overflow-safe).
        w[k] = std::exp(-(spectrum.energies[k] - spectrum.energies[0]) / temperature);
    }
    const double z = w.sum();

    // ρ = B Bᵀ with B = V·diag(√(w/Z)); columns whose weight underflowed to
    // zero contribute nothing and are skipped.
    int cols = n;
    while (cols > 1 && w[cols - 1] == 0.0) --cols;
    Eigen::MatrixXd b = spectrum.vectors.leftCols(cols);
    for (int k = 0; k < cols; ++k) {
        b.col(k) *= std::sqrt(w[k] / z);
    }
    DensityMatrix rho = DensityMatrix::Zero(n, n);
    cblas_dsyrk(CblasColMajor, CblasLower, CblasNoTrans, n, cols, 1.0, b.data(), n,
                0.0, rho.data(), n);
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            rho(row, col) = rho(col, row);
        }
    }
    return rho;
}

DensityMatrix gibbs_state(const SymmetricMatrix& h, double temperature) {
    if (!(temperature > 0.0)) {
        throw std::invalid_argument("gibbs_state: temperature must be > 0");
    }
    return gibbs_state(eigh(h), temperature);
}

DensityMatrix ground_state_projector(const Spectrum& spectrum) {
    const auto v0 = spectrum.vectors.col(0);
    return v0 * v0.transpose();
}

// --------------------------------- traces ------------------------------------

DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<int>& dims,
                            const std::vector<int>& keep) {
    if (rho.rows() != rho.cols()) {
        throw std::invalid_argument("partial_trace: rho must be square");
    }
    long product = 1;
    for (int d : dims) {
        if (d < 1) throw std::invalid_argument("partial_trace: factor dims must be >= 1");
        product *= d;
    }
    if (product != rho.rows()) {
        throw std::invalid_argument("partial_trace: factor dims do not multiply to rho dim");
    }
    if (keep.empty() || !std::is_sorted(keep.begin(), keep.end()) ||
        std::adjacent_find(keep.begin(), keep.end()) != keep.end()) {
        throw std::invalid_argument("partial_trace: keep must be a nonempty ascending index set");
    }
    const int n_factors = static_cast<int>(dims.size());
    if (keep.front() < 0 || keep.back() >= n_factors) {
        throw std::invalid_argument("partial_trace: keep index out of range");
    }

    std::vector<bool> kept(static_cast<size_t>(n_factors), false);
    for (int f : keep) kept[static_cast<size_t>(f)] = true;
    long keep_dim = 1, traced_dim = 1;
    for (int f = 0; f < n_factors; ++f) {
        (kept[static_cast<size_t>(f)] ? keep_dim : traced_dim) *= dims[static_cast<size_t>(f)];
    }

    // g_table[t·K + a] = global index with kept digits a and traced digits t
    // (both mixed-radix, first factor slowest — matching the global layout).
    const long dim = rho.rows();
    std::vector<long> g_table(static_cast<size_t>(dim));
    for (long g = 0; g < dim; ++g) {
        long rem = g, a = 0, t = 0;
        for (int f = 0; f < n_factors; ++f) {
            // Digit of factor f: strides shrink left to right.
            long stride = 1;
            for (int f2 = f + 1; f2 < n_factors; ++f2) stride *= dims[static_cast<size_t>(f2)];
            const long digit = rem / stride;
            rem %= stride;
            if (kept[static_cast<size_t>(f)]) {
                a = a * dims[static_cast<size_t>(f)] + digit;
            } else {
                t = t * dims[static_cast<size_t>(f)] + digit;
            }
        }
        g_table[static_cast<size_t>(t * keep_dim + a)] = g;
    }

    DensityMatrix reduced = DensityMatrix::Zero(keep_dim, keep_dim);
    for (long t = 0; t < traced_dim; ++t) {
        const long* block = g_table.data() + t * keep_dim;
        for (long a2 = 0; a2 < keep_dim; ++a2) {
            for (long a1 = 0; a1 < keep_dim; ++a1) {
                reduced(a1, a2) += rho(block[a1], block[a2]);
            }
        }
    }
    return reduced;
}

double vn_entropy(const DensityMatrix& rho) {
    constexpr double kClip = 1e-14;
    const Eigen::VectorXd p = eigh(rho).energies;
    double entropy = 0.0;
    for (Eigen::Index i = 0; i < p.size(); ++i) {
        if (p[i] > kClip) entropy -= p[i] * std::log(p[i]);
    }
    return entropy;
}

// ------------------------- two-spin mutual information -----------------------

double mutual_information_two_spins(const DensityMatrix& rho_full,
                                    const ModelParams& params) {
    if (params.n_atoms < 2) {
        throw std::invalid_argument("mutual_information_two_spins: need N >= 2");
    }
    if (rho_full.rows() != spinspace_dimension(params)) {
        throw std::invalid_argument(
            "mutual_information_two_spins: rho is not on the (n_max+1)*2^N space");
    }
    // Boson factor first, then the N−2 untagged spins; spins 1 and 2 are
    // representative of any pair by permutation symmetry.
    std::vector<int> dims(static_cast<size_t>(params.n_atoms) + 1, 2);
    dims[0] = params.n_max + 1;
    std::vector<int> all_spins(static_cast<size_t>(params.n_atoms));
    std::iota(all_spins.begin(), all_spins.end(), 1);
    const DensityMatrix rho_spins = partial_trace(rho_full, dims, all_spins);

    const std::vector<int> spin_dims(static_cast<size_t>(params.n_atoms), 2);
    const DensityMatrix rho_12 = partial_trace(rho_spins, spin_dims, {0, 1});
    const DensityMatrix rho_1 = partial_trace(rho_12, {2, 2}, {0});
    const DensityMatrix rho_2 = partial_trace(rho_12, {2, 2}, {1});

    const double mi = vn_entropy(rho_1) + vn_entropy(rho_2) - vn_entropy(rho_12);
    return mi < 0.0 && mi > -1e-12 ? 0.0 : mi;  // clamp roundoff, keep real violations visible
}

// ------------------------- transition from MI(T) -----------------------------

MiCurve mi_transition_temperature(const ModelParams& params,
                                  const std::vector<double>& temps) {
    if (temps.size() < 20) {
        throw std::invalid_argument("mi_transition_temperature: need >= 20 temperatures");
    }
    if (!(temps.front() > 0.0) || !std::is_sorted(temps.begin(), temps.end()) ||
        std::adjacent_find(temps.begin(), temps.end()) != temps.end()) {
        throw std::invalid_argument(
            "mi_transition_temperature: temps must be positive and strictly increasing");
    }

    MiCurve curve;
    curve.temps = temps;
    curve.analytic = analytic_tc(params);
    double min_spacing = temps[1] - temps[0];
    for (size_t i = 2; i < temps.size(); ++i) {
        min_spacing = std::min(min_spacing, temps[i] - temps[i - 1]);
    }
    curve.coarse_grid_warning = min_spacing > 0.1;

    const Spectrum spectrum = eigh(build_spinspace_hamiltonian(params));
    curve.mi.reserve(temps.size());
    for (double t : temps) {
        curve.mi.push_back(mutual_information_two_spins(gibbs_state(spectrum, t), params));
    }

    // Central differences on the user grid; t_star at the most negative slope.
    size_t best = 1;
    for (size_t i = 1; i + 1 < temps.size(); ++i) {
        const double slope = (curve.mi[i + 1] - curve.mi[i - 1]) / (temps[i + 1] - temps[i - 1]);
        curve.dmi_dt.push_back(slope);
        if (slope < curve.dmi_dt[best - 1]) best = i;
    }
    curve.t_star = temps[best];
    return curve;
}

}  // namespace admed
