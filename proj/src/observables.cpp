// observables.cpp — see observables.hpp

#include "admed/observables.hpp"

#include <cmath>
#include <stdexcept>

namespace admed {

namespace {

constexpr double kNormTol = 1e-10;
constexpr double kSchmidtClip = 1e-14;   // Schmidt weights below this are 0
constexpr double kShannonFloor = 1e-300; // |ψ|² below this contributes 0·ln 0 = 0

void require_normalized(const Eigen::VectorXd& v, const char* who) {
    if (std::abs(v.squaredNorm() - 1.0) > kNormTol) {
        throw std::invalid_argument(std::string(who) + ": vector is not normalized");
    }
}

}  // namespace

double inverse_participation_ratio(const Eigen::VectorXd& v) {
    require_normalized(v, "inverse_participation_ratio");
    return v.array().square().square().sum();
}

double participation_ratio(const Eigen::VectorXd& v) {
    require_normalized(v, "participation_ratio");
    return 1.0 / v.array().square().square().sum();
}

double shannon_entropy(const Eigen::VectorXd& v) {
    require_normalized(v, "shannon_entropy");
    double s1 = 0.0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double p = v[i] * v[i];
        if (p > kShannonFloor) s1 -= p * std::log(p);
    }
    return s1;
}

double multifractal_dimension(const Eigen::VectorXd& v, double q, int dim) {
    if (!(q > 0.0)) {
        throw std::invalid_argument("multifractal_dimension: q must be > 0");
    }
    if (dim < 2) {
        throw std::invalid_argument("multifractal_dimension: dim must be >= 2");
    }
    const double log_dim = std::log(static_cast<double>(dim));
    if (q == 1.0) {
        return shannon_entropy(v) / log_dim;  // Shannon limit of (1/(1−q))·ln Σ p^q
    }
    require_normalized(v, "multifractal_dimension");
    double sum = 0.0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double p = v[i] * v[i];
        if (p > 0.0) sum += std::pow(p, q);
    }
    return std::log(sum) / ((1.0 - q) * log_dim);
}

double mean_photon_number(const Eigen::VectorXd& v, const Basis& basis) {
    if (v.size() != basis.size()) {
        throw std::invalid_argument("mean_photon_number: vector/basis size mismatch");
    }
    require_normalized(v, "mean_photon_number");
    double sum = 0.0;
    for (int k = 0; k < basis.size(); ++k) {
        sum += basis.state_at(k).n * v[k] * v[k];
    }
    return sum;
}

double vnee_spins(const Eigen::VectorXd& v, const Basis& basis) {
    if (v.size() != basis.size()) {
        throw std::invalid_argument("vnee_spins: vector/basis size mismatch");
    }
    require_normalized(v, "vnee_spins");
    // Canonical index k = n·(N+1) + m_offset ⇒ a row-major view of v is the
    // (n_max+1)×(N+1) coefficient matrix Ψ with rows n and columns m.
    using RowMajorMap =
        Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;
    RowMajorMap psi(v.data(), basis.params.n_max + 1, basis.params.n_atoms + 1);
    const Eigen::VectorXd sigma = psi.jacobiSvd().singularValues();

    double entropy = 0.0;
    for (Eigen::Index i = 0; i < sigma.size(); ++i) {
        const double p = sigma[i] * sigma[i];  // Schmidt weight
        if (p > kSchmidtClip) entropy -= p * std::log(p);
    }
    return entropy;
}

EigenstateMetrics eigenstate_metrics(const Eigen::VectorXd& v, const Basis& basis,
                                     const std::vector<double>& qs) {
    EigenstateMetrics metrics;
    metrics.pr = participation_ratio(v);
    metrics.ipr = 1.0 / metrics.pr;
    metrics.photon_density = mean_photon_number(v, basis) / basis.params.j();
    metrics.vnee = vnee_spins(v, basis);
    for (double q : qs) {
        metrics.d_q[q] = multifractal_dimension(v, q, basis.size());
    }
    return metrics;
}

}  // namespace admed
