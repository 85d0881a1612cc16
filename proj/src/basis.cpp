// basis.cpp — see basis.hpp

#include "admed/basis.hpp"

namespace admed {

void ModelParams::validate() const {
    if (n_atoms < 2 || n_atoms % 2 != 0) {
        throw std::invalid_argument("ModelParams: N must be even and >= 2, got " +
                                    std::to_string(n_atoms));
    }
    if (n_max < 0) {
        throw std::invalid_argument("ModelParams: n_max must be >= 0, got " +
                                    std::to_string(n_max));
    }
    if (!(omega > 0.0) || !(omega0 > 0.0)) {
        throw std::invalid_argument("ModelParams: omega and omega0 must be > 0");
    }
    if (g1 < 0.0 || g2 < 0.0) {
        throw std::invalid_argument("ModelParams: couplings g1, g2 must be >= 0");
    }
}

int parity_of(const BasisState& state, int n_atoms) {
    if (state.m_offset < 0 || state.m_offset > n_atoms || state.n < 0) {
        throw std::invalid_argument("parity_of: state outside the symmetric subspace");
    }
    // (−1)^(n + m + j) with m + j = m_offset; the extra (−1)^(2j) is +1.
    return (state.n + state.m_offset) % 2 == 0 ? +1 : -1;
}

int Basis::index_of(int n, int m_offset) const {
    if (n < 0 || n > params.n_max || m_offset < 0 || m_offset > params.n_atoms) {
        throw std::invalid_argument("Basis: state (" + std::to_string(n) + ", " +
                                    std::to_string(m_offset) + ") out of range");
    }
    return n * (params.n_atoms + 1) + m_offset;
}

Basis build_basis(const ModelParams& params) {
    params.validate();
    Basis basis;
    basis.params = params;
    basis.states.reserve(static_cast<size_t>(params.dimension()));
    for (int n = 0; n <= params.n_max; ++n) {
        for (int m_offset = 0; m_offset <= params.n_atoms; ++m_offset) {
            basis.states.push_back({n, m_offset});
        }
    }
    return basis;
}

std::vector<int> parity_sector(const Basis& basis, int sign) {
    if (sign != +1 && sign != -1) {
        throw std::invalid_argument("parity_sector: sign must be +1 or -1");
    }
    std::vector<int> indices;
    for (int k = 0; k < basis.size(); ++k) {
        if (basis.parity(k) == sign) indices.push_back(k);
    }
    return indices;
}

}  // namespace admed
