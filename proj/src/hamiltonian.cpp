// hamiltonian.cpp — see hamiltonian.hpp

#include "admed/hamiltonian.hpp"

#include <cmath>
#include <stdexcept>

namespace admed {

double ladder_coefficient(double j, double m, Ladder direction) {
    if (std::abs(m) > j) {
        throw std::invalid_argument("ladder_coefficient: |m| > j");
    }
    const double target = direction == Ladder::raise ? m + 1.0 : m - 1.0;
    // j(j+1) − m(m±1); exact 0 at the edges since the products are exact
    // for (half-)integer arguments in this range.
    const double val = j * (j + 1.0) - m * target;
    return val <= 0.0 ? 0.0 : std::sqrt(val);
}

SymmetricMatrix build_hamiltonian(const ModelParams& params, const Basis& basis) {
    params.validate();
    const int dim = params.dimension();
    if (basis.size() != dim || basis.params.n_atoms != params.n_atoms ||
        basis.params.n_max != params.n_max) {
        throw std::invalid_argument("build_hamiltonian: basis does not match params");
    }

    const double j = params.j();
    const double coupling_scale = 1.0 / std::sqrt(2.0 * j);

    SymmetricMatrix h = SymmetricMatrix::Zero(dim, dim);
    // Upper triangle only (row < col), mirrored at the end: every ladder
    // term connects |n,m⟩ to |n+1,m∓1⟩, and the canonical n-major ordering
    // makes the n+1 index strictly larger.
    for (int k = 0; k < dim; ++k) {
        const BasisState& s = basis.state_at(k);
        const double m = s.m_offset - j;
        h(k, k) = params.omega * s.n + params.omega0 * m;
        if (s.n == params.n_max) continue;  // hard cutoff: a† leaves the space

        const double boson = std::sqrt(static_cast<double>(s.n + 1));
        // a† J−: |n,m⟩ → |n+1, m−1⟩, weight g1/√2j.
        if (s.m_offset > 0) {
            const int col = basis.index_of(s.n + 1, s.m_offset - 1);
            h(k, col) = params.g1 * coupling_scale * boson *
                        ladder_coefficient(j, m, Ladder::lower);
        }
        // a† J+: |n,m⟩ → |n+1, m+1⟩, weight g2/√2j.
        if (s.m_offset < params.n_atoms) {
            const int col = basis.index_of(s.n + 1, s.m_offset + 1);
            h(k, col) = params.g2 * coupling_scale * boson *
                        ladder_coefficient(j, m, Ladder::raise);
        }
    }
    // Hermitian mirror (covers the a J+ and a J− terms).
    for (int col = 1; col < dim; ++col) {
        for (int row = 0; row < col; ++row) {
            h(col, row) = h(row, col);
        }
    }
    return h;
}

SymmetricMatrix build_decoupled(const ModelParams& params, const Basis& basis) {
    ModelParams decoupled = params;
    decoupled.g1 = 0.0;
    decoupled.g2 = 0.0;
    return build_hamiltonian(decoupled, basis);
}

long spinspace_dimension(const ModelParams& params) {
    return static_cast<long>(params.n_max + 1) << params.n_atoms;
}

SymmetricMatrix build_spinspace_hamiltonian(const ModelParams& params) {
    params.validate();
    const long dim_long = spinspace_dimension(params);
    if (dim_long > (1L << 16)) {
        throw std::invalid_argument(
            "build_spinspace_hamiltonian: dimension " + std::to_string(dim_long) +
            " exceeds the 2^16 guard; reduce N or n_max");
    }
    const int dim = static_cast<int>(dim_long);
    const int n_spins = params.n_atoms;
    const int spin_dim = 1 << n_spins;
    const double coupling_scale = 1.0 / std::sqrt(static_cast<double>(n_spins));  // 1/√2j, 2j = N

    SymmetricMatrix h = SymmetricMatrix::Zero(dim, dim);
    // Global index = n·2^N + s with spin 1 in the most significant bit of s;
    // bit set = up (σz = +1).
    for (int n = 0; n <= params.n_max; ++n) {
        for (int s = 0; s < spin_dim; ++s) {
            const int row = n * spin_dim + s;
            const int ups = __builtin_popcount(static_cast<unsigned>(s));
            h(row, row) = params.omega * n + 0.5 * params.omega0 * (2 * ups - n_spins);
            if (n == params.n_max) continue;

            const double boson = std::sqrt(static_cast<double>(n + 1));
            for (int i = 0; i < n_spins; ++i) {
                const int bit = 1 << (n_spins - 1 - i);  // spin i+1
                if (s & bit) {
                    // a† σ−^(i): flip up→down, weight g1/√N.
                    const int col = (n + 1) * spin_dim + (s & ~bit);
                    h(row, col) += params.g1 * coupling_scale * boson;
                } else {
                    // a† σ+^(i): flip down→up, weight g2/√N.
                    const int col = (n + 1) * spin_dim + (s | bit);
                    h(row, col) += params.g2 * coupling_scale * boson;
                }
            }
        }
    }
    for (int col = 1; col < dim; ++col) {
        for (int row = 0; row < col; ++row) {
            h(col, row) = h(row, col);
        }
    }
    return h;
}

}  // namespace admed
