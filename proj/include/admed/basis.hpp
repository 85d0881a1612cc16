// basis.hpp — Model parameters and the truncated spin-boson product basis
// States |n⟩⊗|j,m⟩ with n = 0..n_max and m = −j..j (j = N/2), plus the
// parity decomposition induced by Π = exp(iπ[a†a + Jz + j]).

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace admed {

// ---------------------------- ModelParams ------------------------------------

// Physical couplings and truncation.  omega0 sets the energy scale (=1 by
// convention); g1/g2 are the rotating/counter-rotating coupling strengths.
struct ModelParams {
    double omega  = 1.0;   // boson frequency
    double omega0 = 1.0;   // atomic splitting
    double g1     = 0.0;   // rotating coupling
    double g2     = 0.0;   // counter-rotating coupling
    int    n_atoms = 2;    // N, even and >= 2
    int    n_max   = 0;    // boson cutoff, >= 0

    // j = N/2; kept derived so it can never drift from n_atoms.
    double j() const noexcept { return 0.5 * n_atoms; }

    // Full truncated dimension N_D = (n_max + 1)(N + 1).
    int dimension() const noexcept { return (n_max + 1) * (n_atoms + 1); }

    // Throws std::invalid_argument on any violated invariant.
    void validate() const;
};

// ----------------------------- BasisState ------------------------------------

// One product state |n⟩⊗|j,m⟩.  m is stored as the integer offset m + j in
// 0..N so all bookkeeping stays in exact integer arithmetic; the signed
// quantum number is m_offset − j.
struct BasisState {
    int n        = 0;   // boson occupation
    int m_offset = 0;   // m + j

    friend bool operator==(const BasisState&, const BasisState&) = default;
};

// Parity eigenvalue (−1)^(n+m+j) of a product state.  Since 2j = N is an
// integer with (−1)^(2j) = +1 for even N, the exponent reduces to the
// integer n + (m + j) = n + m_offset.
int parity_of(const BasisState& state, int n_atoms);

// ------------------------------- Basis ---------------------------------------

// Ordered product basis with a closed-form index: canonical ordering is
// n-major with m ascending, so index(n, m_offset) = n·(N+1) + m_offset and
// the boson partial trace is a contiguous reshape.
struct Basis {
    ModelParams params;
    std::vector<BasisState> states;

    int size() const noexcept { return static_cast<int>(states.size()); }

    const BasisState& state_at(int k) const { return states.at(static_cast<size_t>(k)); }

    // Position of |n, m_offset⟩; throws if out of range.
    int index_of(int n, int m_offset) const;

    // Signed m of state k.
    double m_signed(int k) const { return state_at(k).m_offset - params.j(); }

    // Parity of state k.
    int parity(int k) const { return parity_of(state_at(k), params.n_atoms); }
};

// Builds the canonical basis; validates params.
Basis build_basis(const ModelParams& params);

// Indices of all states with the given parity (+1 or −1), in basis order.
// The two sectors partition the basis.
std::vector<int> parity_sector(const Basis& basis, int sign);

}  // namespace admed
