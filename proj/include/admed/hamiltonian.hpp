// hamiltonian.hpp — Assembly of the anisotropic Dicke Hamiltonian
//   H = ω a†a + ω0 Jz + (g1/√2j)(a†J− + aJ+) + (g2/√2j)(a†J+ + aJ−)
// as a dense real symmetric matrix, in the collective product basis and in
// the full spin product space (for thermal reduced-state studies).

#pragma once

#include <Eigen/Dense>

#include "admed/basis.hpp"

namespace admed {

// Dense real symmetric storage; the canonical interchange form consumed by
// the eigensolver.  Assembly mirrors the upper triangle so A(i,j) == A(j,i)
// holds bit-exactly.
using SymmetricMatrix = Eigen::MatrixXd;

// Ladder coefficient √(j(j+1) − m(m±1)) from J±|j,m⟩ = √(j(j+1)−m(m±1))|j,m±1⟩.
// Exactly 0 at the corresponding edge (raise at m=j, lower at m=−j).
enum class Ladder { raise, lower };
double ladder_coefficient(double j, double m, Ladder direction);

// Full ADM matrix over `basis`.  Diagonal ω·n + ω0·m; off-diagonals
//   ⟨n+1, m−1|H|n,m⟩ = (g1/√2j)·√(n+1)·√(j(j+1)−m(m−1))
//   ⟨n+1, m+1|H|n,m⟩ = (g2/√2j)·√(n+1)·√(j(j+1)−m(m+1))
// plus Hermitian mirrors; elements that would raise n above n_max are
// dropped (hard cutoff).
SymmetricMatrix build_hamiltonian(const ModelParams& params, const Basis& basis);

// Decoupled H0 = ω a†a + ω0 Jz (g1 = g2 = 0 forced); diagonal.
SymmetricMatrix build_decoupled(const ModelParams& params, const Basis& basis);

// Same Hamiltonian on the distinguishable-spin space |n⟩⊗|s_1..s_N⟩ of
// dimension (n_max+1)·2^N, with J± = Σ_i σ±^(i) and Jz = Σ_i σz^(i)/2.
// Index convention: global = n·2^N + s, spin 1 in the most significant bit.
// Refuses dimensions above 2^16.
SymmetricMatrix build_spinspace_hamiltonian(const ModelParams& params);

// Dimension (n_max+1)·2^N of the spin product space.
long spinspace_dimension(const ModelParams& params);

}  // namespace admed
