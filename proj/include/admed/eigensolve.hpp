// eigensolve.hpp — Full dense symmetric eigendecomposition
// The single numerical kernel every other module consumes.  Delegates to
// LAPACK's divide-and-conquer driver (dsyevd) and enforces a deterministic
// eigenvector sign convention on top.

#pragma once

#include <Eigen/Dense>

#include "admed/hamiltonian.hpp"

namespace admed {

// Ascending eigenvalues with paired orthonormal eigenvectors.
// Contract (verified by the test suite, not re-checked on every call):
//   ‖VᵀV − I‖_max ≤ 1e−10,  ‖A v_k − E_k v_k‖₂ ≤ 1e−8·max(1, |E_k|).
struct Spectrum {
    Eigen::VectorXd energies;   // sorted non-decreasing
    Eigen::MatrixXd vectors;    // column k pairs with energies[k]

    int dim() const noexcept { return static_cast<int>(energies.size()); }
};

// Full decomposition of a real symmetric matrix.  Deterministic for
// identical input: fixed algorithm, and each eigenvector is normalized so
// its first nonzero component is positive.
// Throws std::invalid_argument for non-square/non-finite input and
// std::runtime_error (carrying the LAPACK info code) on convergence failure.
Spectrum eigh(const SymmetricMatrix& a);

}  // namespace admed
