// eigensolve.cpp — see eigensolve.hpp
// Delegates to LAPACK's divide-and-conquer driver dsyevd (Householder
// tridiagonalization + D&C on the tridiagonal form), which meets the
// module's residual/orthonormality guarantees and is deterministic for
// identical input.

#include "admed/eigensolve.hpp"

#include <lapacke.h>

#include <stdexcept>
#include <string>

namespace admed {

Spectrum eigh(const SymmetricMatrix& a) {
    if (a.rows() != a.cols() || a.rows() == 0) {
        throw std::invalid_argument("eigh: matrix must be square and non-empty");
    }
    if (!a.allFinite()) {
        throw std::invalid_argument("eigh: matrix has non-finite entries");
    }

    const lapack_int n = static_cast<lapack_int>(a.rows());
    Spectrum spectrum;
    spectrum.energies.resize(n);
    spectrum.vectors = a;  // dsyevd overwrites the input with eigenvectors

    const lapack_int info = LAPACKE_dsyevd(
        LAPACK_COL_MAJOR, 'V', 'L', n, spectrum.vectors.data(), n,
        spectrum.energies.data());
    if (info != 0) {
        throw std::runtime_error("eigh: dsyevd failed with info = " + std::to_string(info));
    }

    // Deterministic sign convention: first nonzero component positive.
    for (lapack_int k = 0; k < n; ++k) {
        auto col = spectrum.vectors.col(k);
        for (lapack_int i = 0; i < n; ++i) {
            if (col[i] != 0.0) {
                if (col[i] < 0.0) col = -col;
                break;
            }
        }
    }
    return spectrum;
}

}  // namespace admed
