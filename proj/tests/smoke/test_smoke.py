"""Smoke tests for the compiled admed extension.

Small systems only: cross-check the C++ results against direct numpy
calculations on the same matrices.
"""

import math

import numpy as np
import pytest

import admed


@pytest.fixture
def params():
    return admed.ModelParams(omega=1.0, omega0=1.0, g1=0.6, g2=0.3, n_atoms=4, n_max=6)


def test_basis_shape(params):
    basis = admed.build_basis(params)
    assert len(basis) == params.dimension == 35
    # closed-form index round-trips
    for k in range(len(basis)):
        s = basis.state_at(k)
        assert basis.index_of(s.n, s.m_offset) == k
    # parity sectors partition the basis
    plus = admed.parity_sector(basis, +1)
    minus = admed.parity_sector(basis, -1)
    assert sorted(plus + minus) == list(range(len(basis)))


def test_hamiltonian_matches_numpy_kron(params):
    basis = admed.build_basis(params)
    h = admed.build_hamiltonian(params, basis)
    assert h.shape == (35, 35)
    assert np.allclose(h, h.T)

    # independent construction: boson x spin Kronecker products
    nb, ns = params.n_max + 1, params.n_atoms + 1
    j = params.j
    a = np.diag(np.sqrt(np.arange(1, nb)), k=1)          # annihilation
    m = np.arange(ns) - j                                 # m ascending
    jz = np.diag(m)
    jp = np.diag(np.sqrt(j * (j + 1) - m[:-1] * (m[:-1] + 1)), k=-1)
    href = (
        params.omega * np.kron(a.T @ a, np.eye(ns))
        + params.omega0 * np.kron(np.eye(nb), jz)
        + params.g1 / math.sqrt(2 * j) * (np.kron(a.T, jp.T) + np.kron(a, jp))
        + params.g2 / math.sqrt(2 * j) * (np.kron(a.T, jp) + np.kron(a, jp.T))
    )
    assert np.allclose(h, href, atol=1e-13)


def test_eigh_against_numpy(params):
    basis = admed.build_basis(params)
    h = admed.build_hamiltonian(params, basis)
    spec = admed.eigh(h)
    evals = np.linalg.eigvalsh(h)
    assert np.allclose(spec.energies, evals, atol=1e-10)
    # columns are orthonormal eigenvectors
    v = spec.vectors
    assert np.allclose(v.T @ v, np.eye(len(basis)), atol=1e-10)
    assert np.allclose(h @ v, v @ np.diag(spec.energies), atol=1e-9)


def test_observables_against_numpy(params):
    basis = admed.build_basis(params)
    spec = admed.eigh(admed.build_hamiltonian(params, basis))
    v0 = np.asarray(spec.vectors)[:, 0]

    p = v0**2
    assert admed.participation_ratio(v0) == pytest.approx(1.0 / np.sum(p**2))
    assert admed.mean_photon_number(v0, basis) == pytest.approx(
        sum(p[k] * basis.state_at(k).n for k in range(len(basis)))
    )

    # VNEE from a direct numpy Schmidt decomposition of the (boson, spin) reshape
    psi = v0.reshape(params.n_max + 1, params.n_atoms + 1)
    sv = np.linalg.svd(psi, compute_uv=False)
    lam = sv[sv > 1e-14] ** 2
    assert admed.vnee_spins(v0, basis) == pytest.approx(-np.sum(lam * np.log(lam)))

    # D_2 identity with PR
    dim = len(basis)
    assert admed.multifractal_dimension(v0, 2.0, dim) == pytest.approx(
        math.log(admed.participation_ratio(v0)) / math.log(dim)
    )


def test_thermal_roundtrip(params):
    basis = admed.build_basis(params)
    h = admed.build_hamiltonian(params, basis)
    rho = admed.gibbs_state(h, 0.7)
    beta = 1.0 / 0.7
    w = np.exp(-beta * np.linalg.eigvalsh(h))
    href = np.asarray(h)
    e_ref = np.trace(href @ rho)
    e_expected = np.sum(w * np.linalg.eigvalsh(h)) / np.sum(w)
    assert np.trace(rho) == pytest.approx(1.0)
    assert e_ref == pytest.approx(e_expected)

    tc = admed.analytic_tc(admed.ModelParams(g1=0.8, g2=0.8, n_atoms=2, n_max=2))
    assert tc is not None and tc > 0
    assert admed.analytic_tc(admed.ModelParams(g1=0.2, g2=0.2, n_atoms=2, n_max=2)) is None


def test_quench_runs(params):
    basis = admed.build_basis(params)
    spec = admed.eigh(admed.build_hamiltonian(params, basis))
    k0 = admed.middle_decoupled_state(basis)
    psi = np.zeros(len(basis))
    psi[k0] = 1.0
    out = admed.evolve_pr(spec, psi, [0.0, 0.5, 50.0])
    assert out.initial_index == k0
    assert out.pr[0] == pytest.approx(1.0)
    assert all(p >= 1.0 for p in out.pr)
    assert out.max_norm_drift < 1e-10
    de = admed.diagonal_ensemble_pr(spec, psi)
    assert de >= 1.0
