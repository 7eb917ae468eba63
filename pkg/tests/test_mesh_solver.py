import math

import numpy as np
import pytest
from scipy.integrate import solve_ivp
from scipy.optimize import brentq
from scipy.special import ai_zeros

from radialwkb.bs_solver import bs_energy_power
from radialwkb.exceptions import DomainError, UsageError
from radialwkb.mesh_solver import (
    MeshConfig,
    SpectrumResult,
    count_nodes,
    hamiltonian,
    mesh_scaling,
    solve_radial,
    validate_solver,
)
from radialwkb.potentials import PotentialSpec
from radialwkb.specfun import laguerre_nodes


def _shoot(m, E_lo, E_hi, R):
    """Half-line -u'' + r^m u = E u, u(0) = 0, by outward shooting on u(R)."""
    def end(E):
        sol = solve_ivp(lambda r, y: [y[1], (r ** m - E) * y[0]], (0.0, R), [0.0, 1.0],
                        method="DOP853", rtol=1e-13, atol=1e-16)
        return sol.y[0, -1]

    return brentq(end, E_lo, E_hi, xtol=1e-13, rtol=1e-13)


def test_harmonic_d3():
    res = solve_radial(PotentialSpec.power(2), 3, 3)
    np.testing.assert_allclose(res.energies, [3, 7, 11, 15], atol=1e-10)
    assert isinstance(res, SpectrumResult)


def test_coulomb_d3_ground_state():
    res = solve_radial(PotentialSpec.coulomb(), 3, 0)
    assert res.energies[0] == pytest.approx(-0.25, abs=1e-10)


def test_linear_d3_ground_state():
    res = solve_radial(PotentialSpec.power(1), 3, 0)
    assert math.floor(res.energies[0] * 1e4) / 1e4 == 2.3381


@pytest.mark.parametrize("d", [2, 3, 6])
def test_validate_solver(d):
    rep = validate_solver(d)
    assert rep["max_deviation"] <= 1e-8
    assert rep["d"] == d and "coulomb" in rep


def test_validate_solver_line():
    rep = validate_solver(1)
    assert "coulomb" not in rep and rep["harmonic"] <= 1e-8


def test_half_line_identity_on_linear_potential():
    # u = r psi removes the centrifugal term at d = 3; u(0) = 0 gives Airy zeros
    a, ap, _, _ = ai_zeros(21)
    res = solve_radial(PotentialSpec.power(1), 3, 20)
    np.testing.assert_allclose(res.energies, -a, rtol=0, atol=1e-8 * np.abs(a).max())
    np.testing.assert_allclose(res.energies, -a, rtol=1e-8)
    # d = 1 keeps the even line states: Ai'(-E) = 0
    res1 = solve_radial(PotentialSpec.power(1), 1, 20)
    np.testing.assert_allclose(res1.energies, -ap, rtol=1e-8)


def test_quartic_d3_against_shooting():
    res = solve_radial(PotentialSpec.power(4), 3, 2)
    for n, E in enumerate(res.energies):
        ref = _shoot(4, E - 0.05, E + 0.05, R=5.0)
        assert E == pytest.approx(ref, rel=1e-9)
    assert math.floor(res.energies[0] * 1e4) / 1e4 == 3.7996


def test_steep_power_against_shooting():
    # m = 45 needs the minimum reach of 1.5 turning radii
    res = solve_radial(PotentialSpec.power(45), 3, 0)
    ref = _shoot(45, res.energies[0] - 0.1, res.energies[0] + 0.1, R=1.3)
    assert res.energies[0] == pytest.approx(ref, rel=1e-7)


def test_line_anharmonic_ground_state():
    # even ground state of x^2 + x^4 on the line
    res = solve_radial(PotentialSpec.anharmonic(1.0), 1, 0)
    assert res.energies[0] == pytest.approx(1.392351641530, abs=1e-9)


@pytest.mark.parametrize("V,d", [
    (PotentialSpec.power(3), 2), (PotentialSpec.log(), 3),
    (PotentialSpec.power(-0.5), 3), (PotentialSpec.anharmonic(10.0), 6),
])
def test_node_count_equals_radial_quantum_number(V, d):
    res = solve_radial(V, d, 8)
    for n in range(9):
        assert count_nodes(res, n) == n


@pytest.mark.parametrize("V,d", [
    (PotentialSpec.power(1), 3), (PotentialSpec.log(), 2), (PotentialSpec.power(6), 6),
])
def test_spectrum_invariants(V, d):
    res = solve_radial(V, d, 15)
    assert np.all(np.diff(res.energies) > 0)
    assert res.n_converged <= len(res.energies)
    assert res.n_converged == 16
    assert res.residual_estimate <= 1e-7 * np.abs(res.energies).max()


def test_refinement_does_not_raise_trusted_energies():
    # same outer reach, more points; the mesh is not strictly variational,
    # so the bound holds for the trusted states only
    V = PotentialSpec.power(4)
    reach = mesh_scaling(V, 3, 10, 40) * laguerre_nodes(40, 1.0)[-1]
    rtol = 1e-7
    best = solve_radial(V, 3, 10, MeshConfig(n_points=640, scaling=reach / laguerre_nodes(640, 1.0)[-1]),
                        max_points=640).energies
    for n in (40, 80, 160, 320):
        cfg = MeshConfig(n_points=n, scaling=reach / laguerre_nodes(n, 1.0)[-1])
        res = solve_radial(V, 3, 10, cfg, rtol=rtol, max_points=n)
        k = res.n_converged
        assert k >= 1
        assert np.all(best[:k] <= res.energies[:k] + rtol * np.abs(res.energies[:k]))


def test_explicit_scaling_is_used():
    cfg = MeshConfig(n_points=60, scaling=0.05)
    res = solve_radial(PotentialSpec.power(2), 3, 3, cfg)
    assert res.config_used.scaling == 0.05
    np.testing.assert_allclose(res.energies, [3, 7, 11, 15], atol=1e-8)


def test_hamiltonian_is_symmetric():
    H, r = hamiltonian(PotentialSpec.power(3), 2, 30, 0.1)
    np.testing.assert_allclose(H, H.T, rtol=0, atol=1e-12 * np.abs(H).max())
    assert np.all(np.diff(r) > 0) and r[0] > 0


def test_large_dimension_harmonic():
    res = solve_radial(PotentialSpec.power(2), 12, 10)
    np.testing.assert_allclose(res.energies, 4 * np.arange(11) + 12, atol=1e-9)


def test_bs_gap_is_small_for_high_states():
    res = solve_radial(PotentialSpec.power(3), 3, 20)
    assert abs(res.energies[20] - bs_energy_power(3, (20, 3))) < 2e-3


def test_errors():
    with pytest.raises(UsageError):
        solve_radial(PotentialSpec.well(), 3, 2)
    with pytest.raises(DomainError):
        solve_radial(PotentialSpec.coulomb(), 1, 2)
    with pytest.raises(DomainError):
        solve_radial(PotentialSpec.power(2), 3, 60, MeshConfig(n_points=100))
    with pytest.raises(DomainError):
        solve_radial(PotentialSpec.power(2), 0, 2)


def test_mesh_config_validation():
    assert MeshConfig().n_points == 100
    with pytest.raises(DomainError):
        MeshConfig(n_points=2)
    with pytest.raises(DomainError):
        MeshConfig(n_points=50.5)
    with pytest.raises(DomainError):
        MeshConfig(scaling=-1.0)
    with pytest.raises(UsageError):
        MeshConfig(basis="sinc")


def test_attractive_d6_against_effective_potential_shooting():
    # u = r^(5/2) psi turns d = 6 into -u'' + (15/(4 r^2) + V) u = E u
    V = PotentialSpec.power(-0.5)
    E0 = solve_radial(V, 6, 0).energies[0]

    def end(E, r0=1e-4, R=60.0):
        sol = solve_ivp(lambda r, y: [y[1], (3.75 / (r * r) - r ** -0.5 - E) * y[0]], (r0, R),
                        [r0 ** 2.5, 2.5 * r0 ** 1.5], method="DOP853", rtol=1e-12, atol=1e-30)
        return sol.y[0, -1]

    ref = brentq(end, E0 - 0.02, E0 + 0.02, xtol=1e-14)
    assert E0 == pytest.approx(ref, rel=1e-9)
