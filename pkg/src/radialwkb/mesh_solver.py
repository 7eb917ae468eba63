"""Lagrange-Laguerre mesh eigensolver for d-dimensional radial S-states.

Solves  -psi'' - (d-1)/r psi' + V psi = E psi  on r in [0, inf) with
normalizability in the measure r^(d-1) dr.

The trial space is psi(r) = p(r/h) exp(-r/2h) with p a polynomial of degree
N-1, represented by its values at the zeros x_i of the Laguerre polynomial
L_N^(beta), beta = d - 2 (beta = 0 for d = 1). With this choice the overlap
and kinetic matrices are integrated exactly by the mesh's own Gauss rule, and
so is -1/r, which makes the Coulomb spectrum exact once the scale fits. The
potential is taken at the mesh points, which is the usual Lagrange-mesh
approximation. In the orthonormal Lagrange basis the kinetic matrix is
T = B^T B / h^2 with

    B_ki = (-1)^(i+k) (x_i/x_k)^((1-s)/2) / (x_k - x_i),   B_ii = -(beta+1)/(2 x_i),

where s = d - 1 - beta is the extra power of x in the measure.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np

from .bs_solver import bs_energy_general
from .exceptions import ConvergenceError, DomainError, UsageError
from .potentials import PotentialSpec, evaluate, turning_point
from .specfun import gauss_rule, laguerre_nodes

__all__ = [
    "MeshConfig",
    "SpectrumResult",
    "count_nodes",
    "hamiltonian",
    "mesh_scaling",
    "solve_radial",
    "validate_solver",
]

# forbidden-region action the mesh must cover beyond the last turning point
TAIL_ACTION = 20.0
# and a minimum reach in units of that turning radius, for steep walls
REACH_FACTOR = 1.5
MAX_POINTS = 800


@dataclass(frozen=True)
class MeshConfig:
    n_points: int = 100
    scaling: float | None = None
    basis: str = "laguerre_radial"

    def __post_init__(self):
        if self.basis != "laguerre_radial":
            raise UsageError(f"unknown mesh basis {self.basis!r}")
        if int(self.n_points) != self.n_points or self.n_points < 4:
            raise DomainError(f"n_points must be an integer >= 4, got {self.n_points!r}")
        if self.scaling is not None and not self.scaling > 0:
            raise DomainError(f"scaling must be positive, got {self.scaling!r}")


@dataclass(frozen=True)
class SpectrumResult:
    """Eigenvalues indexed by n_r, with the refinement check that backs them.

    ``energies`` come from the run with ``config_used``; the first
    ``n_converged`` moved by at most ``residual_estimate`` when the mesh was
    doubled. ``radii`` and ``vectors`` give the eigenvectors at the mesh
    points (column n has the sign pattern of psi_n).
    """

    energies: np.ndarray
    n_converged: int
    config_used: MeshConfig
    residual_estimate: float
    radii: np.ndarray = field(repr=False)
    vectors: np.ndarray = field(repr=False)


def _mesh(d, n):
    beta = d - 2.0 if d >= 2 else 0.0
    return laguerre_nodes(n, beta), beta, d - 1 - beta


def hamiltonian(V: PotentialSpec, d: int, n_points: int, scaling: float):
    """Mesh Hamiltonian matrix and the mesh radii."""
    x, beta, s = _mesh(d, n_points)
    i = np.arange(n_points)
    sign = np.where((i[:, None] + i[None, :]) % 2 == 0, 1.0, -1.0)
    diff = x[:, None] - x[None, :]
    np.fill_diagonal(diff, 1.0)
    B = sign * (x[None, :] / x[:, None]) ** (0.5 * (1 - s)) / diff
    B[i, i] = -(beta + 1.0) / (2.0 * x)
    r = scaling * x
    H = (B.T @ B) / scaling ** 2
    H[i, i] += evaluate(V, r)
    return H, r


def _tail_reach(V, E, r0):
    """Radius where the forbidden-region action beyond r0 reaches TAIL_ACTION."""
    rule = gauss_rule(16, "legendre")
    acc = 0.0
    a = r0
    width = 0.25 * r0
    for _ in range(200):
        b = a + width
        rr = a + 0.5 * (rule.nodes + 1.0) * width
        vals = np.sqrt(np.maximum(evaluate(V, rr) - E, 0.0))
        piece = 0.5 * width * rule.integrate(vals)
        if acc + piece >= TAIL_ACTION:
            return a + width * (TAIL_ACTION - acc) / piece
        acc += piece
        a = b
        width *= 1.5
    raise ConvergenceError(f"tail of {V} at E={E} does not close; is the state bound?")


def mesh_scaling(V: PotentialSpec, d: int, n_max: int, n_points: int) -> float:
    """Scale h putting the last mesh point where the top state has died off.

    The top state's energy is estimated semiclassically; the mesh then
    reaches past its turning point r0 by a fixed forbidden-region action, and
    at least to REACH_FACTOR * r0. The second condition matters for steep
    walls, where the action builds up within a few of the sparse outer nodes.
    """
    E = bs_energy_general(V, (n_max, d), method="auto")
    r0 = turning_point(V, E)
    x, _, _ = _mesh(d, n_points)
    return max(_tail_reach(V, E, r0), REACH_FACTOR * r0) / x[-1]


def _eig(V, d, n, h, vectors=False):
    H, r = hamiltonian(V, d, n, h)
    if vectors:
        w, U = np.linalg.eigh(H)
        return w, r, U
    return np.linalg.eigvalsh(H), r, None


def _count_trusted(coarse, fine, rtol):
    for n, (a, b) in enumerate(zip(coarse, fine)):
        if abs(a - b) > rtol * max(abs(b), 1e-300):
            return n
    return len(coarse)


def solve_radial(
    V: PotentialSpec,
    d: int,
    n_max: int,
    cfg: MeshConfig | None = None,
    rtol: float = 1e-7,
    max_points: int = MAX_POINTS,
) -> SpectrumResult:
    """S-state energies for n_r = 0..n_max.

    A run at ``cfg.n_points`` is checked against one at twice as many points
    (same outer reach). If fewer than n_max + 1 states agree to ``rtol`` the
    mesh is doubled, up to ``max_points``.
    """
    cfg = cfg or MeshConfig()
    if V.kind == "well":
        raise UsageError("the infinite well is solved by exact_well_energy, not on the mesh")
    if not 1 <= d:
        raise DomainError(f"dimension must be >= 1, got {d}")
    if V.kind == "coulomb" and d == 1:
        raise DomainError("the Coulomb S-spectrum is unbounded below at d = 1")
    n = int(cfg.n_points)
    if n_max + 1 > n // 2:
        raise DomainError(f"n_max={n_max} needs at least {2 * (n_max + 1)} mesh points")
    h = cfg.scaling if cfg.scaling is not None else mesh_scaling(V, d, n_max, n)
    reach = h * laguerre_nodes(n, _mesh(d, n)[1])[-1]
    want = n_max + 1
    coarse, r, U = _eig(V, d, n, h, vectors=True)
    while True:
        n_fine = 2 * n
        h_fine = reach / _mesh(d, n_fine)[0][-1]
        fine, _, _ = _eig(V, d, n_fine, h_fine)
        trusted = _count_trusted(coarse[:want], fine[:want], rtol)
        if trusted >= want or n_fine > max_points:
            break
        n, h = n_fine, h_fine
        coarse, r, U = _eig(V, d, n, h, vectors=True)
    diffs = np.abs(coarse[:want] - fine[:want])
    if trusted == 0:
        raise ConvergenceError(
            f"mesh solution for {V}, d={d} did not converge by {n_fine} points",
            {"coarse": coarse[:want], "fine": fine[:want], "n_points": n},
        )
    return SpectrumResult(
        energies=coarse[:want].copy(),
        n_converged=trusted,
        config_used=replace(cfg, n_points=n, scaling=h),
        residual_estimate=float(diffs[:trusted].max()),
        radii=r,
        vectors=U[:, :want].copy(),
    )


def count_nodes(result: SpectrumResult, n_r: int, cutoff: float = 1e-6) -> int:
    """Sign changes of eigenvector n_r, ignoring negligible tail values."""
    v = result.vectors[:, n_r]
    v = v[np.abs(v) > cutoff * np.abs(v).max()]
    return int(np.count_nonzero(np.signbit(v[1:]) != np.signbit(v[:-1])))


def validate_solver(d: int, cfg: MeshConfig | None = None, n_max: int = 10) -> dict:
    """Deviation of mesh energies from the harmonic and Coulomb closed forms.

    Coulomb is skipped at d = 1, where it has no S-spectrum.
    """
    cfg = cfg or MeshConfig()
    n = np.arange(n_max + 1)
    report = {"d": d, "n_points": cfg.n_points}
    res = solve_radial(PotentialSpec.power(2), d, n_max, cfg)
    report["harmonic"] = float(np.abs(res.energies - (4 * n + d)).max())
    if d >= 2:
        res = solve_radial(PotentialSpec.coulomb(), d, n_max, cfg)
        report["coulomb"] = float(np.abs(res.energies + 1.0 / (2 * n + d - 1) ** 2).max())
    report["max_deviation"] = max(v for k, v in report.items() if k in ("harmonic", "coulomb"))
    return report
