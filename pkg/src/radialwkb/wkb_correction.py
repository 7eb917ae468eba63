"""The WKB correction gamma and its rational fits.

gamma is the shift that turns the Bohr-Sommerfeld rule into an exact one,

    I(E_exact) = pi (n_r + d/4 + gamma),

and across n_r it is well described by P_k(n) / sqrt(Q_{2k+2}(n)).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as npoly
from scipy.optimize import least_squares

from .action import action
from .bs_solver import bs_energy_power, quantum_shift
from .exceptions import DomainError, FitError, UsageError
from .potentials import PotentialSpec, as_label

__all__ = [
    "GammaFit",
    "fit_gamma",
    "gamma_extract",
    "gamma_fit_eval",
    "gamma_one_dimensional",
    "modified_bs_energy",
    "modified_bs_energy_log",
]

NORMALIZATIONS = ("q0", "monic")


def gamma_extract(V: PotentialSpec, q, E_exact: float, method: str = "auto") -> float:
    """gamma = I(E_exact)/pi - n_r - d/4."""
    n_r, d = as_label(q)
    return action(V, E_exact, method=method) / math.pi - n_r - d / 4.0


def gamma_one_dimensional(V: PotentialSpec, n_r: int, E_exact: float, method: str = "auto") -> float:
    """Correction of the line rule  int_{-x0}^{x0} sqrt(E - V) dx = pi (N + 1/2 + gamma).

    For an even potential the d = 1 S-state n_r is the line state N = 2 n_r,
    and the full-line action is twice the radial one, so this equals twice
    the radial gamma at d = 1.
    """
    n_r, _ = as_label((n_r, 1))
    return 2.0 * action(V, E_exact, method=method) / math.pi - 2 * n_r - 0.5


def modified_bs_energy(m: float, q, gamma: float) -> float:
    """(2 M B(1/2, M) (n_r + d/4 + gamma))^(1/M) for V = r^m, m > 0."""
    return bs_energy_power(m, q, gamma)


def modified_bs_energy_log(q, gamma: float) -> float:
    n_r, d = as_label(q)
    return math.log(2.0 * math.sqrt(math.pi) * quantum_shift(n_r, d, gamma))


@dataclass(frozen=True)
class GammaFit:
    """gamma(n) ~ P(n) / sqrt(Q(n)); coefficients in ascending degree."""

    k: int
    p_coeffs: tuple
    q_coeffs: tuple
    rms_residual: float
    domain: tuple
    normalization: str = "q0"

    def __call__(self, n_r):
        return gamma_fit_eval(self, n_r)

    def to_record(self) -> dict:
        rec = {"k": self.k}
        rec.update({f"p{j}": c for j, c in enumerate(self.p_coeffs)})
        rec.update({f"q{j}": c for j, c in enumerate(self.q_coeffs)})
        rec["rms"] = self.rms_residual
        rec["domain"] = f"{self.domain[0]:g}..{self.domain[1]:g}"
        rec["normalization"] = self.normalization
        return rec

    @classmethod
    def from_record(cls, rec):
        k = int(rec["k"])
        lo, _, hi = str(rec["domain"]).partition("..")
        return cls(
            k=k,
            p_coeffs=tuple(float(rec[f"p{j}"]) for j in range(k + 1)),
            q_coeffs=tuple(float(rec[f"q{j}"]) for j in range(2 * k + 3)),
            rms_residual=float(rec["rms"]),
            domain=(float(lo), float(hi)),
            normalization=rec.get("normalization", "q0"),
        )


def gamma_fit_eval(fit: GammaFit, n_r):
    """P(n_r)/sqrt(Q(n_r)); raises DomainError where Q <= 0."""
    n = np.asarray(n_r, dtype=float)
    qv = npoly.polyval(n, fit.q_coeffs)
    if np.any(qv <= 0):
        raise DomainError(f"fit denominator is not positive at n_r={n_r}")
    out = npoly.polyval(n, fit.p_coeffs) / np.sqrt(qv)
    return float(out) if out.ndim == 0 else out


def _linear_guess(s, y, k):
    """P - y R = 0 with R(0) = 1, deg R = k + 1, solved by linear least squares.

    Q = R^2 then starts the nonlinear fit.
    """
    vp = np.vander(s, k + 1, increasing=True)
    vr = np.vander(s, k + 2, increasing=True)[:, 1:]
    A = np.hstack([vp, -y[:, None] * vr])
    coef, *_ = np.linalg.lstsq(A, y, rcond=None)
    r = np.concatenate([[1.0], coef[k + 1 :]])
    return npoly.polymul(r, r)


def _varpro(s, y, k):
    """Fit on s in [0, 1] with Q(0) = 1; returns (q, p, status, message).

    For fixed Q the numerator solves a weighted linear least-squares problem,
    so the trust-region iteration moves only Q's coefficients (variable
    projection). Starts: the linearized guess, a flat Q, and the order k-1
    optimum padded by (1 + s)^2, which keeps higher orders from fitting worse.
    """
    y_scale = np.abs(y).max()
    vp = np.vander(s, k + 1, increasing=True)
    grid = np.union1d(s, np.linspace(0.0, s[-1], 8 * len(s)))
    bad = np.full(len(s), 1e3)

    def numerator(q):
        A = vp / np.sqrt(npoly.polyval(s, q))[:, None]
        p, _, rank, _ = np.linalg.lstsq(A, y, rcond=None)
        return p, A @ p - y, rank

    def residuals(theta):
        q = np.concatenate([[1.0], theta])
        qv = npoly.polyval(grid, q)
        if not np.all(np.isfinite(qv) & (qv > 0)):
            return bad
        return numerator(q)[1] / y_scale

    starts = [_linear_guess(s, y, k), npoly.polypow([1.0, 1.0], 2 * k + 2)]
    if k > 1:
        q_low, _, status, _ = _varpro(s, y, k - 1)
        if status > 0:
            starts.append(npoly.polymul(q_low, [1.0, 2.0, 1.0]))
    best = None
    for q0 in starts:
        if residuals(q0[1:]) is bad:
            continue
        sol = least_squares(
            residuals, q0[1:], method="trf", x_scale="jac",
            xtol=1e-10, ftol=1e-10, gtol=1e-10, max_nfev=1000,
        )
        if sol.status > 0 and sol.fun is not bad and (best is None or sol.cost < best.cost):
            best = sol
    if best is None:
        return starts[0], None, 0, "no start converged to a positive denominator"
    q = np.concatenate([[1.0], best.x])
    p, _, rank = numerator(q)
    if rank < k + 1:
        return q, p, 0, "numerator design matrix is rank deficient"
    return q, p, best.status, best.message


def fit_gamma(points, k: int = 1, normalization: str = "q0") -> GammaFit:
    """Least-squares fit of gamma(n_r) by P_k / sqrt(Q_{2k+2}).

    The gauge P -> cP, Q -> c^2 Q is fixed by Q(0) = 1 ('q0') or by a unit
    leading coefficient of Q ('monic'). The fit runs in s = n / max(n) and is
    converted back afterwards. Q must stay positive on the whole fitted range.
    """
    if normalization not in NORMALIZATIONS:
        raise UsageError(f"normalization must be one of {NORMALIZATIONS}")
    if int(k) != k or k < 1:
        raise DomainError(f"fit order must be a positive integer, got {k!r}")
    pts = np.asarray(sorted(points), dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise UsageError("points must be (n_r, gamma) pairs")
    n, y = pts[:, 0], pts[:, 1]
    need = max(2 * k + 4, 3 * k + 3)
    if len(n) < need:
        raise DomainError(f"need at least {need} points for k={k}, got {len(n)}")
    if np.any(np.diff(n) == 0):
        raise DomainError("n_r values must be distinct")
    if n[0] < 0:
        raise DomainError("n_r values must be non-negative")
    domain = (float(n[0]), float(n[-1]))

    if not np.any(y):
        q = npoly.polypow([1.0, 1.0], 2 * k + 2)
        return GammaFit(k, (0.0,) * (k + 1), tuple(map(float, q)), 0.0, domain, normalization)

    scale = max(float(n[-1]), 1.0)
    s = n / scale
    q, p, status, info = _varpro(s, y, k)
    if status <= 0:
        raise FitError(f"gamma fit did not converge: {info}", {"k": k, "q": q})
    # back to the unscaled variable n
    p = p / scale ** np.arange(k + 1)
    q = q / scale ** np.arange(2 * k + 3)
    if normalization == "monic":
        if not q[-1] > 0:
            raise FitError("monic normalization needs a positive leading coefficient", {"q": q})
        p, q = p / math.sqrt(q[-1]), q / q[-1]
    if p[-1] == 0 or q[-1] == 0:
        raise FitError("fit lost a leading coefficient", {"p": p, "q": q})
    fit = GammaFit(k, tuple(map(float, p)), tuple(map(float, q)), 0.0, domain, normalization)
    rms = float(np.sqrt(np.mean((gamma_fit_eval(fit, n) - y) ** 2)))
    return GammaFit(k, fit.p_coeffs, fit.q_coeffs, rms, domain, normalization)
