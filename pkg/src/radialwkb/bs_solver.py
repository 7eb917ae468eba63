"""Bohr-Sommerfeld energies of radial S-states.

The quantization rule is  I(E) = pi (n_r + d/4 + gamma)  with I the radial
action. Power laws, Coulomb and the logarithm invert in closed form; other
potentials go through a bracketed root search on the numerical action.
"""
from __future__ import annotations

import math

from scipy.optimize import brentq

from .action import action, action_numeric
from .exceptions import ConvergenceError, DomainError
from .potentials import PotentialSpec, as_label
from .specfun import bessel_j_zero, beta, log_beta

__all__ = [
    "bs_energy_coulomb",
    "bs_energy_general",
    "bs_energy_log",
    "bs_energy_power",
    "bs_energy_well",
    "exact_well_energy",
    "large_d_coefficients",
    "quantum_shift",
]

MAX_ITER = 200


def quantum_shift(n_r, d, gamma=0.0):
    """The right-hand side divided by pi: n_r + d/4 + gamma."""
    shift = n_r + d / 4.0 + gamma
    if not shift > 0:
        raise DomainError(f"n_r + d/4 + gamma must be positive, got {shift}")
    return shift


def bs_energy_power(m: float, q, gamma: float = 0.0) -> float:
    """E = (2 M B(1/2, M) (n_r + d/4 + gamma))^(1/M), M = 1/m + 1/2, for V = r^m.

    ``q`` may carry a real n_r >= 0 (analytic continuation in n_r).
    """
    if not m > 0:
        raise DomainError(f"closed-form power energies need m > 0, got {m}")
    n_r, d = as_label(q, real_ok=True)
    M = 1.0 / m + 0.5
    return (2.0 * M * beta(0.5, M) * quantum_shift(n_r, d, gamma)) ** (1.0 / M)


def bs_energy_coulomb(q) -> float:
    n_r, d = as_label(q)
    return -1.0 / (2 * n_r + d / 2.0) ** 2


def bs_energy_log(q) -> float:
    n_r, d = as_label(q)
    return math.log(2.0 * math.sqrt(math.pi) * (n_r + d / 4.0))


def bs_energy_well(q) -> float:
    """Bohr-Sommerfeld energy of the unit infinite well, pi^2 (n_r + d/4)^2."""
    n_r, d = as_label(q)
    return math.pi ** 2 * (n_r + d / 4.0) ** 2


def exact_well_energy(q) -> float:
    """Exact S-state energy of the unit infinite well: (zero n_r+1 of J_{(d-2)/2})^2."""
    n_r, d = as_label(q)
    if d == 1:
        return math.pi ** 2 * (n_r + 0.5) ** 2
    if d == 3:
        return math.pi ** 2 * (n_r + 1) ** 2
    return bessel_j_zero((d - 2) / 2.0, n_r + 1) ** 2


def _energy_variable(V):
    """Map an unbounded search variable u onto the allowed energy range.

    Returns (to_energy, initial u); the action is increasing in u.
    """
    if V.kind == "log":
        return (lambda u: u), 0.0
    if V.kind in ("power", "coulomb") and V.m < 0:
        return (lambda u: -math.exp(-u)), 0.0
    return math.exp, 0.0


def _initial_guess(V, n_r, d, gamma):
    if V.kind == "power" and V.m > 0:
        c = V.coefficient
        return math.log(bs_energy_power(V.m, (n_r, d), gamma) * c ** (2.0 / (V.m + 2)))
    if V.kind == "anharmonic":
        # dominant term of the potential at the estimated scale
        e2 = bs_energy_power(2.0, (n_r, d), gamma)
        if V.lam == 0:
            return math.log(e2)
        e4 = bs_energy_power(4.0, (n_r, d), gamma) * V.lam ** (1.0 / 3.0)
        return math.log(max(e2, e4))
    return 0.0


def bs_energy_general(V: PotentialSpec, q, gamma: float = 0.0, method: str = "numeric") -> float:
    """Energy solving I(E) = pi (n_r + d/4 + gamma) by root search.

    ``method`` selects the action used: 'numeric' (quadrature) or 'auto'
    (closed form when one exists). The bracket is grown geometrically from
    a closed-form estimate; monotonicity of I guarantees it straddles.
    """
    n_r, d = as_label(q)
    target = math.pi * quantum_shift(n_r, d, gamma)
    to_energy, _ = _energy_variable(V)
    act = action_numeric if method == "numeric" else (lambda V_, E: action(V_, E))

    def f(u):
        return act(V, to_energy(u)) / target - 1.0

    u0 = _initial_guess(V, n_r, d, gamma)
    lo, hi = u0 - 0.5, u0 + 0.5
    f_lo, f_hi = f(lo), f(hi)
    step = 1.0
    iterations = 0
    while f_lo > 0 or f_hi < 0:
        iterations += 1
        if iterations > 60:
            raise ConvergenceError(
                f"could not bracket the quantization condition for {V} at n_r={n_r}, d={d}",
                {"bracket": (lo, hi), "values": (f_lo, f_hi)},
            )
        if f_lo > 0:
            lo -= step
            f_lo = f(lo)
        if f_hi < 0:
            hi += step
            f_hi = f(hi)
        step *= 2.0
    try:
        u = brentq(f, lo, hi, xtol=1e-14, rtol=1e-15, maxiter=MAX_ITER)
    except RuntimeError as exc:
        raise ConvergenceError(str(exc), {"bracket": (lo, hi)}) from None
    return to_energy(u)


def large_d_coefficients(m: float):
    """Leading large-d coefficients (c_M, c_M_BS) of E ~ c d^(1/M), M = 1/m + 1/2.

    c_M = (1 + m/2) (2m)^(-m/(m+2)) minimizes d^2/(4 r^2) + r^m at unit d;
    c_M_BS = (M B(1/2, M) / 2)^(1/M).
    """
    if not m > 0:
        raise DomainError(f"large-d coefficients need m > 0, got {m}")
    M = 1.0 / m + 0.5
    log_c = (
        (1.0 - 1.0 / M) * math.log(2.0)
        - (1.0 - 0.5 / M) * math.log(2.0 * M - 1.0)
        + math.log(M)
    )
    # E_BS(n_r = 0) = (2 M B(1/2, M) d/4)^(1/M) exactly
    log_c_bs = (math.log(0.5 * M) + log_beta(0.5, M)) / M
    return math.exp(log_c), math.exp(log_c_bs)
