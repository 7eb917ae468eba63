"""The radial action integral  I(E) = int_0^{r0} sqrt(E - V(r)) dr.

Closed forms exist for power laws and the logarithm. The numerical route
works in t = r / r0 and splits at t = 1/2:

* on [1/2, 1] the square-root edge at the turning point is absorbed into a
  Gauss-Jacobi weight (1 - t)^(1/2), leaving a smooth integrand;
* on [0, 1/2] the substitution t = tau^2 followed by a tanh-sinh rule copes
  with whatever the potential does at the origin (r^(m/2) blow-up for
  m < 0, sqrt(-log t) for the logarithm).
"""
from __future__ import annotations

import math

import numpy as np

from .exceptions import ConvergenceError, DomainError, UsageError
from .potentials import PotentialSpec, gap, turning_point
from .specfun import beta, gauss_rule, tanh_sinh_rule

__all__ = [
    "action",
    "action_closed",
    "action_closed_log",
    "action_closed_power",
    "action_numeric",
]

START_NODES = 128
MAX_NODES = 2048
RTOL = 1e-11
_TAU_MAX = math.sqrt(0.5)


def action_closed_power(m: float, E: float, a: float = 1.0, g: float = 1.0) -> float:
    """Exact action for V = a g^(m-2) sign(m) r^m.

    With M = 1/m + 1/2 this is E^M B(1/m, 3/2) / m for m > 0 and
    |E|^M B(3/2, -M) / |m| for -2 < m < 0 (unit coupling).
    """
    if m == 0:
        raise DomainError("m = 0 is the logarithmic potential")
    M = 1.0 / m + 0.5
    c = a * g ** (m - 2)
    if m > 0:
        if not E > 0:
            raise DomainError(f"confining power potential needs E > 0, got {E}")
        return E ** M * beta(1.0 / m, 1.5) / m * c ** (-1.0 / m)
    if m <= -2:
        raise DomainError("the action diverges at the origin for m <= -2")
    if not E < 0:
        raise DomainError(f"attractive power potential needs E < 0, got {E}")
    return (-E) ** M * beta(1.5, -M) / (-m) * c ** (-1.0 / m)


def action_closed_log(E: float) -> float:
    """Exact action for V = log r: e^E sqrt(pi) / 2."""
    return math.exp(E) * math.sqrt(math.pi) / 2.0


def action_closed(V: PotentialSpec, E: float):
    """Closed-form action, or None when the potential has none."""
    if V.kind in ("power", "coulomb"):
        return action_closed_power(V.m, E, V.a, V.g)
    if V.kind == "log":
        return action_closed_log(E)
    if V.kind == "anharmonic" and V.lam == 0:
        return action_closed_power(2.0, E)
    if V.kind == "well":
        # flat floor on [0, 1], wall at r = 1
        if not E > 0:
            raise DomainError(f"infinite well needs E > 0, got {E}")
        return math.sqrt(E)
    return None


def _pieces(V, r0, n, level):
    right_rule = gauss_rule(n, "jacobi_halfpow")
    s = right_rule.nodes
    one_minus_s = 1.0 - s
    t = 0.5 + 0.5 * s
    right = 0.5 * right_rule.integrate(np.sqrt(gap(V, r0, t) / one_minus_s))

    # t = tau^2 turns the worst case, r^(-1/2) at m = -1, into a constant
    left_rule = tanh_sinh_rule(level)
    tau = left_rule.nodes * _TAU_MAX
    left = _TAU_MAX * left_rule.integrate(2.0 * tau * np.sqrt(gap(V, r0, tau * tau)))
    return r0 * (left + right)


def action_numeric(V: PotentialSpec, E: float) -> float:
    """Action by quadrature, doubling the rules until successive values agree."""
    if V.kind == "well":
        raise UsageError("the infinite well has no smooth action integral; use closed forms")
    r0 = turning_point(V, E)
    n, level = START_NODES, 6
    prev = _pieces(V, r0, n, level)
    trace = [prev]
    while n < MAX_NODES:
        n, level = 2 * n, level + 1
        cur = _pieces(V, r0, n, level)
        trace.append(cur)
        if abs(cur - prev) <= RTOL * abs(cur):
            return cur
        prev = cur
    raise ConvergenceError(
        f"action quadrature for {V} at E={E} did not settle",
        {"values": trace, "nodes": n},
    )


def action(V: PotentialSpec, E: float, method: str = "auto") -> float:
    """Action with ``method`` 'auto' (closed form when known), 'closed' or 'numeric'."""
    if method == "numeric":
        return action_numeric(V, E)
    closed = action_closed(V, E)
    if closed is not None:
        return closed
    if method == "closed":
        raise UsageError(f"no closed-form action for {V}")
    return action_numeric(V, E)
