"""Radial potentials V(r) and their turning points.

A power potential is ``V(r) = a * g**(m - 2) * sign(m) * r**m`` with
``m >= -1``, ``m != 0``; the logarithm takes the place of ``m = 0``.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass

import numpy as np

from .exceptions import DomainError, UsageError

__all__ = [
    "KINDS",
    "MAX_DIM",
    "PotentialSpec",
    "QuantumLabel",
    "as_label",
    "evaluate",
    "gap",
    "parse_potential",
    "turning_point",
]

KINDS = ("power", "coulomb", "log", "anharmonic", "well")
MAX_DIM = 12
_LOG_MAX = math.log(np.finfo(float).max)


@dataclass(frozen=True)
class PotentialSpec:
    kind: str
    m: float | None = None
    a: float = 1.0
    g: float = 1.0
    lam: float | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise UsageError(f"unknown potential kind {self.kind!r}")
        if self.kind == "power":
            if self.m is None or not math.isfinite(self.m):
                raise DomainError("power potential needs a finite exponent m")
            if self.m == 0:
                raise DomainError("m = 0 is the logarithmic potential; use kind 'log'")
            if self.m < -1:
                raise DomainError(f"power potentials need m >= -1, got {self.m}")
            if not (self.a > 0 and self.g > 0):
                raise DomainError("power potential needs a > 0 and g > 0")
        if self.kind == "anharmonic":
            if self.lam is None or not (0 <= self.lam < math.inf):
                raise DomainError(f"anharmonic coupling must be finite and >= 0, got {self.lam}")

    @classmethod
    def power(cls, m, a=1.0, g=1.0):
        return cls("power", m=float(m), a=float(a), g=float(g))

    @classmethod
    def coulomb(cls):
        return cls("coulomb", m=-1.0)

    @classmethod
    def log(cls):
        return cls("log")

    @classmethod
    def anharmonic(cls, lam):
        return cls("anharmonic", lam=float(lam))

    @classmethod
    def well(cls):
        return cls("well")

    @property
    def exponent(self):
        """Power-law exponent for power and Coulomb kinds, else None."""
        if self.kind in ("power", "coulomb"):
            return self.m
        return None

    @property
    def coefficient(self):
        """Signed prefactor c in V = c r^m (power and Coulomb kinds)."""
        if self.kind == "coulomb":
            return -1.0
        if self.kind == "power":
            return self.a * self.g ** (self.m - 2) * math.copysign(1.0, self.m)
        raise UsageError(f"{self.kind} potential has no power-law coefficient")

    @property
    def confining(self):
        return self.kind in ("log", "anharmonic", "well") or (
            self.kind == "power" and self.m > 0
        )

    def __str__(self):
        if self.kind == "power":
            out = f"power:m={self.m:g}"
            if self.a != 1.0:
                out += f",a={self.a:g}"
            if self.g != 1.0:
                out += f",g={self.g:g}"
            return out
        if self.kind == "anharmonic":
            return f"anharmonic:lambda={self.lam:g}"
        return self.kind


@dataclass(frozen=True)
class QuantumLabel:
    """Radial quantum number and spatial dimension of an S-state."""

    n_r: int
    d: int

    def __post_init__(self):
        if isinstance(self.n_r, bool) or int(self.n_r) != self.n_r or self.n_r < 0:
            raise DomainError(f"n_r must be a non-negative integer, got {self.n_r!r}")
        if isinstance(self.d, bool) or int(self.d) != self.d or not 1 <= self.d <= MAX_DIM:
            raise DomainError(f"d must be an integer in 1..{MAX_DIM}, got {self.d!r}")
        object.__setattr__(self, "n_r", int(self.n_r))
        object.__setattr__(self, "d", int(self.d))


def as_label(q, real_ok=False):
    """Return ``(n_r, d)`` from a QuantumLabel or a pair.

    With ``real_ok`` a non-integer ``n_r >= 0`` passes through unchanged.
    """
    if isinstance(q, QuantumLabel):
        return q.n_r, q.d
    n_r, d = q
    if real_ok and not float(n_r).is_integer():
        if not n_r >= 0:
            raise DomainError(f"n_r must be >= 0, got {n_r!r}")
        QuantumLabel(0, d)
        return float(n_r), int(d)
    q = QuantumLabel(n_r, d)
    return q.n_r, q.d


_KEY_ALIASES = {"lambda": "lam", "lam": "lam", "m": "m", "a": "a", "g": "g"}
_ALLOWED_KEYS = {"power": {"m", "a", "g"}, "anharmonic": {"lam"}}


def parse_potential(text: str) -> PotentialSpec:
    """Parse ``power:m=4``, ``coulomb``, ``log``, ``anharmonic:lambda=10``, ``well``."""
    text = text.strip().lower()
    kind, _, rest = text.partition(":")
    kind = {"infinite_well": "well"}.get(kind, kind)
    if kind not in KINDS:
        raise UsageError(f"unknown potential kind {kind!r} in {text!r}")
    params = {}
    if rest:
        for item in re.split(r"[,;]", rest):
            key, eq, value = item.partition("=")
            key = _KEY_ALIASES.get(key.strip())
            if not eq or key not in _ALLOWED_KEYS.get(kind, set()):
                raise UsageError(f"unexpected parameter {item!r} for {kind} potential")
            try:
                params[key] = float(value)
            except ValueError:
                raise UsageError(f"parameter {item!r} is not a number") from None
    if kind == "power":
        if "m" not in params:
            raise UsageError("power potential needs m=<exponent>")
        return PotentialSpec.power(**params)
    if kind == "anharmonic":
        if "lam" not in params:
            raise UsageError("anharmonic potential needs lambda=<coupling>")
        return PotentialSpec.anharmonic(params["lam"])
    return PotentialSpec(kind, m=-1.0 if kind == "coulomb" else None)


def evaluate(V: PotentialSpec, r):
    """V(r) for r > 0; accepts scalars or arrays."""
    r_arr = np.asarray(r, dtype=float)
    if np.any(r_arr <= 0):
        raise DomainError("the potential is evaluated only at r > 0")
    if V.kind == "well":
        raise UsageError("the infinite well is handled by closed forms, not by evaluation")
    if V.kind in ("power", "coulomb"):
        out = V.coefficient * r_arr ** V.m
    elif V.kind == "log":
        out = np.log(r_arr)
    else:
        r2 = r_arr * r_arr
        out = r2 + V.lam * r2 * r2
    return float(out) if np.ndim(out) == 0 else out


def turning_point(V: PotentialSpec, E: float) -> float:
    """The radius r0 > 0 with V(r0) = E."""
    if V.kind == "well":
        raise UsageError("the infinite well has its wall at r = 1 for every energy")
    if V.kind == "log":
        if E > _LOG_MAX:
            raise DomainError(f"turning point e^E overflows at E={E}")
        return math.exp(E)
    if V.kind == "anharmonic":
        if not E > 0:
            raise DomainError(f"anharmonic potential needs E > 0, got {E}")
        # r^2 from lam r^4 + r^2 - E = 0, in the form free of cancellation
        return math.sqrt(2.0 * E / (1.0 + math.sqrt(1.0 + 4.0 * V.lam * E)))
    c, m = V.coefficient, V.m
    if m > 0 and not E > 0:
        raise DomainError(f"confining power potential needs E > 0, got {E}")
    if m < 0 and not E < 0:
        raise DomainError(f"attractive power potential needs E < 0, got {E}")
    return (E / c) ** (1.0 / m)


def gap(V: PotentialSpec, r0: float, t):
    """V(r0) - V(r0 t) for t in (0, 1], free of cancellation as t -> 1."""
    t = np.asarray(t, dtype=float)
    if V.kind in ("power", "coulomb"):
        E = V.coefficient * r0 ** V.m
        return -E * np.expm1(V.m * np.log(t))
    if V.kind == "log":
        return -np.log(t)
    if V.kind == "anharmonic":
        r2 = r0 * r0
        one_minus_t2 = (1.0 - t) * (1.0 + t)
        return r2 * one_minus_t2 + V.lam * r2 * r2 * one_minus_t2 * (1.0 + t * t)
    raise UsageError(f"no gap formula for {V.kind} potential")
