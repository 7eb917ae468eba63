"""Special functions and quadrature rules.

Everything here is a pure function of its arguments. Quadrature rules are
cached because the action integrals re-use the same handful of sizes.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.linalg import eigh_tridiagonal
from scipy.special import jv, jvp, roots_jacobi, roots_legendre

from .exceptions import DomainError, UsageError

__all__ = [
    "QuadratureRule",
    "ln_gamma",
    "log_beta",
    "beta",
    "bessel_j_zero",
    "gauss_rule",
    "tanh_sinh_rule",
    "laguerre_nodes",
]

FAMILIES = ("legendre", "jacobi_halfpow")


@dataclass(frozen=True)
class QuadratureRule:
    """Nodes and positive weights of a quadrature rule.

    ``legendre`` lives on (-1, 1) with unit weight. ``jacobi_halfpow`` lives
    on (0, 1) and integrates ``(1 - t)**0.5 * f(t)``; its weights sum to 2/3.
    ``tanh_sinh`` lives on (0, 1) with unit weight.
    """

    nodes: np.ndarray
    weights: np.ndarray
    family: str

    def __len__(self):
        return len(self.nodes)

    def integrate(self, values):
        return float(np.dot(self.weights, values))


def ln_gamma(x: float) -> float:
    """Natural log of the Gamma function for x > 0."""
    if not x > 0:
        raise DomainError(f"ln_gamma requires x > 0, got {x!r}")
    return math.lgamma(x)


def log_beta(a: float, b: float) -> float:
    if not (a > 0 and b > 0):
        raise DomainError(f"beta requires positive arguments, got ({a!r}, {b!r})")
    return math.lgamma(a) + math.lgamma(b) - math.lgamma(a + b)


def beta(a: float, b: float) -> float:
    """Euler Beta function B(a, b) = G(a) G(b) / G(a + b).

    An integer argument n <= 30 uses the finite product
    (n-1)! / (x (x+1) ... (x+n-1)), which keeps cases such as B(1/2, 1) = 2
    exact in floating point. Otherwise the Gamma ratio is used while it
    cannot overflow.
    """
    if not (a > 0 and b > 0):
        raise DomainError(f"beta requires positive arguments, got ({a!r}, {b!r})")
    if float(a).is_integer() and a <= 30:
        a, b = b, a
    if float(b).is_integer() and b <= 30:
        out = 1.0
        for j in range(1, int(b)):
            out *= j / (a + j)
        return out / a
    if a + b < 170.0 and min(a, b) > 1e-300:
        return math.gamma(a) * math.gamma(b) / math.gamma(a + b)
    return math.exp(log_beta(a, b))


def _mcmahon(nu, k):
    mu = 4.0 * nu * nu
    b = (k + 0.5 * nu - 0.25) * math.pi
    return b - (mu - 1) / (8 * b) - 4 * (mu - 1) * (7 * mu - 31) / (3 * (8 * b) ** 3)


def bessel_j_zero(nu: float, k: int) -> float:
    """k-th positive zero of J_nu, for nu >= -1/2.

    Zeros are isolated by a sign-change scan that runs a little past the
    McMahon estimate, refined by bisection, then polished with Newton.
    """
    if nu < -0.5:
        raise DomainError(f"order must be >= -1/2, got {nu!r}")
    if int(k) != k or k < 1:
        raise DomainError(f"zero index must be a positive integer, got {k!r}")
    k = int(k)
    # consecutive zeros are never closer than ~2.9 for nu >= -1/2
    step = 0.25
    x_end = max(_mcmahon(nu, k), nu + 2.0) + 2 * math.pi
    x = 0.05
    f = jv(nu, x)
    found = 0
    while True:
        x_next = x + step
        f_next = jv(nu, x_next)
        if f == 0.0:
            found += 1
            if found == k:
                return x
        elif f * f_next < 0:
            found += 1
            if found == k:
                break
        x, f = x_next, f_next
        if x > x_end + 10 * math.pi:
            raise DomainError(f"failed to bracket zero {k} of J_{nu}")
    lo, hi = x, x_next
    f_lo = f
    while hi - lo > 1e-12 * hi:
        mid = 0.5 * (lo + hi)
        f_mid = jv(nu, mid)
        if f_mid == 0.0:
            return mid
        if f_mid * f_lo < 0:
            hi = mid
        else:
            lo, f_lo = mid, f_mid
    z = 0.5 * (lo + hi)
    for _ in range(2):
        z -= jv(nu, z) / jvp(nu, z)
    return float(z)


@lru_cache(maxsize=64)
def _gauss_rule_cached(n, family):
    if family == "legendre":
        x, w = roots_legendre(n)
        return QuadratureRule(x, w, family)
    if family == "jacobi_halfpow":
        # (1 - x)^(1/2) on (-1, 1), mapped by t = (1 + x) / 2
        x, w = roots_jacobi(n, 0.5, 0.0)
        return QuadratureRule(0.5 * (1.0 + x), w * 2.0 ** -1.5, family)
    raise UsageError(f"unknown quadrature family {family!r}; expected one of {FAMILIES}")


def gauss_rule(n: int, family: str = "legendre") -> QuadratureRule:
    """Gauss rule with ``n`` nodes for ``family`` ('legendre' or 'jacobi_halfpow')."""
    if int(n) != n or n < 2:
        raise DomainError(f"gauss_rule needs n >= 2, got {n!r}")
    return _gauss_rule_cached(int(n), family)


@lru_cache(maxsize=16)
def tanh_sinh_rule(level: int) -> QuadratureRule:
    """Double-exponential rule on (0, 1) with step 2**-level.

    Tolerates integrable algebraic and logarithmic endpoint singularities.
    Nodes close to 0 are computed without cancellation.
    """
    h = 2.0 ** -level
    u = np.arange(-int(3.2 / h), int(3.2 / h) + 1) * h
    z = 0.5 * math.pi * np.sinh(u)
    t = 1.0 / (1.0 + np.exp(-2.0 * z))
    w = h * 0.5 * math.pi * np.cosh(u) / (2.0 * np.cosh(z) ** 2)
    keep = (t > 0.0) & (t < 1.0) & (w > 0.0)
    return QuadratureRule(t[keep], w[keep], "tanh_sinh")


def _laguerre_ratio(n, alpha, x):
    """L_n/L_n' at x by the three-term recurrence, rescaled against overflow."""
    p0 = np.ones_like(x)
    p1 = 1.0 + alpha - x
    for k in range(1, n):
        p0, p1 = p1, ((2 * k + 1 + alpha - x) * p1 - (k + alpha) * p0) / (k + 1)
        s = np.maximum(np.abs(p1), 1.0)
        p0, p1 = p0 / s, p1 / s
    # x L_n' = n L_n - (n + alpha) L_{n-1}
    return x * p1 / (n * p1 - (n + alpha) * p0)


@lru_cache(maxsize=64)
def laguerre_nodes(n: int, alpha: float) -> np.ndarray:
    """Zeros of the generalized Laguerre polynomial L_n^(alpha), increasing.

    Golub-Welsch eigenvalues, then Newton on the recurrence until the
    relative step falls below 1e-14.
    """
    if n < 1:
        raise DomainError("laguerre_nodes needs n >= 1")
    if alpha <= -1:
        raise DomainError("laguerre_nodes needs alpha > -1")
    k = np.arange(n)
    diag = 2 * k + alpha + 1.0
    off = np.sqrt((k[1:]) * (k[1:] + alpha))
    x = eigh_tridiagonal(diag, off, eigvals_only=True)
    for _ in range(10):
        dx = _laguerre_ratio(n, alpha, x)
        x = x - dx
        if np.max(np.abs(dx) / x) < 1e-14:
            break
    x.setflags(write=False)
    return x
