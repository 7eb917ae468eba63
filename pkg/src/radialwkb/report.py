"""Comparison tables and figure datasets: exact vs Bohr-Sommerfeld energies.

Rows carry full precision. ``format_table`` is the human view (energies cut
to 4 decimals so every printed digit is exact, deviations and gamma to 2
significant digits); the CSV and JSON
writers keep every digit and are deterministic byte for byte.
"""
from __future__ import annotations

import csv
import decimal
import io
import json
import math
from dataclasses import dataclass, replace

import numpy as np
from scipy.optimize import brentq

from .bs_solver import (
    bs_energy_coulomb,
    bs_energy_general,
    bs_energy_log,
    bs_energy_power,
    bs_energy_well,
    exact_well_energy,
)
from .exceptions import ConvergenceError, DomainError, UsageError
from .mesh_solver import MeshConfig, solve_radial
from .potentials import PotentialSpec, QuantumLabel
from .wkb_correction import gamma_extract, gamma_one_dimensional

__all__ = [
    "ComparisonRow",
    "FIGURES",
    "GAMMA_VS_M_GRID",
    "RD_VS_M_GRID",
    "anharmonic_gamma_table",
    "anharmonic_records",
    "bs_energy",
    "build_table",
    "exact_energies",
    "figure_dataset",
    "format_table",
    "gamma_zero_crossing",
    "round_sig",
    "rows_to_records",
    "to_csv",
    "to_json",
]

FIGURES = ("rd_vs_m", "gamma_vs_nr", "gamma_vs_m")
RD_VS_M_GRID = (1, 2, 3, 4, 5, 6, 8, 10, 12, 15, 20, 30, 40)
# m = 0 stands for the logarithmic potential
GAMMA_VS_M_GRID = (-1, -0.5, 0) + RD_VS_M_GRID
RECORD_KEYS = ("potential", "m", "lambda", "d", "n_r", "e_exact", "e_bs", "ad", "rd", "gamma")


@dataclass(frozen=True)
class ComparisonRow:
    potential: PotentialSpec
    q: QuantumLabel
    E_exact: float
    E_BS: float
    abs_dev: float
    rel_dev: float
    gamma: float

    @classmethod
    def from_energies(cls, V, q, E_exact, E_BS, gamma):
        ad = abs(E_exact - E_BS)
        return cls(V, q, float(E_exact), float(E_BS), ad, ad / abs(E_exact), float(gamma))

    def to_record(self) -> dict:
        V = self.potential
        return {
            "potential": str(V),
            "m": V.exponent,
            "lambda": V.lam,
            "d": self.q.d,
            "n_r": self.q.n_r,
            "e_exact": self.E_exact,
            "e_bs": self.E_BS,
            "ad": self.abs_dev,
            "rd": self.rel_dev,
            "gamma": self.gamma,
        }


def _potential_for_m(m):
    if m == 0:
        return PotentialSpec.log()
    if m == -1:
        return PotentialSpec.coulomb()
    return PotentialSpec.power(m)


def bs_energy(V: PotentialSpec, q) -> float:
    """Bohr-Sommerfeld energy, in closed form whenever one exists."""
    if V.kind == "power" and V.m > 0:
        return bs_energy_power(V.m, q) * V.coefficient ** (2.0 / (V.m + 2))
    if V.kind == "coulomb":
        return bs_energy_coulomb(q)
    if V.kind == "log":
        return bs_energy_log(q)
    if V.kind == "well":
        return bs_energy_well(q)
    return bs_energy_general(V, q, method="auto")


def exact_energies(V: PotentialSpec, d: int, n_r_list, cfg: MeshConfig | None = None,
                   rtol: float = 1e-7) -> np.ndarray:
    """Exact S-state energies: closed forms for Coulomb and the well, mesh otherwise.

    The mesh is enlarged when it is too small for the highest requested
    state; a state the refinement check cannot vouch for is an error.
    """
    n_r_list = [int(n) for n in n_r_list]
    if V.kind == "well":
        return np.array([exact_well_energy((n, d)) for n in n_r_list])
    if V.kind == "coulomb":
        if d == 1:
            raise DomainError("the Coulomb S-spectrum is unbounded below at d = 1")
        return np.array([-1.0 / (2 * n + d - 1) ** 2 for n in n_r_list])
    cfg = cfg or MeshConfig()
    n_max = max(n_r_list)
    if cfg.n_points < 2 * (n_max + 1):
        cfg = replace(cfg, n_points=2 * (n_max + 1))
    res = solve_radial(V, d, n_max, cfg, rtol=rtol)
    if n_max >= res.n_converged:
        raise ConvergenceError(
            f"mesh energies for {V}, d={d} trusted only for n_r < {res.n_converged}",
            {"n_converged": res.n_converged, "energies": res.energies},
        )
    return res.energies[n_r_list]


def build_table(V: PotentialSpec, d: int, n_r_list, cfg: MeshConfig | None = None,
                rtol: float = 1e-7):
    """One ComparisonRow per requested n_r, sorted by n_r."""
    n_r_list = sorted({int(n) for n in n_r_list})
    try:
        exact = exact_energies(V, d, n_r_list, cfg, rtol)
    except ConvergenceError as exc:
        raise type(exc)(f"n_r={n_r_list[-1]}, d={d}: {exc}", exc.diagnostics) from exc
    rows = []
    for n, E in zip(n_r_list, exact):
        q = QuantumLabel(n, d)
        try:
            row = ComparisonRow.from_energies(V, q, E, bs_energy(V, q), gamma_extract(V, q, E))
        except ConvergenceError as exc:
            raise type(exc)(f"{V}, n_r={n}, d={d}: {exc}", exc.diagnostics) from exc
        except DomainError as exc:
            raise type(exc)(f"{V}, n_r={n}, d={d}: {exc}") from exc
        rows.append(row)
    return rows


def _ground_row(m, d, cfg, rtol):
    return build_table(_potential_for_m(m), d, [0], cfg, rtol)[0]


def figure_dataset(fig_id: str, d: int = 3, *, potential: PotentialSpec | None = None,
                   m_values=None, n_r_values=range(41), cfg: MeshConfig | None = None,
                   rtol: float = 1e-7) -> dict:
    """Plot-ready columns; the first key is the abscissa.

    rd_vs_m      ground-state R.D. over the m grid (power potentials)
    gamma_vs_nr  gamma over ``n_r_values`` for ``potential``
    gamma_vs_m   ground-state gamma over the m grid, with m = -1 (Coulomb),
                 m = -1/2 and m = 0 (logarithm) prepended
    """
    if fig_id == "rd_vs_m":
        ms = tuple(m_values) if m_values is not None else RD_VS_M_GRID
        if any(m <= 0 for m in ms):
            raise DomainError("rd_vs_m covers confining power potentials, m > 0")
        rd = [_ground_row(m, d, cfg, rtol).rel_dev for m in ms]
        return {"m": np.array(ms, dtype=float), "rd": np.array(rd)}
    if fig_id == "gamma_vs_nr":
        if potential is None:
            raise UsageError("gamma_vs_nr needs a potential")
        rows = build_table(potential, d, n_r_values, cfg, rtol)
        return {
            "n_r": np.array([r.q.n_r for r in rows], dtype=float),
            "gamma": np.array([r.gamma for r in rows]),
        }
    if fig_id == "gamma_vs_m":
        ms = tuple(m_values) if m_values is not None else GAMMA_VS_M_GRID
        g = [_ground_row(m, d, cfg, rtol).gamma for m in ms]
        return {"m": np.array(ms, dtype=float), "gamma": np.array(g)}
    raise UsageError(f"unknown figure {fig_id!r}; expected one of {FIGURES}")


def gamma_zero_crossing(d: int, lo: float, hi: float, n_r: int = 0, xtol: float = 1e-3) -> float:
    """Exponent m in [lo, hi] where gamma(r^m, n_r, d) changes sign."""

    def g(m):
        V = PotentialSpec.power(m)
        return gamma_extract(V, (n_r, d), exact_energies(V, d, [n_r])[0])

    g_lo, g_hi = g(lo), g(hi)
    if g_lo * g_hi > 0:
        raise DomainError(f"gamma has the same sign at m={lo} and m={hi}")
    return brentq(g, lo, hi, xtol=xtol)


def anharmonic_gamma_table(lambdas, dims, cfg: MeshConfig | None = None) -> np.ndarray:
    """Ground-state gamma of r^2 + lam r^4, shape (len(lambdas), len(dims)).

    ``math.inf`` selects the pure quartic, to which the coupling rescaling
    reduces the strong-coupling limit. The d = 1 entries use the line
    convention, the correction to  int_{-x0}^{x0} = pi (N + 1/2 + gamma).
    """
    out = np.empty((len(lambdas), len(dims)))
    for i, lam in enumerate(lambdas):
        if lam == math.inf:
            V, method = PotentialSpec.power(4), "auto"
        else:
            V, method = PotentialSpec.anharmonic(lam), "numeric"
        for j, d in enumerate(dims):
            E = exact_energies(V, d, [0], cfg)[0]
            if d == 1:
                out[i, j] = gamma_one_dimensional(V, 0, E, method=method)
            else:
                out[i, j] = gamma_extract(V, (0, d), E, method=method)
    return out


def anharmonic_records(lambdas, dims, grid) -> list:
    return [
        {"lambda": float(lam), "d": int(d), "n_r": 0, "gamma": float(grid[i, j])}
        for i, lam in enumerate(lambdas)
        for j, d in enumerate(dims)
    ]


def rows_to_records(rows) -> list:
    return [r.to_record() for r in rows]


def round_sig(x: float, digits: int = 2) -> float:
    """``x`` rounded to ``digits`` significant digits."""
    if x == 0 or not math.isfinite(x):
        return x
    return round(x, digits - 1 - math.floor(math.log10(abs(x))))


def _cell(v):
    if v is None:
        return ""
    if isinstance(v, (float, np.floating)):
        return repr(float(v))
    return str(v)


def _json_value(v):
    if isinstance(v, (float, np.floating)):
        v = float(v)
        return v if math.isfinite(v) else repr(v)
    if isinstance(v, np.integer):
        return int(v)
    return v


def to_csv(records, columns=None) -> str:
    """CSV text with a header row; floats in shortest round-trip form."""
    records = list(records)
    if columns is None:
        columns = list(records[0]) if records else list(RECORD_KEYS)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for rec in records:
        writer.writerow([_cell(rec.get(c)) for c in columns])
    return buf.getvalue()


def to_json(records) -> str:
    """JSON array of row objects; non-finite numbers become strings."""
    clean = [{k: _json_value(v) for k, v in rec.items()} for rec in records]
    return json.dumps(clean, indent=2, allow_nan=False) + "\n"


def _cut4(x):
    # truncate toward zero, not round
    return str(decimal.Decimal(repr(float(x))).quantize(decimal.Decimal("0.0001"), decimal.ROUND_DOWN))


def format_table(rows) -> str:
    """Fixed-width text table in the presentation precision."""
    head = f"{'n_r':>4} {'E_exact':>12} {'E_BS':>12} {'A.D.':>9} {'R.D.':>9} {'gamma':>9}"
    lines = [head]
    for r in rows:
        lines.append(
            f"{r.q.n_r:>4d} {_cut4(r.E_exact):>12} {_cut4(r.E_BS):>12} "
            f"{r.abs_dev:>9.1e} {r.rel_dev:>9.1e} {r.gamma:>9.1e}"
        )
    return "\n".join(lines) + "\n"
