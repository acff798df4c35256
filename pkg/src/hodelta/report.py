"""Comparison tables and figure data, written as plain CSV."""

from __future__ import annotations

import csv
import io
import math
from collections.abc import Iterable, Sequence
from dataclasses import asdict, dataclass
from decimal import ROUND_HALF_EVEN, Decimal
from pathlib import Path
from typing import Any

import numpy as np

from .attractive import energy_attractive, minimize_attractive
from .errors import DomainError
from .exact import GammaBackend, solve_ground_nu
from .excited import DEFAULT_ALPHA_GRID, DEFAULT_Z_GRID, scan_excited_surface
from .repulsive import energy_repulsive, minimize_repulsive

TABLE_II_G = (-5.0, -3.0, -2.5, -2.0, -1.5, -1.0, -0.5, 0.1, 0.25, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 5.0)

# Earlier fixed-parameter model wavefunction (alpha = 1, Z = g), values as published; never recomputed.
PUBLISHED_REFERENCE_NU = {
    -5.0: -12.981750,
    -3.0: -4.955630,
    -2.5: -3.565851,
    -2.0: -2.418161,
    -1.5: -1.506601,
    -1.0: -0.819484,
    -0.5: -0.333176,
    0.1: 0.054944,
    0.25: 0.131190,
    0.5: 0.241000,
    1.0: 0.404884,
    1.5: 0.516372,
    2.0: 0.595116,
    2.5: 0.652967,
    3.0: 0.696958,
    5.0: 0.800388,
}

#: Trace window that reproduces the first block of the published iteration table.
TABLE_I_WINDOW = (0.10, 0.91)
TABLE_I_G = -0.5

FIGURES = {
    "minima_curves": 1,
    "iteration_trace": 2,
    "error_attractive": 3,
    "alpha_min_vs_g": 4,
    "energy_vs_alpha_repulsive": 5,
    "error_repulsive": 6,
    "nu_vs_g": 7,
    "excited_surface": 8,
}

_SIX = Decimal("0.000001")


def fixed6(x: float | None) -> str:
    """Six decimals, round-half-even on the shortest decimal repr; never '-0.000000'."""
    if x is None:
        return ""
    if not math.isfinite(x):
        return str(x)
    text = str(Decimal(repr(float(x))).quantize(_SIX, rounding=ROUND_HALF_EVEN))
    return "0.000000" if text == "-0.000000" else text


def format_value(x: Any, full_precision: bool = False) -> str:
    if isinstance(x, str):
        return x
    if x is None:
        return ""
    if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
        return str(x)
    if full_precision:
        return repr(float(x))
    return fixed6(float(x))


@dataclass(frozen=True)
class ComparisonRow:
    g: float
    alpha_min: float
    nu_variational: float
    nu_exact: float
    nu_reference: float | None
    error: float
    rpe: float
    rpe_eps: float

    FIELDS = ("g", "alpha_min", "nu_variational", "nu_exact", "nu_reference", "error", "rpe", "rpe_eps")

    def values(self) -> list[Any]:
        d = asdict(self)
        return [d[k] for k in self.FIELDS]


def relative_percentage_error(error: float, exact: float) -> float:
    """100 * error / |exact|; NaN when the exact value is zero."""
    return math.nan if exact == 0.0 else 100.0 * error / abs(exact)


def variational_ground(g: float) -> tuple[float, float]:
    """(alpha_min, nu) from the family matching the sign of g."""
    if g <= 0.0:
        params, energy, _ = minimize_attractive(g)
    else:
        params, energy = minimize_repulsive(g)
    return params.alpha, energy.nu


def comparison_row(
    g: float, tol: float = 1e-9, gamma_backend: GammaBackend = "appendixB"
) -> ComparisonRow:
    if g == 0.0:
        alpha, nu_var, nu_exact = 1.0, 0.0, 0.0
    else:
        alpha, nu_var = variational_ground(g)
        nu_exact = solve_ground_nu(g, tol, gamma_backend).nu
    error = nu_var - nu_exact
    return ComparisonRow(
        g=g,
        alpha_min=alpha,
        nu_variational=nu_var,
        nu_exact=nu_exact,
        nu_reference=PUBLISHED_REFERENCE_NU.get(g),
        error=error,
        rpe=relative_percentage_error(error, nu_exact),
        rpe_eps=relative_percentage_error(error, nu_exact + 0.5),
    )


def build_summary_table(
    g_values: Iterable[float] = TABLE_II_G,
    tol: float = 1e-9,
    gamma_backend: GammaBackend = "appendixB",
) -> list[ComparisonRow]:
    """One comparison row per g, ordered by g ascending.

    The exact column defaults to the polynomial Gamma, which is how the
    published table was computed.
    """
    return [comparison_row(float(g), tol, gamma_backend) for g in sorted(set(g_values))]


def asymptote_attractive(g: float) -> float:
    """Strong-coupling nu for g < 0: free-delta level plus first-order oscillator correction."""
    if g >= 0.0:
        raise DomainError(f"asymptote is for attractive coupling, got g={g!r}")
    if abs(g) < 1e-6:
        raise DomainError(f"|g| too small for the strong-coupling asymptote: {g!r}")
    return -0.5 * g * g - 0.5 + 1.0 / (4.0 * g * g)


def grid(start: float, stop: float, step: float) -> list[float]:
    """Inclusive arithmetic grid, rounded to 12 decimals so endpoints are exact."""
    if step <= 0.0:
        raise DomainError(f"step must be positive, got {step!r}")
    n = int(math.floor((stop - start) / step + 1e-9)) + 1
    return [round(start + i * step, 12) for i in range(max(n, 0))]


Table = tuple[list[str], list[list[Any]]]


def summary_table_data(rows: Sequence[ComparisonRow]) -> Table:
    return list(ComparisonRow.FIELDS), [r.values() for r in rows]


def table_data(which: int, tol: float = 1e-9, gamma_backend: GammaBackend = "appendixB") -> Table:
    if which == 1:
        _, _, trace = minimize_attractive(TABLE_I_G, window=TABLE_I_WINDOW)
        return trace.wide_rows()
    if which == 2:
        return summary_table_data(build_summary_table(TABLE_II_G, tol, gamma_backend))
    raise DomainError(f"no table {which!r}; choose 1 or 2")


def _minima_curves(g_values=(-1.5, -2.0), alphas=None) -> Table:
    alphas = alphas or grid(0.05, 1.2, 0.01)
    return ["g", "alpha", "epsilon"], [
        [g, a, energy_attractive(a, g)] for g in g_values for a in alphas
    ]


def _iteration_trace(g=TABLE_I_G, window=TABLE_I_WINDOW) -> Table:
    _, _, trace = minimize_attractive(g, window=window)
    return trace.long_rows()


def _error_attractive(g_values=None, gamma_backend: GammaBackend = "highprec") -> Table:
    g_values = g_values or grid(-5.0, -0.1, 0.1)
    header = [
        "g", "nu_exact", "nu_alpha1", "nu_alpha_min", "alpha_min",
        "error_alpha1", "error_alpha_min",
        "rpe_nu_alpha1", "rpe_nu_alpha_min", "rpe_eps_alpha1", "rpe_eps_alpha_min",
    ]
    rows = []
    for g in g_values:
        exact = solve_ground_nu(g, backend=gamma_backend).nu
        nu1 = energy_attractive(1.0, g) - 0.5
        params, energy, _ = minimize_attractive(g)
        e1, em = nu1 - exact, energy.nu - exact
        rows.append([
            g, exact, nu1, energy.nu, params.alpha, e1, em,
            relative_percentage_error(e1, exact), relative_percentage_error(em, exact),
            relative_percentage_error(e1, exact + 0.5), relative_percentage_error(em, exact + 0.5),
        ])
    return header, rows


def _alpha_min_vs_g(g_values=None) -> Table:
    g_values = g_values or sorted(set(grid(-10.0, 5.0, 0.25)) | set(TABLE_II_G))
    rows = []
    for g in g_values:
        alpha, _ = variational_ground(g)
        rows.append([g, alpha, "attractive" if g <= 0.0 else "repulsive"])
    return ["g", "alpha_min", "family"], rows


def _energy_vs_alpha_repulsive(g_values=(0.5, 2.5), alphas=None) -> Table:
    alphas = alphas or grid(0.5, 2.0, 0.01)
    return ["g", "alpha", "epsilon"], [
        [g, a, energy_repulsive(a, g)] for g in g_values for a in alphas
    ]


def _error_repulsive(g_values=None, gamma_backend: GammaBackend = "highprec") -> Table:
    g_values = g_values or sorted(set(grid(0.1, 5.0, 0.1)) | {0.25})
    header = [
        "g", "nu_exact", "nu_alpha1", "nu_alpha_min", "alpha_min",
        "error_alpha1", "error_alpha_min", "nu_reference", "error_reference",
    ]
    rows = []
    for g in g_values:
        exact = solve_ground_nu(g, backend=gamma_backend).nu
        nu1 = energy_repulsive(1.0, g) - 0.5
        params, energy = minimize_repulsive(g)
        ref = PUBLISHED_REFERENCE_NU.get(g)
        rows.append([
            g, exact, nu1, energy.nu, params.alpha, nu1 - exact, energy.nu - exact,
            ref, None if ref is None else ref - exact,
        ])
    return header, rows


def _nu_vs_g(abs_g_values=None, gamma_backend: GammaBackend = "highprec") -> Table:
    abs_g_values = abs_g_values or grid(1.0, 10.0, 0.5)
    header = [
        "abs_g", "nu_exact_attractive", "nu_var_attractive", "asymptote_free_delta",
        "asymptote_first_order", "nu_exact_repulsive", "nu_var_repulsive", "nu_limit_repulsive",
    ]
    rows = []
    for a in abs_g_values:
        g = abs(a)
        _, att = variational_ground(-g)
        _, rep = variational_ground(g)
        rows.append([
            g,
            solve_ground_nu(-g, backend=gamma_backend).nu,
            att,
            -0.5 * g * g - 0.5,
            asymptote_attractive(-g),
            solve_ground_nu(g, backend=gamma_backend).nu,
            rep,
            1.0,
        ])
    return header, rows


def _excited_surface(alpha_grid=DEFAULT_ALPHA_GRID, z_grid=DEFAULT_Z_GRID) -> Table:
    surface = scan_excited_surface(alpha_grid, z_grid)
    return ["alpha", "z", "epsilon"], [list(r) for r in surface.rows()]


_BUILDERS = {
    "minima_curves": _minima_curves,
    "iteration_trace": _iteration_trace,
    "error_attractive": _error_attractive,
    "alpha_min_vs_g": _alpha_min_vs_g,
    "energy_vs_alpha_repulsive": _energy_vs_alpha_repulsive,
    "error_repulsive": _error_repulsive,
    "nu_vs_g": _nu_vs_g,
    "excited_surface": _excited_surface,
}


def figure_data(figure_id: str, **params: Any) -> Table:
    try:
        builder = _BUILDERS[figure_id]
    except KeyError:
        raise DomainError(
            f"unknown figure id {figure_id!r}; expected one of {', '.join(FIGURES)}"
        ) from None
    return builder(**params)


def figure_filename(figure_id: str) -> str:
    if figure_id not in FIGURES:
        raise DomainError(f"unknown figure id {figure_id!r}")
    return f"fig{FIGURES[figure_id]}.csv"


def csv_text(header: Sequence[str], rows: Iterable[Sequence[Any]], full_precision: bool = False) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_value(v, full_precision) for v in row])
    return buf.getvalue()


def write_csv(
    path: Path, header: Sequence[str], rows: Iterable[Sequence[Any]], full_precision: bool = False
) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(csv_text(header, rows, full_precision), encoding="utf-8")
    return path


def emit_figure_data(
    figure_id: str, out_dir: Path, full_precision: bool = False, **params: Any
) -> Path:
    """Write ``fig<N>.csv`` for ``figure_id`` into ``out_dir``."""
    name = figure_filename(figure_id)
    header, rows = figure_data(figure_id, **params)
    return write_csv(Path(out_dir) / name, header, rows, full_precision)
