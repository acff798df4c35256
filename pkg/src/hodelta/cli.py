"""Command-line front end.

    hodelta exact --g -0.5
    hodelta variational --g 1.0
    hodelta sweep --g-min -5 --g-max 5 --step 0.5 --format csv
    hodelta table --which 2 --format csv --out results/
    hodelta figure --id alpha_min_vs_g --out results/
    hodelta excited --alpha-grid 0.8:1.2:0.1 --z-grid=-0.5,0,0.5
    hodelta oracle --g 1.0 --n 4801 --half-width 12
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import Any

from . import report
from .attractive import minimize_attractive
from .errors import HODeltaError
from .exact import solve_ground_nu
from .excited import DEFAULT_ALPHA_GRID, DEFAULT_Z_GRID, scan_excited_surface
from .oracle import GridSpec, fd_ground_epsilon
from .repulsive import minimize_repulsive


def _grid_arg(text: str) -> list[float]:
    """'start:stop:step' or a comma-separated list."""
    try:
        if ":" in text:
            start, stop, step = (float(p) for p in text.split(":"))
            return report.grid(start, stop, step)
        return [float(p) for p in text.split(",") if p.strip()]
    except (ValueError, HODeltaError) as exc:
        raise argparse.ArgumentTypeError(f"bad grid {text!r}: {exc}") from None


def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0.0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=_positive_float, default=1e-9, help="solver tolerance")
    common.add_argument("--format", choices=("text", "csv", "json"), default="text")
    common.add_argument("--out", type=Path, help="directory for output files")
    common.add_argument(
        "--gamma-backend",
        choices=("appendixB", "highprec"),
        help="Gamma used by the exact solver (default: highprec; appendixB for tables)",
    )
    common.add_argument(
        "--full-precision", action="store_true", help="print all digits instead of six decimals"
    )

    parser = argparse.ArgumentParser(
        prog="hodelta",
        description="Harmonic oscillator with a central delta potential.",
        epilog="Global options go after the subcommand. Pass negative lists as --z-grid=-0.5,0,0.5.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("exact", parents=[common], help="exact ground-state nu")
    p.add_argument("--g", type=float, required=True)

    p = sub.add_parser("variational", parents=[common], help="variational ground state")
    p.add_argument("--g", type=float, required=True)
    p.add_argument("--family", choices=("attractive", "repulsive"))

    p = sub.add_parser("sweep", parents=[common], help="variational vs exact over a g grid")
    p.add_argument("--g-min", type=float, required=True)
    p.add_argument("--g-max", type=float, required=True)
    p.add_argument("--step", type=_positive_float, required=True)

    p = sub.add_parser("table", parents=[common], help="reproduce table 1 or 2")
    p.add_argument("--which", type=int, choices=(1, 2), required=True)

    p = sub.add_parser("figure", parents=[common], help="emit figure data")
    p.add_argument("--id", dest="figure_id", choices=tuple(report.FIGURES), required=True)
    p.add_argument("--g", type=float, nargs="+", help="override the g values")

    p = sub.add_parser("excited", parents=[common], help="first-excited-state energy surface")
    p.add_argument("--alpha-grid", type=_grid_arg, default=list(DEFAULT_ALPHA_GRID))
    p.add_argument("--z-grid", type=_grid_arg, default=list(DEFAULT_Z_GRID))

    p = sub.add_parser("oracle", parents=[common], help="finite-difference ground state")
    p.add_argument("--g", type=float, required=True)
    p.add_argument("--n", type=int, default=4801, help="grid points (odd)")
    p.add_argument("--half-width", type=_positive_float, default=12.0)
    return parser


def _render(
    header: Sequence[str], rows: Sequence[Sequence[Any]], fmt: str, full: bool
) -> str:
    if fmt == "csv":
        return report.csv_text(header, rows, full)
    cells = [[report.format_value(v, full) for v in row] for row in rows]
    if fmt == "json":
        def convert(text: str) -> Any:
            if text == "":
                return None
            try:
                return json.loads(text)
            except ValueError:
                return text
        records = [dict(zip(header, (convert(c) for c in row))) for row in cells]
        return json.dumps(records[0] if len(records) == 1 else records, indent=2) + "\n"
    if len(cells) == 1:
        return " ".join(f"{k}={v}" for k, v in zip(header, cells[0])) + "\n"
    widths = [max(len(h), *(len(r[i]) for r in cells)) for i, h in enumerate(header)]
    lines = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
    lines += ["  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in cells]
    return "\n".join(lines) + "\n"


def _variational(g: float, family: str | None) -> tuple[str, float, float]:
    family = family or ("attractive" if g <= 0.0 else "repulsive")
    if family == "attractive":
        params, energy, _ = minimize_attractive(g)
    else:
        params, energy = minimize_repulsive(g)
    return family, params.alpha, energy.nu


def _dispatch(args: argparse.Namespace) -> tuple[Sequence[str], list[list[Any]], str]:
    """Header, rows and the file name used with --out."""
    backend = args.gamma_backend or "highprec"
    cmd = args.command
    if cmd == "exact":
        nu = solve_ground_nu(args.g, args.tol, backend).nu
        return ["g", "nu", "epsilon"], [[args.g, nu, nu + 0.5]], "exact.csv"
    if cmd == "variational":
        family, alpha, nu = _variational(args.g, args.family)
        return (
            ["g", "family", "alpha_min", "nu", "epsilon"],
            [[args.g, family, alpha, nu, nu + 0.5]],
            "variational.csv",
        )
    if cmd == "sweep":
        g_values = report.grid(args.g_min, args.g_max, args.step)
        rows = report.build_summary_table(g_values, args.tol, backend)
        header, data = report.summary_table_data(rows)
        return header, data, "sweep.csv"
    if cmd == "table":
        header, data = report.table_data(args.which, args.tol, args.gamma_backend or "appendixB")
        return header, data, f"table{args.which}.csv"
    if cmd == "figure":
        params: dict[str, Any] = {}
        if args.g:
            key = {"iteration_trace": "g", "nu_vs_g": "abs_g_values"}.get(args.figure_id, "g_values")
            if args.figure_id == "excited_surface":
                raise HODeltaError("excited_surface takes no g values; use the excited command")
            params[key] = args.g[0] if key == "g" else args.g
        header, data = report.figure_data(args.figure_id, **params)
        return header, data, report.figure_filename(args.figure_id)
    if cmd == "excited":
        surface = scan_excited_surface(args.alpha_grid, args.z_grid)
        if args.format == "text" and args.out is None:
            alpha, z, eps = surface.argmin()
            return ["argmin_alpha", "argmin_z", "epsilon"], [[alpha, z, eps]], "excited_surface.csv"
        return ["alpha", "z", "epsilon"], [list(r) for r in surface.rows()], "excited_surface.csv"
    if cmd == "oracle":
        eps_fd = fd_ground_epsilon(args.g, GridSpec(args.half_width, args.n))
        eps_exact = solve_ground_nu(args.g, args.tol, backend).epsilon
        return (
            ["g", "points", "half_width", "epsilon_fd", "epsilon_exact", "difference"],
            [[args.g, args.n, args.half_width, eps_fd, eps_exact, eps_fd - eps_exact]],
            "oracle.csv",
        )
    raise AssertionError(cmd)


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        header, rows, filename = _dispatch(args)
    except HODeltaError as exc:
        print(f"hodelta: error: {exc}", file=sys.stderr)
        return 1
    if args.out is not None:
        path = report.write_csv(args.out / filename, header, rows, args.full_precision)
        print(f"wrote {path}")
        return 0
    sys.stdout.write(_render(header, rows, args.format, args.full_precision))
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
