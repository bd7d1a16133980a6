"""Command-line entry point: verify, density, kinematics, state.

Units are those of the model (hbar = m = 1): r is a length L, E an energy,
gamma carries 1/E. Every number is written with 17 significant digits.
Exit status: 0 success, 1 failed check or failed computation, 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import asdict, dataclass, field

import numpy as np

from . import gk, lwave, tridiag
from .quad import QuadratureError, oscillatory_rule_size
from .verify import run_checks

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
DEFAULT_DENSITY_GAMMAS = (0.0, 0.5, 1.0, 2.0)
DEFAULT_KINEMATICS_GAMMAS = tuple(np.linspace(0.0, 10.0, 101))
R_MAX_FACTOR = 5.0


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    ell: int = 0
    lam: float = 1.0
    gamma_list: list[float] = field(default_factory=lambda: [0.0])
    r_grid: tuple[float, float, int] = (0.0125, 5.0, 400)
    output_format: str = "csv"
    rule_size: int = 200
    tolerance: float = 1e-12

    def __post_init__(self):
        r_min, r_max, n = self.r_grid
        if int(self.ell) != self.ell or self.ell < 0:
            raise UsageError(f"--ell must be a nonnegative integer, got {self.ell}")
        if not (self.lam > 0.0 and math.isfinite(self.lam)):
            raise UsageError(f"--lambda must be positive, got {self.lam}")
        if not all(math.isfinite(g) for g in self.gamma_list) or not self.gamma_list:
            raise UsageError("--gamma values must be finite")
        if not r_min > 0.0:
            raise UsageError(f"--r-min must be positive, got {r_min}")
        if not r_max > r_min:
            raise UsageError(f"--r-max ({r_max}) must exceed --r-min ({r_min})")
        if int(n) != n or n < 2:
            raise UsageError(f"--r-points must be an integer >= 2, got {n}")
        if self.output_format not in ("csv", "json"):
            raise UsageError(f"unknown format {self.output_format!r}")
        if int(self.rule_size) != self.rule_size or self.rule_size < 1:
            raise UsageError(f"--rule-size must be a positive integer, got {self.rule_size}")
        if not self.tolerance > 0.0:
            raise UsageError(f"--tol must be positive, got {self.tolerance}")

    @property
    def params(self) -> lwave.LWaveParams:
        return lwave.LWaveParams(self.ell, self.lam)

    def r_values(self) -> np.ndarray:
        r_min, r_max, n = self.r_grid
        return np.linspace(r_min, r_max, int(n))


def _fmt(x) -> str:
    return format(float(x), ".17g")


def _num(x):
    """Float rounded through its 17-digit text so CSV and JSON carry the same value."""
    x = float(x)
    return float(_fmt(x)) if math.isfinite(x) else None


def _blocks_csv(header: list[str], blocks: list[list[list]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for i, rows in enumerate(blocks):
        if i:
            buf.write("\n")
        for row in rows:
            w.writerow([_fmt(v) if isinstance(v, (float, np.floating, int)) and not isinstance(v, bool)
                        else v for v in row])
    return buf.getvalue()


def _blocks_json(command: str, cfg: RunConfig, header: list[str], blocks, extra=None) -> str:
    doc = {
        "command": command,
        "config": {**asdict(cfg), "r_grid": list(cfg.r_grid)},
        "columns": header,
        "blocks": [[[_num(v) for v in row] for row in rows] for rows in blocks],
    }
    if extra:
        doc.update(extra)
    return json.dumps(doc, indent=1, allow_nan=False) + "\n"


# ---------------------------------------------------------------- commands

def density_r_grid(cfg: RunConfig, r_max: float | None, r_min: float | None, n: int) -> tuple[float, float, int]:
    """Default grid: n points on (0, r_max] with r_max = 5 * mean position at the largest |gamma|."""
    if r_max is None:
        g_max = max(abs(g) for g in cfg.gamma_list)
        r_max = R_MAX_FACTOR * lwave.mean_position(cfg.params, g_max)
    if r_min is None:
        r_min = r_max / n
    return r_min, r_max, n


def cmd_density(cfg: RunConfig):
    r = cfg.r_values()
    header = ["gamma [1/E]", "r [L]", "rho [1/L]"]
    blocks = []
    for g in cfg.gamma_list:
        rho = lwave.density_rho(cfg.params, g, r)
        blocks.append([[g, ri, pi] for ri, pi in zip(r, rho)])
    return header, blocks, None


def cmd_kinematics(cfg: RunConfig):
    p = cfg.params
    v_inf = lwave.velocity_limit(p)
    header = ["gamma [1/E]", "r_mean [L]", "velocity [L E]", "velocity_limit [L E]"]
    rows = [[g, lwave.mean_position(p, g), lwave.velocity(p, g), v_inf] for g in cfg.gamma_list]
    return header, [rows], None


def state_values(cfg: RunConfig, route: str, k: int, gamma_: float, r: np.ndarray) -> np.ndarray:
    p = cfg.params
    if route == "closed":
        return np.asarray(lwave.cs_closed(p, gamma_, r), dtype=complex)
    start = max(1, min(cfg.rule_size, max(64, oscillatory_rule_size(gamma_, cfg.lam))))
    if route == "gk":
        label = gk.GKLabel(gk.reparametrize(cfg.lam), gamma_, cfg.ell)
        return np.array([gk.gk_wavefunction(label, ri, rule_size=start, tol=cfg.tolerance) for ri in r])
    model = lwave.spectral_model(p)
    ladder = tridiag.ladder_from_tridiagonal(model.spec, k + 1)
    return np.array([tridiag.cs_wavefunction_numeric(model, ladder, k, gamma_, ri, rule_size=start,
                                                     tol=cfg.tolerance) for ri in r])


def cmd_state(cfg: RunConfig, route: str, k: int):
    if k < 0:
        raise UsageError("--k must be nonnegative")
    if route in ("gk", "closed") and k != 0:
        raise UsageError(f"route {route!r} builds the k = 0 state only; use --route tridiagonal for k = {k}")
    r = cfg.r_values()
    header = ["gamma [1/E]", "r [L]", "re_psi [L^-1/2]", "im_psi [L^-1/2]"]
    blocks = []
    for g in cfg.gamma_list:
        psi = state_values(cfg, route, k, g, r)
        blocks.append([[g, ri, v.real, v.imag] for ri, v in zip(r, psi)])
    return header, blocks, {"route": route, "k": k}


def cmd_verify(cfg: RunConfig):
    rep = run_checks(rule_size=cfg.rule_size, tol=cfg.tolerance)
    return rep


def _verify_output(rep, fmt: str) -> str:
    if fmt == "json":
        d = rep.as_dict()
        for c in d["checks"]:
            c["observed"] = _num(c["observed"])
            c["tolerance"] = _num(c["tolerance"])
        return json.dumps(d, indent=1, allow_nan=False) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["check_name", "module", "paper_ref", "observed", "tolerance", "pass", "detail"])
    for c in rep.checks:
        w.writerow([c.check_name, c.module, c.paper_ref, _fmt(c.observed), _fmt(c.tolerance),
                    str(c.passed).lower(), c.detail])
    buf.write("\n")
    w.writerow(["adjudication", "value"])
    for key, val in rep.adjudications.items():
        if isinstance(val, dict):
            val = "; ".join(f"{k}={_fmt(v)}" for k, v in val.items())
        elif isinstance(val, float):
            val = _fmt(val)
        w.writerow([key, val])
    return buf.getvalue()


# ---------------------------------------------------------------- argparse

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ell", type=int, default=0, help="angular momentum l (default 0)")
    common.add_argument("--lambda", dest="lam", type=float, default=1.0, help="basis scale lambda (default 1)")
    common.add_argument("--gamma", type=float, action="append", default=None,
                        help="evolution parameter; repeat for several values")
    common.add_argument("--r-min", type=float, default=None)
    common.add_argument("--r-max", type=float, default=None)
    common.add_argument("--r-points", type=int, default=400)
    common.add_argument("--rule-size", type=int, default=200,
                        help="fixed Gauss-Laguerre size for orthonormality; start size for energy integrals")
    common.add_argument("--tol", type=float, default=1e-12, help="relative tolerance of energy integrals")
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--out", default=None, help="output file (default stdout)")

    ap = argparse.ArgumentParser(prog="contcs", description="Coherent states of the l-wave free particle.")
    sub = ap.add_subparsers(dest="command", required=True)
    sub.add_parser("verify", parents=[common], help="run every numerical check")
    sub.add_parser("density", parents=[common], help="probability density blocks, one per gamma")
    sub.add_parser("kinematics", parents=[common], help="mean position and velocity against gamma")
    st = sub.add_parser("state", parents=[common], help="complex amplitude <r|lambda, gamma>")
    st.add_argument("--route", choices=("tridiagonal", "gk", "closed"), default="closed")
    st.add_argument("--k", type=int, default=0, help="tridiagonal label index, z = c_k")
    return ap


def config_from_args(args) -> RunConfig:
    if args.command == "kinematics":
        gammas = args.gamma or list(DEFAULT_KINEMATICS_GAMMAS)
    elif args.command == "density":
        gammas = args.gamma or list(DEFAULT_DENSITY_GAMMAS)
    else:
        gammas = args.gamma or [0.0]
    base = RunConfig(ell=args.ell, lam=args.lam, gamma_list=gammas, rule_size=args.rule_size,
                     tolerance=args.tol, output_format=args.format)
    grid = density_r_grid(base, args.r_max, args.r_min, args.r_points)
    return RunConfig(ell=args.ell, lam=args.lam, gamma_list=gammas, r_grid=grid, rule_size=args.rule_size,
                     tolerance=args.tol, output_format=args.format)


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        cfg = config_from_args(args)
    except (UsageError, ValueError) as exc:
        print(f"contcs: error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    status = EXIT_OK
    try:
        if args.command == "verify":
            rep = cmd_verify(cfg)
            text = _verify_output(rep, cfg.output_format)
            status = EXIT_OK if rep.ok else EXIT_FAIL
        else:
            if args.command == "density":
                header, blocks, extra = cmd_density(cfg)
            elif args.command == "kinematics":
                header, blocks, extra = cmd_kinematics(cfg)
            else:
                header, blocks, extra = cmd_state(cfg, args.route, args.k)
            if cfg.output_format == "csv":
                text = _blocks_csv(header, blocks)
            else:
                text = _blocks_json(args.command, cfg, header, blocks, extra)
    except UsageError as exc:
        print(f"contcs: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (QuadratureError, tridiag.DivergenceError, ArithmeticError) as exc:
        print(f"contcs: computation failed: {exc}", file=sys.stderr)
        return EXIT_FAIL

    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
