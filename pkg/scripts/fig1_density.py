"""Probability density rho(r; lambda, gamma) for several gamma (figure 1 data).

Writes CSV blocks through the CLI and, if matplotlib is installed, a PNG.

    python3 scripts/fig1_density.py --ell 0 --lambda 1 --out-dir figures
"""
import argparse
import io
import pathlib

import numpy as np

from contcs import cli


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--ell", type=int, default=0)
    ap.add_argument("--lambda", dest="lam", type=float, default=1.0)
    ap.add_argument("--gamma", type=float, action="append", default=None)
    ap.add_argument("--out-dir", default="figures")
    args = ap.parse_args()

    out = pathlib.Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    gammas = args.gamma or [0.0, 0.5, 1.0, 1.5, 2.0]
    csv_path = out / f"density_l{args.ell}_lam{args.lam:g}.csv"
    argv = ["density", "--ell", str(args.ell), "--lambda", str(args.lam), "--out", str(csv_path)]
    for g in gammas:
        argv += ["--gamma", str(g)]
    if cli.main(argv) != 0:
        raise SystemExit("density command failed")
    print(f"wrote {csv_path}")

    try:
        import matplotlib
        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
    except ImportError:
        return
    blocks = csv_path.read_text().split("\n", 1)[1].strip().split("\n\n")
    fig, ax = plt.subplots(figsize=(6, 4))
    for block in blocks:
        a = np.loadtxt(io.StringIO(block), delimiter=",")
        ax.plot(a[:, 1], a[:, 2], label=f"gamma = {a[0, 0]:g}")
    ax.set_xlabel("r")
    ax.set_ylabel("rho(r)")
    ax.set_title(f"l = {args.ell}, lambda = {args.lam:g}")
    ax.legend()
    fig.tight_layout()
    png = csv_path.with_suffix(".png")
    fig.savefig(png, dpi=150)
    print(f"wrote {png}")


if __name__ == "__main__":
    main()
