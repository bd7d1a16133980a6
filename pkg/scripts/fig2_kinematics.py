"""Mean position and velocity against gamma, with the velocity asymptote (figure 2 data).

    python3 scripts/fig2_kinematics.py --ell 0 --lambda 1 --gamma-max 10
"""
import argparse
import pathlib

import numpy as np

from contcs import cli


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--ell", type=int, default=0)
    ap.add_argument("--lambda", dest="lam", type=float, default=1.0)
    ap.add_argument("--gamma-max", type=float, default=10.0)
    ap.add_argument("--n", type=int, default=201)
    ap.add_argument("--out-dir", default="figures")
    args = ap.parse_args()

    out = pathlib.Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    csv_path = out / f"kinematics_l{args.ell}_lam{args.lam:g}.csv"
    argv = ["kinematics", "--ell", str(args.ell), "--lambda", str(args.lam), "--out", str(csv_path)]
    for g in np.linspace(0.0, args.gamma_max, args.n):
        argv += ["--gamma", repr(float(g))]
    if cli.main(argv) != 0:
        raise SystemExit("kinematics command failed")
    print(f"wrote {csv_path}")

    a = np.loadtxt(csv_path, delimiter=",", skiprows=1)
    print(f"r_mean(0) = {a[0, 1]:.10f}, v({a[-1, 0]:g}) / v_inf = {a[-1, 2] / a[-1, 3]:.8f}")
    try:
        import matplotlib
        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
    except ImportError:
        return
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 3.8))
    ax1.plot(a[:, 0], a[:, 1])
    ax1.set_xlabel("gamma")
    ax1.set_ylabel("mean position")
    ax2.plot(a[:, 0], a[:, 2], label="velocity")
    ax2.axhline(a[0, 3], ls="--", color="gray", label="asymptote")
    ax2.set_xlabel("gamma")
    ax2.legend()
    fig.tight_layout()
    png = csv_path.with_suffix(".png")
    fig.savefig(png, dpi=150)
    print(f"wrote {png}")


if __name__ == "__main__":
    main()
