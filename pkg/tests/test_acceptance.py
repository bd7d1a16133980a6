"""Acceptance criteria 1-12, one test each, at the pinned tolerances.

Each test prints a PASS/FAIL line with the observed error. Run this file
directly to get just those lines.
"""
import math

import numpy as np
import pytest
from scipy import integrate

from contcs import bayes, gk, lwave, tridiag
from contcs.quad import oscillatory_rule_size
from contcs.verify import GK_PHASE_LIMIT, KERNEL_POINTS, kernel_series, orthonormality_error, phi0_complex

ELLS = (0, 1, 2, 5)
LAMS = (0.5, 1.0, 2.0)
GAMMAS = (0.0, 0.5, 2.0)


def report(n, name, observed, tol):
    ok = observed < tol
    print(f"criterion {n:2d} {'PASS' if ok else 'FAIL'} {name}: observed {observed:.4e}, tolerance {tol:.0e}")
    assert ok, f"criterion {n} {name}: {observed!r} >= {tol!r}"


def test_01_orthonormality():
    worst = max(orthonormality_error(ell, lam, 200) for ell in ELLS for lam in LAMS)
    report(1, "orthonormality", worst, 1e-10)


def test_02_factorization():
    worst = 0.0
    for ell in ELLS:
        for lam in LAMS:
            p = lwave.LWaveParams(ell, lam)
            spec = lwave.tridiag_coeffs(p)
            lad = tridiag.ladder_from_tridiagonal(spec, 50)
            for n in range(51):
                c, d1 = lwave.ladder_closed(p, n)
                worst = max(worst, abs(lad.c(n) / c - 1), abs(lad.d(n + 1) / d1 - 1),
                            abs((lad.c(n) ** 2 + lad.d(n) ** 2) / spec.a(n) - 1),
                            abs(lad.c(n) * lad.d(n + 1) / spec.b(n) - 1))
    report(2, "factorization", worst, 1e-12)


def test_03_cross_route():
    worst = 0.0
    lam = 1.0
    for ell in (0, 1):
        p = lwave.LWaveParams(ell, lam)
        model = lwave.spectral_model(p)
        lad = tridiag.ladder_from_tridiagonal(model.spec, 1)
        for g in GAMMAS:
            label = gk.GKLabel(gk.reparametrize(lam), g, ell)
            n0 = oscillatory_rule_size(g, lam)
            for r in (0.5, 1.0, 2.0):
                closed = lwave.cs_closed(p, g, r)
                tri = tridiag.cs_wavefunction_numeric(model, lad, 0, g, r, rule_size=n0)
                gkv = gk.gk_wavefunction(label, r, rule_size=n0)
                worst = max(worst, abs(tri - closed), abs(gkv - closed), abs(tri - gkv))
    report(3, "cross-route state equivalence", worst, 1e-8)


def test_04_gamma_zero():
    r = np.linspace(0.02, 8.0, 200)
    worst = max(float(np.max(np.abs(lwave.cs_closed(lwave.LWaveParams(ell, lam), 0.0, r)
                                    - lwave.basis_phi(lwave.LWaveParams(ell, lam), 0, r))))
                for ell in ELLS for lam in LAMS)
    report(4, "gamma = 0 reduction", worst, 1e-12)


def test_05_complex_beta():
    r = np.linspace(0.02, 8.0, 200)
    worst = 0.0
    for ell in ELLS:
        for lam in LAMS:
            for g in (-2.0, 0.5, 2.0, 10.0):
                p = lwave.LWaveParams(ell, lam)
                beta = lwave.CSClosedForm(p, g).beta
                rhs = (beta / lam) ** (ell + 1.5) * phi0_complex(ell, beta, r)
                worst = max(worst, float(np.max(np.abs(lwave.cs_closed(p, g, r) - rhs))))
    report(5, "complex-beta identity", worst, 1e-10)


def _radial(p, g, power):
    width = math.sqrt(1 + p.lam**4 * g**2) / p.lam
    val, _ = integrate.quad(lambda r: r**power * lwave.density_rho(p, g, r) if r > 0 else 0.0,
                            0.0, 40 * width, epsabs=0.0, epsrel=1e-13, limit=400)
    return val


def test_06_density_normalization():
    worst = max(abs(_radial(lwave.LWaveParams(ell, lam), g, 0) - 1)
                for ell in ELLS for lam in LAMS for g in GAMMAS + (5.0,))
    report(6, "density normalization", worst, 1e-10)


def test_07_mean_position():
    worst = 0.0
    for ell in (0, 1, 2):
        for lam in LAMS:
            for g in (0.0, 1.0, 5.0):
                p = lwave.LWaveParams(ell, lam)
                worst = max(worst, abs(_radial(p, g, 1) / lwave.mean_position(p, g) - 1))
    # l = 0: the coefficient is exactly 2/sqrt(pi)
    coef = lwave.mean_position(lwave.LWaveParams(0, 1.0), 0.0)
    assert coef == 2 / math.sqrt(math.pi)
    report(7, "mean position (C = 1)", worst, 1e-8)


def test_08_velocity():
    p = lwave.LWaveParams(0, 1.0)
    asym = abs(lwave.velocity(p, 100.0) / (2 / math.sqrt(math.pi)) - 1)
    h = 1e-5
    fd = 0.0
    for ell in (0, 1, 2):
        for lam in LAMS:
            q = lwave.LWaveParams(ell, lam)
            for g in (0.3, 1.0, 5.0, 100.0):
                d = (lwave.mean_position(q, g + h) - lwave.mean_position(q, g - h)) / (2 * h)
                fd = max(fd, abs(d / lwave.velocity(q, g) - 1))
    report(8, "velocity asymptote", asym, 5e-5)
    report(8, "velocity finite difference", fd, 1e-6)


def test_09_moment_problem():
    mom = max(abs(gk.moment(ell, float(E)) / gk.factorial_f(ell, float(E)) - 1)
              for ell in range(4) for E in np.geomspace(0.1, 10.0, 30))
    norm = max(abs(gk.gk_normalization_quad(ell, s) / gk.gk_normalization(ell, s) - 1)
               for ell in range(4) for s in (0.1, math.exp(-1), 0.9))
    report(9, "moment problem", mom, 1e-8)
    report(9, "N(s) closed vs quadrature", norm, 1e-10)


def test_10_bayes():
    E = np.linspace(0.1, 20.0, 100)
    conj = dec = 0.0
    for ell in (0, 1, 2):
        d = bayes.extract_tau_q(ell)
        for lam in (0.8, 1.0, 1.3):
            w = lwave.weight(lwave.LWaveParams(ell, lam), E)
            conj = max(conj, float(np.max(np.abs(bayes.conjugate_posterior(ell, lam, E) / w - 1))))
            dec = max(dec, d.verify(lam, E))
    report(10, "prior x Poisson = omega", conj, 1e-12)
    report(10, "tau, q reproduce omega", dec, 1e-12)


def test_11_kernel_adjudication():
    errs = {m: 0.0 for m in lwave.KernelConstant}
    for ell, lam, r, E in KERNEL_POINTS:
        s = kernel_series(ell, lam, r, E)
        for m in lwave.KernelConstant:
            errs[m] = max(errs[m], abs(s / lwave.kernel_closed(lwave.LWaveParams(ell, lam), r, E, m) - 1))
    matching = [m for m, e in errs.items() if e < 1e-6]
    print(f"criterion 11 adjudicated constant: {[m.value for m in matching]} "
          f"(paper {errs[lwave.KernelConstant.PAPER]:.3e}, corrected {errs[lwave.KernelConstant.CORRECTED]:.3e})")
    assert matching == [lwave.KernelConstant.CORRECTED]
    report(11, "Abel series vs corrected kernel", errs[lwave.KernelConstant.CORRECTED], 1e-6)
    E = np.linspace(0.05, 10.0, 60)
    ident = 0.0
    for ell in ELLS:
        for lam in LAMS:
            p = lwave.LWaveParams(ell, lam)
            for r in (0.3, 1.0, 3.0):
                lhs = lwave.kernel_closed(p, r, E, lwave.KernelConstant.CORRECTED) * np.sqrt(lwave.weight(p, E))
                ident = max(ident, float(np.max(np.abs(lhs - lwave.eigenstate_delta(p, E, r)))))
    report(11, "K sqrt(omega) = sqrt(r) J", ident, 1e-10)


def test_12_gk_normalization():
    full = [(ell, lam, g) for ell in (0, 1, 2) for lam in LAMS for g in GAMMAS]
    grid = [pt for pt in full if pt[2] * pt[1] ** 2 <= GK_PHASE_LIMIT]
    # beyond the phase limit the energy integral needs more than 512 Laguerre nodes
    print(f"criterion 12 excluded (ell, lambda, gamma): {sorted(set(full) - set(grid))}")
    worst = max(abs(gk.gk_norm_squared(gk.GKLabel(gk.reparametrize(lam), g, ell)) - 1) for ell, lam, g in grid)
    report(12, f"GK normalization ({len(grid)} points, gamma lambda^2 <= {GK_PHASE_LIMIT})", worst, 1e-8)


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main([__file__, "-q", "-s", "-p", "no:randomly"]))
