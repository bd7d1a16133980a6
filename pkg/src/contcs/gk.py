"""Gazeau-Klauder coherent states of the ell-wave free particle.

The factorial function is f(E) = (2E)^{-(ell+1/2)}; it is the Mellin-type
moment sequence of sigma(s) on [0, 1), and the label s relates to the
oscillator scale through s = exp(-1/lambda^2).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import lwave
from .quad import gauss_laguerre_rule, integrate_halfline
from .specfun import ln_gamma

__all__ = [
    "GKLabel",
    "factorial_f",
    "sigma_weight",
    "sigma_log_density",
    "moment",
    "gk_normalization",
    "gk_normalization_quad",
    "reparametrize",
    "lambda_of_s",
    "gk_wavefunction",
    "gk_norm_squared",
]


@dataclass(frozen=True)
class GKLabel:
    s: float
    gamma: float
    ell: int

    def __post_init__(self):
        if not 0.0 <= self.s < 1.0:
            raise ValueError(f"s must lie in [0, 1), got {self.s!r}")
        if int(self.ell) != self.ell or self.ell < 0:
            raise ValueError(f"ell must be a nonnegative integer, got {self.ell!r}")

    @property
    def lam(self) -> float:
        return lambda_of_s(self.s)


def factorial_f(ell: int, E):
    """(2E)^{-(ell+1/2)}."""
    Ea = np.asarray(E, dtype=float)
    if np.any(~(Ea > 0.0)):
        raise ValueError("factorial function needs E > 0")
    out = (2.0 * Ea) ** (-(ell + 0.5))
    return float(out) if np.ndim(out) == 0 else out


def sigma_weight(ell: int, s):
    """Weight on [0, 1) whose moments int s^{2E} sigma(s) ds give f(E); zero for s >= 1."""
    sa = np.asarray(s, dtype=float)
    if np.any(~(sa > 0.0)):
        raise ValueError("sigma is defined for s > 0")
    inside = sa < 1.0
    t = -np.log(np.where(inside, sa, 0.5))
    val = np.exp(-ln_gamma(ell + 0.5) + (ell - 0.5) * np.log(t)) / np.where(inside, sa, 1.0)
    out = np.where(inside, val, 0.0)
    return float(out) if np.ndim(out) == 0 else out


def sigma_log_density(ell: int, t):
    """sigma(s) |ds/dt| at s = exp(-t): the same weight in the variable t = ln(1/s).

    Kept separate from ``sigma_weight`` because exp(-t) underflows long before
    the quadrature nodes in t stop.
    """
    ta = np.asarray(t, dtype=float)
    out = np.exp(-ln_gamma(ell + 0.5) + (ell - 0.5) * np.log(ta))
    return float(out) if np.ndim(out) == 0 else out


def moment(ell: int, E: float, rule_size: int = 16, tol: float = 1e-13) -> float:
    """int_0^1 s^{2E} sigma(s) ds, by quadrature in t = ln(1/s)."""
    if not E > 0.0:
        raise ValueError("E must be positive")
    alpha = ell - 0.5

    def f(t):
        small = t < 700.0
        direct = sigma_weight(ell, np.exp(-np.where(small, t, 1.0))) * np.exp(-np.where(small, t, 1.0))
        val = np.where(small, direct, sigma_log_density(ell, t))
        return val / t**alpha

    return integrate_halfline(f, alpha, 2.0 * E, rule_size=rule_size, tol=tol)


def gk_normalization(ell: int, s: float) -> float:
    """N(s) = int_0^inf s^{2E} / f(E) dE in closed form."""
    if not 0.0 < s < 1.0:
        raise ValueError(f"s must lie in (0, 1), got {s!r}")
    return 0.5 * math.exp(ln_gamma(ell + 1.5)) * math.log(1.0 / s) ** (-(ell + 1.5))


def gk_normalization_quad(ell: int, s: float, rule_size: int = 16, tol: float = 1e-14) -> float:
    """N(s) by quadrature against the factorial function."""
    if not 0.0 < s < 1.0:
        raise ValueError(f"s must lie in (0, 1), got {s!r}")
    alpha = ell + 0.5
    rate = 2.0 * math.log(1.0 / s)

    def f(E):
        # s^{2E} exp(rate E) is 1 up to rounding; kept explicit so the
        # integrand is the one being normalized.
        return np.exp(2.0 * E * math.log(s) + rate * E) / (factorial_f(ell, E) * E**alpha)

    return integrate_halfline(f, alpha, rate, rule_size=rule_size, tol=tol)


def reparametrize(lam: float) -> float:
    """s = exp(-1/lambda^2)."""
    if lam == 0.0:
        raise ValueError("lambda must be nonzero")
    return math.exp(-1.0 / lam**2)


def lambda_of_s(s: float) -> float:
    """Positive inverse of ``reparametrize``."""
    if not 0.0 < s < 1.0:
        raise ValueError(f"s must lie in (0, 1), got {s!r}")
    return 1.0 / math.sqrt(-math.log(s))


def gk_wavefunction(label: GKLabel, r: float, rule_size: int = 32, tol: float = 1e-12,
                    atol: float = 0.0, eigenfunction=None) -> complex:
    """<r|s, gamma> by quadrature over the energy eigenfunctions.

    N(s)^{-1/2} int_0^inf s^E f(E)^{-1/2} exp(-i gamma E) <r|E> dE, with
    <r|E> = sqrt(r) J_{ell+1/2}(sqrt(2E) r) (delta(E - E') normalized) unless
    another ``eigenfunction(params, E, r)`` is supplied.
    """
    if not r > 0.0:
        raise ValueError("r must be positive")
    if not label.s > 0.0:
        raise ValueError("s = 0 gives the zero vector")
    params = lwave.LWaveParams(label.ell, label.lam)
    eig = lwave.eigenstate_delta if eigenfunction is None else eigenfunction
    alpha = label.ell + 0.5
    decay = math.log(1.0 / label.s)

    def f(E):
        return factorial_f(label.ell, E) ** -0.5 * eig(params, E, r) / E**alpha

    val = integrate_halfline(f, alpha, complex(decay, label.gamma), rule_size=rule_size,
                             tol=tol, atol=atol)
    return complex(val) / math.sqrt(gk_normalization(label.ell, label.s))


def gk_norm_squared(label: GKLabel, n_r: int = 12, **kw) -> float:
    """int_0^inf |<r|s, gamma>|^2 dr with each amplitude from ``gk_wavefunction``.

    Gauss-Laguerre in u = lambda^2 r^2 / (1 + lambda^4 gamma^2), matched to
    the width of the evolved packet. Amplitudes far in the tail are tiny, so they are
    converged to an absolute tolerance ``atol`` (default 1e-13) as well.
    """
    kw.setdefault("atol", 1e-13)
    lam = label.lam
    width = (1.0 + lam**4 * label.gamma**2) / lam**2
    alpha = label.ell + 0.5
    rule = gauss_laguerre_rule(alpha, n_r)
    total = 0.0
    for u, w in zip(rule.nodes, rule.weights):
        r = math.sqrt(u * width)
        psi = gk_wavefunction(label, r, **kw)
        # dr = sqrt(width) / (2 sqrt(u)) du
        total += w * abs(psi) ** 2 * math.sqrt(width) / (2.0 * math.sqrt(u)) / (u**alpha * math.exp(-u))
    return total
