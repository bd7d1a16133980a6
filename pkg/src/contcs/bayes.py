"""Gamma-Poisson reading of the orthogonality weight.

The weight omega(E) of the ell-wave model is a Gamma(ell + 3/2, 2/lambda^2)
density. It is the posterior of a Gamma(3/2, 2/lambda^2 - 1) prior on a
Poisson rate E after observing the count ell, and it factors as
tau(lambda)^{2E} q(E) up to normalization, with tau(lambda) = exp(-1/lambda^2)
and q(E) = E^{ell+1/2}.

Gamma distributions are parameterized by shape and *rate* throughout.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import lwave
from .quad import integrate_halfline
from .specfun import ln_gamma

__all__ = [
    "BayesDecomp",
    "poisson_pmf",
    "gamma_pdf",
    "prior_pi",
    "prior_rate",
    "posterior_params",
    "conjugate_posterior",
    "extract_tau_q",
    "PRIOR_SHAPE",
]

PRIOR_SHAPE = 1.5


def poisson_pmf(ell_value: int, E):
    """P(X = ell) for X ~ Poisson(E)."""
    if int(ell_value) != ell_value or ell_value < 0:
        raise ValueError(f"count must be a nonnegative integer, got {ell_value!r}")
    Ea = np.asarray(E, dtype=float)
    if np.any(~(Ea > 0.0)):
        raise ValueError("Poisson rate E must be positive")
    out = np.exp(ell_value * np.log(Ea) - Ea - ln_gamma(ell_value + 1.0))
    return float(out) if np.ndim(out) == 0 else out


def gamma_pdf(x, shape: float, rate: float):
    """rate^shape x^{shape-1} exp(-rate x) / Gamma(shape)."""
    if not (shape > 0.0 and rate > 0.0):
        raise ValueError("shape and rate must be positive")
    xa = np.asarray(x, dtype=float)
    if np.any(~(xa > 0.0)):
        raise ValueError("gamma_pdf needs x > 0")
    out = np.exp(shape * math.log(rate) + (shape - 1.0) * np.log(xa) - rate * xa - ln_gamma(shape))
    return float(out) if np.ndim(out) == 0 else out


def prior_rate(lam: float) -> float:
    """2/lambda^2 - 1; the prior exists only for lambda^2 < 2."""
    rate = 2.0 / lam**2 - 1.0
    if not rate > 0.0:
        raise ValueError(
            f"lambda^2 = {lam**2!r} >= 2 makes the prior rate 2/lambda^2 - 1 = {rate!r} "
            "nonpositive; the Gamma prior needs a positive rate"
        )
    return rate


def prior_pi(ell: int, lam: float, E):
    """Gamma(3/2, 2/lambda^2 - 1) prior on the Poisson rate E.

    ``ell`` is the observed count; the prior does not depend on it and the
    argument is kept so prior and likelihood share a signature.
    """
    return gamma_pdf(E, PRIOR_SHAPE, prior_rate(lam))


def posterior_params(shape: float, rate: float, count: int) -> tuple[float, float]:
    """Gamma(shape, rate) prior + one Poisson count -> Gamma(shape + count, rate + 1)."""
    return shape + count, rate + 1.0


def conjugate_posterior(ell: int, lam: float, E, rule_size: int = 16, tol: float = 1e-14):
    """prior(E) p_E(ell) / int prior(y) p_y(ell) dy, normalizer by quadrature."""
    rate = prior_rate(lam) + 1.0
    alpha = PRIOR_SHAPE - 1.0 + ell

    def f(y):
        return prior_pi(ell, lam, y) * poisson_pmf(ell, y) / (y**alpha * np.exp(-rate * y))

    z = integrate_halfline(f, alpha, rate, rule_size=rule_size, tol=tol)
    return prior_pi(ell, lam, E) * poisson_pmf(ell, E) / z


@dataclass(frozen=True)
class BayesDecomp:
    """Factorization omega(E) proportional to tau(lambda)^{2E} q(E).

    ``prior_rate`` depends on lambda and is therefore a callable.
    """

    ell: int
    tau: Callable[[float], float]
    q: Callable
    prior_shape: float
    prior_rate: Callable[[float], float]

    def normalizer(self, lam: float, rule_size: int = 16, tol: float = 1e-14) -> float:
        """int_0^inf tau(lambda)^{2y} q(y) dy."""
        t = self.tau(lam)
        rate = -2.0 * math.log(t)
        alpha = self.ell + 0.5

        def f(y):
            return np.exp(2.0 * y * math.log(t) + rate * y) * self.q(y) / y**alpha

        return integrate_halfline(f, alpha, rate, rule_size=rule_size, tol=tol)

    def reconstruct(self, lam: float, E):
        """tau^{2E} q(E) / normalizer, which should equal omega(E)."""
        Ea = np.asarray(E, dtype=float)
        t = self.tau(lam)
        return np.exp(2.0 * Ea * math.log(t)) * self.q(Ea) / self.normalizer(lam)

    def verify(self, lam: float, E) -> float:
        """Max relative deviation of ``reconstruct`` from the model weight at E."""
        w = lwave.weight(lwave.LWaveParams(self.ell, lam), E)
        return float(np.max(np.abs(self.reconstruct(lam, E) / w - 1.0)))

    def factorial(self, E):
        """1/q(E); proportional to the GK factorial function with constant 2^{ell+1/2}."""
        return 1.0 / self.q(E)


def extract_tau_q(ell: int) -> BayesDecomp:
    if int(ell) != ell or ell < 0:
        raise ValueError(f"ell must be a nonnegative integer, got {ell!r}")

    def tau(lam):
        if lam == 0.0:
            raise ValueError("lambda must be nonzero")
        return math.exp(-1.0 / lam**2)

    def q(E):
        Ea = np.asarray(E, dtype=float)
        out = Ea ** (ell + 0.5)
        return float(out) if np.ndim(out) == 0 else out

    return BayesDecomp(ell=ell, tau=tau, q=q, prior_shape=PRIOR_SHAPE, prior_rate=prior_rate)
