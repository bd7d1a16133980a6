"""Free particle in the ell-th partial wave, H = -1/2 d^2/dr^2 + ell(ell+1)/(2 r^2).

Closed forms for the oscillator-type basis, its tridiagonal coefficients,
orthogonal polynomials, gamma weight, ladder coefficients, kernel, coherent
states and their position observables. Functions broadcast over numpy
arrays in ``r`` and ``E``; Gamma-function prefactors are combined in log space.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .specfun import bessel_j_half, laguerre, ln_gamma
from .tridiag import LadderSpec, SpectralModel, TridiagonalSpec

__all__ = [
    "LWaveParams",
    "CSClosedForm",
    "KernelConstant",
    "basis_phi",
    "basis_table",
    "tridiag_coeffs",
    "polynomial_closed",
    "weight",
    "ladder_closed",
    "ladder_spec",
    "kernel_closed",
    "cs_closed",
    "cs_label_lambda",
    "eigenstate",
    "eigenstate_delta",
    "density_rho",
    "mean_position",
    "velocity",
    "velocity_limit",
    "spectral_model",
    "DEFAULT_KERNEL_CONSTANT",
]


@dataclass(frozen=True)
class LWaveParams:
    ell: int
    lam: float

    def __post_init__(self):
        if int(self.ell) != self.ell or self.ell < 0:
            raise ValueError(f"ell must be a nonnegative integer, got {self.ell!r}")
        if not self.lam > 0.0:
            raise ValueError(f"lambda must be positive, got {self.lam!r}")

    @property
    def nu(self) -> float:
        """Bessel / Laguerre order ell + 1/2."""
        return self.ell + 0.5

    @property
    def shape(self) -> float:
        """ell + 3/2, the shape of the gamma weight."""
        return self.ell + 1.5


@dataclass(frozen=True)
class CSClosedForm:
    """Complex scale beta of the evolved ground state, 1/beta^2 = 1/lambda^2 + i gamma."""

    params: LWaveParams
    gamma: float

    @property
    def inv_beta_sq(self) -> complex:
        return complex(1.0 / self.params.lam**2, self.gamma)

    @property
    def beta(self) -> complex:
        # principal branch; Re(1/beta^2) > 0 keeps beta in the right half plane
        return 1.0 / np.sqrt(self.inv_beta_sq)


class KernelConstant(str, Enum):
    PAPER = "paper"
    CORRECTED = "corrected"


# Fixed by the Abel-summed series check (tests/test_tridiag.py, verify report).
DEFAULT_KERNEL_CONSTANT = KernelConstant.CORRECTED


def _positive(name, x):
    xa = np.asarray(x, dtype=float)
    if np.any(~(xa > 0.0)):
        raise ValueError(f"{name} must be positive")
    return xa


def basis_phi(params: LWaveParams, n: int, r):
    """Orthonormal basis function phi_n(r) of L^2(R+, dr)."""
    ra = _positive("r", r)
    ell, lam = params.ell, params.lam
    u = (lam * ra) ** 2
    log_pref = 0.5 * (math.log(2.0 * lam) + ln_gamma(n + 1.0) - ln_gamma(n + params.shape))
    log_mag = log_pref + (ell + 1) * np.log(lam * ra) - 0.5 * u
    out = np.exp(log_mag) * laguerre(n, params.nu, u)
    return float(out) if np.ndim(out) == 0 else out


def basis_table(params: LWaveParams, n_max: int, r) -> np.ndarray:
    """phi_0 .. phi_{n_max} at r, via the normalized Laguerre recurrence.

    Stable for large n where forming n!/Gamma(n+ell+3/2) and L_n separately
    would lose range.
    """
    ra = _positive("r", r)
    u = (params.lam * ra) ** 2
    alpha = params.nu
    # orthonormal Laguerre functions: sqrt(k!/Gamma(k+alpha+1)) L_k(u)
    g0 = np.exp(0.5 * (math.log(2.0 * params.lam) - ln_gamma(alpha + 1.0))
                + (params.ell + 1) * np.log(params.lam * ra) - 0.5 * u)
    out = np.empty((n_max + 1,) + ra.shape)
    out[0] = g0
    if n_max >= 1:
        out[1] = g0 * (1.0 + alpha - u) / math.sqrt(alpha + 1.0)
    for k in range(1, n_max):
        out[k + 1] = ((2 * k + alpha + 1.0 - u) * out[k]
                      - math.sqrt(k * (k + alpha)) * out[k - 1]) / math.sqrt((k + 1) * (k + alpha + 1.0))
    return out


def tridiag_coeffs(params: LWaveParams) -> TridiagonalSpec:
    """Matrix of H in the phi_n basis: a_n on the diagonal, b_n beside it."""
    half_l2 = 0.5 * params.lam**2
    s = params.shape

    def a(n):
        return half_l2 * (2 * n + s)

    def b(n):
        return half_l2 * math.sqrt((n + 1) * (n + s))

    return TridiagonalSpec(a=a, b=b)


def polynomial_closed(params: LWaveParams, n: int, E):
    """P_n(E) as a rescaled Laguerre polynomial in 2E/lambda^2."""
    Ea = np.asarray(E, dtype=float)
    if np.any(Ea < 0.0):
        raise ValueError("E must be nonnegative")
    c = 0.5 * (ln_gamma(n + 1.0) + ln_gamma(params.shape) - ln_gamma(n + params.shape))
    out = (-1) ** n * math.exp(c) * laguerre(n, params.nu, 2.0 * Ea / params.lam**2)
    return float(out) if np.ndim(out) == 0 else out


def weight(params: LWaveParams, E):
    """Gamma(shape = ell + 3/2, rate = 2/lambda^2) density in E."""
    Ea = np.asarray(E, dtype=float)
    if np.any(Ea < 0.0):
        raise ValueError("E must be nonnegative")
    rate = 2.0 / params.lam**2
    y = rate * Ea
    with np.errstate(divide="ignore"):
        log_w = math.log(rate) - ln_gamma(params.shape) + params.nu * np.log(y) - y
    out = np.where(Ea > 0.0, np.exp(log_w), 0.0)
    return float(out) if np.ndim(out) == 0 else out


def ladder_closed(params: LWaveParams, n: int) -> tuple[float, float]:
    """(c_n, d_{n+1})."""
    f = params.lam / math.sqrt(2.0)
    return f * math.sqrt(n + params.shape), f * math.sqrt(n + 1.0)


def ladder_spec(params: LWaveParams) -> LadderSpec:
    f = params.lam / math.sqrt(2.0)
    s = params.shape
    return LadderSpec(c=lambda n: f * math.sqrt(n + s), d=lambda n: f * math.sqrt(n))


def kernel_closed(params: LWaveParams, r, E, constant_mode=DEFAULT_KERNEL_CONSTANT):
    """Summed kernel sum_j phi_j(r) P_j(E) in closed form.

    ``constant_mode`` selects Gamma(ell + 1/2) ("paper") or Gamma(ell + 3/2)
    ("corrected") under the square root of the prefactor.
    """
    mode = KernelConstant(constant_mode)
    ra = _positive("r", r)
    Ea = _positive("E", E)
    ell, lam, nu = params.ell, params.lam, params.nu
    g = ln_gamma(ell + 0.5) if mode is KernelConstant.PAPER else ln_gamma(ell + 1.5)
    k = np.sqrt(2.0 * Ea)
    log_mag = (math.log(0.5) + (ell + 1) * math.log(lam) + 0.5 * np.log(ra)
               + 0.5 * (math.log(2.0 * lam) + g) + Ea / lam**2 - 0.5 * nu * np.log(2.0 * Ea))
    out = np.exp(log_mag) * bessel_j_half(ell, k * ra)
    return float(out) if np.ndim(out) == 0 else out


def cs_label_lambda(ell: int, z: float) -> float:
    """lambda for which the tridiagonal label z equals c_0."""
    return 2.0 * z / math.sqrt(2 * ell + 3)


def cs_closed(params: LWaveParams, gamma: float, r):
    """<r|lambda, gamma>, the ground state evolved for time gamma."""
    ra = _positive("r", r)
    ell, lam = params.ell, params.lam
    w = complex(1.0 / lam**2, gamma)
    log_pref = 0.5 * math.log(2.0) - 0.5 * ln_gamma(params.shape) - params.shape * math.log(lam)
    out = (math.exp(log_pref) * ra ** (ell + 1) * w ** (-params.shape)
           * np.exp(-ra**2 / (2.0 * w)))
    return complex(out) if np.ndim(out) == 0 else out


def eigenstate(params: LWaveParams, E, r):
    """Riccati-Bessel eigenfunction sqrt(kr) J_{ell+1/2}(kr), k = sqrt(2E).

    Normalized to delta(k - k'). See ``eigenstate_delta`` for the
    delta(E - E') normalization that the spectral integrals use.
    """
    Ea = _positive("E", E)
    ra = _positive("r", r)
    x = np.sqrt(2.0 * Ea) * ra
    out = np.sqrt(x) * bessel_j_half(params.ell, x)
    return float(out) if np.ndim(out) == 0 else out


def eigenstate_delta(params: LWaveParams, E, r):
    """sqrt(r) J_{ell+1/2}(sqrt(2E) r), normalized to delta(E - E')."""
    Ea = _positive("E", E)
    ra = _positive("r", r)
    out = np.sqrt(ra) * bessel_j_half(params.ell, np.sqrt(2.0 * Ea) * ra)
    return float(out) if np.ndim(out) == 0 else out


def density_rho(params: LWaveParams, gamma: float, r):
    """|<r|lambda, gamma>|^2."""
    ra = _positive("r", r)
    ell, lam = params.ell, params.lam
    spread = 1.0 + gamma**2 * lam**4
    log_pref = (math.log(2.0) + (2 * ell + 3) * math.log(lam) - ln_gamma(params.shape)
                - params.shape * math.log(spread))
    out = np.exp(log_pref + (2 * ell + 2) * np.log(ra) - ra**2 * lam**2 / spread)
    return float(out) if np.ndim(out) == 0 else out


def _mean_coefficient(ell: int) -> float:
    return math.exp(ln_gamma(ell + 2.0) - ln_gamma(ell + 1.5))


def mean_position(params: LWaveParams, gamma: float) -> float:
    lam = params.lam
    return _mean_coefficient(params.ell) * math.sqrt(1.0 / lam**2 + lam**2 * gamma**2)


def velocity(params: LWaveParams, gamma: float) -> float:
    """d/dgamma of the mean position."""
    lam = params.lam
    return _mean_coefficient(params.ell) * lam**2 * gamma / math.sqrt(1.0 / lam**2 + lam**2 * gamma**2)


def velocity_limit(params: LWaveParams) -> float:
    return params.lam * _mean_coefficient(params.ell)


def spectral_model(params: LWaveParams, constant_mode=DEFAULT_KERNEL_CONSTANT) -> SpectralModel:
    """Bundle the closed kernel and weight for the generic integral construction.

    K(r, E) omega(E) behaves as E^{ell+1/2} exp(-E/lambda^2) times a smooth
    factor, which fixes the quadrature weight.
    """
    return SpectralModel(
        kernel=lambda r, E: kernel_closed(params, r, E, constant_mode),
        weight=lambda E: weight(params, E),
        spec=tridiag_coeffs(params),
        alpha=params.nu,
        rate=1.0 / params.lam**2,
    )
