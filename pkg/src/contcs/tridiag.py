"""Coherent states from a tridiagonal Hamiltonian with purely continuous spectrum.

Given the diagonal a_n and off-diagonal b_n of H in an orthonormal basis,
this module builds the orthogonal polynomials P_n(E), the factorization
H = A^dagger A with A phi_n = c_n phi_n + d_n phi_{n-1}, the expansion
coefficients Q_n(z) of eigenstates of A, and the spectral-integral form of
the evolved states.

Sequences are index -> value callables, so truncation depth is chosen by the
caller at each use.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .quad import integrate_halfline

__all__ = [
    "TridiagonalSpec",
    "LadderSpec",
    "PolySequence",
    "CSLabel",
    "SpectralModel",
    "FactorizationError",
    "DivergenceError",
    "ExtrapolationError",
    "eval_polynomials",
    "polynomial_table",
    "ladder_from_tridiagonal",
    "q_coefficients",
    "normalization_nz",
    "kernel_partial_sum",
    "kernel_K",
    "s_kernel",
    "cs_wavefunction_numeric",
    "NZ_TERM_CAP",
]

NZ_TERM_CAP = 100_000


class FactorizationError(ValueError):
    """H cannot be written as A^dagger A with real ladder coefficients."""


class DivergenceError(RuntimeError):
    """The series for N(z) did not settle within the term cap."""


class ExtrapolationError(RuntimeError):
    """Abel extrapolation h -> 1 did not stabilize."""


@dataclass(frozen=True)
class TridiagonalSpec:
    a: Callable[[int], float]
    b: Callable[[int], float]

    def diag(self, n: int) -> np.ndarray:
        return np.array([self.a(k) for k in range(n)], dtype=float)

    def offdiag(self, n: int) -> np.ndarray:
        out = np.array([self.b(k) for k in range(n)], dtype=float)
        if np.any(out <= 0.0):
            raise ValueError("off-diagonal coefficients b_n must be positive")
        return out


@dataclass(frozen=True)
class LadderSpec:
    """c_n on the diagonal of A and d_n below it, with d_0 = 0."""

    c: Callable[[int], float]
    d: Callable[[int], float]


@dataclass(frozen=True)
class PolySequence:
    energy: float
    values: np.ndarray

    def __getitem__(self, n):
        return self.values[n]

    def __len__(self):
        return len(self.values)


@dataclass(frozen=True)
class CSLabel:
    z: float
    gamma: float = 0.0


@dataclass(frozen=True)
class SpectralModel:
    """Closed-form kernel and weight of a concrete model.

    ``kernel(r, E)`` and ``weight(E)`` must broadcast over arrays in E. The
    product kernel * weight must behave as E^alpha exp(-rate E) times a smooth
    factor; those two numbers set the quadrature weight.
    """

    kernel: Callable
    weight: Callable
    spec: TridiagonalSpec
    alpha: float
    rate: float


def polynomial_table(spec: TridiagonalSpec, E, N: int) -> np.ndarray:
    """P_0 .. P_N at each E; shape ``(N + 1,) + E.shape``."""
    Ea = np.asarray(E, dtype=float)
    if not np.all(np.isfinite(Ea)):
        raise ValueError("E must be finite")
    if int(N) != N or N < 0:
        raise ValueError("N must be a nonnegative integer")
    a = spec.diag(N + 1)
    b = spec.offdiag(N + 1)
    out = np.empty((N + 1,) + Ea.shape)
    out[0] = 1.0
    if N >= 1:
        out[1] = (Ea - a[0]) / b[0]
    for n in range(1, N):
        out[n + 1] = ((Ea - a[n]) * out[n] - b[n - 1] * out[n - 1]) / b[n]
    return out


def eval_polynomials(spec: TridiagonalSpec, E: float, N: int) -> PolySequence:
    """P_0(E) .. P_N(E) from the three-term recurrence with P_0 = 1."""
    E = float(E)
    return PolySequence(energy=E, values=polynomial_table(spec, E, N))


def ladder_from_tridiagonal(spec: TridiagonalSpec, N: int) -> LadderSpec:
    """Recover c_0..c_N and d_0..d_{N+1} from a_n, b_n and the values P_n(0).

    Positive square roots are taken for both sequences. The recurrence is run
    on the ratio P_{n+1}(0)/P_n(0), which is all the formulas need.
    """
    if int(N) != N or N < 0:
        raise ValueError("N must be a nonnegative integer")
    a = spec.diag(N + 1)
    b = spec.offdiag(N + 1)
    c = np.empty(N + 1)
    d = np.zeros(N + 2)
    ratio_prev = None
    for n in range(N + 1):
        # P_{n+1}(0) / P_n(0) from 0 = b_{n-1} P_{n-1} + a_n P_n + b_n P_{n+1}
        back = b[n - 1] / ratio_prev if n > 0 else 0.0
        ratio = (-a[n] - back) / b[n]
        if not ratio < 0.0:
            raise FactorizationError(
                f"P_{n + 1}(0)/P_{n}(0) = {ratio!r} is not negative at index {n}: "
                "H is not of the form A^dagger A"
            )
        c[n] = math.sqrt(-b[n] * ratio)
        d[n + 1] = math.sqrt(-b[n] / ratio)
        ratio_prev = ratio

    def c_of(n):
        if not 0 <= n <= N:
            raise IndexError(f"c_{n} outside the extracted range 0..{N}")
        return float(c[n])

    def d_of(n):
        if not 0 <= n <= N + 1:
            raise IndexError(f"d_{n} outside the extracted range 0..{N + 1}")
        return float(d[n])

    return LadderSpec(c=c_of, d=d_of)


def q_coefficients(ladder: LadderSpec, z: float, N: int) -> list[float]:
    """Q_0(z) .. Q_N(z), Q_n = prod_{j<n} (z - c_j) / d_{j+1}.

    With z equal to some c_k the factor j = k is exactly zero and every later
    coefficient vanishes.
    """
    out = [1.0]
    q = 1.0
    for j in range(N):
        dj = ladder.d(j + 1)
        if dj == 0.0:
            raise ValueError(f"d_{j + 1} = 0; Q_{j + 1} undefined")
        q = q * (z - ladder.c(j)) / dj
        out.append(q)
    return out


def normalization_nz(ladder: LadderSpec, z: float, tol: float = 1e-15,
                     max_terms: int = NZ_TERM_CAP) -> float:
    """N(z) = sum_n Q_n(z)^2.

    Exact when the series terminates (z = c_k). Otherwise summed until ten
    consecutive increments fall below ``tol`` times the running sum.
    """
    if not tol > 0.0:
        raise ValueError("tol must be positive")
    total = 1.0
    q = 1.0
    quiet = 0
    for j in range(max_terms):
        q = q * (z - ladder.c(j)) / ladder.d(j + 1)
        if q == 0.0:
            return total
        inc = q * q
        total += inc
        if not math.isfinite(total):
            raise DivergenceError(f"N({z}) overflowed after {j + 2} terms")
        quiet = quiet + 1 if inc < tol * total else 0
        if quiet >= 10:
            return total
    raise DivergenceError(
        f"N({z}) not settled after {max_terms} terms (partial sum {total:.6g}); "
        "the fiducial state is not normalizable for this z"
    )


def kernel_partial_sum(basis: Sequence[float], polys: Sequence[float], h: float) -> float:
    """sum_j h^j phi_j P_j over the supplied terms."""
    basis = np.asarray(basis, dtype=float)
    polys = np.asarray(polys, dtype=float)
    hj = h ** np.arange(len(basis))
    return float(np.sum(hj * basis * polys))


def kernel_K(basis_fn: Callable[[int, float], float], polys_at: Callable[[int, float], float],
             r: float, E: float, trunc: int, abel_h: float = 0.98,
             n_nodes: int = 24, tol: float = 1e-8) -> float:
    """Abel-summed kernel sum_j phi_j(r) P_j(E) in the limit h -> 1-.

    The series converges only conditionally (if at all) at h = 1, but
    K(h) = sum_j h^j phi_j(r) P_j(E) is analytic across h = 1. It is sampled
    at Chebyshev points of [abel_h / 2, abel_h] using ``trunc`` terms and the
    interpolant is evaluated at h = 1. Two interpolants of different degree
    must agree to ``tol`` relative.

    Test oracle only: production code uses the model's closed kernel.
    """
    if int(trunc) != trunc or trunc < 1:
        raise ValueError("trunc must be a positive integer")
    if not 0.0 < abel_h < 1.0:
        raise ValueError("abel_h must lie in (0, 1)")
    terms = np.array([basis_fn(j, r) * polys_at(j, E) for j in range(trunc)], dtype=float)
    if trunc == 1:
        return float(terms[0])
    lo, hi = 0.5 * abel_h, abel_h

    def extrapolate(m):
        t = np.cos(np.pi * (np.arange(m) + 0.5) / m)
        h = lo + (hi - lo) * (t + 1.0) / 2.0
        vals = np.array([np.sum(hh ** np.arange(trunc) * terms) for hh in h])
        cheb = np.polynomial.chebyshev.Chebyshev.fit(h, vals, m - 1, domain=[lo, hi])
        return float(cheb(1.0))

    k1 = extrapolate(n_nodes)
    k2 = extrapolate(n_nodes - 4)
    if abs(k1 - k2) > tol * max(abs(k1), 1e-300):
        raise ExtrapolationError(f"Abel extrapolation unstable: {k1!r} vs {k2!r}")
    return k1


def s_kernel(ladder: LadderSpec, spec: TridiagonalSpec, k: int, E) -> np.ndarray:
    """S(c_k, E) = sum_{n<=k} Q_n(c_k) P_n(E)."""
    q = np.asarray(q_coefficients(ladder, ladder.c(k), k))
    p = polynomial_table(spec, E, k)
    return np.tensordot(q, p, axes=1)


def cs_wavefunction_numeric(model: SpectralModel, ladder: LadderSpec, k: int, gamma: float,
                            r: float, rule_size: int = 32, tol: float = 1e-12,
                            atol: float = 0.0) -> complex:
    """<r|c_k, gamma> as a spectral integral over the closed kernel.

    N(c_k)^{-1/2} int_0^inf K(r, E) S(c_k, E) omega(E) exp(-i gamma E) dE.
    """
    if not r > 0.0:
        raise ValueError("r must be positive")
    z = ladder.c(k)
    norm = normalization_nz(ladder, z)
    alpha, rate = model.alpha, model.rate

    def f(E):
        with np.errstate(over="ignore", invalid="ignore"):
            w = model.weight(E)
            val = model.kernel(r, E) * w * s_kernel(ladder, model.spec, k, E)
            val = np.where(w > 0.0, val, 0.0) / (E**alpha * np.exp(-rate * E))
        return np.where(np.isfinite(val), val, 0.0)

    val = integrate_halfline(f, alpha, complex(rate, gamma), rule_size=rule_size, tol=tol, atol=atol)
    return complex(val) / math.sqrt(norm)
