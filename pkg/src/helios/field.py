"""Near-field traces on the observation sphere of radius R, the weighted
spectral Sobolev norms, the low-frequency projector, and the spectral
split (N, eps1, eps2, E) with N = floor(sqrt(kR)).

Per degree the trace of a radiating field with far-field aggregate a_n is

    u_n(R)        = k * i * a_n * H_n(kR),
    d/dr u_n(R)   = k^2 * i * a_n * H_n'(kR),

with H_n the rescaled Hankel function from `specfun`. The squared Sobolev
norm of a trace is R^2 * sum_{m=0..l} sum_n (n/R)^(2m) |u_n(R)|^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .errors import DomainError
from .harmonics import AggregateSpectrum, CoefficientSpectrum, SphereGrid, aggregate
from .specfun import hankel_value

KR_MIN = 0.1


@dataclass(frozen=True)
class NearFieldTrace:
    """Per-degree trace coefficients u_n(R) and radial derivatives on the
    sphere of radius R."""

    k: float
    R: float
    values: np.ndarray
    radial_derivatives: np.ndarray

    @property
    def max_degree(self) -> int:
        return len(self.values) - 1


@dataclass(frozen=True)
class SpectralSplit:
    """Low/high frequency energy budget at cutoff N = floor(sqrt(kR))."""

    N: int
    eps1: float
    eps2: float
    E: float  # -ln(eps2), +inf when eps2 == 0


@dataclass(frozen=True)
class AprioriBudget:
    """First-order Sobolev norms of the trace and its radial derivative."""

    M1: float
    M2: float


def _check_kR(k: float, R: float) -> None:
    if not (k > 0.0 and R > 0.0):
        raise DomainError(f"k and R must be positive, got k={k}, R={R}")
    if k * R < KR_MIN:
        raise DomainError(f"kR = {k * R} below supported minimum {KR_MIN}")


def hankel_factors(max_degree: int, k: float, R: float) -> tuple[np.ndarray, np.ndarray]:
    """Arrays of H_n(kR) and H_n'(kR) for n = 0..max_degree."""
    _check_kR(k, R)
    t = k * R
    vals = np.empty(max_degree + 1, dtype=complex)
    ders = np.empty(max_degree + 1, dtype=complex)
    for n in range(max_degree + 1):
        h = hankel_value(n, t)
        vals[n] = h.value
        ders[n] = h.derivative
    return vals, ders


def near_field_trace(spectrum, k: float, R: float) -> NearFieldTrace:
    """Trace of the radiating field generated by a far-field spectrum."""
    agg = aggregate(spectrum)
    h, hp = hankel_factors(agg.max_degree, k, R)
    return NearFieldTrace(
        k=k,
        R=R,
        values=1j * k * agg.values * h,
        radial_derivatives=1j * k * k * agg.values * hp,
    )


def modal_trace(spectrum: CoefficientSpectrum, k: float, R: float) -> CoefficientSpectrum:
    """Per-(m,n) trace coefficients u_{m,n}(R) = k i a_{m,n} H_n(kR)."""
    h, _ = hankel_factors(spectrum.max_degree, k, R)
    return CoefficientSpectrum(
        spectrum.max_degree, {(n, m): 1j * k * v * h[n] for (n, m), v in spectrum.items()}
    )


def sobolev_norm_sq(values, l: int, R: float) -> float:
    """Squared Sobolev norm R^2 sum_{m<=l} sum_n (n/R)^(2m) |v_n|^2 of
    per-degree trace values."""
    if l < 0:
        raise DomainError("Sobolev order l must be nonnegative")
    v = np.abs(np.asarray(values)) ** 2
    n_over_R = np.arange(len(v)) / R
    total = 0.0
    for m in range(l + 1):
        total += float(np.sum(n_over_R ** (2 * m) * v))
    return R * R * total


def sobolev_norm(values, l: int, R: float) -> float:
    """Sobolev norm (square root of sobolev_norm_sq)."""
    return math.sqrt(sobolev_norm_sq(values, l, R))


def split_spectrum(spectrum, k: float, R: float) -> SpectralSplit:
    """Energy split at N = floor(sqrt(kR)) and E = -ln(eps2)."""
    _check_kR(k, R)
    agg = aggregate(spectrum)
    N = math.floor(math.sqrt(k * R))
    sq = agg.values**2
    eps1 = math.sqrt(float(np.sum(sq[: N + 1])))
    eps2 = math.sqrt(float(np.sum(sq[N + 1 :])))
    E = math.inf if eps2 == 0.0 else -math.log(eps2)
    return SpectralSplit(N=N, eps1=eps1, eps2=eps2, E=E)


def low_pass(obj, N: int):
    """Zero all degrees above N; returns an object of the same type."""
    if N < 0:
        raise DomainError("cutoff N must be nonnegative")
    if isinstance(obj, CoefficientSpectrum):
        return CoefficientSpectrum(
            obj.max_degree, {(n, m): v for (n, m), v in obj.items() if n <= N}
        )
    if isinstance(obj, AggregateSpectrum):
        values = obj.values.copy()
        values[N + 1 :] = 0.0
        return AggregateSpectrum(values=values)
    if isinstance(obj, NearFieldTrace):
        values = obj.values.copy()
        ders = obj.radial_derivatives.copy()
        values[N + 1 :] = 0.0
        ders[N + 1 :] = 0.0
        return replace(obj, values=values, radial_derivatives=ders)
    raise DomainError(f"low_pass does not support {type(obj).__name__}")


def norm_identity_check(
    spectrum: CoefficientSpectrum, k: float, R: float, grid: SphereGrid | None = None
) -> tuple[float, float]:
    """Compare the quadrature norm of the synthesized trace with the
    spectral identity k^2 R^2 sum a_n^2 |H_n(kR)|^2.

    Returns (lhs, rhs); the two agree to ~1e-9 relative for band-limited
    spectra resolved by the grid.
    """
    from .harmonics import synthesize

    if grid is None:
        grid = SphereGrid.build(spectrum.max_degree)
    trace_coeffs = modal_trace(spectrum, k, R)
    samples = synthesize(trace_coeffs, grid)
    lhs = R * R * float(np.real(grid.integrate(samples * np.conjugate(samples))))
    agg = aggregate(spectrum)
    h, _ = hankel_factors(agg.max_degree, k, R)
    rhs = k * k * R * R * float(np.sum(agg.values**2 * np.abs(h) ** 2))
    return lhs, rhs
