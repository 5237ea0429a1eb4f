"""Orthonormal complex spherical harmonics (Condon-Shortley phase),
Gauss-Legendre x uniform-longitude quadrature on the unit sphere, and the
analysis / synthesis / per-degree aggregation operations on coefficient
spectra.

A grid of design degree L uses L+1 Gauss-Legendre nodes in cos(theta) and
2L+1 uniform longitudes, which integrates products Y_n^m * conj(Y_n'^m')
exactly for n, n' <= L.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.special import sph_harm_y

from .errors import DomainError, ResolutionError

MAX_DEGREE_SUPPORTED = 60


@dataclass(frozen=True, order=True)
class HarmonicIndex:
    """Degree/order pair (n, m) with |m| <= n."""

    degree: int
    order: int

    def __post_init__(self):
        if self.degree < 0 or abs(self.order) > self.degree:
            raise DomainError(
                f"invalid harmonic index (n={self.degree}, m={self.order})"
            )


class CoefficientSpectrum:
    """Complex coefficients a_{m,n} of a surface expansion, indexed by
    (degree n, order m)."""

    def __init__(self, max_degree: int, entries: dict[tuple[int, int], complex] | None = None):
        if max_degree < 0 or max_degree > MAX_DEGREE_SUPPORTED:
            raise DomainError(f"max_degree must be in [0, {MAX_DEGREE_SUPPORTED}]")
        self.max_degree = max_degree
        self.entries: dict[tuple[int, int], complex] = {}
        if entries:
            for (n, m), value in entries.items():
                self[n, m] = value

    def __getitem__(self, key: tuple[int, int]) -> complex:
        return self.entries.get(key, 0.0 + 0.0j)

    def __setitem__(self, key: tuple[int, int], value: complex) -> None:
        n, m = key
        if not (0 <= n <= self.max_degree and abs(m) <= n):
            raise DomainError(f"index (n={n}, m={m}) outside spectrum of degree {self.max_degree}")
        self.entries[key] = complex(value)

    def items(self):
        return self.entries.items()

    def energy(self) -> float:
        """Total energy sum |a_{m,n}|^2."""
        return float(sum(abs(v) ** 2 for v in self.entries.values()))

    def scaled(self, factor: complex) -> "CoefficientSpectrum":
        return CoefficientSpectrum(
            self.max_degree, {k: factor * v for k, v in self.entries.items()}
        )

    def __add__(self, other: "CoefficientSpectrum") -> "CoefficientSpectrum":
        out = CoefficientSpectrum(max(self.max_degree, other.max_degree))
        for k, v in self.entries.items():
            out[k] = v
        for k, v in other.entries.items():
            out[k] = out[k] + v
        return out

    def __sub__(self, other: "CoefficientSpectrum") -> "CoefficientSpectrum":
        return self + other.scaled(-1.0)

    @classmethod
    def zeros(cls, max_degree: int) -> "CoefficientSpectrum":
        return cls(max_degree)


@dataclass(frozen=True)
class AggregateSpectrum:
    """Per-degree magnitudes a_n = (sum_m |a_{m,n}|^2)^(1/2)."""

    values: np.ndarray  # shape (max_degree + 1,), nonnegative

    @property
    def max_degree(self) -> int:
        return len(self.values) - 1

    def energy(self) -> float:
        return float(np.sum(self.values**2))


def aggregate(spectrum: CoefficientSpectrum | AggregateSpectrum) -> AggregateSpectrum:
    """Collapse orders into per-degree magnitudes (Pythagorean sum)."""
    if isinstance(spectrum, AggregateSpectrum):
        return spectrum
    sq = np.zeros(spectrum.max_degree + 1)
    for (n, _m), v in spectrum.items():
        sq[n] += abs(v) ** 2
    return AggregateSpectrum(values=np.sqrt(sq))


@dataclass
class SphereGrid:
    """Quadrature grid on the unit sphere: Gauss-Legendre in colatitude
    times uniform longitude. Harmonic samples are cached per (n, m)."""

    design_degree: int
    theta: np.ndarray
    phi: np.ndarray
    weights: np.ndarray
    _cache: dict[tuple[int, int], np.ndarray] = field(default_factory=dict, repr=False)

    @classmethod
    def build(cls, design_degree: int) -> "SphereGrid":
        if design_degree < 0:
            raise DomainError("design_degree must be nonnegative")
        n_theta = design_degree + 1
        n_phi = 2 * design_degree + 1
        x, w = np.polynomial.legendre.leggauss(n_theta)
        theta_1d = np.arccos(x)
        phi_1d = 2.0 * np.pi * np.arange(n_phi) / n_phi
        theta, phi = np.meshgrid(theta_1d, phi_1d, indexing="ij")
        weights = np.broadcast_to((w * (2.0 * np.pi / n_phi))[:, None], theta.shape)
        return cls(
            design_degree=design_degree,
            theta=theta.ravel(),
            phi=phi.ravel(),
            weights=np.ascontiguousarray(weights.ravel()),
        )

    def harmonic(self, n: int, m: int) -> np.ndarray:
        """Samples of Y_n^m on the grid nodes (cached)."""
        key = (n, m)
        if key not in self._cache:
            self._cache[key] = sph_harm_y(n, m, self.theta, self.phi)
        return self._cache[key]

    def integrate(self, values: np.ndarray) -> complex:
        return complex(np.dot(self.weights, values))


def _direction_angles(direction) -> tuple[float, float]:
    v = np.asarray(direction, dtype=float)
    if v.shape != (3,):
        raise DomainError("direction must be a 3-vector")
    norm = float(np.linalg.norm(v))
    if abs(norm - 1.0) > 1e-12:
        raise DomainError(f"direction must be a unit vector, |v| = {norm}")
    theta = math.acos(min(1.0, max(-1.0, v[2])))
    phi = math.atan2(v[1], v[0])
    return theta, phi


def evaluate_harmonic(index: HarmonicIndex, direction) -> complex:
    """Orthonormal Y_n^m at a unit direction (Condon-Shortley phase)."""
    theta, phi = _direction_angles(direction)
    return complex(sph_harm_y(index.degree, index.order, theta, phi))


def synthesize(spectrum: CoefficientSpectrum, grid: SphereGrid) -> np.ndarray:
    """Pointwise sum of a_{m,n} Y_n^m over the grid nodes."""
    out = np.zeros(grid.theta.shape, dtype=complex)
    for (n, m), value in spectrum.items():
        if value != 0:
            out += value * grid.harmonic(n, m)
    return out


def analyze(samples: np.ndarray, grid: SphereGrid, max_degree: int) -> CoefficientSpectrum:
    """Coefficients a_{m,n} = <samples, Y_n^m> under grid quadrature."""
    if max_degree > grid.design_degree:
        raise ResolutionError(
            f"grid design degree {grid.design_degree} < requested max degree {max_degree}"
        )
    samples = np.asarray(samples, dtype=complex)
    if samples.shape != grid.theta.shape:
        raise DomainError("sample array does not match grid shape")
    weighted = grid.weights * samples
    out = CoefficientSpectrum(max_degree)
    for n in range(max_degree + 1):
        for m in range(-n, n + 1):
            out[n, m] = complex(np.dot(weighted, np.conjugate(grid.harmonic(n, m))))
    return out
