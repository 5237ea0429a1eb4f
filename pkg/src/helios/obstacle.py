"""Inverse obstacle scattering linearized about the sphere of radius R:
closed-form incident spherical waves, diagonal forward maps from a real
boundary perturbation to the far-field spectrum of the first-order
scattered field, and truncated inverse maps.

Boundary data of the linearized problems:

  soft (Dirichlet):  v0 = -d * du0/dr on the sphere, du0/dr(R) = (ikR-1)/R
  hard (Neumann):    dv1/dr = k^2 * u1(R) * d,       u1(R) = R/(ikR-1)

Both maps act degree by degree through the trace representation
u_n(r) = k i a_n H_n(kr), so inversion divides by k i H_n(kR) (soft) or
k^2 i H_n'(kR) (hard); neither factor has positive real zeros.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import CapacityError, DomainError
from .field import hankel_factors
from .harmonics import CoefficientSpectrum, SphereGrid, synthesize


@dataclass(frozen=True)
class IncidentWave:
    """Boundary trace of the unperturbed incident spherical wave."""

    kind: str
    k: float
    R: float
    trace_value: complex
    trace_radial_derivative: complex


@dataclass(frozen=True)
class BoundaryPerturbation:
    """Real perturbation of the sphere radius, stored as a coefficient
    spectrum with conjugate symmetry d_{n,-m} = (-1)^m conj(d_{n,m})."""

    spectrum: CoefficientSpectrum

    def conjugate_symmetry_residual(self) -> float:
        """Max |d_{n,-m} - (-1)^m conj(d_{n,m})| over the stored entries."""
        worst = 0.0
        for (n, m), v in self.spectrum.items():
            mirror = self.spectrum[n, -m]
            worst = max(worst, abs(mirror - (-1) ** m * v.conjugate()))
        return worst

    def imaginary_residual(self, grid: SphereGrid | None = None) -> float:
        """Relative imaginary residue of the synthesized perturbation."""
        if grid is None:
            grid = SphereGrid.build(self.spectrum.max_degree)
        samples = synthesize(self.spectrum, grid)
        amplitude = float(np.max(np.abs(samples)))
        if amplitude == 0.0:
            return 0.0
        return float(np.max(np.abs(samples.imag))) / amplitude


def incident_trace(kind: str, k: float, R: float) -> IncidentWave:
    """Closed-form boundary data of the incident spherical wave."""
    if not (k > 0 and R > 0):
        raise DomainError("k and R must be positive")
    if kind == "soft":
        value = 1.0 + 0.0j
        derivative = (1j * k * R - 1.0) / R
    elif kind == "hard":
        value = R / (1j * k * R - 1.0)
        derivative = 1.0 + 0.0j
    else:
        raise DomainError(f"unknown obstacle kind {kind!r} (expected soft or hard)")
    return IncidentWave(kind=kind, k=k, R=R, trace_value=value, trace_radial_derivative=derivative)


def default_cutoff(k: float, R: float) -> int:
    """The stability split cutoff floor(sqrt(kR))."""
    return math.floor(math.sqrt(k * R))


def _soft_gain(k: float, R: float, max_degree: int) -> np.ndarray:
    """Per-degree factor mapping d_{m,n} to the soft far-field a_{m,n}."""
    h, _ = hankel_factors(max_degree, k, R)
    return -((1j * k * R - 1.0) / R) / (1j * k * h)


def _hard_gain(k: float, R: float, max_degree: int) -> np.ndarray:
    """Per-degree factor mapping d_{m,n} to the hard far-field a_{m,n}."""
    _, hp = hankel_factors(max_degree, k, R)
    if np.any(np.abs(hp) == 0.0):
        raise CapacityError("computed |H_n'(kR)| underflowed to zero")
    u1 = incident_trace("hard", k, R).trace_value
    return u1 / (1j * hp)


def _apply_diagonal(spectrum: CoefficientSpectrum, gain: np.ndarray) -> CoefficientSpectrum:
    return CoefficientSpectrum(
        spectrum.max_degree, {(n, m): gain[n] * v for (n, m), v in spectrum.items()}
    )


def forward_soft(d: BoundaryPerturbation, k: float, R: float) -> CoefficientSpectrum:
    """Far-field spectrum of the linearized soft-obstacle scattered field."""
    return _apply_diagonal(d.spectrum, _soft_gain(k, R, d.spectrum.max_degree))


def forward_hard(d: BoundaryPerturbation, k: float, R: float) -> CoefficientSpectrum:
    """Far-field spectrum of the linearized hard-obstacle scattered field."""
    return _apply_diagonal(d.spectrum, _hard_gain(k, R, d.spectrum.max_degree))


def _invert(
    amplitude: CoefficientSpectrum, gain: np.ndarray, n_cut: int
) -> BoundaryPerturbation:
    entries = {
        (n, m): v / gain[n] for (n, m), v in amplitude.items() if n <= n_cut
    }
    return BoundaryPerturbation(CoefficientSpectrum(amplitude.max_degree, entries))


def invert_soft(
    amplitude: CoefficientSpectrum, k: float, R: float, n_cut: int | None = None
) -> BoundaryPerturbation:
    """Recover the perturbation from a soft far-field spectrum, truncated
    at n_cut (default floor(sqrt(kR)))."""
    if n_cut is None:
        n_cut = default_cutoff(k, R)
    return _invert(amplitude, _soft_gain(k, R, amplitude.max_degree), n_cut)


def invert_hard(
    amplitude: CoefficientSpectrum, k: float, R: float, n_cut: int | None = None
) -> BoundaryPerturbation:
    """Recover the perturbation from a hard far-field spectrum, truncated
    at n_cut (default floor(sqrt(kR)))."""
    if n_cut is None:
        n_cut = default_cutoff(k, R)
    return _invert(amplitude, _hard_gain(k, R, amplitude.max_degree), n_cut)


def inversion_gain_soft(k: float, R: float, max_degree: int) -> np.ndarray:
    """Per-degree noise amplification |k i H_n(kR)| of the soft inverse map
    (nondecreasing in n beyond n ~ kR: the quantitative face of
    ill-posedness)."""
    h, _ = hankel_factors(max_degree, k, R)
    return k * np.abs(h)
