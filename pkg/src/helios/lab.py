"""Synthetic spectra with prescribed per-degree decay, exact-norm noise
injection, and wavenumber sweeps that measure how reconstruction error and
the stability budget behave as k doubles.

All randomness flows through numpy SeedSequences derived from
(master seed, k index, replicate index), so sweep output is bit-identical
across runs and independent of worker scheduling.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .field import sobolev_norm
from .harmonics import MAX_DEGREE_SUPPORTED, CoefficientSpectrum, aggregate
from .obstacle import (
    BoundaryPerturbation,
    default_cutoff,
    forward_hard,
    forward_soft,
    invert_hard,
    invert_soft,
)
from .field import sobolev_norm_sq, split_spectrum
from .stability import corollary_hard_terms, corollary_soft_terms
from .util import worker_count


@dataclass(frozen=True)
class DecayProfile:
    """Recipe for a random spectrum with aggregate magnitudes following
    amplitude * exp(-rate*n) (exponential) or amplitude * (1+n)^-rate
    (algebraic)."""

    kind: str  # "exponential" or "algebraic"
    rate: float
    max_degree: int
    seed: int
    amplitude: float = 1.0

    def degree_magnitudes(self) -> np.ndarray:
        n = np.arange(self.max_degree + 1, dtype=float)
        if self.kind == "exponential":
            return self.amplitude * np.exp(-self.rate * n)
        if self.kind == "algebraic":
            return self.amplitude * (1.0 + n) ** (-self.rate)
        raise DomainError(f"unknown decay kind {self.kind!r}")


def _validate_profile(profile: DecayProfile) -> None:
    if profile.max_degree < 0 or profile.max_degree > MAX_DEGREE_SUPPORTED:
        raise DomainError(f"max_degree must be in [0, {MAX_DEGREE_SUPPORTED}]")
    if profile.rate <= 0:
        raise DomainError("decay rate must be positive")


def make_spectrum(profile: DecayProfile) -> CoefficientSpectrum:
    """Random spectrum whose per-degree aggregates match the profile
    exactly: orders within each degree carry random complex directions
    renormalized to the target magnitude."""
    _validate_profile(profile)
    rng = np.random.default_rng(np.random.SeedSequence(profile.seed))
    target = profile.degree_magnitudes()
    out = CoefficientSpectrum(profile.max_degree)
    for n in range(profile.max_degree + 1):
        raw = rng.standard_normal(2 * n + 1) + 1j * rng.standard_normal(2 * n + 1)
        norm = float(np.linalg.norm(raw))
        if target[n] == 0.0 or norm == 0.0:
            continue
        scaled = raw * (target[n] / norm)
        for j, m in enumerate(range(-n, n + 1)):
            out[n, m] = complex(scaled[j])
    return out


def make_real_perturbation(profile: DecayProfile) -> BoundaryPerturbation:
    """Random real boundary perturbation with the profile's aggregate
    decay, built with conjugate symmetry d_{n,-m} = (-1)^m conj(d_{n,m})."""
    _validate_profile(profile)
    rng = np.random.default_rng(np.random.SeedSequence(profile.seed))
    target = profile.degree_magnitudes()
    out = CoefficientSpectrum(profile.max_degree)
    for n in range(profile.max_degree + 1):
        if target[n] == 0.0:
            continue
        half = {0: complex(rng.standard_normal())}
        for m in range(1, n + 1):
            half[m] = complex(rng.standard_normal(), rng.standard_normal())
        norm_sq = abs(half[0]) ** 2 + 2.0 * sum(abs(half[m]) ** 2 for m in range(1, n + 1))
        if norm_sq == 0.0:
            continue
        scale = target[n] / math.sqrt(norm_sq)
        out[n, 0] = half[0] * scale
        for m in range(1, n + 1):
            out[n, m] = half[m] * scale
            out[n, -m] = (-1) ** m * (half[m] * scale).conjugate()
    return BoundaryPerturbation(out)


def perturb(spectrum: CoefficientSpectrum, delta: float, seed) -> CoefficientSpectrum:
    """Add random noise across all indices up to max_degree, rescaled so
    the added coefficient energy is exactly delta^2."""
    if delta < 0:
        raise DomainError("noise level delta must be nonnegative")
    if delta == 0.0:
        return spectrum
    rng = np.random.default_rng(seed)
    noise = CoefficientSpectrum(spectrum.max_degree)
    total = 0.0
    for n in range(spectrum.max_degree + 1):
        raw = rng.standard_normal(2 * n + 1) + 1j * rng.standard_normal(2 * n + 1)
        total += float(np.sum(np.abs(raw) ** 2))
        for j, m in enumerate(range(-n, n + 1)):
            noise[n, m] = complex(raw[j])
    scale = delta / math.sqrt(total)
    return spectrum + noise.scaled(scale)


@dataclass(frozen=True)
class SweepRow:
    """One (wavenumber, noise replicate) record of a sweep."""

    k: float
    replicate: int
    N: int
    eps1: float
    eps2: float
    E: float
    lhs: float
    rhs_lipschitz: float
    rhs_holder: float
    rhs_apriori: float
    rhs_total: float
    reconstruction_error: float


_FORWARD = {"soft": forward_soft, "hard": forward_hard}
_INVERT = {"soft": invert_soft, "hard": invert_hard}


def ksweep(
    d: BoundaryPerturbation,
    R: float,
    k_list: list[float],
    delta: float,
    seeds: int,
    master_seed: int = 0,
    kind: str = "soft",
) -> list[SweepRow]:
    """Forward-map d at each wavenumber, inject noise of exact level
    delta, invert with the stability cutoff, and record the reconstruction
    error together with the perturbation-space stability budget.

    Budget columns are the obstacle bound on the squared surface norm of
    the recovered perturbation (T2-style Hoelder term for the soft kind),
    evaluated with the spectral split of the noisy amplitude and the
    first-order norm of the recovered perturbation; lhs is that squared
    surface norm itself."""
    if not k_list:
        raise DomainError("k_list must be nonempty")
    if seeds < 1:
        raise DomainError("need at least one noise replicate")
    if kind not in _FORWARD:
        raise DomainError(f"unknown obstacle kind {kind!r}")
    for k in k_list:
        if k * R < 2.0:
            raise DomainError(f"sweep requires kR >= 2, got k={k}, R={R}")

    def run_k(k_index: int) -> list[SweepRow]:
        k = float(k_list[k_index])
        amplitude = _FORWARD[kind](d, k, R)
        n_cut = default_cutoff(k, R)
        rows = []
        for rep in range(seeds):
            child = np.random.SeedSequence(entropy=master_seed, spawn_key=(k_index, rep))
            noisy = perturb(amplitude, delta, child)
            split = split_spectrum(noisy, k, R)
            recovered = _INVERT[kind](noisy, k, R, n_cut)
            rec_agg = aggregate(recovered.spectrum)
            lhs = sobolev_norm_sq(rec_agg.values, 0, R)
            d_norm1 = math.sqrt(sobolev_norm_sq(rec_agg.values, 1, R))
            if kind == "soft":
                terms = corollary_soft_terms(
                    split.eps1, split.eps2, split.E, k, R, d_norm1, variant="T2"
                )
            else:
                terms = corollary_hard_terms(split.eps1, split.eps2, split.E, k, R, d_norm1)
            diff = aggregate(recovered.spectrum - d.spectrum)
            err = sobolev_norm(diff.values, 0, R)
            rows.append(
                SweepRow(
                    k=k,
                    replicate=rep,
                    N=split.N,
                    eps1=split.eps1,
                    eps2=split.eps2,
                    E=split.E,
                    lhs=lhs,
                    rhs_lipschitz=terms.lipschitz,
                    rhs_holder=terms.holder,
                    rhs_apriori=terms.apriori,
                    rhs_total=terms.total,
                    reconstruction_error=err,
                )
            )
        return rows

    order = sorted(range(len(k_list)), key=lambda i: k_list[i])
    with ThreadPoolExecutor(max_workers=worker_count()) as pool:
        chunks = list(pool.map(run_k, order))
    return [row for chunk in chunks for row in chunk]


def ensemble_verify(
    size: int,
    seed: int,
    which: str,
    kr_range: tuple[float, float] = (2.0, 100.0),
    R: float = 1.0,
) -> tuple[int, float]:
    """Check one stability estimate on `size` seeded random decaying
    spectra with kR drawn from kr_range; returns (failures, min_slack).

    Spectra are rescaled to total coefficient energy below one: the
    estimates live in the small-data regime eps2 < 1 (so E > 0), and the
    derivative estimate in particular needs E + k > 1."""
    from .stability import verify_theorem

    if size < 1:
        raise DomainError("ensemble size must be at least 1")
    lo, hi = kr_range
    if lo < 2.0 or hi < lo:
        raise DomainError(f"kR range must satisfy 2 <= lo <= hi, got [{lo}, {hi}]")
    rng = np.random.default_rng(seed)
    failures = 0
    min_slack = math.inf
    for _ in range(size):
        profile = DecayProfile(
            kind=str(rng.choice(["exponential", "algebraic"])),
            rate=float(rng.uniform(0.3, 1.5)),
            max_degree=int(rng.integers(1, 31)),
            seed=int(rng.integers(0, 2**63)),
            amplitude=float(rng.uniform(0.1, 10.0)),
        )
        k = float(rng.uniform(lo, hi)) / R
        spectrum = make_spectrum(profile)
        target = float(rng.uniform(0.05, 0.95))
        spectrum = spectrum.scaled(target / math.sqrt(spectrum.energy()))
        report = verify_theorem(spectrum, k, R, which)
        min_slack = min(min_slack, report.rhs_total - report.lhs)
        if not report.satisfied:
            failures += 1
    return failures, min_slack


def mean_errors_by_k(rows: list[SweepRow]) -> dict[float, float]:
    """Mean reconstruction error per wavenumber."""
    sums: dict[float, list[float]] = {}
    for row in rows:
        sums.setdefault(row.k, []).append(row.reconstruction_error)
    return {k: float(np.mean(v)) for k, v in sorted(sums.items())}
