"""Explicit envelopes for the rescaled Hankel function and its argument
derivative, with their applicability regions, plus a grid sweep that
certifies them numerically.

Four envelopes are provided:

  low:          sqrt(2)*e / (sqrt(pi)*t)                   valid for n^2 < t
  global:       sqrt(2)/(sqrt(pi)*t) * (1 + n/t)^n          valid for t > 0
  low_deriv:    sqrt(2)*e/sqrt(pi) * (sqrt(t^2+1)+1)/t^2    valid for n^2 < t
  global_deriv: sqrt(2)/(sqrt(pi)*t) * (sqrt(t^2+1)/t + n/t)
                * (1 + n/t)^n                               valid for t > 0

The low envelopes bound |H_n| and |H_n'|; the global ones hold for every
positive argument. Strict inequality is required and ties count as
violations, with one exception: at n = 0 the two global envelopes
coincide identically with the function they bound, so there the check is
agreement within a few ulps rather than strict dominance.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .specfun import hankel_value
from .util import worker_count

_SQRT2_OVER_SQRTPI = math.sqrt(2.0 / math.pi)

KINDS = ("low", "global", "low_deriv", "global_deriv")


@dataclass(frozen=True)
class EnvelopeReport:
    kind: str
    n: int
    t: float
    value_magnitude: float
    bound: float
    applicable: bool
    satisfied: bool


def _check_t(t: float) -> None:
    if not t > 0.0:
        raise DomainError(f"argument must be positive, got t={t}")


def low_frequency_applicable(n: int, t: float) -> bool:
    return n * n < t


def lemma_low_bound(n: int, t: float) -> float:
    """Low-frequency envelope for |H_n(t)| (applicable when n^2 < t)."""
    _check_t(t)
    return _SQRT2_OVER_SQRTPI * math.e / t


def lemma_global_bound(n: int, t: float) -> float:
    """Global envelope for |H_n(t)|."""
    _check_t(t)
    return _SQRT2_OVER_SQRTPI / t * (1.0 + n / t) ** n


def lemma_low_deriv_bound(n: int, t: float) -> float:
    """Low-frequency envelope for |H_n'(t)| (applicable when n^2 < t)."""
    _check_t(t)
    return _SQRT2_OVER_SQRTPI * math.e * (math.hypot(t, 1.0) + 1.0) / (t * t)


def lemma_global_deriv_bound(n: int, t: float) -> float:
    """Global envelope for |H_n'(t)|."""
    _check_t(t)
    return _SQRT2_OVER_SQRTPI / t * (math.hypot(t, 1.0) / t + n / t) * (1.0 + n / t) ** n


_BOUND_FUNCS = {
    "low": lemma_low_bound,
    "global": lemma_global_bound,
    "low_deriv": lemma_low_deriv_bound,
    "global_deriv": lemma_global_deriv_bound,
}


def check_point(kind: str, n: int, t: float, _h=None) -> EnvelopeReport:
    """Evaluate one envelope against the computed Hankel magnitude."""
    if kind not in _BOUND_FUNCS:
        raise DomainError(f"unknown envelope kind {kind!r}")
    h = hankel_value(n, t) if _h is None else _h
    magnitude = abs(h.derivative) if kind.endswith("deriv") else abs(h.value)
    bound = _BOUND_FUNCS[kind](n, t)
    applicable = True if kind.startswith("global") else low_frequency_applicable(n, t)
    # n = 0 global envelopes equal the function identically; accept
    # round-off-level agreement there instead of strict dominance.
    exactly_tight = n == 0 and kind.startswith("global")
    satisfied = magnitude < bound or (exactly_tight and magnitude <= bound * (1.0 + 1e-12))
    return EnvelopeReport(
        kind=kind,
        n=n,
        t=t,
        value_magnitude=magnitude,
        bound=bound,
        applicable=applicable,
        satisfied=satisfied,
    )


def log_grid(tmin: float, tmax: float, points: int) -> np.ndarray:
    if not (tmin > 0.0 and tmax >= tmin):
        raise DomainError(f"need 0 < tmin <= tmax, got [{tmin}, {tmax}]")
    if points < 1:
        raise DomainError("grid needs at least one point")
    if points == 1:
        return np.array([tmin])
    return np.logspace(math.log10(tmin), math.log10(tmax), points)


def sweep(
    nmax: int = 50,
    tmin: float = 0.1,
    tmax: float = 200.0,
    points: int = 200,
    kinds: tuple[str, ...] = KINDS,
) -> list[EnvelopeReport]:
    """Check the requested envelopes on an (n, t) log grid.

    Rows come back in deterministic (kind, n, t) order regardless of the
    number of worker threads.
    """
    ts = log_grid(tmin, tmax, points)

    def row(n: int) -> list[EnvelopeReport]:
        # one Hankel evaluation per (n, t), shared by all envelope kinds
        values = {float(t): hankel_value(n, float(t)) for t in ts}
        return [
            check_point(kind, n, t, _h=h)
            for kind in kinds
            for t, h in values.items()
        ]

    with ThreadPoolExecutor(max_workers=worker_count()) as pool:
        chunks = list(pool.map(row, range(nmax + 1)))
    return [report for chunk in chunks for report in chunk]


def violations(reports: list[EnvelopeReport]) -> list[EnvelopeReport]:
    """Reports whose envelope is applicable yet not satisfied."""
    return [r for r in reports if r.applicable and not r.satisfied]
