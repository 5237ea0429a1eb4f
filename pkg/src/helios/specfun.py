"""Spherical Hankel functions of the first kind, uniformly rescaled by
sqrt(2/pi), evaluated through the exact finite-sum representation

    H_n(t) = sqrt(2/pi) * (-i)^(n+1) * (e^(it)/t) * S_n(t),
    S_n(t) = sum_{m=0..n} (n+m)! / (m! (n-m)!) * (i/(2t))^m,

together with the argument derivative

    H_n'(t) = sqrt(2/pi) * (-i)^(n+1) * (e^(it)/t^2)
              * ((it - 1) * S_n(t) - sum_{m=1..n} m * term_m),

and an independent magnitude oracle built from Bessel recurrences
(upward for y_n, normalized downward Miller scheme for j_n).

The finite sum is exact (no truncation); terms are generated by the ratio
recursion term_{m+1} = term_m * i * (n+m+1)(n-m) / (2t(m+1)) and summed in
ascending m in double-double arithmetic built on error-free
transformations, which keeps the relative error of S_n(t) below 1e-12
even in the cancellation-heavy region t ~ n. Magnitudes agree with the
classical spherical Hankel function times sqrt(2/pi); the global phase is
the standard one, so the identity H_0' = -H_1 holds exactly.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from . import _dd
from .errors import CapacityError, DomainError

N_MAX_SUPPORTED = 60
T_MIN_ORACLE = 0.1
CAPACITY_LIMIT = 1e300

_PREF = math.sqrt(2.0 / math.pi)


@dataclass(frozen=True)
class HankelValue:
    """Value and argument-derivative of the rescaled Hankel function."""

    order: int
    argument: float
    value: complex
    derivative: complex


def _check_args(n: int, t: float) -> None:
    if n < 0:
        raise DomainError(f"order must be nonnegative, got n={n}")
    if n > N_MAX_SUPPORTED:
        raise DomainError(f"order n={n} exceeds supported maximum {N_MAX_SUPPORTED}")
    if not t > 0.0:
        raise DomainError(f"argument must be positive, got t={t}")


def _finite_sums(n: int, t: float) -> tuple[complex, complex]:
    """Return (S_n(t), sum_{m>=1} m*term_m) via the term-ratio recursion.

    Term and partial sums are carried as double-double complex values;
    raises CapacityError when a term or partial-sum magnitude would exceed
    CAPACITY_LIMIT.
    """
    # complex double-double: (re_hi, re_lo, im_hi, im_lo)
    tr, trl, ti, til = 1.0, 0.0, 0.0, 0.0  # current term
    sr, srl, si, sil = 1.0, 0.0, 0.0, 0.0  # S_n partial sum
    mr, mrl, mi, mil = 0.0, 0.0, 0.0, 0.0  # sum of m * term_m
    two_t = 2.0 * t
    for m in range(n):
        num = float((n + m + 1) * (n - m))
        dh, dl = _dd.two_prod(two_t, float(m + 1))
        rh, rl = _dd.dd_div_f(num, dh, dl)
        # term *= i * r: multiply by r, then rotate (re, im) -> (-im, re)
        ar, arl = _dd.dd_mul(tr, trl, rh, rl)
        ai, ail = _dd.dd_mul(ti, til, rh, rl)
        tr, trl, ti, til = -ai, -ail, ar, arl
        if abs(tr) > CAPACITY_LIMIT or abs(ti) > CAPACITY_LIMIT:
            raise CapacityError(
                f"term magnitude overflow in finite sum at n={n}, t={t}, m={m + 1}"
            )
        sr, srl = _dd.dd_add(sr, srl, tr, trl)
        si, sil = _dd.dd_add(si, sil, ti, til)
        w = float(m + 1)
        wr, wrl = _dd.dd_mul_f(tr, trl, w)
        wi, wil = _dd.dd_mul_f(ti, til, w)
        mr, mrl = _dd.dd_add(mr, mrl, wr, wrl)
        mi, mil = _dd.dd_add(mi, mil, wi, wil)
        if abs(sr) > CAPACITY_LIMIT or abs(si) > CAPACITY_LIMIT:
            raise CapacityError(
                f"partial sum overflow in finite sum at n={n}, t={t}, m={m + 1}"
            )
    return complex(sr + srl, si + sil), complex(mr + mrl, mi + mil)


def hankel_paper(n: int, t: float) -> complex:
    """Rescaled spherical Hankel function sqrt(2/pi)*h_n^(1)(t)."""
    _check_args(n, t)
    s, _ = _finite_sums(n, t)
    return _PREF * (-1j) ** (n + 1) * cmath.exp(1j * t) / t * s


def hankel_paper_deriv(n: int, t: float) -> complex:
    """d/dt of hankel_paper(n, .) at t, from the differentiated finite sum."""
    _check_args(n, t)
    s, ms = _finite_sums(n, t)
    return _PREF * (-1j) ** (n + 1) * cmath.exp(1j * t) / (t * t) * ((1j * t - 1.0) * s - ms)


def hankel_value(n: int, t: float) -> HankelValue:
    """Bundle value and derivative (single finite-sum pass)."""
    _check_args(n, t)
    s, ms = _finite_sums(n, t)
    phase = _PREF * (-1j) ** (n + 1) * cmath.exp(1j * t)
    return HankelValue(
        order=n,
        argument=t,
        value=phase / t * s,
        derivative=phase / (t * t) * ((1j * t - 1.0) * s - ms),
    )


def _spherical_y(n: int, t: float) -> float:
    """y_n(t) by upward recurrence (stable for y)."""
    y0 = -math.cos(t) / t
    if n == 0:
        return y0
    y1 = -math.cos(t) / (t * t) - math.sin(t) / t
    for m in range(1, n):
        y0, y1 = y1, (2 * m + 1) / t * y1 - y0
    return y1


def _spherical_j(n: int, t: float) -> float:
    """j_n(t) by downward Miller recurrence, normalized with
    sum_m (2m+1) j_m(t)^2 = 1."""
    start = int(max(n, t)) + 60
    jp = 0.0  # j_{m+1}
    jc = 1e-30  # j_m, arbitrary seed
    norm = (2 * start + 1) * jc * jc
    captured = jc if n == start else 0.0
    for m in range(start, 0, -1):
        jm = (2 * m + 1) / t * jc - jp
        jp, jc = jc, jm
        if abs(jc) > 1e140:
            scale = 1e-140
            jp *= scale
            jc *= scale
            norm *= scale * scale
            captured *= scale
        norm += (2 * (m - 1) + 1) * jc * jc
        if m - 1 == n:
            captured = jc
    return captured / math.sqrt(norm)


def hankel_magnitude_oracle(n: int, t: float) -> float:
    """|hankel_paper(n, t)| through an independent recurrence path:
    sqrt(2/pi) * hypot(j_n(t), y_n(t))."""
    if n < 0 or n > N_MAX_SUPPORTED:
        raise DomainError(f"oracle supports 0 <= n <= {N_MAX_SUPPORTED}, got {n}")
    if not t >= T_MIN_ORACLE:
        raise DomainError(f"oracle supports t >= {T_MIN_ORACLE}, got {t}")
    return _PREF * math.hypot(_spherical_j(n, t), _spherical_y(n, t))
