"""Double-double helpers built on error-free transformations (TwoSum,
Dekker split / TwoProd). A double-double is a pair (hi, lo) with
hi + lo representing the value and |lo| <= ulp(hi)/2.

Only the handful of operations needed by the Hankel finite sum are
provided. Dekker splitting overflows for |a| > ~1e300, which is exactly
the capacity limit enforced by the caller.
"""

from __future__ import annotations

_SPLITTER = 134217729.0  # 2**27 + 1


def two_sum(a: float, b: float) -> tuple[float, float]:
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def quick_two_sum(a: float, b: float) -> tuple[float, float]:
    # requires |a| >= |b|
    s = a + b
    return s, b - (s - a)


def two_prod(a: float, b: float) -> tuple[float, float]:
    p = a * b
    c = _SPLITTER * a
    ah = c - (c - a)
    al = a - ah
    c = _SPLITTER * b
    bh = c - (c - b)
    bl = b - bh
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


def dd_add(xh: float, xl: float, yh: float, yl: float) -> tuple[float, float]:
    s, e = two_sum(xh, yh)
    e += xl + yl
    return quick_two_sum(s, e)


def dd_mul(xh: float, xl: float, yh: float, yl: float) -> tuple[float, float]:
    p, e = two_prod(xh, yh)
    e += xh * yl + xl * yh
    return quick_two_sum(p, e)


def dd_mul_f(xh: float, xl: float, f: float) -> tuple[float, float]:
    p, e = two_prod(xh, f)
    e += xl * f
    return quick_two_sum(p, e)


def dd_div_f(num: float, dh: float, dl: float) -> tuple[float, float]:
    # num / (dh + dl)
    q0 = num / dh
    ph, pl = dd_mul_f(dh, dl, q0)
    rh, rl = two_sum(num, -ph)
    rl -= pl
    q1 = (rh + rl) / dh
    return quick_two_sum(q0, q1)
