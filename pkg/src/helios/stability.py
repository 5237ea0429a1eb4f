"""Right-hand sides of the near-field stability estimates and the
linearized-obstacle corollaries, plus a verifier that checks the
inequalities against traces computed from actual spectra.

The three estimates bound squared surface norms of the trace (or of its
radial derivative) by a Lipschitz term in eps1, a Hoelder-type term in
eps2, and an a-priori term in M/(E + k):

  T1:    (2e^2/pi) eps1^2 + (2/pi) e^(2/R) eps2        + R^2 M1^2/(E+k)
  T2:    (2e^2/pi) eps1^2 + sqrt(2R/(pi k)) e^(1/R) M1 sqrt(eps2)
                                                        + R^2 M1^2/(E+k)
  T1der: (e^2/pi)(3+sqrt(5)) k^2 eps1^2 + k^2 e^(2/R) eps2
                          + R^2 M2^2 / (E + k - 2 sqrt(E+k) + 1)

When eps2 = 0, E = +inf and every E-denominated or eps2-weighted term is
zero (the continuous limit of the estimates).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .errors import DomainError
from .field import near_field_trace, sobolev_norm_sq, split_spectrum


class RhsTerms(NamedTuple):
    """Named breakdown of a stability right-hand side."""

    lipschitz: float
    holder: float
    apriori: float

    @property
    def total(self) -> float:
        return self.lipschitz + self.holder + self.apriori

    @property
    def non_lipschitz(self) -> float:
        return self.holder + self.apriori


@dataclass(frozen=True)
class StabilityReport:
    lhs: float
    rhs_terms: RhsTerms
    rhs_total: float
    satisfied: bool
    inputs: dict


def _check_common(eps1: float, eps2: float, E: float, k: float, R: float) -> None:
    if eps1 < 0 or eps2 < 0:
        raise DomainError("eps1 and eps2 must be nonnegative")
    if not (k > 0 and R > 0):
        raise DomainError("k and R must be positive")
    if k * R < 2.0:
        raise DomainError(f"estimates require kR >= 2, got kR = {k * R}")
    if not E + k > 0:
        raise DomainError("need E + k > 0")


def _apriori(M_sq_scaled: float, denom: float, E: float) -> float:
    return 0.0 if math.isinf(E) else M_sq_scaled / denom


def rhs_T1(eps1: float, eps2: float, E: float, k: float, R: float, M1: float) -> RhsTerms:
    """Right-hand side of the first trace estimate."""
    _check_common(eps1, eps2, E, k, R)
    return RhsTerms(
        lipschitz=2.0 * math.e**2 / math.pi * eps1**2,
        holder=2.0 / math.pi * math.exp(2.0 / R) * eps2,
        apriori=_apriori(R * R * M1 * M1, E + k, E),
    )


def rhs_T2(eps1: float, eps2: float, E: float, k: float, R: float, M1: float) -> RhsTerms:
    """Right-hand side of the second trace estimate (Hoelder in sqrt(eps2))."""
    _check_common(eps1, eps2, E, k, R)
    return RhsTerms(
        lipschitz=2.0 * math.e**2 / math.pi * eps1**2,
        holder=math.sqrt(2.0 * R / (math.pi * k)) * math.exp(1.0 / R) * M1 * math.sqrt(eps2),
        apriori=_apriori(R * R * M1 * M1, E + k, E),
    )


def rhs_T1der(eps1: float, eps2: float, E: float, k: float, R: float, M2: float) -> RhsTerms:
    """Right-hand side of the radial-derivative estimate."""
    _check_common(eps1, eps2, E, k, R)
    if not math.isinf(E) and not E + k > 1.0:
        raise DomainError("derivative estimate needs E + k > 1")
    denom = E + k - 2.0 * math.sqrt(E + k) + 1.0
    return RhsTerms(
        lipschitz=math.e**2 / math.pi * (3.0 + math.sqrt(5.0)) * k * k * eps1**2,
        holder=k * k * math.exp(2.0 / R) * eps2,
        apriori=_apriori(R * R * M2 * M2, denom, E),
    )


_RHS = {"T1": rhs_T1, "T2": rhs_T2, "T1der": rhs_T1der}


def verify_theorem(spectrum, k: float, R: float, which: str) -> StabilityReport:
    """Check one stability estimate on the trace generated by a spectrum.

    lhs is the squared surface norm of the trace (T1, T2) or of its radial
    derivative (T1der); M1/M2 are first-order norms of the same trace.
    """
    if which not in _RHS:
        raise DomainError(f"unknown estimate {which!r} (expected T1, T2, or T1der)")
    split = split_spectrum(spectrum, k, R)
    trace = near_field_trace(spectrum, k, R)
    values = trace.radial_derivatives if which == "T1der" else trace.values
    lhs = sobolev_norm_sq(values, 0, R)
    M = math.sqrt(sobolev_norm_sq(values, 1, R))
    terms = _RHS[which](split.eps1, split.eps2, split.E, k, R, M)
    return StabilityReport(
        lhs=lhs,
        rhs_terms=terms,
        rhs_total=terms.total,
        satisfied=lhs <= terms.total,
        inputs={
            "k": k,
            "R": R,
            "N": split.N,
            "eps1": split.eps1,
            "eps2": split.eps2,
            "E": split.E,
            ("M2" if which == "T1der" else "M1"): M,
            "which": which,
        },
    )


def corollary_soft_terms(
    eps1: float,
    eps2: float,
    E: float,
    k: float,
    R: float,
    d_norm1: float,
    variant: str = "T1",
) -> RhsTerms:
    """Term breakdown of the soft-obstacle perturbation bound.

    The T2 variant is the direct substitution of
    M1 = sqrt(k^2 R^2 + 1)/R * d_norm1 into the second trace estimate.
    """
    _check_common(eps1, eps2, E, k, R)
    kr2p1 = k * k * R * R + 1.0
    pref = R * R / kr2p1
    if variant == "T1":
        holder = 2.0 / math.pi * math.exp(2.0 / R) * eps2
    elif variant == "T2":
        holder = (
            math.sqrt(2.0 * R / (math.pi * k))
            * math.exp(1.0 / R)
            * math.sqrt(kr2p1)
            / R
            * d_norm1
            * math.sqrt(eps2)
        )
    else:
        raise DomainError(f"unknown variant {variant!r} (expected T1 or T2)")
    return RhsTerms(
        lipschitz=pref * 2.0 * math.e**2 / math.pi * eps1**2,
        holder=pref * holder,
        apriori=_apriori(R * R * d_norm1 * d_norm1, E + k, E),
    )


def rhs_corollary_soft(
    eps1: float,
    eps2: float,
    E: float,
    k: float,
    R: float,
    d_norm1: float,
    variant: str = "T1",
) -> float:
    """Bound on the squared surface norm of a soft-obstacle perturbation."""
    return corollary_soft_terms(eps1, eps2, E, k, R, d_norm1, variant).total


def corollary_hard_terms(
    eps1: float, eps2: float, E: float, k: float, R: float, d_norm1: float
) -> RhsTerms:
    """Term breakdown of the hard-obstacle perturbation bound."""
    _check_common(eps1, eps2, E, k, R)
    if not math.isinf(E) and not E + k > 1.0:
        raise DomainError("hard-obstacle bound needs E + k > 1")
    kr2 = k * k * R * R
    pref = (kr2 + 1.0) / kr2
    denom = E + k - 2.0 * math.sqrt(E + k) + 1.0
    return RhsTerms(
        lipschitz=pref * math.e**2 / math.pi * (3.0 + math.sqrt(5.0)) * eps1**2,
        holder=pref * math.exp(2.0 / R) * eps2,
        apriori=_apriori(R * R * d_norm1 * d_norm1, denom, E),
    )


def rhs_corollary_hard(
    eps1: float, eps2: float, E: float, k: float, R: float, d_norm1: float
) -> float:
    """Bound on the squared surface norm of a hard-obstacle perturbation."""
    return corollary_hard_terms(eps1, eps2, E, k, R, d_norm1).total
