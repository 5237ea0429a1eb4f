"""File formats: JSON spectrum files and the sweep CSV.

A spectrum file carries the wavenumber, the observation radius, and a
list of coefficient records {n, m, re, im}. Numbers are serialized with
17 significant digits, so parse/serialize round trips are lossless.
"""

from __future__ import annotations

import json
from typing import TextIO

from .errors import DomainError
from .harmonics import MAX_DEGREE_SUPPORTED, CoefficientSpectrum
from .lab import SweepRow

CSV_HEADER = "k,N,eps1,eps2,E,lhs,rhs_lipschitz,rhs_holder,rhs_apriori,rhs_total,reconstruction_error"


def fmt(x: float) -> str:
    return format(float(x), ".17g")


def dump_spectrum(path: str, k: float, R: float, spectrum: CoefficientSpectrum) -> None:
    records = [
        {"n": n, "m": m, "re": float(v.real), "im": float(v.imag)}
        for (n, m), v in sorted(spectrum.items())
    ]
    doc = {
        "k": float(k),
        "R": float(R),
        "max_degree": spectrum.max_degree,
        "coefficients": records,
    }
    with open(path, "w") as fh:
        # round-trip exact float serialization
        json.dump(doc, fh, indent=1, default=float)
        fh.write("\n")


def load_spectrum(path: str) -> tuple[float, float, CoefficientSpectrum]:
    with open(path) as fh:
        doc = json.load(fh)
    try:
        k = float(doc["k"])
        R = float(doc["R"])
        records = doc["coefficients"]
    except (KeyError, TypeError) as exc:
        raise DomainError(f"malformed spectrum file {path}: {exc}") from exc
    max_degree = int(doc.get("max_degree", max((r["n"] for r in records), default=0)))
    if max_degree > MAX_DEGREE_SUPPORTED:
        raise DomainError(f"spectrum degree {max_degree} exceeds {MAX_DEGREE_SUPPORTED}")
    spectrum = CoefficientSpectrum(max_degree)
    for rec in records:
        n, m = int(rec["n"]), int(rec["m"])
        if not (0 <= n <= max_degree and abs(m) <= n):
            raise DomainError(f"invalid index (n={n}, m={m}) in {path}")
        spectrum[n, m] = complex(float(rec["re"]), float(rec["im"]))
    return k, R, spectrum


def write_sweep_csv(fh: TextIO, rows: list[SweepRow]) -> None:
    fh.write(CSV_HEADER + "\n")
    for r in rows:
        fields = [
            fmt(r.k),
            str(r.N),
            fmt(r.eps1),
            fmt(r.eps2),
            fmt(r.E),
            fmt(r.lhs),
            fmt(r.rhs_lipschitz),
            fmt(r.rhs_holder),
            fmt(r.rhs_apriori),
            fmt(r.rhs_total),
            fmt(r.reconstruction_error),
        ]
        fh.write(",".join(fields) + "\n")
