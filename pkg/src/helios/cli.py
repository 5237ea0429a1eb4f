"""Command-line front end.

Exit codes: 0 all checks passed / command succeeded, 1 a mathematical
check failed (an inequality or invariant was violated), 2 usage, I/O, or
domain error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bounds as bounds_mod
from . import io as io_mod
from .errors import CapacityError, DomainError, ResolutionError
from .field import low_pass, near_field_trace, sobolev_norm, split_spectrum
from .lab import DecayProfile, ensemble_verify, ksweep, make_real_perturbation
from .obstacle import BoundaryPerturbation, forward_hard, forward_soft, invert_hard, invert_soft
from .specfun import hankel_value

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


def cmd_hankel(args) -> int:
    h = hankel_value(args.n, args.t)
    z = h.derivative if args.deriv else h.value
    label = "derivative" if args.deriv else "value"
    print(f"n={args.n} t={io_mod.fmt(args.t)} {label}={io_mod.fmt(z.real)}{z.imag:+.17g}j "
          f"magnitude={io_mod.fmt(abs(z))}")
    return EXIT_OK


def cmd_bounds_check(args) -> int:
    reports = bounds_mod.sweep(
        nmax=args.nmax, tmin=args.tmin, tmax=args.tmax, points=args.points
    )
    bad = bounds_mod.violations(reports)
    applicable = sum(1 for r in reports if r.applicable)
    for kind in bounds_mod.KINDS:
        kind_reports = [r for r in reports if r.kind == kind and r.applicable]
        kind_bad = [r for r in kind_reports if not r.satisfied]
        print(f"{kind}: {len(kind_reports)} points checked, {len(kind_bad)} violations")
    print(f"total: {applicable} applicable points, {len(bad)} violations")
    for r in bad[:20]:
        print(f"  VIOLATION {r.kind} n={r.n} t={io_mod.fmt(r.t)} "
              f"|H|={io_mod.fmt(r.value_magnitude)} bound={io_mod.fmt(r.bound)}")
    return EXIT_OK if not bad else EXIT_CHECK_FAILED


def cmd_reconstruct(args) -> int:
    k, R, spectrum = io_mod.load_spectrum(args.input)
    if args.ncut is not None:
        spectrum = low_pass(spectrum, args.ncut)
    trace = near_field_trace(spectrum, k, R)
    split = split_spectrum(spectrum, k, R)
    norms = {
        "u_0": sobolev_norm(trace.values, 0, R),
        "u_1": sobolev_norm(trace.values, 1, R),
        "du_0": sobolev_norm(trace.radial_derivatives, 0, R),
        "du_1": sobolev_norm(trace.radial_derivatives, 1, R),
    }
    doc = {
        "k": k,
        "R": R,
        "N": split.N,
        "eps1": split.eps1,
        "eps2": split.eps2,
        "E": split.E,
        "norms": norms,
        "degrees": [
            {
                "n": n,
                "u_re": float(trace.values[n].real),
                "u_im": float(trace.values[n].imag),
                "du_re": float(trace.radial_derivatives[n].real),
                "du_im": float(trace.radial_derivatives[n].imag),
            }
            for n in range(trace.max_degree + 1)
        ],
    }
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(doc, fh, indent=1, default=float)
            fh.write("\n")
    for name, value in norms.items():
        print(f"{name}={io_mod.fmt(value)}")
    return EXIT_OK


def cmd_stability_verify(args) -> int:
    failures, min_slack = ensemble_verify(
        size=args.ensemble_size,
        seed=args.seed,
        which=args.which,
        kr_range=tuple(args.kR_range),
    )
    print(f"which={args.which} ensemble={args.ensemble_size} "
          f"failures={failures} min_slack={io_mod.fmt(min_slack)}")
    return EXIT_OK if failures == 0 and min_slack > 0 else EXIT_CHECK_FAILED


def cmd_obstacle(args) -> int:
    k, R, spectrum = io_mod.load_spectrum(args.input)
    if args.direction == "forward":
        d = BoundaryPerturbation(spectrum)
        out = forward_soft(d, k, R) if args.kind == "soft" else forward_hard(d, k, R)
    else:
        invert = invert_soft if args.kind == "soft" else invert_hard
        out = invert(spectrum, k, R, args.ncut).spectrum
    io_mod.dump_spectrum(args.out, k, R, out)
    print(f"{args.direction} {args.kind}: wrote {args.out} "
          f"(max_degree={out.max_degree}, energy={io_mod.fmt(out.energy())})")
    return EXIT_OK


def cmd_sweep(args) -> int:
    with open(args.config) as fh:
        cfg = json.load(fh)
    try:
        profile = DecayProfile(
            kind=cfg["profile"]["kind"],
            rate=float(cfg["profile"]["rate"]),
            max_degree=int(cfg["profile"]["max_degree"]),
            seed=int(cfg["profile"]["seed"]),
            amplitude=float(cfg["profile"].get("amplitude", 1.0)),
        )
        k_list = [float(k) for k in cfg["k_list"]]
        R = float(cfg.get("R", 1.0))
        delta = float(cfg.get("delta", 0.0))
        seeds = int(cfg.get("seeds", 1))
        master_seed = int(cfg.get("seed", 0))
        kind = cfg.get("kind", "soft")
    except (KeyError, TypeError) as exc:
        raise DomainError(f"malformed sweep config: {exc}") from exc
    d = make_real_perturbation(profile)
    rows = ksweep(d, R, k_list, delta, seeds, master_seed=master_seed, kind=kind)
    with open(args.out, "w") as fh:
        io_mod.write_sweep_csv(fh, rows)
    print(f"wrote {len(rows)} rows to {args.out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="helios",
        description="Near-field recovery from the scattering amplitude: "
        "Hankel envelopes, stability budgets, and linearized obstacle inversion.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hankel", help="evaluate the rescaled Hankel function")
    p.add_argument("n", type=int)
    p.add_argument("t", type=float)
    p.add_argument("--deriv", action="store_true", help="argument derivative instead of value")
    p.set_defaults(func=cmd_hankel)

    p = sub.add_parser("bounds-check", help="certify the Hankel envelopes on a grid")
    p.add_argument("--nmax", type=int, default=50)
    p.add_argument("--tmin", type=float, default=0.1)
    p.add_argument("--tmax", type=float, default=200.0)
    p.add_argument("--points", type=int, default=200)
    p.set_defaults(func=cmd_bounds_check)

    p = sub.add_parser("reconstruct", help="near-field trace from a spectrum file")
    p.add_argument("input")
    p.add_argument("--ncut", type=int, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("stability-verify", help="check a stability estimate on a random ensemble")
    p.add_argument("--ensemble-size", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--kR-range", dest="kR_range", type=float, nargs=2, default=[2.0, 100.0])
    p.add_argument("--which", choices=["T1", "T2", "T1der"], default="T1")
    p.set_defaults(func=cmd_stability_verify)

    p = sub.add_parser("obstacle", help="linearized obstacle forward/inverse maps")
    p.add_argument("direction", choices=["forward", "invert"])
    p.add_argument("input")
    p.add_argument("--kind", choices=["soft", "hard"], required=True)
    p.add_argument("--ncut", type=int, default=None)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_obstacle)

    p = sub.add_parser("sweep", help="wavenumber sweep from a JSON config")
    p.add_argument("--config", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_sweep)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, CapacityError, ResolutionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
