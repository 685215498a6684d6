"""``rsverify`` command line.

    rsverify verify all --seed 7 --out report.json
    rsverify verify split --order 6
    rsverify lfactor --case spin --satake 1,1
    rsverify lfactor --case wedge2 --satake 1,-1,i,i --q 5 --s 2
    rsverify sample --kind inert --seed 3 --count 5
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from ..lfactor import (
    spin_factor,
    std_twisted_factor,
    wedge2_factor,
    wedge2_factor_inert_via_spin,
    wedge2_factor_inert_via_std,
)
from ..satake import SatakeClassA3, SatakeClassC2, symbolic_class
from ..lie import A3, C2
from .config import ConfigError, load_config
from .report import GROUPS, run_suite
from .sampling import sample_angles, sample_satake

# case -> (root system, builder taking (class, sign))
LFACTOR_CASES = {
    "wedge2": (A3, lambda c, sign: wedge2_factor(c)),
    "spin": (C2, lambda c, sign: spin_factor(c)),
    "std": (C2, lambda c, sign: std_twisted_factor(c, 1)),
    "std-twisted": (C2, lambda c, sign: std_twisted_factor(c, sign)),
    "wedge2-inert-spin": (C2, lambda c, sign: wedge2_factor_inert_via_spin(c)),
    "wedge2-inert-std": (C2, lambda c, sign: wedge2_factor_inert_via_std(c)),
}


class LiteralError(ValueError):
    def __init__(self, text: str, entry: int, column: int, reason: str):
        super().__init__(f"--satake {text!r}: entry {entry} (column {column}): {reason}")
        self.entry = entry
        self.column = column


def parse_number(token: str):
    """Exact rational if possible, otherwise a complex literal (``i`` or ``j`` as imaginary unit)."""
    token = token.strip()
    if not token:
        raise ValueError("empty entry")
    try:
        return Fraction(token)
    except ValueError:
        pass
    try:
        return complex(token.replace(" ", "").replace("i", "j"))
    except ValueError:
        raise ValueError(f"not a number: {token!r}") from None


def parse_satake_literals(text: str) -> list:
    values = []
    column = 1
    for entry, token in enumerate(text.split(","), 1):
        lead = len(token) - len(token.lstrip())
        try:
            values.append(parse_number(token))
        except ValueError as exc:
            raise LiteralError(text, entry, column + lead, str(exc)) from None
        column += len(token) + 1
    return values


def build_satake(system, text: str):
    if text.strip() == "symbolic":
        return symbolic_class(system)
    values = parse_satake_literals(text)
    want = 4 if system is A3 else 2
    if len(values) != want:
        column = len(text) + 1
        raise LiteralError(text, len(values), column, f"expected {want} entries, got {len(values)}")
    try:
        if system is A3:
            return SatakeClassA3(tuple(values))
        return SatakeClassC2(*values)
    except (ValueError, ZeroDivisionError) as exc:
        raise LiteralError(text, 1, 1, str(exc)) from None


def format_coefficient(c) -> str:
    if isinstance(c, complex):
        if abs(c.imag) < 1e-15:
            return repr(c.real)
        return f"{c.real!r}{c.imag:+}i"
    return str(c)


def _parse_order(text: str | None):
    if text is None:
        return None, None
    parts = text.split(",")
    try:
        values = [int(p) for p in parts]
    except ValueError:
        raise ConfigError(f"--order expects N or SPLIT,INERT, got {text!r}") from None
    if len(values) == 1:
        return values[0], values[0]
    if len(values) == 2:
        return values[0], values[1]
    raise ConfigError(f"--order expects N or SPLIT,INERT, got {text!r}")


def cmd_verify(args) -> int:
    split_order, inert_order = _parse_order(args.order)
    to_stdout = args.out == "-"
    cfg = load_config(
        args.config,
        split_order=split_order,
        inert_order=inert_order,
        samples=args.samples,
        seed=args.seed,
        q=args.q,
        tol=args.tol,
        out=None if to_stdout else args.out,
        timings=True if args.timings else None,
        inject_fault=args.inject_fault,
    )
    report = run_suite(cfg, args.group)
    if to_stdout:
        sys.stdout.write(report.to_json())
    else:
        for c in report.checks:
            print(f"{c.status.upper():4}  {c.id:32} {c.anchor}")
        passed = len(report.checks) - len(report.failed)
        print(f"{passed}/{len(report.checks)} checks passed")
        if cfg.out:
            print(f"report written to {cfg.out}")
    return report.exit_code


def cmd_lfactor(args) -> int:
    system, build = LFACTOR_CASES[args.case]
    satake = build_satake(system, args.satake)
    factor = build(satake, args.sign)
    print(f"case: {args.case}")
    print("coefficients: " + ", ".join(format_coefficient(c) for c in factor.coefficients))
    if args.s is not None:
        if args.satake.strip() == "symbolic":
            raise LiteralError(args.satake, 1, 1, "a numeric class is needed to evaluate at s")
        try:
            s_value = complex(parse_number(args.s))
        except ValueError as exc:
            raise ValueError(f"--s: {exc}") from None
        value = factor.at(s_value, args.q)
        print(f"T = {args.q}^-{args.s}")
        print(f"L = {format_coefficient(complex(value))}")
    return 0


def cmd_sample(args) -> int:
    angles = sample_angles(args.kind, args.seed, args.count)
    classes = sample_satake(args.kind, args.seed, args.count)
    out = []
    for ang, cls in zip(angles, classes):
        eigs = cls.numeric().torus
        out.append({
            "angles": [str(a) for a in ang],
            "eigenvalues": [[complex(e).real, complex(e).imag] for e in eigs],
        })
    json.dump({"kind": args.kind, "seed": args.seed, "samples": out}, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rsverify", description="Exact and numeric checks of the local unramified computation.")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run the verification suite")
    v.add_argument("group", choices=GROUPS)
    v.add_argument("--order", help="truncation order N, or SPLIT,INERT")
    v.add_argument("--samples", type=int)
    v.add_argument("--seed", type=int)
    v.add_argument("--q", type=int)
    v.add_argument("--tol", type=float)
    v.add_argument("--out", help="write the JSON report here ('-' for stdout)")
    v.add_argument("--config", help="key = value config file; flags override it")
    v.add_argument("--timings", action="store_true", help="record per-check runtimes (breaks byte-stability)")
    v.add_argument("--inject-fault", metavar="CHECK_ID", help="perturb one check's oracle (self-test)")
    v.set_defaults(func=cmd_verify)

    lf = sub.add_parser("lfactor", help="print one local Euler factor")
    lf.add_argument("--case", required=True, choices=sorted(LFACTOR_CASES))
    lf.add_argument("--satake", required=True,
                    help="comma-separated eigenvalues (4 for wedge2, a,b otherwise) or 'symbolic'")
    lf.add_argument("--q", type=int, default=3)
    lf.add_argument("--s", help="evaluate the factor at this s (real or complex literal)")
    lf.add_argument("--sign", type=int, default=-1, choices=(1, -1), help="twist sign for std-twisted")
    lf.set_defaults(func=cmd_lfactor)

    sm = sub.add_parser("sample", help="emit seeded unit-modulus Satake classes")
    sm.add_argument("--kind", required=True, choices=("split", "inert"))
    sm.add_argument("--seed", type=int, default=0)
    sm.add_argument("--count", type=int, default=1)
    sm.set_defaults(func=cmd_sample)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, LiteralError, ValueError) as exc:
        print(f"rsverify: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
