"""Command-line front end: one-shot algebra queries, the verification
harness, and machine-readable JSON output for scripting.

Exit codes: 0 success, 1 property failure or exhausted search, 2 parse or
validation error.  Results go to stdout, errors to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .cones import (
    DEFAULT_MAX_RADIUS,
    ElementKind,
    SearchExhausted,
    box_members,
    classify,
    format_cone,
    parse_cone,
)
from .harness import VerifyReport, verify
from .lattice import ORIGIN, format_element, parse_element
from .powersets import (
    ShiftError,
    format_subset,
    normalize_shift_bruteforce,
    normalize_shift_inductive,
    parse_subset,
    setwise_product,
    transport_shift,
)


def _default_seed() -> int:
    return int(os.environ.get("POWMON_SEED", "0"))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="powmon",
        description="setwise arithmetic in reduced finitary power monoids over valuation cones of Z^2",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON envelope instead of text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("member", parents=[common], help="test membership of an element")
    p.add_argument("-m", "--monoid", required=True, metavar="MONOID")
    p.add_argument("-g", "--element", required=True, metavar="(x,y)")

    p = sub.add_parser("mul", parents=[common], help="setwise product of two subsets")
    p.add_argument("-X", required=True, metavar="SET")
    p.add_argument("-Y", required=True, metavar="SET")

    p = sub.add_parser("normalize", parents=[common], help="unique shift taking a subset into a monoid")
    p.add_argument("-m", "--monoid", required=True, metavar="MONOID")
    p.add_argument("-X", required=True, metavar="SET")
    p.add_argument("--algo", choices=("inductive", "brute", "both"), default="both")

    p = sub.add_parser("transport", parents=[common], help="image under the power-monoid isomorphism")
    p.add_argument("--from", dest="src", required=True, metavar="MONOID")
    p.add_argument("--to", dest="dst", required=True, metavar="MONOID")
    p.add_argument("-X", required=True, metavar="SET")

    p = sub.add_parser("factor", parents=[common], help="nontrivial factorization of a member")
    p.add_argument("-m", "--monoid", required=True, metavar="MONOID")
    p.add_argument("-g", "--element", required=True, metavar="(x,y)")
    p.add_argument("--max-radius", type=int, default=DEFAULT_MAX_RADIUS)

    p = sub.add_parser("atoms", parents=[common], help="scan a box for irreducible members")
    p.add_argument("-m", "--monoid", required=True, metavar="MONOID")
    p.add_argument("--box", type=int, required=True)
    p.add_argument("--witnesses", action="store_true", help="also print a witness per reducible member")

    p = sub.add_parser("verify", parents=[common], help="run the seeded property suite")
    p.add_argument("--from", dest="src", required=True, metavar="MONOID")
    p.add_argument("--to", dest="dst", required=True, metavar="MONOID")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--size-bound", type=int, default=8)
    p.add_argument("--coord-bound", type=int, default=50)

    return parser


def _cmd_member(args):
    m = parse_cone(args.monoid)
    g = parse_element(args.element)
    inputs = {"monoid": format_cone(m), "element": format_element(g)}
    member = m.contains(g)
    return inputs, {"member": member}, ["true" if member else "false"], 0


def _cmd_mul(args):
    X = parse_subset(args.X)
    Y = parse_subset(args.Y)
    inputs = {"X": format_subset(X), "Y": format_subset(Y)}
    product = setwise_product(X, Y)
    return inputs, {"product": product.to_json()}, [format_subset(product)], 0


def _cmd_normalize(args):
    m = parse_cone(args.monoid)
    X = parse_subset(args.X)
    inputs = {"monoid": format_cone(m), "X": format_subset(X), "algo": args.algo}
    if args.algo == "brute":
        result = normalize_shift_bruteforce(m, X)
    elif args.algo == "inductive":
        result = normalize_shift_inductive(m, X)
    else:
        result = normalize_shift_inductive(m, X)
        other = normalize_shift_bruteforce(m, X)
        if result != other:
            raise ShiftError(f"algorithms disagree: inductive {result} vs brute {other}")
    payload = {"shift": [result.shift.x, result.shift.y], "normalized": result.normalized.to_json()}
    line = f"shift={format_element(result.shift)} normalized={format_subset(result.normalized)}"
    return inputs, payload, [line], 0


def _cmd_transport(args):
    src = parse_cone(args.src)
    dst = parse_cone(args.dst)
    X = parse_subset(args.X)
    inputs = {"from": format_cone(src), "to": format_cone(dst), "X": format_subset(X)}
    result = transport_shift(src, dst, X)
    payload = {"shift": [result.shift.x, result.shift.y], "image": result.normalized.to_json()}
    line = f"shift={format_element(result.shift)} image={format_subset(result.normalized)}"
    return inputs, payload, [line], 0


def _cmd_factor(args):
    m = parse_cone(args.monoid)
    g = parse_element(args.element)
    inputs = {"monoid": format_cone(m), "element": format_element(g), "max_radius": args.max_radius}
    outcome = classify(m, g, max_radius=args.max_radius)
    if outcome.kind is ElementKind.UNIT:
        return inputs, {"status": "unit", "witness": None}, ["UNIT"], 0
    if outcome.kind is ElementKind.IRREDUCIBLE:
        return inputs, {"status": "irreducible", "witness": None}, ["IRREDUCIBLE"], 0
    w = outcome.witness
    payload = {"status": "reducible", "witness": [[w.g1.x, w.g1.y], [w.g2.x, w.g2.y]]}
    return inputs, payload, [f"{w.g1}+{w.g2}"], 0


def _cmd_atoms(args):
    m = parse_cone(args.monoid)
    if args.box < 0:
        raise ValueError("--box must be nonnegative")
    inputs = {"monoid": format_cone(m), "box": args.box, "witnesses": args.witnesses}
    atoms = []
    witnesses = []
    members = 0
    for g in box_members(m, args.box):
        members += 1
        if g == ORIGIN:
            continue
        outcome = classify(m, g)
        if outcome.kind is ElementKind.IRREDUCIBLE:
            atoms.append(g)
        else:
            witnesses.append((g, outcome.witness))
    lines = [str(g) for g in atoms]
    if args.witnesses:
        lines.extend(f"{g} = {w.g1}+{w.g2}" for g, w in witnesses)
    payload = {
        "members": members,
        "atoms": [[g.x, g.y] for g in atoms],
    }
    if args.witnesses:
        payload["witnesses"] = [
            {"element": [g.x, g.y], "witness": [[w.g1.x, w.g1.y], [w.g2.x, w.g2.y]]}
            for g, w in witnesses
        ]
    return inputs, payload, lines, 0


def _render_report(report: VerifyReport) -> list[str]:
    lines = [
        f"trials={report.trials} seed={report.seed} "
        f"size_bound={report.size_bound} coord_bound={report.coord_bound}"
    ]
    for name, tally in report.tallies.items():
        lines.append(f"{name}: runs={tally['runs']} failures={tally['failures']}")
    for record in report.failure_records[:10]:
        lines.append(f"FAIL {record.prop} trial={record.trial}: {record.detail}")
    if report.failures > 10:
        lines.append(f"... {report.failures - 10} more failures")
    lines.append(f"failures={report.failures} elapsed_ms={int(report.elapsed_s * 1000)}")
    return lines


def _cmd_verify(args):
    src = parse_cone(args.src)
    dst = parse_cone(args.dst)
    seed = args.seed if args.seed is not None else _default_seed()
    inputs = {
        "from": format_cone(src),
        "to": format_cone(dst),
        "trials": args.trials,
        "seed": seed,
        "size_bound": args.size_bound,
        "coord_bound": args.coord_bound,
    }
    report = verify(src, dst, args.trials, seed, args.size_bound, args.coord_bound)
    code = 0 if report.failures == 0 else 1
    return inputs, report.to_json(), _render_report(report), code


_HANDLERS = {
    "member": _cmd_member,
    "mul": _cmd_mul,
    "normalize": _cmd_normalize,
    "transport": _cmd_transport,
    "factor": _cmd_factor,
    "atoms": _cmd_atoms,
    "verify": _cmd_verify,
}


def run(argv: list[str] | None = None) -> int:
    """Parse argv, execute one command, print its output, return the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed the message
        return int(exc.code or 0)
    start = time.perf_counter()
    try:
        inputs, payload, lines, code = _HANDLERS[args.command](args)
    except ValueError as exc:  # parse errors and precondition violations
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SearchExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ShiftError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1
    elapsed_ms = int((time.perf_counter() - start) * 1000)
    if args.json:
        envelope = {
            "command": args.command,
            "inputs": inputs,
            "result": payload,
            "elapsed_ms": elapsed_ms,
        }
        print(json.dumps(envelope))
    else:
        for line in lines:
            print(line)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
