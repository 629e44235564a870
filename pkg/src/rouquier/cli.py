"""
Command-line front end.

    rouquier hyperplanes --family ak --d 3 --r 2
    rouquier hyperplanes --family rank2 --d 2
    rouquier blocks --de 4 --e 2 --r 3 --m 0,1 --n 1
    rouquier blocks --family rank2 --d 2 --a 0,0 --b 1,0 --c 0,0
    rouquier aa --d 2 --a 1,0 --b 0,0 --c 0,0
    rouquier verify --suite all --max-d 4 --max-r 4 --seed 7

JSON goes to stdout (or --out), diagnostics to stderr. Exit status is 2 for
bad input and 1 when an internal invariant fails.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path

from . import ariki_koike as ak
from . import rank2 as r2
from .blocks import BlockPartition, InvariantError
from .descent import DescLabel, GroupParams, blocks_for_group
from .verify import SUITES, run_suite

SCHEMA_VERSION = 1

log = logging.getLogger("rouquier")


class InputError(ValueError):
    """Bad user input; the message names the offending option."""


# -- rendering -----------------------------------------------------------------

def label_json(lbl):
    """Canonical JSON value of a label: nested arrays or a string."""
    if isinstance(lbl, DescLabel):
        inner = label_json(lbl.orbit)
        inner = inner if isinstance(inner, str) else json.dumps(inner, separators=(",", ":"))
        return f"orb[{inner}]#{lbl.copy}"
    if isinstance(lbl, (r2.Lin, r2.Two)):
        return r2.format_label(lbl)
    return [list(p) for p in lbl]


def label_text(lbl) -> str:
    v = label_json(lbl)
    return v if isinstance(v, str) else json.dumps(v, separators=(",", ":"))


def hyperplane_str(h) -> str:
    if isinstance(h, (ak.NZero, ak.Linear)):
        return ak.format_hyperplane(h)
    return r2.format_hyperplane(h)


def frac(x: Fraction | int) -> str:
    return str(Fraction(x))


def blocks_json(bp: BlockPartition) -> list:
    return [[label_json(x) for x in b] for b in bp.blocks]


def _invariants(labels, spec: r2.Rank2Spec, parent_label=lambda x: x) -> list[dict]:
    out = []
    for lbl in labels:
        src = parent_label(lbl)
        a, aA = r2.a_value(src, spec), r2.aA_sum(src, spec)
        out.append({"label": label_json(lbl), "a": frac(a), "A": frac(aA - a), "a+A": frac(aA)})
    return out


def _spec_json(spec) -> dict:
    if isinstance(spec, ak.AKSpecialization):
        return {"family": "ariki-koike", "d": spec.d, "r": spec.r, "m": list(spec.m), "n": spec.n}
    return {"family": "rank2", "d": spec.d, "a": list(spec.a), "b": list(spec.b), "c": list(spec.c)}


# -- argument parsing ----------------------------------------------------------

def int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",")) if text.strip() else ()
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise InputError(f"--{name.replace('_', '-')} is required here")


def _check_len(name, value, n):
    if len(value) != n:
        raise InputError(f"--{name}: expected {n} integers, got {len(value)}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rouquier", description="Rouquier blocks for G(de,e,r).")
    p.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=("json", "text"), default="json")
        sp.add_argument("--out", type=Path, help="write the report here instead of stdout")

    h = sub.add_parser("hyperplanes", help="essential hyperplanes (and those containing a weight system)")
    h.add_argument("--family", choices=("ak", "rank2"), required=True)
    h.add_argument("--d", type=positive, required=True)
    h.add_argument("--r", type=positive, help="rank (ak family)")
    h.add_argument("--m", type=int_list)
    h.add_argument("--n", type=int)
    h.add_argument("--a", type=int_list)
    h.add_argument("--b", type=int_list)
    h.add_argument("--c", type=int_list)
    common(h)

    b = sub.add_parser("blocks", help="Rouquier blocks")
    b.add_argument("--family", choices=("group", "rank2"), default="group")
    b.add_argument("--de", type=positive)
    b.add_argument("--e", type=positive)
    b.add_argument("--r", type=positive)
    b.add_argument("--m", type=int_list)
    b.add_argument("--n", type=int)
    b.add_argument("--d", type=positive, help="rank2 family: G(2d,2,2)")
    b.add_argument("--a", type=int_list)
    b.add_argument("--b", type=int_list)
    b.add_argument("--c", type=int_list)
    common(b)

    a = sub.add_parser("aa", help="a and A invariants for G(2d,2,2)")
    a.add_argument("--d", type=positive, required=True)
    a.add_argument("--a", type=int_list, required=True)
    a.add_argument("--b", type=int_list, required=True)
    a.add_argument("--c", type=int_list, required=True)
    common(a)

    v = sub.add_parser("verify", help="run the property suites")
    v.add_argument("--suite", choices=("all",) + tuple(SUITES), default="all")
    v.add_argument("--max-d", type=positive, default=4)
    v.add_argument("--max-r", type=positive, default=4)
    v.add_argument("--seed", type=int, default=0)
    common(v)
    return p


def _rank2_spec(args) -> r2.Rank2Spec:
    _need(args, "d", "a", "b", "c")
    _check_len("a", args.a, 2)
    _check_len("b", args.b, 2)
    _check_len("c", args.c, args.d)
    return r2.Rank2Spec(args.d, args.a, args.b, args.c)


# -- commands ------------------------------------------------------------------

def cmd_hyperplanes(args) -> dict:
    if args.family == "ak":
        _need(args, "r")
        hyps = ak.enumerate_hyperplanes(args.d, args.r)
        report = {"family": "ariki-koike", "d": args.d, "r": args.r}
        if args.m is not None or args.n is not None:
            _need(args, "m", "n")
            _check_len("m", args.m, args.d)
            spec = ak.AKSpecialization(args.d, args.r, args.m, args.n)
            report["spec"] = _spec_json(spec)
            report["containing"] = [hyperplane_str(h) for h in ak.hyperplanes_containing(spec)]
    else:
        hyps = r2.rank2_hyperplanes(args.d)
        report = {"family": "rank2", "d": args.d}
        if any(getattr(args, x) is not None for x in "abc"):
            spec = _rank2_spec(args)
            report["spec"] = _spec_json(spec)
            report["containing"] = [hyperplane_str(h) for h in r2.rank2_hyperplanes_containing(spec)]
    report["hyperplanes"] = [hyperplane_str(h) for h in hyps]
    return report


def cmd_blocks(args) -> dict:
    if args.family == "rank2":
        spec = _rank2_spec(args)
        bp = r2.rank2_blocks(spec)
        return {
            "group": {"family": "rank2", "de": 2 * spec.d, "e": 2, "r": 2, "d": spec.d},
            "path": "rank2",
            "spec": _spec_json(spec),
            "hyperplanes": [hyperplane_str(h) for h in r2.rank2_hyperplanes_containing(spec)],
            "characters": len(bp.labels),
            "blocks": blocks_json(bp),
            "invariants": _invariants(bp.labels, spec),
        }
    _need(args, "de", "e", "r", "m", "n")
    if args.de % args.e:
        raise InputError(f"--e: {args.e} does not divide --de {args.de}")
    if args.r < 2:
        raise InputError(f"--r: r = {args.r} is out of range (r >= 2 required)")
    params = GroupParams(args.de, args.e, args.r)
    _check_len("m", args.m, params.d)
    rank2_path = args.r == 2 and args.e % 2 == 0
    if not rank2_path and (args.a is not None or args.b is not None):
        raise InputError("--a/--b: only used for r = 2 with e even")
    for name in ("a", "b"):
        if getattr(args, name) is not None:
            _check_len(name, getattr(args, name), 2)
    res = blocks_for_group(params, args.m, args.n, args.a, args.b)
    report = {
        "group": {"family": "group", "de": params.de, "e": params.e, "r": params.r, "d": params.d},
        "path": res.path,
        "spec": {"m": list(args.m), "n": args.n},
        "parentSpec": _spec_json(res.parent_spec),
        "hyperplanes": [hyperplane_str(h) for h in res.hyperplanes],
        "characters": len(res.labels),
        "blocks": blocks_json(res.blocks),
    }
    if rank2_path:
        parent = (lambda x: x.orbit) if res.path == "rank2-descent" else (lambda x: x)
        report["invariants"] = _invariants(res.labels, res.parent_spec, parent)
    return report


def cmd_aa(args) -> dict:
    spec = _rank2_spec(args)
    return {"spec": _spec_json(spec), "invariants": _invariants(r2.rank2_labels(spec.d), spec)}


def cmd_verify(args) -> dict:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    suites, passed, failed = {}, 0, 0
    for name in names:
        checks = run_suite(name, args.max_d, args.max_r, args.seed)
        for c in checks:
            log.info("%s %s: %s (%.2fs) %s", "PASS" if c.passed else "FAIL", name, c.name, c.seconds, c.detail)
        suites[name] = [{"check": c.name, "passed": c.passed, "detail": c.detail} for c in checks]
        passed += sum(c.passed for c in checks)
        failed += sum(not c.passed for c in checks)
    return {"maxD": args.max_d, "maxR": args.max_r, "seed": args.seed,
            "suites": suites, "passed": passed, "failed": failed}


COMMANDS = {"hyperplanes": cmd_hyperplanes, "blocks": cmd_blocks, "aa": cmd_aa, "verify": cmd_verify}


def render_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def render_text(command: str, report: dict) -> str:
    lines = []
    if command == "hyperplanes":
        lines.append(f"{len(report['hyperplanes'])} essential hyperplanes:")
        lines += [f"  {h}" for h in report["hyperplanes"]]
        if "containing" in report:
            lines.append("containing the weights: " + (", ".join(report["containing"]) or "none"))
    elif command == "blocks":
        g = report["group"]
        lines.append(f"G({g['de']},{g['e']},{g['r']}) via {report['path']}: "
                     f"{report['characters']} characters, {len(report['blocks'])} blocks")
        lines.append("hyperplanes: " + (", ".join(report["hyperplanes"]) or "none"))
        for b in report["blocks"]:
            lines.append("  { " + "  ".join(x if isinstance(x, str) else json.dumps(x, separators=(",", ":")) for x in b) + " }")
    if "invariants" in report:
        lines.append(f"{'label':<16} {'a':>8} {'A':>8} {'a+A':>8}")
        for row in report["invariants"]:
            lbl = row["label"] if isinstance(row["label"], str) else json.dumps(row["label"])
            lines.append(f"{lbl:<16} {row['a']:>8} {row['A']:>8} {row['a+A']:>8}")
    if command == "verify":
        for name, checks in report["suites"].items():
            for c in checks:
                lines.append(f"{'PASS' if c['passed'] else 'FAIL'}  {name}: {c['check']}"
                             + (f"  ({c['detail']})" if c["detail"] else ""))
        lines.append(f"{report['passed']} passed, {report['failed']} failed")
    return "\n".join(lines) + "\n"


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with status 2 on malformed options
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    try:
        report = COMMANDS[args.command](args)
    except (InputError, ValueError) as exc:
        print(f"rouquier {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except InvariantError as exc:
        print(f"rouquier {args.command}: internal invariant violated: {exc}", file=sys.stderr)
        return 1
    report = {"schemaVersion": SCHEMA_VERSION, "command": args.command, **report}
    text = render_json(report) if args.format == "json" else render_text(args.command, report)
    if args.out:
        args.out.write_text(text)
    else:
        sys.stdout.write(text)
    if args.command == "verify" and report["failed"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
