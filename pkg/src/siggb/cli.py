"""Command-line front end.

    siggb gb FILE [--reps] [--json]
    siggb detach FILE --poly EXPR [--json]
    siggb check FILE [--json]

Exit codes: 0 success, 1 usage or parse error, 2 verification failure,
3 oracle disagreement.  A MEMBER verdict is never printed without the
certificate having been re-multiplied and checked first.
"""

from __future__ import annotations

import argparse
import json
import sys

from .detach import detach, prepare, verify_representation
from .oracle import buchberger_with_cofactors
from .parse import ParseError, parse_poly, parse_system
from .ring import ContextError, interreduce

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY = 2
EXIT_DISAGREE = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _load(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)
    return parse_system(text)


def _vector_strings(vec) -> list[str]:
    return [str(p) for p in vec.components]


def _combination_str(vec, prefix: str = "f") -> str:
    parts = []
    for j, p in enumerate(vec.components, start=1):
        if p:
            parts.append(f"({p})*{prefix}{j}")
    return " + ".join(parts) if parts else "0"


def cmd_gb(args) -> int:
    ring, gens = _load(args.file)
    prep = prepare(gens, ring)
    for r, v in zip(prep.reduced, prep.vectors):
        if not verify_representation(r, v, prep.generators):
            print("error: representation failed verification", file=sys.stderr)
            return EXIT_VERIFY
    basis = [str(g) for g in prep.reduced]
    if args.json:
        payload: dict = {"basis": basis}
        if args.reps:
            payload["reps"] = [_vector_strings(v) for v in prep.vectors]
        print(json.dumps(payload, indent=2))
        return EXIT_OK
    print(f"reduced Groebner basis ({len(basis)} elements):")
    for k, (r, v) in enumerate(zip(prep.reduced, prep.vectors), start=1):
        print(f"  g{k} = {r}")
        if args.reps:
            print(f"       = {_combination_str(v)}")
    return EXIT_OK


def cmd_detach(args) -> int:
    ring, gens = _load(args.file)
    try:
        f = parse_poly(args.poly, ring)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    prep = prepare(gens, ring)
    res = detach(f, prep)
    if res.member:
        if not verify_representation(f, res.cofactors, prep.generators):
            print("error: certificate failed verification", file=sys.stderr)
            return EXIT_VERIFY
        if args.json:
            print(json.dumps({"member": True,
                              "cofactors": _vector_strings(res.cofactors)},
                             indent=2))
        else:
            print("MEMBER")
            print(f"  f = {_combination_str(res.cofactors)}")
            print("  verified: cofactors . F == f")
    else:
        if args.json:
            print(json.dumps({"member": False, "remainder": str(res.remainder)},
                             indent=2))
        else:
            print("NOT-MEMBER")
            print(f"  remainder = {res.remainder}")
    return EXIT_OK


def cmd_check(args) -> int:
    ring, gens = _load(args.file)
    prep = prepare(gens, ring)
    oracle = buchberger_with_cofactors(gens, ring)
    expected = interreduce(oracle.polys)
    ours = list(prep.reduced)
    agree = ours == expected
    if args.json:
        payload = {"agree": agree, "basis": [str(g) for g in ours]}
        if not agree:
            payload["oracle_basis"] = [str(g) for g in expected]
        print(json.dumps(payload, indent=2))
    else:
        if agree:
            print(f"oracle agrees: reduced bases match ({len(ours)} elements)")
        else:
            print("oracle DISAGREES")
            print("  pipeline: " + "; ".join(str(g) for g in ours))
            print("  oracle:   " + "; ".join(str(g) for g in expected))
    return EXIT_OK if agree else EXIT_DISAGREE


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="siggb",
                description="Groebner bases with explicit membership certificates")
    sub = p.add_subparsers(dest="command", required=True)

    gb = sub.add_parser("gb", help="print the reduced Groebner basis")
    gb.add_argument("file", help="system file")
    gb.add_argument("--reps", action="store_true",
                    help="also print each element's representation over F")
    gb.add_argument("--json", action="store_true")
    gb.set_defaults(fn=cmd_gb)

    de = sub.add_parser("detach", help="decide membership and certify it")
    de.add_argument("file", help="system file")
    de.add_argument("--poly", required=True, help="query polynomial")
    de.add_argument("--json", action="store_true")
    de.set_defaults(fn=cmd_detach)

    ck = sub.add_parser("check", help="compare against the Buchberger oracle")
    ck.add_argument("file", help="system file")
    ck.add_argument("--json", action="store_true")
    ck.set_defaults(fn=cmd_check)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    try:
        return args.fn(args)
    except (ParseError, ContextError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
