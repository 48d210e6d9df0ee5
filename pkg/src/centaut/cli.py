"""Command line front end.

Exit codes: 0 success, 1 verification mismatch or expectation failure,
2 usage or input errors.  Sources are "builtin:<expr>" expressions, group
file paths, or "perm:<degree>:<cycles>" with cycle notation (CLI only;
the library works with image arrays).
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from typing import Optional, Sequence

from .abelian import AbelianInvariants, hom_invariants
from .central import DEFAULT_HOM_CAP
from .criteria import theorem21_predicate
from .errors import CentautError
from .families import list_builtins
from .groupio import (
    default_corpus,
    read_manifest,
    resolve_source,
    write_group,
)
from .groups import DEFAULT_ORDER_CAP, Group, group_from_permutations
from .harness import (
    REPORT_FORMATS,
    VerificationReport,
    analyze_source,
    format_report,
    record_dict,
    run_verification,
)

ENV_CAP = "CENTAUT_CAP"
ENV_HOM_CAP = "CENTAUT_HOM_CAP"


def _env_int(name: str, fallback: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return fallback
    try:
        return int(raw)
    except ValueError:
        sys.stderr.write(f"error: {name} must be an integer, got {raw!r}\n")
        raise SystemExit(2) from None


def parse_cycles(degree: int, text: str) -> list[int]:
    """One generator in cycle notation, e.g. "(0 1 2)(3 4)", to images."""
    images = list(range(degree))
    body = text.strip()
    if not re.fullmatch(r"(\s*\([^()]*\)\s*)+", body):
        raise CentautError(f"bad cycle notation {text!r}")
    for cyc in re.findall(r"\(([^()]*)\)", body):
        tokens = [t for t in re.split(r"[\s,]+", cyc.strip()) if t]
        if not all(re.fullmatch(r"\d+", t) for t in tokens):
            raise CentautError(f"cycle points must be integers in ({cyc})")
        points = [int(t) for t in tokens]
        if not points:
            continue
        if len(points) != len(set(points)):
            raise CentautError(f"repeated point in cycle ({cyc})")
        if any(not 0 <= q < degree for q in points):
            raise CentautError(f"cycle point outside range({degree}) in ({cyc})")
        step = list(range(degree))
        for i, q in enumerate(points):
            step[q] = points[(i + 1) % len(points)]
        images = [step[x] for x in images]  # cycles apply left to right
    return images


def _resolve(source: str, cap: int) -> Group:
    if source.startswith("perm:"):
        parts = source.split(":", 2)
        if len(parts) != 3:
            raise CentautError("perm source must be perm:<degree>:<cycles>[;...]")
        try:
            degree = int(parts[1])
        except ValueError:
            raise CentautError(f"bad degree {parts[1]!r}") from None
        gens = [parse_cycles(degree, g) for g in parts[2].split(";") if g.strip()]
        return group_from_permutations(degree, gens, cap=cap)
    return resolve_source(source, cap=cap)


def _invariants(p: int, text: str) -> AbelianInvariants:
    exps = [int(t) for t in re.split(r"[\s,]+", text.strip()) if t]
    return AbelianInvariants(p, tuple(sorted(exps, reverse=True)))


def _emit(text: str, output: Optional[str]) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cmd_analyze(args: argparse.Namespace) -> int:
    G = _resolve(args.source, args.cap) if args.source.startswith("perm:") else None
    rec = analyze_source(
        args.name or args.source,
        args.source,
        cap=args.cap,
        hom_cap=args.hom_cap,
        group=G,
    )
    if args.format == "table":
        text = format_report(VerificationReport([rec]), "table")
    else:
        text = json.dumps(record_dict(rec), sort_keys=True, indent=2) + "\n"
    _emit(text, args.output)
    if rec.status == "error":
        sys.stderr.write(f"error: {rec.error}\n")
        return 2
    return 1 if rec.agreement is False else 0


def _cmd_verify(args: argparse.Namespace) -> int:
    manifest = read_manifest(args.manifest) if args.manifest else default_corpus()
    report = run_verification(
        manifest, jobs=args.jobs, cap=args.cap, hom_cap=args.hom_cap
    )
    _emit(format_report(report, args.format), args.output)
    return 0 if report.ok else 1

def _cmd_hom(args: argparse.Namespace) -> int:
    a = _invariants(args.p, args.a)
    b = _invariants(args.p, args.b)
    h = hom_invariants(a, b)
    out = {
        "p": args.p,
        "a": list(a.exponents),
        "b": list(b.exponents),
        "hom": list(h.exponents),
        "order": h.order,
    }
    _emit(json.dumps(out, sort_keys=True, indent=2) + "\n", args.output)
    return 0


def _cmd_predicate(args: argparse.Namespace) -> int:
    alpha = _invariants(args.p, args.alpha)
    beta = _invariants(args.p, args.beta)
    ok = theorem21_predicate(alpha, beta, args.gamma)
    out = {
        "p": args.p,
        "alpha": list(alpha.exponents),
        "beta": list(beta.exponents),
        "gamma": args.gamma,
        "minimal": ok,
    }
    _emit(json.dumps(out, sort_keys=True, indent=2) + "\n", args.output)
    return 0


def _cmd_build(args: argparse.Namespace) -> int:
    G = _resolve(args.spec, args.cap)
    write_group(G, args.output, name=args.name)
    sys.stderr.write(f"wrote order-{G.order} group to {args.output}\n")
    return 0


def _cmd_list_builtins(args: argparse.Namespace) -> int:
    rows = list_builtins()
    width = max(len(sig) for _, sig, _ in rows)
    lines = [f"{sig:<{width}}  {desc}" for _, sig, desc in rows]
    lines.append("")
    lines.append('products: join terms with " x ", e.g. "dihedral(16) x cyclic(2)"')
    lines.append("sources:  builtin:<expr> | <group-file.json> | perm:<degree>:<cycles>")
    _emit("\n".join(lines) + "\n", None)
    return 0


def build_parser() -> argparse.ArgumentParser:
    cap_default = _env_int(ENV_CAP, DEFAULT_ORDER_CAP)
    hom_default = _env_int(ENV_HOM_CAP, DEFAULT_HOM_CAP)
    parser = argparse.ArgumentParser(
        prog="centaut",
        description="Decide whether a p-group's central automorphisms are "
        "as few as its structure allows.",
        epilog=f"Environment: {ENV_CAP} overrides the order cap "
        f"(default {DEFAULT_ORDER_CAP}), {ENV_HOM_CAP} the enumeration cap "
        f"(default {DEFAULT_HOM_CAP}).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_caps(p: argparse.ArgumentParser) -> None:
        p.add_argument("--cap", type=int, default=cap_default, help="max group order")
        p.add_argument(
            "--hom-cap", type=int, default=hom_default, help="max candidate maps"
        )

    p = sub.add_parser("analyze", help="classify one group and cross-check it")
    p.add_argument("source", help="builtin:<expr>, file path, or perm:<deg>:<cycles>")
    p.add_argument("--name", help="display name (defaults to the source)")
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.add_argument("--output", "-o", help="write to a file instead of stdout")
    add_caps(p)
    p.set_defaults(fn=_cmd_analyze)

    p = sub.add_parser("verify", help="run the corpus (or a manifest) end to end")
    p.add_argument("--manifest", help="manifest file (default: built-in corpus)")
    p.add_argument("--jobs", type=int, default=1, help="parallel workers")
    p.add_argument("--format", choices=REPORT_FORMATS, default="json")
    p.add_argument("--output", "-o", help="write to a file instead of stdout")
    add_caps(p)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("hom", help="invariants of Hom(A, B) for abelian p-groups")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--a", required=True, help='invariants, e.g. "2,1"')
    p.add_argument("--b", required=True, help='invariants, e.g. "1"')
    p.add_argument("--output", "-o")
    p.set_defaults(fn=_cmd_hom)

    p = sub.add_parser(
        "predicate", help="cyclic-center minimality test on invariant lists"
    )
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--alpha", required=True, help="abelianization invariants")
    p.add_argument("--beta", required=True, help="second-center quotient invariants")
    p.add_argument("--gamma", type=int, required=True, help="center exponent (log_p)")
    p.add_argument("--output", "-o")
    p.set_defaults(fn=_cmd_predicate)

    p = sub.add_parser("build", help="materialize a source as a group file")
    p.add_argument("spec", help="builtin:<expr> or perm:<degree>:<cycles>")
    p.add_argument("--output", "-o", required=True)
    p.add_argument("--name", help="embed a display name")
    p.add_argument("--cap", type=int, default=cap_default)
    p.set_defaults(fn=_cmd_build)

    p = sub.add_parser("list-builtins", help="show the family builders")
    p.set_defaults(fn=_cmd_list_builtins)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except CentautError as e:
        sys.stderr.write(f"error: {type(e).__name__}: {e}\n")
        return 2
    except OSError as e:
        sys.stderr.write(f"error: {e}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
