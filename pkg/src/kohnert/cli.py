"""Command line front end.

Subcommands wrap the library: ``kd`` lists move closures, ``poly``
prints polynomials as JSON, ``expand`` prints basis expansions,
``crystal`` emits an annotated DOT graph, ``verify`` runs the
verification sweeps, ``membership`` decides closure membership.

Exit codes: 0 success, 1 verification or precondition failure,
2 usage or parse error, 3 resource bound exceeded.
"""

from __future__ import annotations

import argparse
import re
import sys
from collections import Counter
from pathlib import Path

from .compositions import check_composition
from .crystal import crystal_graph, crystal_to_dot
from .diagrams import Diagram, GridParseError, composition_diagram, \
    is_southwest, rothe_diagram
from .labeling import (component_demazure_data, demazure_expansion,
                       kohnert_labeling, membership_report, slide_expansion)
from .moves import ResourceBoundError, generate_kd, kd_to_dot, kd_to_json, \
    kohnert_polynomial
from .perms import check_permutation
from .polynomials import IntPolynomial, demazure_character, \
    fundamental_slide, schubert_polynomial
from .verify import SUITES, run_suite


class UsageError(ValueError):
    """Bad inline value for a flag; maps to exit code 2."""


def _parse_comp(text: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(x) for x in text.split(",")) if text else ()
        return check_composition(parts)
    except ValueError:
        raise UsageError(f"not a composition: {text!r}")


def _parse_perm(text: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(x) for x in text.split(",")) if text else ()
        return check_permutation(parts)
    except ValueError:
        raise UsageError(f"not a permutation in one-line notation: {text!r}")


def _parse_box(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"(\d+)x(\d+)", text)
    if not m:
        raise argparse.ArgumentTypeError(f"expected COLSxROWS, got {text!r}")
    return int(m.group(1)), int(m.group(2))


def _read_diagram_file(path: str) -> Diagram:
    return Diagram.from_grid(Path(path).read_text())


def _add_diagram_source(sub: argparse.ArgumentParser) -> None:
    group = sub.add_mutually_exclusive_group(required=True)
    group.add_argument("--input", metavar="FILE",
                       help="diagram in grid format ('O' cell, '.' empty)")
    group.add_argument("--comp", metavar="A",
                       help="composition diagram of A, like 0,3,1,1")
    group.add_argument("--perm", metavar="W",
                       help="Rothe diagram of W in one-line notation, like 1,3,2")


def _load_diagram(args) -> Diagram:
    if args.input is not None:
        return _read_diagram_file(args.input)
    if args.comp is not None:
        return composition_diagram(_parse_comp(args.comp))
    return rothe_diagram(_parse_perm(args.perm))


def _grid_or_empty(d: Diagram) -> str:
    return d.to_grid() or "(empty)"


def cmd_kd(args) -> int:
    d = _load_diagram(args)
    kset = generate_kd(d, args.max_diagrams)
    if args.json:
        print(kd_to_json(kset))
        return 0
    if args.dot:
        sys.stdout.write(kd_to_dot(kset))
        return 0
    count = len(kset.members)
    print(f"{count} diagram" + ("" if count == 1 else "s"))
    if args.list:
        for member in kset.members:
            print()
            print(_grid_or_empty(member))
    return 0


def cmd_poly(args) -> int:
    if args.diagram is not None:
        d = _read_diagram_file(args.diagram)
        f = kohnert_polynomial(d, args.n, args.max_diagrams)
    elif args.perm is not None:
        f = schubert_polynomial(_parse_perm(args.perm))
        if args.n is not None:
            f = f.pad_to(args.n)
    elif args.key is not None:
        f = demazure_character(_parse_comp(args.key), args.n)
    else:
        f = fundamental_slide(_parse_comp(args.slide), args.n)
    print(f.to_json())
    return 0


def cmd_expand(args) -> int:
    d = _load_diagram(args)
    if not is_southwest(d):
        raise ValueError("diagram is not southwest")
    if args.basis == "key":
        expansion = demazure_expansion(d, args.max_diagrams)
    else:
        expansion = slide_expansion(d, args.max_diagrams)
    for comp, count in sorted(Counter(expansion).items()):
        suffix = f" x{count}" if count > 1 else ""
        print(",".join(map(str, comp)) + suffix)
    if args.check:
        n = d.max_row
        gen = demazure_character if args.basis == "key" else fundamental_slide
        total = sum((gen(a, n) for a in expansion),
                    start=IntPolynomial.zero(n))
        if not total.matches(kohnert_polynomial(d, n, args.max_diagrams)):
            print("check: FAIL, expansion does not reproduce the polynomial")
            return 1
        print("check: OK")
    return 0


def cmd_crystal(args) -> int:
    d = _load_diagram(args)
    if not is_southwest(d):
        raise ValueError("diagram is not southwest")
    kset = generate_kd(d, args.max_diagrams)
    graph = crystal_graph(kset)
    labels = []
    for comp in graph.components:
        lam, w, a = component_demazure_data(comp, d)
        labels.append("lam=(%s) w=(%s) a=(%s)" % (
            ",".join(map(str, lam)), ",".join(map(str, w)),
            ",".join(map(str, a))))
    sys.stdout.write(crystal_to_dot(graph, labels))
    return 0


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    bounds = {}
    for key in ("max_parts", "max_size", "n", "box", "max_cells", "t_rows",
                "samples", "seed", "jobs"):
        value = getattr(args, key)
        if value is not None:
            bounds[key] = value
    failed = False
    for name in names:
        result = run_suite(name, **bounds)
        print(result.summary())
        failed = failed or not result.ok
    return 1 if failed else 0


def cmd_membership(args) -> int:
    t = _read_diagram_file(args.t_file)
    d = _read_diagram_file(args.d_file)
    member, reason = membership_report(t, d)
    if member:
        print("member")
        if args.explain:
            print(kohnert_labeling(t, d).to_grid() or "(empty)")
    else:
        print(f"non-member: {reason}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kohnert",
        description="Kohnert diagrams, polynomials, and crystals.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_kd = sub.add_parser("kd", help="generate a move closure")
    _add_diagram_source(p_kd)
    p_kd.add_argument("--list", action="store_true",
                      help="print every member as a grid")
    p_kd.add_argument("--json", action="store_true",
                      help="print members and move edges as JSON")
    p_kd.add_argument("--dot", action="store_true",
                      help="print the move graph in DOT format")
    p_kd.add_argument("--max-diagrams", type=int, default=None)
    p_kd.set_defaults(func=cmd_kd)

    p_poly = sub.add_parser("poly", help="print a polynomial as JSON")
    group = p_poly.add_mutually_exclusive_group(required=True)
    group.add_argument("--diagram", metavar="FILE",
                       help="Kohnert polynomial of a diagram file")
    group.add_argument("--perm", metavar="W",
                       help="Schubert polynomial of a permutation")
    group.add_argument("--key", metavar="A",
                       help="Demazure character of a composition")
    group.add_argument("--slide", metavar="A",
                       help="fundamental slide polynomial of a composition")
    p_poly.add_argument("--n", type=int, default=None,
                        help="number of variables")
    p_poly.add_argument("--max-diagrams", type=int, default=None)
    p_poly.set_defaults(func=cmd_poly)

    p_expand = sub.add_parser("expand", help="expand a Kohnert polynomial")
    _add_diagram_source(p_expand)
    p_expand.add_argument("--basis", choices=("key", "slide"), default="key")
    p_expand.add_argument("--check", action="store_true",
                          help="re-verify the expansion against the polynomial")
    p_expand.add_argument("--max-diagrams", type=int, default=None)
    p_expand.set_defaults(func=cmd_expand)

    p_crystal = sub.add_parser("crystal",
                               help="crystal graph as annotated DOT")
    _add_diagram_source(p_crystal)
    p_crystal.add_argument("--max-diagrams", type=int, default=None)
    p_crystal.set_defaults(func=cmd_crystal)

    p_verify = sub.add_parser("verify", help="run verification sweeps")
    p_verify.add_argument("suite", nargs="?", default="all",
                          choices=SUITES + ("all",))
    p_verify.add_argument("--max-parts", type=int, default=None)
    p_verify.add_argument("--max-size", type=int, default=None)
    p_verify.add_argument("--n", type=int, default=None)
    p_verify.add_argument("--box", type=_parse_box, default=None,
                          metavar="CxR", help="box bound, like 3x3")
    p_verify.add_argument("--max-cells", type=int, default=None)
    p_verify.add_argument("--t-rows", type=int, default=None)
    p_verify.add_argument("--samples", type=int, default=None)
    p_verify.add_argument("--seed", type=int, default=None)
    p_verify.add_argument("--jobs", type=int, default=None,
                          help="fan independent cases out to N processes")
    p_verify.set_defaults(func=cmd_verify)

    p_member = sub.add_parser("membership",
                              help="decide membership by labeling")
    p_member.add_argument("t_file", help="candidate diagram file")
    p_member.add_argument("d_file", help="source diagram file")
    p_member.add_argument("--explain", action="store_true",
                          help="print the labeling or the failure reason")
    p_member.set_defaults(func=cmd_membership)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GridParseError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceBoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
