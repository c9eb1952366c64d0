"""Command-line interface.

Exit codes form a stable contract: 0 for success, 1 for a mathematical
refusal or negative outcome (arity guard exceeded, invalid certificate,
failing corpus case), 2 for input errors (unreadable files, parse errors,
unknown names).  All output is deterministic byte for byte for identical
inputs.
"""

from __future__ import annotations

import argparse
import sys

from .certfile import CertificateSyntaxError, load_certificate, verify_certificate
from .corpus import find_case, run_all
from .groebner import Ideal, MonomialOrder, default_order, ideal_sum
from .invariants import ArityLimitError, compare_invariants, quasi_singular
from .polyring import RingMismatchError, UnknownVariableError
from .textio import ParseError, read_system, render

EXIT_OK = 0
EXIT_REFUSAL = 1
EXIT_INPUT = 2


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (ParseError, CertificateSyntaxError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (UnknownVariableError, RingMismatchError, ValueError) as exc:
        if isinstance(exc, ArityLimitError):
            print(f"refused: {exc}", file=sys.stderr)
            return EXIT_REFUSAL
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="varinv",
        description="Exact invariants of affine varieties: Groebner bases, "
        "elementary-ideal comparisons, quasi-singular point counts, and "
        "isomorphism certificate verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("groebner", help="print the reduced basis of a polynomial system")
    g.add_argument("--input", required=True, help="a .ps system file")
    g.add_argument("--order", choices=("lex", "deglex", "degrevlex"), default="degrevlex")
    g.add_argument("--priority", help="comma-separated variables, highest first")
    g.add_argument("--names", help="comma-separated entry names to use (default: all)")
    g.set_defaults(handler=cmd_groebner)

    q = sub.add_parser("quasi-singular", help="count the zeros of a gradient")
    q.add_argument("--input", required=True, help="a .ps system file")
    q.add_argument("--poly", required=True, help="entry name of the hypersurface polynomial")
    q.set_defaults(handler=cmd_quasi_singular)

    c = sub.add_parser("compare-invariants", help="elementary-ideal comparison modulo R")
    c.add_argument("--left", required=True, help="a .ps file with the left generators")
    c.add_argument("--right", required=True, help="a .ps file with the right generators")
    c.add_argument("--modulo", help="a .ps file for R (default: left + right generators)")
    c.add_argument("--k", required=True, type=int, help="elementary ideal index")
    c.add_argument("--max-arity", type=int, default=8, help="permutation search guard")
    c.set_defaults(handler=cmd_compare_invariants)

    v = sub.add_parser("cert-verify", help="replay and check an isomorphism certificate")
    v.add_argument("--input", required=True, help="a .cert file")
    v.set_defaults(handler=cmd_cert_verify)

    r = sub.add_parser("corpus", help="run the shipped worked-example corpus")
    mode = r.add_mutually_exclusive_group(required=True)
    mode.add_argument("--run-all", action="store_true")
    mode.add_argument("--case", help="run a single case by id")
    r.set_defaults(handler=cmd_corpus)
    return parser


def _split_csv(text: str | None) -> tuple[str, ...]:
    if not text:
        return ()
    return tuple(s.strip() for s in text.split(",") if s.strip())


def cmd_groebner(args) -> int:
    system = read_system(args.input)
    ring = system.vars
    priority = _split_csv(args.priority)
    order = MonomialOrder(args.order, ring, priority)
    names = _split_csv(args.names) or system.names()
    gens = [system.get(n) for n in names]
    basis = Ideal(ring, gens).groebner_basis(order)
    for line in sorted(render(g, "primitive", order) for g in basis):
        print(line)
    return EXIT_OK


def cmd_quasi_singular(args) -> int:
    system = read_system(args.input)
    report = quasi_singular(system.get(args.poly))
    print(f"count: {report.count}")
    mult = report.multiplicity_dimension
    print(f"multiplicity-dimension: {mult if mult is not None else 'n/a'}")
    points = "; ".join(str(pt) for pt in report.rational_points) or "none"
    suffix = "" if report.points_exhaustive else " (incomplete)"
    print(f"rational-points: {points}{suffix}")
    return EXIT_OK


def cmd_compare_invariants(args) -> int:
    left_sys = read_system(args.left)
    right_sys = read_system(args.right)
    if left_sys.vars != right_sys.vars:
        print("error: left and right systems declare different variables", file=sys.stderr)
        return EXIT_INPUT
    ring = left_sys.vars
    left = [p for _, p in left_sys.entries]
    right = [p for _, p in right_sys.entries]
    if args.modulo:
        modulo_sys = read_system(args.modulo)
        if modulo_sys.vars != ring:
            print("error: modulo system declares different variables", file=sys.stderr)
            return EXIT_INPUT
        modulo = Ideal(ring, [p for _, p in modulo_sys.entries])
    else:
        modulo = ideal_sum(Ideal(ring, left), Ideal(ring, right))
    try:
        verdict = compare_invariants(left, right, modulo, args.k, max_arity=args.max_arity)
    except ArityLimitError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_REFUSAL
    order = default_order(ring)
    if verdict.equal:
        print(f"verdict: indistinguishable at k={args.k}")
        witness = verdict.witness_renaming or ()
        if tuple(witness) == ring.names:
            print("witness renaming: identity")
        else:
            pairs = ", ".join(f"{a} -> {b}" for a, b in zip(ring.names, witness) if a != b)
            print(f"witness renaming: {pairs}")
    else:
        print("verdict: distinguishable (not isomorphic)")
    print("left basis (E_k + R):")
    for g in verdict.left_basis:
        print(f"  {render(g, 'primitive', order)}")
    print("right basis (E_k + R):")
    for g in verdict.right_basis:
        print(f"  {render(g, 'primitive', order)}")
    return EXIT_OK


def cmd_cert_verify(args) -> int:
    cert = load_certificate(args.input)
    report = verify_certificate(cert)
    sys.stdout.write(report.render())
    return EXIT_OK if report.valid else EXIT_REFUSAL


def cmd_corpus(args) -> int:
    if args.case:
        results = [find_case(args.case).run()]
    else:
        results = run_all()
    for result in results:
        print(result.summary())
    passed = sum(1 for r in results if r.ok)
    print(f"total: {passed}/{len(results)} cases pass")
    return EXIT_OK if passed == len(results) else EXIT_REFUSAL
