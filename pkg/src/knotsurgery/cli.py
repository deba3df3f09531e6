"""Command-line front end: one subcommand per pipeline stage.

All behavior is controlled by flags; there are no config files, environment
switches, or random choices, so every invocation is reproducible byte for
byte.  Exit codes: 0 success, 1 usage or parse error (including a
certificate that fails verification), 2 internal inconsistency (a closed
formula violated one of its own guarantees).
"""

from __future__ import annotations

import argparse
import json
import sys

from .family import (
    DEFAULT_P_CAP,
    CapExhaustedError,
    UnboundednessCertificate,
    analyze_family,
    certify_unbounded,
    verify_certificate,
)
from .knots import (
    InternalInconsistencyError,
    KnotParseError,
    alexander_expr,
    parse_knot_expr,
)
from .laurent import (
    ExponentOverflowError,
    LaurentPoly,
    NotDivisibleError,
    NotSymmetrizableError,
    PolyParseError,
)
from .surgery import LinkFamilyMember, SurgerySpec, sw_specialized, torres_specialize

__all__ = ["main", "app", "EXIT_OK", "EXIT_USAGE", "EXIT_INTERNAL"]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INTERNAL = 2


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors by default; the published
    # contract reserves 2 for internal inconsistencies
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _cmd_alexander(args) -> int:
    expr = parse_knot_expr(args.expr)
    poly = alexander_expr(expr, symmetrize=not args.no_symmetrize)
    if args.format == "json":
        _emit(json.dumps(poly.to_json_dict(), indent=2))
    else:
        _emit(str(poly))
    return EXIT_OK


def _cmd_torres(args) -> int:
    poly = LaurentPoly.parse(args.poly)
    result = torres_specialize(poly, args.lk)
    if args.format == "json":
        _emit(json.dumps(result.to_json_dict(), indent=2))
    else:
        _emit(str(result))
    return EXIT_OK


def _cmd_sw(args) -> int:
    spec = SurgerySpec(args.n, LinkFamilyMember(args.p))
    delta_L = None if args.delta_l is None else LaurentPoly.parse(args.delta_l)
    result = sw_specialized(spec, delta_L)
    if args.format == "json":
        _emit(json.dumps(result.to_json_dict(), indent=2))
    else:
        full = "unavailable" if result.polynomial is None else str(result.polynomial)
        _emit(
            f"p = {result.p}\n"
            f"n = {result.n}\n"
            f"specialization at t_K = 1: {result.specialization_at_tK1}\n"
            f"basic-class lower bound: {result.basic_class_lower_bound}\n"
            f"full polynomial: {full}"
        )
    return EXIT_OK


def _cmd_family(args) -> int:
    report = analyze_family(args.n, args.pmin, args.pmax, p_cap=args.pcap)
    if args.format == "json":
        _emit(report.to_json())
    elif args.format == "csv":
        _emit(report.to_csv())
    else:
        _emit(report.to_text())
    return EXIT_OK


def _cmd_certify(args) -> int:
    if args.verify is not None:
        try:
            text = open(args.verify, "r", encoding="utf-8").read()
        except OSError as exc:
            print(f"error: cannot read {args.verify}: {exc}", file=sys.stderr)
            return EXIT_USAGE
        certificate = UnboundednessCertificate.from_json(text)
        valid = verify_certificate(certificate, n=args.n)
        _emit(
            json.dumps(
                {
                    "valid": valid,
                    "target": certificate.target,
                    "witness_count": len(certificate.witnesses),
                },
                indent=2,
            )
        )
        return EXIT_OK if valid else EXIT_USAGE
    certificate = certify_unbounded(args.target, p_cap=args.cap)
    _emit(certificate.to_json())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="knotsurgery",
        description="Exact invariants for torus-knot link-surgery families.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    alexander = sub.add_parser(
        "alexander", help="Alexander polynomial of a knot expression"
    )
    alexander.add_argument(
        "expr", help="knot expression: unknot | torus(p,q) | mirror(E) | sum(E,E)"
    )
    alexander.add_argument(
        "--no-symmetrize",
        action="store_true",
        help="print the raw closed-formula representative instead",
    )
    alexander.add_argument("--format", choices=("text", "json"), default="text")
    alexander.set_defaults(func=_cmd_alexander)

    torres = sub.add_parser(
        "torres", help="specialize a link polynomial at x = 1 via the Torres condition"
    )
    torres.add_argument("--lk", type=int, required=True, help="linking number, >= 0")
    torres.add_argument("poly", help="component Alexander polynomial, e.g. 't - 1 + t^-1'")
    torres.add_argument("--format", choices=("text", "json"), default="text")
    torres.set_defaults(func=_cmd_torres)

    sw = sub.add_parser(
        "sw", help="Seiberg-Witten data of the surgery manifold X_p"
    )
    sw.add_argument("--p", type=int, required=True, help="family index, >= 1")
    sw.add_argument("--n", type=int, default=1, help="E(n) parameter (default 1)")
    sw.add_argument(
        "--delta-l",
        default=None,
        help="optional closed-form link polynomial in x and y for synthetic runs",
    )
    sw.add_argument("--format", choices=("text", "json"), default="text")
    sw.set_defaults(func=_cmd_sw)

    family = sub.add_parser(
        "family", help="per-index report over a range of the family"
    )
    family.add_argument("--n", type=int, default=1, help="E(n) parameter (default 1)")
    family.add_argument("--pmin", type=int, required=True)
    family.add_argument("--pmax", type=int, required=True)
    family.add_argument(
        "--pcap", type=int, default=DEFAULT_P_CAP, help=f"range cap (default {DEFAULT_P_CAP})"
    )
    family.add_argument("--format", choices=("text", "json", "csv"), default="text")
    family.set_defaults(func=_cmd_family)

    certify = sub.add_parser(
        "certify", help="emit or verify an unboundedness certificate"
    )
    group = certify.add_mutually_exclusive_group(required=True)
    group.add_argument("--target", type=int, help="lower bound the witnesses must exceed")
    group.add_argument("--verify", metavar="FILE", help="re-check a certificate file")
    certify.add_argument(
        "--cap", type=int, default=DEFAULT_P_CAP, help=f"scan cap (default {DEFAULT_P_CAP})"
    )
    certify.add_argument(
        "--n", type=int, default=1, help="E(n) parameter for verification (default 1)"
    )
    certify.set_defaults(func=_cmd_certify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except (PolyParseError, KnotParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (
        NotDivisibleError,
        NotSymmetrizableError,
        ExponentOverflowError,
        InternalInconsistencyError,
        CapExhaustedError,
    ) as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def app() -> None:
    sys.exit(main())
