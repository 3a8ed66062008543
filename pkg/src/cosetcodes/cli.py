"""Command-line front end: one subcommand per module surface.

All numeric output is exact (fractions as ``p/q``) unless ``--float`` is
given, and identical invocations produce byte-identical output — nothing
nondeterministic (timings, worker counts, hash order) ever reaches stdout.

Exit codes: 0 success, 1 a certification claim failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Sequence

from . import bounds, verify
from .cyclic import CyclicElement, iso_f16_to_m4, iso_f8_to_m3, pair_to_matrix
from .golden import min_abs_det_sq
from .matrices import RingMatrix, all_matrices
from .outer_codes import (
    MatrixSpace,
    WeightKind,
    bachoc_word_weight,
    hamming_weight,
    lee_word_weight,
    lift_code,
    load_code,
    min_distance,
    named_code,
    pushforward_pairs,
    rs_distance_certificate,
)
from .rings import F2, F4, F4I, F8, F16_ALT, get_ring


class UsageError(Exception):
    pass


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"not a fraction: {text!r} ({exc})") from None


def _print_value(value, as_float: bool) -> None:
    print(float(value) if as_float else value)


# ----------------------------------------------------------------------
# subcommand handlers

def _cmd_mindet(args) -> int:
    coset = None
    ideal = None
    if args.coset is not None:
        if args.ideal is None:
            raise UsageError("--coset needs --ideal 1pi|2")
        ideal = args.ideal
        ring = F2 if ideal == "1pi" else get_ring("f2i")
        coset = RingMatrix.parse(ring, args.coset)
    elif args.ideal is not None:
        raise UsageError("--ideal needs --coset")
    value, witness = min_abs_det_sq(args.box, coset=coset, ideal=ideal, jobs=args.jobs)
    _print_value(value, args.float)
    print(f"witness\t{witness}")
    return 0


def _load_cli_code(args):
    if args.code_file:
        with open(args.code_file, "r", encoding="utf-8") as fh:
            return load_code(fh.read())
    if not args.code:
        raise UsageError("give --code NAME or --code-file PATH")
    return named_code(args.code, L=args.L, ring_name=args.ring)


def _cmd_mindist(args) -> int:
    code = _load_cli_code(args)
    if args.certified:
        if not code.name.startswith("rs["):
            raise UsageError("--certified applies to the reed-solomon codes")
        print(rs_distance_certificate(code))
        return 0
    if args.transform == "lift":
        code = lift_code(code)
    elif args.transform == "pairs":
        code = pushforward_pairs(code)
    kind = WeightKind(args.weight)
    print(min_distance(code, kind))
    return 0


def _cmd_weights(args) -> int:
    if args.kind == "bachoc":
        word = [
            RingMatrix.parse(F2, chunk) for chunk in args.word.split(";") if chunk
        ]
        print(bachoc_word_weight(word))
        return 0
    ring = get_ring(args.ring)
    symbols = [ring.parse(s) for s in args.word.split(",")]
    if args.kind == "hamming":
        print(hamming_weight(symbols))
    else:
        print(lee_word_weight(symbols))
    return 0


def _cmd_bounds(args) -> int:
    which = args.which
    if which == "hamming":
        value = bounds.hamming_bound(args.n, _parse_fraction(args.a_norm_sq), _parse_fraction(args.delta), args.d)
        inputs = (("n", str(args.n)), ("a_norm_sq", args.a_norm_sq), ("delta", args.delta), ("d", str(args.d)))
    elif which == "bachoc":
        value = bounds.bachoc_bound(_parse_fraction(args.delta), args.d)
        inputs = (("delta", args.delta), ("d", str(args.d)))
    elif which == "hamming_m2f2i":
        value = bounds.hamming_bound_m2f2i(_parse_fraction(args.delta), args.d)
        inputs = (("delta", args.delta), ("d", str(args.d)))
    elif which == "multilevel_m4":
        ds = _parse_int_list(args.ds, 4)
        value = bounds.multilevel_bound_m4(*ds, _parse_fraction(args.delta), args.duplicate_d3)
        inputs = (("ds", args.ds), ("delta", args.delta), ("duplicate_d3", str(args.duplicate_d3).lower()))
    elif which == "multilevel_m2f2i":
        ds = _parse_int_list(args.ds, 2)
        value = bounds.multilevel_min_m2f2i(*ds)
        inputs = (("ds", args.ds),)
    elif which == "redundancy":
        value = bounds.normalized_redundancy(args.bits, args.L, args.n)
        inputs = (("bits", str(args.bits)), ("L", str(args.L)), ("n", str(args.n)))
    elif which == "rate_m2f2i":
        value = bounds.rate_m2f2i(args.L, args.k)
        inputs = (("L", str(args.L)), ("k", str(args.k)))
    elif which == "rate_m4":
        ks = _parse_int_list(args.ks, 4)
        value = bounds.multilevel_rate_m4(ks, args.L)
        inputs = (("ks", args.ks), ("L", str(args.L)))
    else:  # gv
        value = bounds.gv_bound(args.q, args.L, args.d)
        inputs = (("q", str(args.q)), ("L", str(args.L)), ("d", str(args.d)))
    if args.verbose:
        print(bounds.BoundReport(which, inputs, value).format(args.float))
    else:
        _print_value(value, args.float)
    return 0


def _parse_int_list(text: str | None, count: int) -> list[int]:
    if not text:
        raise UsageError(f"this bound needs a comma list of {count} integers")
    try:
        values = [int(p) for p in text.split(",")]
    except ValueError:
        raise UsageError(f"not an integer list: {text!r}") from None
    if len(values) != count:
        raise UsageError(f"expected {count} integers, got {len(values)}")
    return values


def _cmd_encode(args) -> int:
    code = _load_cli_code(args)
    alphabet = code.alphabet
    if isinstance(alphabet, MatrixSpace):
        message = [
            RingMatrix.parse(alphabet.ring, chunk)
            for chunk in args.msg.split(";")
            if chunk
        ]
    else:
        message = [alphabet.parse(s) for s in args.msg.split(",")]
    if len(message) != code.k:
        raise UsageError(f"{code.name} needs a {code.k}-symbol message")
    print(",".join(str(x) for x in code.encode(message)))
    return 0


def _cmd_enumerate(args) -> int:
    ring = get_ring(args.ring)
    for m in all_matrices(ring, args.n):
        if args.invertible and not m.is_invertible:
            continue
        print(m)
    return 0


_ISO_CLAIMS = {
    "f8m3": "iso_f8m3",
    "f16m4": "iso_f16m4",
    "m2f2_f4j": "iso_m2f2_f4j",
    "m2f2i_f4ij": "iso_m2f2i_f4ij",
}


def _cmd_iso(args) -> int:
    if args.check:
        report = verify.run_claim(_ISO_CLAIMS[args.which])
        print(f"{args.which}: {'pass' if report.passed else 'fail'}")
        for line in report.details:
            print(f"  {line}")
        if not report.passed:
            print(f"  witness: {report.witness}")
        return 0 if report.passed else 1
    if args.element is None:
        raise UsageError("give --element or --check")
    if args.which == "f8m3":
        image = iso_f8_to_m3(CyclicElement.parse(F8, args.element))
    elif args.which == "f16m4":
        image = iso_f16_to_m4(CyclicElement.parse(F16_ALT, args.element))
    else:
        ring = F4 if args.which == "m2f2_f4j" else F4I
        parts = [p.strip() for p in args.element.split(";")]
        if len(parts) != 2:
            raise UsageError("pair models need --element 'x; y'")
        image = pair_to_matrix(ring.parse(parts[0]), ring.parse(parts[1]))
    print(image)
    return 0


def _cmd_verify(args) -> int:
    if args.claim:
        reports = [verify.run_claim(args.claim, jobs=args.jobs)]
    elif args.all:
        reports = verify.run_all(jobs=args.jobs)
    else:
        raise UsageError("give --all or --claim ID")
    for report in reports:
        if args.format == "tsv":
            print(report.tsv_line())
        else:
            status = "pass" if report.passed else "FAIL"
            print(f"{report.claim}: {status}  [{report.space}]")
            if report.witness != "-":
                print(f"  witness: {report.witness}")
            for line in report.details:
                print(f"  {line}")
    return 0 if all(r.passed for r in reports) else 1


# ----------------------------------------------------------------------
# parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cosetcodes",
        description="Exact arithmetic for coset space-time codes over small rings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mindet", help="minimum |det|^2 of the golden code over a box")
    p.add_argument("--box", type=int, default=2, help="coordinates range over [-box, box]")
    p.add_argument("--coset", help="restrict to one projection class (matrix literal)")
    p.add_argument("--ideal", choices=["1pi", "2"], help="ideal for --coset")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--float", action="store_true")
    p.set_defaults(handler=_cmd_mindet)

    p = sub.add_parser("mindist", help="minimum distance of a named or custom code")
    p.add_argument("--code", help="named code (dualrep, hexacode, rs16_13, ...)")
    p.add_argument("--code-file", help="path to a 'ring L k' generator file")
    p.add_argument("--weight", choices=[k.value for k in WeightKind], default="hamming")
    p.add_argument("--transform", choices=["none", "lift", "pairs"], default="none")
    p.add_argument("--certified", action="store_true", help="use the RS minor certificate")
    p.add_argument("--L", type=int)
    p.add_argument("--ring")
    p.set_defaults(handler=_cmd_mindist)

    p = sub.add_parser("weights", help="weight of one word")
    p.add_argument("--kind", choices=["hamming", "bachoc", "lee"], required=True)
    p.add_argument("--word", required=True, help="comma-separated symbols; ';'-separated matrices for bachoc")
    p.add_argument("--ring", default="f4i")
    p.set_defaults(handler=_cmd_weights)

    p = sub.add_parser("bounds", help="evaluate one determinant/rate bound exactly")
    p.add_argument(
        "--which",
        required=True,
        choices=[
            "hamming", "bachoc", "hamming_m2f2i", "multilevel_m4",
            "multilevel_m2f2i", "redundancy", "rate_m2f2i", "rate_m4", "gv",
        ],
    )
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--a-norm-sq", dest="a_norm_sq", default="2")
    p.add_argument("--delta", default="1/5")
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--ds", help="comma list of level distances")
    p.add_argument("--ks", help="comma list of level dimensions")
    p.add_argument("--bits", type=int, default=0)
    p.add_argument("--L", type=int, default=2)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--q", type=int, default=4)
    p.add_argument("--duplicate-d3", action="store_true", help="repeat d3 in the final multilevel term")
    p.add_argument("--float", action="store_true")
    p.add_argument("--verbose", action="store_true", help="print name and inputs too")
    p.set_defaults(handler=_cmd_bounds)

    p = sub.add_parser("encode", help="encode a message with a named code")
    p.add_argument("--code")
    p.add_argument("--code-file")
    p.add_argument("--msg", required=True, help="comma-separated message symbols")
    p.add_argument("--L", type=int)
    p.add_argument("--ring")
    p.set_defaults(handler=_cmd_encode)

    p = sub.add_parser("enumerate", help="stream a matrix space, one per line")
    p.add_argument("--ring", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--invertible", action="store_true")
    p.set_defaults(handler=_cmd_enumerate)

    p = sub.add_parser("iso", help="apply or certify one of the matrix models")
    p.add_argument("--which", choices=sorted(_ISO_CLAIMS), required=True)
    p.add_argument("--element", help="'x0; x1; ...' algebra element or 'x; y' pair")
    p.add_argument("--check", action="store_true", help="run the exhaustive certification")
    p.set_defaults(handler=_cmd_iso)

    p = sub.add_parser("verify", help="run the brute-force certification claims")
    p.add_argument("--all", action="store_true")
    p.add_argument("--claim", choices=sorted(verify.CLAIMS))
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=["tsv", "plain"], default="tsv")
    p.set_defaults(handler=_cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
