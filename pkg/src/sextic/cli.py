"""Command-line entry point. JSON goes to stdout, diagnostics to stderr.

Exit codes: 0 success, 1 usage or input error, 2 verification FAIL,
3 verification INCONCLUSIVE, 4 unrealizable tuple (``witness``).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import geography, lp_format, scrollar, splitting_loci, verifier, witness
from .exact_lp import LPError, solve

EXIT_OK, EXIT_USAGE, EXIT_FAIL, EXIT_INCONCLUSIVE, EXIT_UNREALIZABLE = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; 2 is reserved for a FAIL verdict here
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _dump(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def cmd_classify(args) -> int:
    e = scrollar.ScrollarTuple(tuple(args.e))
    if e.degree != args.d:
        raise UsageError(f"degree {args.d} needs {args.d - 1} invariants, got {len(e)}")
    out = {"d": args.d, "e": list(e), "genus": scrollar.genus(e)}
    if args.d == 6:
        label = scrollar.classify_region(e)
        out["region"] = label.value
        out["realizable"] = label.realizable
        out["in_P2"] = scrollar.in_P2(e)
        out["in_P3"] = scrollar.in_P3(e)
        out["admissible_partitions"] = (
            [str(p) for p in scrollar.find_admissible_partitions(e)] if out["in_P2"] else []
        )
        out["expected_codim"] = scrollar.expected_codim(e)
    else:
        out["region"] = None
        out["realizable"] = scrollar.realizable(e)
    _dump(out)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    sys.stdout.write(geography.emit(geography.enumerate_by_genus(args.genus), args.format))
    return EXIT_OK


def _verdict_exit(verdict: verifier.Verdict) -> int:
    return {
        verifier.Verdict.PASS: EXIT_OK,
        verifier.Verdict.FAIL: EXIT_FAIL,
        verifier.Verdict.INCONCLUSIVE: EXIT_INCONCLUSIVE,
    }[verdict]


def cmd_verify(args) -> int:
    report = verifier.run_verification(require_negative=not args.drop_negativity)
    if args.export:
        names = verifier.export_cases(args.export, mps=args.mps)
        print(f"wrote {len(names)} files to {args.export}", file=sys.stderr)
    _dump(report.to_dict())
    print(f"verify-lemma: {report.verdict.value}", file=sys.stderr)
    return _verdict_exit(report.verdict)


def cmd_bad_types(args) -> int:
    e = scrollar.as_sextic(args.e)
    bad = splitting_loci.enumerate_bad_types(e)  # raises NotInP3 first
    base = splitting_loci.TrigonalBase(e[1], e[2])
    _dump(
        {
            "e": list(e),
            "delta": splitting_loci.delta(e),
            "degree_sum": splitting_loci.bad_type_sum(e),
            "target_type": list(splitting_loci.target_type(e)),
            "target_dim": splitting_loci.target_dim(e),
            "bad_types": [
                {"type": list(t), "dim": splitting_loci.dim_splitting_locus(base, t)} for t in bad
            ],
        }
    )
    return EXIT_OK


def _partition(text: str) -> scrollar.OrientedPartition:
    # accepts "23|45" or "2,3|4,5"
    try:
        light, heavy = text.split("|")
        parse = lambda s: [int(ch) for ch in s.replace(",", "").strip("{} ")]  # noqa: E731
        return scrollar.OrientedPartition.of(parse(light), parse(heavy))
    except (ValueError, TypeError, scrollar.ScrollarError) as exc:
        raise argparse.ArgumentTypeError(f"bad partition {text!r}: {exc}") from None


def cmd_witness(args) -> int:
    try:
        if args.partition is not None:
            plan = witness.plan_triple_over_double(args.e, args.partition)
        else:
            plan = witness.realization_witness(args.e)
    except witness.Unrealizable as exc:
        print(f"Unrealizable: {exc}", file=sys.stderr)
        return EXIT_UNREALIZABLE
    _dump(plan.to_dict())
    return EXIT_OK


def cmd_solve(args) -> int:
    instance = lp_format.read_program(args.file)
    _dump(solve(instance).to_dict())
    return EXIT_OK


def cmd_export(args) -> int:
    names = verifier.export_cases(args.directory, mps=args.mps)
    _dump({"directory": str(args.directory), "files": names})
    return EXIT_OK


def cmd_bounds(args) -> int:
    bound = scrollar.semistable_gap_bound(args.d, args.g)
    _dump({"d": args.d, "g": args.g, "bound": str(bound)})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="sextic", description="Scrollar invariants of degree-6 covers.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("classify", help="region and realizability of a tuple")
    s.add_argument("d", type=int)
    s.add_argument("e", type=int, nargs="+")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("enumerate", help="all sextic tuples of a genus")
    s.add_argument("--genus", "-g", type=int, required=True)
    s.add_argument("--format", choices=("csv", "json"), default="csv")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("verify-lemma", help="solve all case LPs exactly")
    s.add_argument("--export", metavar="DIR", help="also write the case files to DIR")
    s.add_argument("--mps", action="store_true", help="with --export, write .mps twins too")
    s.add_argument(
        "--drop-negativity",
        action="store_true",
        help="omit a1 <= -1 from every case (mutation check; expected to FAIL)",
    )
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("bad-types", help="bad splitting types for e in P3")
    s.add_argument("e", type=int, nargs=5)
    s.set_defaults(func=cmd_bad_types)

    s = sub.add_parser("witness", help="construction plan for a realizable tuple")
    s.add_argument("e", type=int, nargs=5)
    s.add_argument("--partition", type=_partition, help='oriented partition such as "23|45"')
    s.set_defaults(func=cmd_witness)

    s = sub.add_parser("solve-lp", help="solve an .lp or .mps file exactly")
    s.add_argument("file")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("export-cases", help="write every case LP to a directory")
    s.add_argument("directory")
    s.add_argument("--mps", action="store_true")
    s.set_defaults(func=cmd_export)

    s = sub.add_parser("bounds", help="semistable gap bound 2(g+d-1)/d")
    s.add_argument("d", type=int)
    s.add_argument("g", type=int)
    s.set_defaults(func=cmd_bounds)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except (scrollar.ScrollarError, lp_format.FormatError, LPError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
