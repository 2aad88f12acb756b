"""Command-line front end.

Subcommands cover single computations (mull, psi), the two sweep harnesses
(verify-conjecture, cross-validate) and crystal graph export.  JSON goes to
stdout, diagnostics to stderr.  Exit codes: 0 success or verified, 1 usage
or parse error, 2 sweep counterexample, 3 conjecture violation in a single
computation.

Wire formats: a partition is a comma-separated weakly decreasing list of
positive ints, with "" or "-" for the empty partition; a bipartition joins
two partitions with "|".  Parsing is strict so that malformed input fails
loudly instead of being reordered.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from mullineux import betamaps, engine, level1, level2
from mullineux.schema import SCHEMA_VERSION
from mullineux.errors import ConjectureViolationError, DepthExceededError, NotRegularError
from mullineux.partitions import Partition

DEFAULT_E_LIST = "2,3,4,5"


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; the exit-code contract wants 1
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if text in ("", "-"):
        return ()
    parts = []
    for chunk in text.split(","):
        try:
            p = int(chunk)
        except ValueError:
            raise ValueError(f"bad partition entry {chunk!r}") from None
        parts.append(p)
    for i, p in enumerate(parts):
        if p <= 0:
            raise ValueError(f"partition parts must be positive, got {p}")
        if i > 0 and parts[i - 1] < p:
            raise ValueError(f"partition must be weakly decreasing, got {text!r}")
    return tuple(parts)


def format_partition(lam: Partition) -> str:
    return ",".join(str(p) for p in lam) if lam else "-"


def parse_bipartition(text: str) -> tuple[Partition, Partition]:
    if text.count("|") != 1:
        raise ValueError(f"bipartition must be two partitions joined by '|', got {text!r}")
    left, right = text.split("|")
    return parse_partition(left), parse_partition(right)


def format_bipartition(blam) -> str:
    return f"{format_partition(blam[0])}|{format_partition(blam[1])}"


def parse_int_list(text: str) -> list[int]:
    return [int(chunk) for chunk in text.split(",") if chunk.strip() != ""]


def _default_jobs() -> int:
    env = os.environ.get("MULLINEUX_JOBS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _emit(doc: dict) -> None:
    json.dump(doc, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _write_csv(path: str, report: engine.SweepReport) -> None:
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["command", "bucket", "seconds"])
        for label, seconds in report.timings.items():
            writer.writerow([report.command, label, f"{seconds:.6f}"])
        writer.writerow([report.command, "checked", report.checked])
        writer.writerow([report.command, "counterexamples", len(report.counterexamples)])


# ---------------------------------------------------------------------------
# subcommands


def cmd_mull(args) -> int:
    lam = parse_partition(args.lam)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": "mull",
        "parameters": {"e": args.e, "lambda": format_partition(lam), "method": args.method},
        "results": {},
    }
    try:
        if args.method in ("kleshchev", "both"):
            doc["results"]["kleshchev"] = format_partition(level1.mullineux_kleshchev(lam, args.e))
        if args.method in ("recursive", "both"):
            image, trace = engine.mullineux_conjectural(
                lam, args.e, depth_limit=args.depth_limit, oracle_fallback=args.oracle_fallback
            )
            doc["results"]["recursive"] = format_partition(image)
            if args.trace:
                doc["results"]["trace"] = trace.to_dict()
        if args.method == "both":
            doc["results"]["agree"] = doc["results"]["kleshchev"] == doc["results"]["recursive"]
    except NotRegularError as exc:
        print(f"mullineux: error: {exc}", file=sys.stderr)
        return 1
    except DepthExceededError as exc:
        print(f"mullineux: error: {exc}", file=sys.stderr)
        return 1
    except ConjectureViolationError as exc:
        doc["error"] = str(exc)
        doc["counterexample"] = exc.trace.to_dict() if exc.trace is not None else None
        _emit(doc)
        return 3
    _emit(doc)
    return 0


def cmd_verify_conjecture(args) -> int:
    report = engine.sweep_conjecture(
        parse_int_list(args.e),
        args.max_n,
        args.max_k,
        regular_only=not args.all_partitions,
        jobs=args.jobs,
    )
    _emit(report.to_document(include_timing=args.timing))
    if args.csv:
        _write_csv(args.csv, report)
    return 0 if report.verified else 2


def cmd_cross_validate(args) -> int:
    report = engine.cross_validate(
        parse_int_list(args.e), args.max_n, depth_limit=args.depth_limit, jobs=args.jobs
    )
    _emit(report.to_document(include_timing=args.timing))
    if args.csv:
        _write_csv(args.csv, report)
    return 0 if report.verified else 2


def _symbol(blam, s, e_shift=0, m=None) -> list[dict]:
    """Charge-labelled beta-set rows of a bipartition (larger charge first)."""
    x1, x2 = betamaps.encode_bipartition(blam, (s[0], s[1] + e_shift), m)
    return [
        {"charge": s[1] + e_shift, "beta_set": list(x2)},
        {"charge": s[0], "beta_set": list(x1)},
    ]


def cmd_psi(args) -> int:
    s1, s2 = parse_int_list(args.charges)
    if s1 > s2:
        print("mullineux: error: charges must satisfy s1 <= s2", file=sys.stderr)
        return 1
    e = args.e
    blam = parse_bipartition(args.bipartition)
    steps = []
    if not args.to_dominant:
        if args.inverse:
            # display with the same padding the inverse step works at
            m = max(1 - s1, len(blam[0]) - s1, len(blam[1]) - s2)
            image = betamaps.psi_bipartition_inverse(e, (s1, s2), blam)
            steps.append(
                {
                    "charges": [s1, s2 + e],
                    "input": _symbol(blam, (s1, s2), e_shift=e, m=m),
                    "output": _symbol(image, (s1, s2), m=m),
                    "identity": image == blam,
                }
            )
        else:
            image = betamaps.psi_bipartition(e, (s1, s2), blam)
            steps.append(
                {
                    "charges": [s1, s2],
                    "input": _symbol(blam, (s1, s2)),
                    "output": _symbol(image, (s1, s2), e_shift=e),
                    "identity": image == blam,
                }
            )
    elif args.inverse:
        image = blam
        k = level2.stable_shift((s1, s2), level2.rank2(blam), e)
        for j in range(k - 1, -1, -1):
            stage = (s1, s2 + j * e)
            if betamaps.shortcut_applies(image, stage):
                steps.append({"charges": list(stage), "identity": True, "shortcut": True})
                continue
            m = max(1 - stage[0], len(image[0]) - stage[0], len(image[1]) - stage[1])
            nxt = betamaps.psi_bipartition_inverse(e, stage, image)
            steps.append(
                {
                    "charges": list(stage),
                    "input": _symbol(image, stage, e_shift=e, m=m),
                    "output": _symbol(nxt, stage, m=m),
                    "identity": nxt == image,
                }
            )
            image = nxt
    else:
        image = blam
        s2cur = s2
        while not betamaps.shortcut_applies(image, (s1, s2cur)):
            nxt = betamaps.psi_bipartition(e, (s1, s2cur), image)
            steps.append(
                {
                    "charges": [s1, s2cur],
                    "input": _symbol(image, (s1, s2cur)),
                    "output": _symbol(nxt, (s1, s2cur), e_shift=e),
                    "identity": nxt == image,
                }
            )
            image = nxt
            s2cur += e
        steps.append({"charges": [s1, s2cur], "identity": True, "shortcut": True})
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": "psi",
        "parameters": {
            "e": e,
            "charges": [s1, s2],
            "bipartition": format_bipartition(blam),
            "inverse": args.inverse,
            "to_dominant": args.to_dominant,
        },
        "results": {"image": format_bipartition(image), "steps": steps},
    }
    _emit(doc)
    return 0


def cmd_crystal_export(args) -> int:
    graph = level1.crystal_graph(args.e, args.max_n)
    if args.format == "json":
        doc = {
            "schema_version": SCHEMA_VERSION,
            "command": "crystal-export",
            "parameters": {"e": args.e, "max_n": args.max_n},
            "results": {
                "vertices": [format_partition(v) for v in graph.vertices],
                "edges": [
                    {"source": format_partition(a), "residue": j, "target": format_partition(b)}
                    for a, j, b in graph.edges
                ],
            },
        }
        _emit(doc)
    else:
        lines = [f'digraph "crystal_e{args.e}" {{']
        for v in graph.vertices:
            lines.append(f'  "{format_partition(v)}";')
        for a, j, b in graph.edges:
            lines.append(f'  "{format_partition(a)}" -> "{format_partition(b)}" [label="{j}"];')
        lines.append("}")
        sys.stdout.write("\n".join(lines) + "\n")
    return 0


# ---------------------------------------------------------------------------
# parser


def build_parser() -> _Parser:
    parser = _Parser(prog="mullineux", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    mull = sub.add_parser("mull", help="compute the Mullineux image of a partition")
    mull.add_argument("--method", choices=["kleshchev", "recursive", "both"], default="kleshchev")
    mull.add_argument("--e", type=int, required=True, help="modulus, at least 2")
    mull.add_argument("--lambda", dest="lam", required=True, help="partition, e.g. 6,5,2,2,1,1")
    mull.add_argument("--trace", action="store_true", help="include the recursion trace")
    mull.add_argument("--depth-limit", type=int, default=16)
    mull.add_argument("--oracle-fallback", action="store_true",
                      help="answer too-deep recursive subcalls with the crystal oracle")
    mull.set_defaults(func=cmd_mull)

    verify = sub.add_parser("verify-conjecture", help="sweep the odd-stage inclusion property")
    verify.add_argument("--e", default=DEFAULT_E_LIST, help="comma-separated moduli")
    verify.add_argument("--max-n", type=int, default=10)
    verify.add_argument("--max-k", type=int, default=9)
    verify.add_argument("--all-partitions", action="store_true",
                        help="sweep all partitions instead of only e-regular ones")
    verify.add_argument("--jobs", type=int, default=None)
    verify.add_argument("--csv", help="also write a per-bucket CSV summary to this path")
    verify.add_argument("--timing", action="store_true",
                        help="include wall-clock timing in the report (breaks byte-identity)")
    verify.set_defaults(func=cmd_verify_conjecture)

    cross = sub.add_parser("cross-validate", help="recursive algorithm vs crystal oracle")
    cross.add_argument("--e", default=DEFAULT_E_LIST, help="comma-separated moduli")
    cross.add_argument("--max-n", type=int, default=8)
    cross.add_argument("--depth-limit", type=int, default=16)
    cross.add_argument("--jobs", type=int, default=None)
    cross.add_argument("--csv", help="also write a per-bucket CSV summary to this path")
    cross.add_argument("--timing", action="store_true",
                       help="include wall-clock timing in the report (breaks byte-identity)")
    cross.set_defaults(func=cmd_cross_validate)

    psi = sub.add_parser("psi", help="apply a beta-set crystal isomorphism step")
    psi.add_argument("--e", type=int, required=True)
    psi.add_argument("--charges", required=True, help="bicharge, e.g. 0,3")
    psi.add_argument("--bipartition", required=True, help='e.g. "6,5,2|4,1"')
    psi.add_argument("--inverse", action="store_true")
    psi.add_argument("--to-dominant", action="store_true",
                     help="compose steps into the stabilized regime instead of one step")
    psi.set_defaults(func=cmd_psi)

    export = sub.add_parser("crystal-export", help="export the level-1 crystal graph")
    export.add_argument("--e", type=int, required=True)
    export.add_argument("--max-n", type=int, required=True)
    export.add_argument("--format", choices=["dot", "json"], default="dot")
    export.set_defaults(func=cmd_crystal_export)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    if getattr(args, "e", None) is not None and isinstance(args.e, int) and args.e < 2:
        print("mullineux: error: modulus must be at least 2", file=sys.stderr)
        return 1
    if hasattr(args, "jobs") and args.jobs is None:
        args.jobs = _default_jobs()
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"mullineux: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
