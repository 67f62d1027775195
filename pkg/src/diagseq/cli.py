"""``diagseq`` command line.

Exit codes: 0 ok, 2 parse/validation error, 3 resource bound, 4 oracle
mismatch, 5 domain error.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from dataclasses import dataclass

from . import counting, enumeration, extremal
from .errors import BoundExceeded, CapExceeded, DiagseqError, EmptyStratum
from .kernels import partition_numbers
from .partition import DiagonalSequence, Partition, conjugate, diagonal_sequence, to_s_profile
from .render import render_diagram
from .textfmt import format_seq, parse_diagonal, parse_multiset, parse_partition

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_BOUND = 3
EXIT_MISMATCH = 4
EXIT_DOMAIN = 5

MAX_RENDER_CELLS = 2000


class CommandError(Exception):
    def __init__(self, code: int, message: str):
        self.code = code
        super().__init__(message)


@dataclass
class ClassReport:
    d: DiagonalSequence
    n: int
    profile: object
    a1: tuple
    strata: dict
    total: int
    alpha_bar: Partition
    alpha_under: Partition
    members: list | None = None

    @classmethod
    def build(cls, d: DiagonalSequence, with_members: bool = False) -> "ClassReport":
        a1 = extremal.a1_set(d)
        strata = {k: counting.count_stratum(d, k) for k in a1}
        if d:
            profile = to_s_profile(d)
            top = extremal.alpha_bar(profile)
            bottom = extremal.alpha_under(profile)
        else:
            profile, top, bottom = None, Partition(), Partition()
        members = enumeration.enumerate_class(d) if with_members else None
        return cls(d, sum(d), profile, tuple(a1), strata, counting.count_class(d), top, bottom, members)

    def profile_text(self) -> str:
        if self.profile is None:
            return ""
        s = " ".join(f"s{j}={self.profile.s(j)}" for j in range(1, self.profile.peak + 1))
        return f"q={self.profile.peak} {s}"

    def strata_text(self) -> str:
        return " ".join(f"{k}:{c}" for k, c in self.strata.items())

    def as_json(self) -> dict:
        profile = None
        if self.profile is not None:
            profile = {
                "q": self.profile.peak,
                "s": {str(j): self.profile.s(j) for j in range(1, self.profile.peak + 1)},
            }
        return {
            "d": format_seq(self.d),
            "n": self.n,
            "profile": profile,
            "a1": list(self.a1),
            "strata": {str(k): str(c) for k, c in self.strata.items()},
            "total": str(self.total),
            "alpha_bar": format_seq(self.alpha_bar),
            "alpha_under": format_seq(self.alpha_under),
            "members": None if self.members is None else [format_seq(p) for p in self.members],
        }

    def as_text(self) -> str:
        lines = [
            f"d: {format_seq(self.d)}",
            f"n: {self.n}",
            f"profile: {self.profile_text()}",
            f"a1: {','.join(map(str, self.a1))}",
            f"strata: {self.strata_text()}",
            f"total: {self.total}",
            f"alpha_bar: {format_seq(self.alpha_bar)}",
            f"alpha_under: {format_seq(self.alpha_under)}",
        ]
        if self.members is not None:
            lines.append("members:")
            lines.extend(format_seq(p) for p in self.members)
        return "\n".join(lines) + "\n"


def _parse(fn, text):
    try:
        return fn(text)
    except DiagseqError as exc:
        raise CommandError(EXIT_PARSE, str(exc)) from None


def cmd_delta(args, out):
    p = _parse(parse_partition, args.partition)
    out.write(format_seq(diagonal_sequence(p)) + "\n")


def cmd_class(args, out):
    d = _parse(parse_diagonal, args.diagonal)
    if args.count_only:
        out.write(f"{counting.count_class(d)}\n")
        return
    if args.strata and not args.json:
        out.write(ClassReport.build(d).strata_text() + "\n")
        return
    try:
        report = ClassReport.build(d, with_members=args.members)
    except CapExceeded as exc:
        raise CommandError(EXIT_BOUND, f"{exc} (count {exc.count})") from None
    if args.json:
        out.write(json.dumps(report.as_json(), indent=2) + "\n")
    elif args.members:
        out.writelines(format_seq(p) + "\n" for p in report.members)
    else:
        out.write(report.as_text())


def _parse_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise CommandError(EXIT_PARSE, f"bad range {text!r}; use N or A..B") from None
    if a < 0 or b < a:
        raise CommandError(EXIT_PARSE, f"bad range {text!r}")
    return range(a, b + 1)


def check_against_oracle(n: int) -> str | None:
    """First disagreement between formulas and brute force at weight ``n``, or None."""
    table = enumeration.classes_oracle(n)
    formula_ds = enumeration.enumerate_diagonals(n)
    missing = sorted(set(formula_ds).symmetric_difference(table.entries))
    if missing:
        return f"d={format_seq(missing[0])}: class present on one side only"
    for d in sorted(table.entries):
        members = table.entries[d]
        if counting.count_class(d) != len(members):
            return f"d={format_seq(d)}: count_class={counting.count_class(d)} oracle={len(members)}"
        by_len = Counter(len(p) for p in members)
        for k in sorted(set(by_len) | set(range(d.peak, len(d) + 1))):
            if counting.count_stratum(d, k) != by_len.get(k, 0):
                return (
                    f"d={format_seq(d)}: stratum {k} formula={counting.count_stratum(d, k)} "
                    f"oracle={by_len.get(k, 0)}"
                )
    if sum(counting.count_class(d) for d in table.entries) != partition_numbers(n)[n]:
        return f"n={n}: class sizes do not sum to p(n)"
    if counting.count_distinct_classes(n) != len(table):
        return f"n={n}: distinct-part count {counting.count_distinct_classes(n)} != {len(table)} classes"
    return None


def cmd_census(args, out):
    ns = _parse_range(args.n)
    if args.check_oracle and ns[-1] > enumeration.ORACLE_BOUND:
        raise CommandError(EXIT_BOUND, f"n={ns[-1]} exceeds the oracle bound {enumeration.ORACLE_BOUND}")
    rows = []
    records = []
    for n in ns:
        ds = enumeration.enumerate_diagonals(n)
        sizes = [counting.count_class(d) for d in ds]
        row = {
            "n": n,
            "partitions": str(partition_numbers(n)[n]),
            "classes": str(counting.count_distinct_classes(n)),
            "min_class": str(min(sizes)),
            "max_class": str(max(sizes)),
        }
        if args.check_oracle:
            problem = check_against_oracle(n)
            if problem is not None:
                out.write(f"MISMATCH n={n} {problem}\n")
                raise CommandError(EXIT_MISMATCH, f"oracle mismatch at n={n}")
            row["oracle"] = "pass"
        rows.append(row)
        if args.out:
            try:
                for d in ds:
                    records.append(enumeration.class_record(d, enumeration.enumerate_class(d), n))
            except CapExceeded as exc:
                raise CommandError(EXIT_BOUND, str(exc)) from None
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(enumeration.dump_records(records))
    if args.json:
        out.write(json.dumps(rows, indent=2) + "\n")
        return
    header = ["n", "p(n)", "classes", "min", "max"] + (["oracle"] if args.check_oracle else [])
    out.write("\t".join(header) + "\n")
    for r in rows:
        cols = [str(r["n"]), r["partitions"], r["classes"], r["min_class"], r["max_class"]]
        if args.check_oracle:
            cols.append(r["oracle"])
        out.write("\t".join(cols) + "\n")


def cmd_extremes(args, out):
    d = _parse(parse_diagonal, args.diagonal)
    if args.stratum is None:
        if not d:
            out.write("\n\n")
            return
        sp = to_s_profile(d)
        top, bottom = extremal.alpha_bar(sp), extremal.alpha_under(sp)
    else:
        try:
            top = extremal.stratum_max(d, args.stratum)
            bottom = extremal.stratum_min(d, args.stratum)
        except EmptyStratum as exc:
            raise CommandError(EXIT_DOMAIN, f"no member with {args.stratum} parts; A1 = {extremal.a1_set(d)}") from exc
    out.write(format_seq(top) + "\n" + format_seq(bottom) + "\n")


def cmd_render(args, out):
    p = _parse(parse_partition, args.partition)
    if sum(p) > MAX_RENDER_CELLS:
        raise CommandError(EXIT_BOUND, f"{sum(p)} cells exceeds the render limit {MAX_RENDER_CELLS}")
    if args.conjugate:
        p = conjugate(p)
    out.write(render_diagram(p, args.mode))


def cmd_vn(args, out):
    m = _parse(parse_multiset, args.multiset)
    if args.k < 0:
        raise CommandError(EXIT_PARSE, "--k must be non-negative")
    if args.count_only:
        out.write(f"{counting.kvn_count(m, args.k)}\n")
        return
    try:
        arrangements = list(enumeration.enumerate_kvn(m, args.k))
    except BoundExceeded as exc:
        raise CommandError(EXIT_BOUND, str(exc)) from None
    out.writelines(format_seq(a) + "\n" for a in arrangements)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="diagseq", description="Diagonal sequences of integer partitions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("delta", help="diagonal sequence of a partition")
    p.add_argument("partition", nargs="?", default="")
    p.set_defaults(func=cmd_delta)

    p = sub.add_parser("class", help="report on the class of a diagonal sequence")
    p.add_argument("diagonal", nargs="?", default="")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--strata", action="store_true")
    p.add_argument("--members", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_class)

    p = sub.add_parser("census", help="per-n class census, optionally checked by brute force")
    p.add_argument("--n", required=True, help="N or A..B")
    p.add_argument("--check-oracle", action="store_true")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out", metavar="FILE", help="write one class record per line")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("extremes", help="majorization max/min of a class or stratum")
    p.add_argument("diagonal", nargs="?", default="")
    p.add_argument("--stratum", type=int, metavar="K")
    p.set_defaults(func=cmd_extremes)

    p = sub.add_parser("render", help="annotated Young diagram")
    p.add_argument("partition", nargs="?", default="")
    p.add_argument("--mode", choices=["index", "letter"], default="index")
    p.add_argument("--conjugate", action="store_true")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("vn", help="count or list (k-)vn-arrangements of a multiset")
    p.add_argument("multiset")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_vn)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        args.func(args, out)
    except CommandError as exc:
        print(f"diagseq: {exc}", file=sys.stderr)
        return exc.code
    except DiagseqError as exc:
        print(f"diagseq: {exc}", file=sys.stderr)
        return EXIT_PARSE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
