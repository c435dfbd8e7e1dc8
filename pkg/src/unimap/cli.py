"""Command-line front end: tabulate the one-face map counts by any method,
print generating-polynomial coefficients, and run the verification suites.

Exit codes: 0 success, 1 verification failure, 2 invalid arguments,
3 resource cap refused.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Iterable, Iterator

from . import closed_forms as cf
from . import combinatorics as comb
from . import involutions as inv
from . import oracle as orc
from . import recurrences as rec
from . import symbolic as sym

TABLE_METHODS = (
    "lehman-walsh",
    "odd-cycles",
    "convolution",
    "hz-coeff",
    "hz-rec",
    "chapuy",
    "oracle",
)
POLY_FORMS = ("hz", "new", "stanley")
VERIFY_SUITES = ("identities", "involutions", "oracle", "polynomials", "concavity", "all")

# refusal thresholds (exceed only with --force) and default sweep sizes
SUITE_CAPS = {
    "identities": 30,
    "involutions": 6,
    "oracle": None,  # resolved from oracle_cap() at run time
    "polynomials": 30,
    "concavity": 60,
}
SUITE_DEFAULTS = {
    "identities": 30,
    "involutions": 5,
    "oracle": 6,
    "polynomials": 20,
    "concavity": 50,
}


@dataclass(frozen=True)
class OutputRecord:
    n: int
    g: int
    value: int
    method: str

    def csv_row(self) -> str:
        return f"{self.n},{self.g},{self.value},{self.method}"

    def json_obj(self) -> dict:
        # values exceed 64-bit range quickly, so they are serialized as strings
        return {"n": self.n, "g": self.g, "value": str(self.value), "method": self.method}


def _table_records(n_max: int, method: str, force: bool) -> Iterator[OutputRecord]:
    if method == "hz-rec":
        table = rec.hz_recurrence_table(n_max)
        for n in range(1, n_max + 1):
            for g in cf.genus_range(n):
                yield OutputRecord(n, g, table.value(n, g), method)
        return
    if method == "chapuy":
        table = rec.chapuy_table(n_max)
        for n in range(1, n_max + 1):
            for g in cf.genus_range(n):
                yield OutputRecord(n, g, table.value(n, g), method)
        return
    if method == "oracle":
        cap = n_max if force else orc.oracle_cap()
        for n in range(1, n_max + 1):
            table = orc.brute_force_table(n, cap=cap)
            for g in cf.genus_range(n):
                yield OutputRecord(n, g, table.get(g), method)
        return
    per_entry = {
        "lehman-walsh": cf.lehman_walsh,
        "odd-cycles": cf.a_via_odd_cycles,
        "convolution": cf.a_via_convolution,
        "hz-coeff": cf.harer_zagier_coefficient,
    }[method]
    for n in range(1, n_max + 1):
        for g in cf.genus_range(n):
            yield OutputRecord(n, g, per_entry(n, g), method)


def cmd_table(args: argparse.Namespace) -> int:
    if args.method == "oracle" and args.n_max > orc.oracle_cap() and not args.force:
        print(
            f"refusing to brute-force {args.n_max} edges (cap {orc.oracle_cap()}, "
            f"(2n-1)!! involutions); pass --force to accept the runtime",
            file=sys.stderr,
        )
        return 3
    records = list(_table_records(args.n_max, args.method, args.force))
    if args.format == "csv":
        print("n,g,value,method")
        for r in records:
            print(r.csv_row())
    else:
        print(json.dumps([r.json_obj() for r in records], separators=(",", ":")))
    return 0


def cmd_poly(args: argparse.Namespace) -> int:
    build = {
        "hz": cf.hz_polynomial,
        "new": cf.convolution_polynomial,
        "stanley": sym.stanley_polynomial,
    }[args.form]
    p = build(args.n)
    for e in range(p.degree + 1):
        c = p.coefficient(e)
        if c != 0:
            print(f"{e}:{c}")
    return 0


def _six_methods(n: int, g: int, hz_table: rec.RecurrenceTable, ch_table: rec.RecurrenceTable):
    return (
        cf.lehman_walsh(n, g),
        cf.a_via_odd_cycles(n, g),
        cf.a_via_convolution(n, g),
        cf.harer_zagier_coefficient(n, g),
        hz_table.value(n, g),
        ch_table.value(n, g),
    )


def _suite_identities(n_max: int) -> Iterator[tuple[str, bool]]:
    hz_table = rec.hz_recurrence_table(n_max)
    ch_table = rec.chapuy_table(n_max)
    for n in range(1, n_max + 1):
        ok = all(
            len(set(_six_methods(n, g, hz_table, ch_table))) == 1
            for g in cf.genus_range(n)
        )
        yield f"six_way_agreement n={n}", ok
    for n in range(0, min(n_max, 20) + 1):
        ok = all(
            cf.stirling_convolution(n, g)
            == 2 ** (n - 2 * g) * comb.odd_cycle_permutations(n + 1, g)
            for g in cf.genus_range(n)
        )
        yield f"convolution_equals_odd_cycles n={n}", ok
    for n in range(2, min(n_max, 20) + 1):
        ok = all(
            (n + 1) * cf.a_via_odd_cycles(n, g)
            == 2 * (2 * n - 1) * cf.a_via_odd_cycles(n - 1, g)
            + (2 * n - 1) * (n - 1) * (2 * n - 3) * cf.a_via_odd_cycles(n - 2, g - 1)
            for g in cf.genus_range(n)
        )
        yield f"hz_recurrence_from_odd_cycles n={n}", ok


def _suite_polynomials(n_max: int) -> Iterator[tuple[str, bool]]:
    for n in range(1, n_max + 1):
        hz = cf.hz_polynomial(n)
        conv = cf.convolution_polynomial(n)
        op = sym.shift_operator_polynomial(n)
        stan = sym.stanley_polynomial(n)
        yield f"four_forms_equal n={n}", hz == conv == op == stan
        yield f"stanley_degree_collapse n={n}", stan.degree == n + 1
        yield f"odd_even_symmetry n={n}", conv.reflected() == (-1) ** (n + 1) * conv
    for n in range(0, min(n_max, 15) + 1):
        ok = all(
            cf.stirling_convolution_sum(n, l) == 0
            for l in range(0, n + 4)
            if (l - n) % 2 != 0
        )
        yield f"parity_vanishing n={n}", ok


def _suite_involutions(n_max: int) -> Iterator[tuple[str, bool]]:
    for n in range(0, n_max + 1):
        report = inv.orbit_audit(n, bound=n_max)
        for check in report.checks:
            yield f"{check.name} n={n}", check.passed


def _suite_oracle(n_max: int, force: bool) -> Iterator[tuple[str, bool]]:
    cap = n_max if force else orc.oracle_cap()
    hz_table = rec.hz_recurrence_table(n_max)
    ch_table = rec.chapuy_table(n_max)
    for n in range(1, n_max + 1):
        table = orc.brute_force_table(n, cap=cap)
        double_fact = 1
        for odd in range(1, 2 * n, 2):
            double_fact *= odd
        yield f"total_is_double_factorial n={n}", table.total() == double_fact
        ok = all(
            set(_six_methods(n, g, hz_table, ch_table)) == {table.get(g)}
            for g in cf.genus_range(n)
        )
        yield f"oracle_matches_all_methods n={n}", ok


def _suite_concavity(n_max: int) -> Iterator[tuple[str, bool]]:
    table = rec.hz_recurrence_table(n_max)
    for n in range(1, n_max + 1):
        seq = [table.value(n, g) for g in cf.genus_range(n)]
        yield f"log_concave n={n}", sym.log_concave(seq)
    for n in range(1, min(n_max, 20) + 1):
        h = cf.h_polynomial(table.genus_table(n, "hz-rec"))
        yield f"h_negative_real_rooted n={n}", sym.sturm_negative_real_rooted(h)


def cmd_verify(args: argparse.Namespace) -> int:
    suites = list(VERIFY_SUITES[:-1]) if args.suite == "all" else [args.suite]
    streams: list[tuple[str, Iterable[tuple[str, bool]]]] = []
    for suite in suites:
        cap = orc.oracle_cap() if suite == "oracle" else SUITE_CAPS[suite]
        n_max = args.n_max if args.n_max is not None else SUITE_DEFAULTS[suite]
        if args.suite == "all" and args.n_max is not None:
            n_max = min(n_max, SUITE_DEFAULTS[suite])
        if n_max > cap and not args.force:
            print(
                f"suite {suite} refuses n_max {n_max} above its cap {cap}; "
                f"pass --force to accept the runtime",
                file=sys.stderr,
            )
            return 3
        if suite == "identities":
            streams.append((suite, _suite_identities(n_max)))
        elif suite == "involutions":
            streams.append((suite, _suite_involutions(n_max)))
        elif suite == "oracle":
            streams.append((suite, _suite_oracle(n_max, args.force)))
        elif suite == "polynomials":
            streams.append((suite, _suite_polynomials(n_max)))
        elif suite == "concavity":
            streams.append((suite, _suite_concavity(n_max)))
    all_ok = True
    for suite, stream in streams:
        for name, ok in stream:
            all_ok &= ok
            print(f"{'PASS' if ok else 'FAIL'} {suite}.{name}")
    return 0 if all_ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unimap",
        description="Exact counts of rooted one-face maps by edge count and genus.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", help="tabulate counts for 1 <= n <= n-max")
    t.add_argument("--n-max", type=int, required=True)
    t.add_argument("--method", choices=TABLE_METHODS, required=True)
    t.add_argument("--format", choices=("csv", "json"), default="csv")
    t.add_argument("--force", action="store_true", help="exceed the oracle cap")

    p = sub.add_parser("poly", help="print generating polynomial coefficients")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--form", choices=POLY_FORMS, required=True)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", choices=VERIFY_SUITES, required=True)
    v.add_argument("--n-max", type=int, default=None)
    v.add_argument("--force", action="store_true", help="exceed a suite cap")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "table":
        if args.n_max < 1:
            parser.error(f"--n-max must be >= 1, got {args.n_max}")
        return cmd_table(args)
    if args.command == "poly":
        if args.n < 1:
            parser.error(f"--n must be >= 1, got {args.n}")
        return cmd_poly(args)
    if args.command == "verify":
        if args.n_max is not None and args.n_max < 1:
            parser.error(f"--n-max must be >= 1, got {args.n_max}")
        return cmd_verify(args)
    parser.error(f"unknown command {args.command}")
    return 2


if __name__ == "__main__":
    sys.exit(main())
