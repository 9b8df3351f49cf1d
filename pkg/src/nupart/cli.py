"""Command-line front end.

Exit codes: 0 all claims pass, 1 a verification failure, 2 usage or I/O
error, 3 an enumeration contradiction (decomposition or oracle mismatch).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from pathlib import Path
from typing import Callable, Optional, Sequence

from nupart import analysis, enumeration
from nupart.cache import (
    CacheError,
    CacheIntegrityError,
    default_cache_path,
    ensure_cache,
    header,
    load_table,
)
from nupart.reports import VerificationReport, Witness, reports_to_csv, reports_to_json
from nupart.seqcore import SeqTable, mod_floor, sigma0

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CONTRADICTION = 0, 1, 2, 3

DEFAULT_MAX = 3000
DEFAULT_ENUM_CUTOFF = 45
GUY_CUTOFF = 40
CONJUGATION_CUTOFF = 30


class UsageError(Exception):
    pass


# ----------------------------- claims -----------------------------


def oracle_report(table: SeqTable, cutoff: int) -> VerificationReport:
    """Brute-force counts of P_n, N_n, G_n against the recurrence table."""
    bad = []
    for n in range(cutoff + 1):
        counts = [0, 0, 0]
        for lam in enumeration.enumerate_partitions(n, 1):
            counts[0] += 1
            if enumeration.is_non_unitary(lam):
                counts[1] += 1
                if enumeration.is_ground_state(lam):
                    counts[2] += 1
        # enumeration gives nu(0) = 1 and gamma(0..2) = 0, matching the table conventions
        for name, got, want in zip(("p", "nu", "gamma"), counts, table.row(n)[1:]):
            if got != want:
                bad.append(Witness(n, f"{name}: enumerated {got}, table {want}", "oracle_mismatch"))
    return VerificationReport.from_checks("oracle-equivalence", (0, cutoff), bad)


def conjugation_report(cutoff: int) -> VerificationReport:
    bad = []
    for n in range(2, cutoff + 1):
        members = set(enumeration.ground_states(n))
        for lam in members:
            mu = enumeration.conjugate(lam)
            if mu not in members:
                bad.append(Witness(n, list(lam), "conjugate_outside"))
            elif enumeration.conjugate(mu) != lam:
                bad.append(Witness(n, list(lam), "not_involution"))
    return VerificationReport.from_checks("conjugation-closure", (2, cutoff), bad)


def decomposition_reports(table: SeqTable, cutoff: int) -> list[VerificationReport]:
    bad = []
    eps = {}
    for n in range(2, cutoff + 1):
        d = enumeration.classify_ground_states(n)
        if n >= 3:
            eps[n] = d.epsilon
        if d.g_total != table.gamma[n]:
            bad.append(Witness(n, d.g_total, "g_total_vs_gamma"))
        if d.g1 + d.g2 != d.g_total:
            bad.append(Witness(n, d.g1 + d.g2, "union"))
        if d.g2 != mod_floor(n - 1, 2):
            bad.append(Witness(n, d.g2, "g2_formula"))
        if d.g0 != table.gamma[n] - sigma0(n) + 2:
            bad.append(Witness(n, d.g0, "g0_formula"))
    decomposition = VerificationReport.from_checks("decomposition", (2, cutoff), bad)
    return [decomposition, analysis.gamma_star_check(table, eps)]


def guy_report(cutoff: int) -> VerificationReport:
    bad = []
    for n in range(cutoff + 1):
        a, b = enumeration.guy_counts(n)
        if a != b:
            bad.append(Witness(n, [a, b], "guy"))
    return VerificationReport.from_checks("guy", (0, cutoff), bad)


# claim group -> (claim ids, runner(table, config) -> reports)
GROUPS: dict[str, tuple[tuple[str, ...], Callable]] = {
    "oracle": (
        ("oracle-equivalence", "conjugation-closure"),
        lambda t, c: [
            oracle_report(t, c.enum_cutoff),
            conjugation_report(min(CONJUGATION_CUTOFF, c.enum_cutoff)),
        ],
    ),
    "decomposition": (
        ("decomposition", "gamma-star"),
        lambda t, c: decomposition_reports(t, c.enum_cutoff),
    ),
    "guy": (("guy",), lambda t, c: [guy_report(min(GUY_CUTOFF, c.enum_cutoff))]),
    "congruences": (
        ("ramanujan", "shifted-congruences", "congruence-scan"),
        lambda t, c: [
            analysis.check_ramanujan(t),
            analysis.check_shifted_congruences(t),
            analysis.congruence_scan_report(t),
        ],
    ),
    "gcd": (
        ("gcd-identities", "gcd-statistics"),
        lambda t, c: [
            analysis.check_gcd_identities(t),
            analysis.check_gcd_statistics(t, (c.range_start, t.n_max)),
        ],
    ),
    "monotonicity": (("monotonicity",), lambda t, c: [analysis.monotonicity_report(t)]),
    "asymptotics": (
        ("asymptotics",),
        lambda t, c: [analysis.asymptotic_report(t, c.checkpoints)],
    ),
}


def select_groups(only: Optional[Sequence[str]]) -> list[tuple[str, Optional[set]]]:
    """Groups to run, each with an optional filter on claim ids."""
    if not only:
        return [(g, None) for g in GROUPS]
    wanted: dict[str, Optional[set]] = {}
    for item in only:
        for name in item.split(","):
            name = name.strip()
            if name in GROUPS:
                wanted[name] = None
                continue
            owner = next((g for g, (ids, _) in GROUPS.items() if name in ids), None)
            if owner is None:
                raise UsageError(f"unknown claim or group {name!r}")
            if owner not in wanted or wanted[owner] is not None:
                wanted.setdefault(owner, set()).add(name)
    return [(g, wanted[g]) for g in GROUPS if g in wanted]


def run_verify(table: SeqTable, config: argparse.Namespace) -> list[VerificationReport]:
    reports = []
    for group, keep in select_groups(config.only):
        for rep in GROUPS[group][1](table, config):
            if keep is None or rep.claim_id in keep:
                reports.append(rep)
    return reports


# ----------------------------- helpers -----------------------------


def _obtain_table(args: argparse.Namespace, n_max: int) -> SeqTable:
    path = None if args.no_cache else (args.cache or default_cache_path())
    try:
        return load_table(n_max, path)
    except CacheIntegrityError:
        raise
    except OSError as exc:
        raise CacheError(f"cannot write cache {path}: {exc}") from exc


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _rows_text(columns: Sequence[str], rows: list[tuple], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([dict(zip(columns, r)) for r in rows], indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(rows)
        return buf.getvalue()
    cells = [columns] + [tuple(str(x) for x in r) for r in rows]
    widths = [max(len(str(r[i])) for r in cells) for i in range(len(columns))]
    lines = ["  ".join(str(x).rjust(w) for x, w in zip(r, widths)) for r in cells]
    return "\n".join(lines) + "\n"


def _pretty_verify(reports: list[VerificationReport]) -> str:
    lines = []
    for r in reports:
        tag = "PASS" if r.passed else "FAIL"
        line = f"{tag}  {r.claim_id:<22} n={r.n_range[0]}..{r.n_range[1]}"
        if r.summary:
            line += "  " + json.dumps(r.summary, sort_keys=True, default=str)
        lines.append(line)
        if not r.passed:
            violations = [w for w in r.details if w.kind not in ("oscillation",) and not w.kind.startswith("ratio_")]
            for w in violations[:10]:
                lines.append(f"      n={w.n} {w.kind}: {w.value}")
    return "\n".join(lines) + "\n"


# ----------------------------- commands -----------------------------


def cmd_table(args: argparse.Namespace) -> int:
    lo = args.from_ if args.from_ is not None else (1 if args.deltas else 0)
    hi = args.to if args.to is not None else args.max
    if hi is None:
        hi = 20
    if lo < 0 or hi < lo or (args.deltas and lo < 1):
        raise UsageError(f"invalid range {lo}..{hi}")
    table = _obtain_table(args, hi)
    if args.deltas:
        cols = ("n", "gamma", "delta")
        rows = [(n, table.gamma[n], table.gamma[n] - table.gamma[n - 1]) for n in range(lo, hi + 1)]
    else:
        cols = ("n", "gamma", "nu", "p")
        rows = [(n, table.gamma[n], table.nu[n], table.p[n]) for n in range(lo, hi + 1)]
    _emit(_rows_text(cols, rows, args.format), args.out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    if args.enum_cutoff > args.max:
        raise UsageError("--enum-cutoff must not exceed --max")
    args.checkpoints = [n for n in (args.checkpoints or analysis.CHECKPOINTS) if 2 <= n <= args.max]
    if not args.checkpoints:
        args.checkpoints = [args.max]
    select_groups(args.only)  # validate before the expensive part
    try:
        table = _obtain_table(args, args.max)
    except CacheIntegrityError as exc:
        reports = [
            VerificationReport.from_checks(
                "table-integrity", (0, args.max), [Witness(exc.n, str(exc), "cache_invariant")]
            )
        ]
        _write_reports(reports, args)
        return EXIT_FAIL
    started = time.perf_counter()
    try:
        if args.decomposition_dump:
            Path(args.decomposition_dump).write_text(
                enumeration.decomposition_jsonl(range(args.enum_cutoff + 1), args.dump_partitions)
            )
        reports = run_verify(table, args)
    except enumeration.ContradictionError as exc:
        reports = [
            VerificationReport.from_checks(
                "decomposition", (2, args.enum_cutoff), [Witness(exc.n, str(exc), "contradiction")]
            )
        ]
        _write_reports(reports, args)
        return EXIT_CONTRADICTION
    if args.verbose:
        print(f"# {len(reports)} claims in {time.perf_counter() - started:.2f}s", file=sys.stderr)
    _write_reports(reports, args)
    if any(r.claim_id == "oracle-equivalence" and not r.passed for r in reports):
        return EXIT_CONTRADICTION
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def _write_reports(reports: list[VerificationReport], args: argparse.Namespace) -> None:
    if args.report_dir:
        out = Path(args.report_dir)
        out.mkdir(parents=True, exist_ok=True)
        for r in reports:
            (out / f"{r.claim_id}.json").write_text(reports_to_json([r]))
            (out / f"{r.claim_id}.csv").write_text(reports_to_csv([r]))
    if args.format == "json":
        text = reports_to_json(reports)
    elif args.format == "csv":
        text = reports_to_csv(reports)
    else:
        text = _pretty_verify(reports)
    _emit(text, args.out)


def cmd_scan(args: argparse.Namespace) -> int:
    table = _obtain_table(args, args.max)
    seqs = ("nu", "gamma") if args.seq == "both" else (args.seq,)
    rows = []
    for seq in seqs:
        for a, b, c in analysis.congruence_scan(
            table, seq, a_values=args.a, primes=args.primes, density=args.density
        ):
            rows.append((seq, a, b, c))
    if args.format == "pretty" and not rows:
        _emit(f"no congruences seq(a*k+b) = 0 mod c for a in {args.a}, c in {args.primes}, n <= {args.max}\n", args.out)
    else:
        _emit(_rows_text(("seq", "a", "b", "c"), rows, args.format), args.out)
    return EXIT_OK


def cmd_stats(args: argparse.Namespace) -> int:
    table = _obtain_table(args, args.max)
    st = analysis.gcd_statistics(table, (args.range_start, args.max), arithmetic=args.arithmetic)
    cols = ("range_start", "range_end", "arithmetic", "total", "count_pair", "percent_pair", "count_triple", "percent_triple")
    row = (
        st.n_range[0], st.n_range[1], args.arithmetic, st.total,
        st.count_pair, f"{st.percent_pair:.1f}", st.count_triple, f"{st.percent_triple:.1f}",
    )
    _emit(_rows_text(cols, [row], args.format), args.out)
    return EXIT_OK


def cmd_cache(args: argparse.Namespace) -> int:
    path = Path(args.cache) if args.cache else default_cache_path()
    try:
        table = ensure_cache(path, args.max, rebuild=args.rebuild)
    except OSError as exc:
        raise CacheError(f"cannot write cache {path}: {exc}") from exc
    print(f"{path}: {header(table.n_max)}")
    return EXIT_OK


# ----------------------------- parser -----------------------------


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    def add_common(p: argparse.ArgumentParser, fmt: str) -> None:
        p.add_argument("--cache", help="cache file (default: $NUPART_CACHE or ~/.cache/nupart/table-v1.txt)")
        p.add_argument("--no-cache", action="store_true", help="neither read nor write a cache")
        p.add_argument("--format", choices=("csv", "json", "pretty"), default=fmt)
        p.add_argument("--out", help="write output here instead of stdout")

    parser = argparse.ArgumentParser(prog="nupart", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="print gamma, nu, p")
    add_common(p, "csv")
    p.add_argument("--max", type=int, help="last n (default 20)")
    p.add_argument("--from", dest="from_", type=int)
    p.add_argument("--to", type=int)
    p.add_argument("--deltas", action="store_true", help="print n, gamma(n), gamma(n)-gamma(n-1)")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run the verification suite")
    add_common(p, "pretty")
    p.add_argument("--max", type=int, default=DEFAULT_MAX)
    p.add_argument("--enum-cutoff", type=int, default=DEFAULT_ENUM_CUTOFF)
    p.add_argument("--only", action="append", help="claim id or group; repeatable or comma-separated")
    p.add_argument("--checkpoints", type=_int_list)
    p.add_argument("--range-start", type=int, choices=(0, 1, 2), default=2, help="first n of the gcd statistics")
    p.add_argument("--report-dir", help="write <claim>.json and <claim>.csv for each claim here")
    p.add_argument("--decomposition-dump", help="write one JSON object per n <= enum cutoff here")
    p.add_argument("--dump-partitions", action="store_true", help="include the partitions in the dump")
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", help="search for seq(a*k+b) = 0 mod c")
    add_common(p, "pretty")
    p.add_argument("--max", type=int, default=DEFAULT_MAX)
    p.add_argument("--seq", choices=("nu", "gamma", "both"), default="both")
    p.add_argument("--a", type=_int_list, default=[5, 7, 11])
    p.add_argument("--primes", type=_int_list, default=[5, 7, 11])
    p.add_argument("--density", type=float, help="exploratory: keep classes with at least this share of zeros")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("stats", help="gcd statistics")
    add_common(p, "pretty")
    p.add_argument("--max", type=int, default=DEFAULT_MAX)
    p.add_argument("--range-start", type=int, choices=(0, 1, 2), default=2)
    p.add_argument("--arithmetic", choices=("exact", "float64"), default="exact")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("cache", help="build or extend the sequence cache")
    p.add_argument("--cache")
    p.add_argument("--max", type=int, default=DEFAULT_MAX)
    p.add_argument("--rebuild", action="store_true", help="ignore an existing file")
    p.set_defaults(func=cmd_cache)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "max", None) is not None and args.max < 0:
        parser.error("--max must be >= 0")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"nupart: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CacheIntegrityError as exc:
        print(f"nupart: cache invariant fails at n={exc.n}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except CacheError as exc:
        print(f"nupart: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
