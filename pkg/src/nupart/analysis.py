"""Checks of the asymptotic, congruence, gcd and monotonicity claims on a SeqTable.

Congruence and gcd work is exact integer arithmetic.  Only the asymptotic
ratios use real numbers, via mpmath at ``DPS`` significant digits; big
integers are converted to mpf exactly and then rounded, never through a
machine double.
"""
from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, localcontext
from math import gcd
from typing import Iterable, Optional, Sequence

import mpmath

from nupart.reports import VerificationReport, Witness
from nupart.seqcore import GAMMA_START, SeqTable, finite_difference, mod_floor, sigma0

DPS = 60
CHECKPOINTS = (100, 500, 1000, 2000, 3000)

RAMANUJAN = ((5, 4), (7, 5), (11, 6))
SHIFTED = ((5, 0), (7, 6), (11, 7))

PAPER_PERCENT_PAIR = 94.6
PAPER_PERCENT_TRIPLE = 91.8


def _mp(x) -> mpmath.mpf:
    return mpmath.mpf(x)


def zeta2() -> mpmath.mpf:
    with mpmath.workdps(DPS):
        return +(mpmath.pi ** 2 / 6)


def hr_estimate(n: int) -> mpmath.mpf:
    """Hardy-Ramanujan leading term exp(A sqrt n) / (B n), A = pi sqrt(2/3), B = 4 sqrt 3."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    with mpmath.workdps(DPS):
        a = mpmath.pi * mpmath.sqrt(_mp(2) / 3)
        b = 4 * mpmath.sqrt(3)
        return +(mpmath.exp(a * mpmath.sqrt(n)) / (b * n))


@dataclass(frozen=True)
class RatioSample:
    n: int
    ratio: mpmath.mpf

    @property
    def deviation(self) -> mpmath.mpf:
        with mpmath.workdps(DPS):
            return abs(self.ratio - 1)

    def ratio_text(self, places: int = 20) -> str:
        return fixed_point(self.ratio, places)

    def deviation_text(self, places: int = 20) -> str:
        return fixed_point(self.deviation, places)


def fixed_point(x: mpmath.mpf, places: int = 20) -> str:
    """Decimal string of ``x`` with exactly ``places`` digits after the point."""
    with mpmath.workdps(DPS):
        s = mpmath.nstr(x, DPS - 5, min_fixed=-mpmath.inf, max_fixed=mpmath.inf)
    with localcontext() as ctx:
        ctx.prec = DPS
        return str(Decimal(s).quantize(Decimal(1).scaleb(-places)))


def _scale(n: int) -> mpmath.mpf:
    return mpmath.sqrt(n / zeta2())


def ratio_thm1(table: SeqTable, n: int) -> RatioSample:
    """p(n) / (nu(n) sqrt(n / zeta(2)))."""
    if n < 1 or table.nu[n] == 0:
        raise ValueError(f"ratio undefined at n={n}: nu(n) = 0")
    with mpmath.workdps(DPS):
        return RatioSample(n, _mp(table.p[n]) / (_mp(table.nu[n]) * _scale(n)))


def ratio_thm2(table: SeqTable, n: int) -> RatioSample:
    """nu(n) / (gamma(n) sqrt(n / zeta(2)))."""
    if n < GAMMA_START or table.gamma[n] == 0:
        raise ValueError(f"ratio undefined at n={n}: gamma(n) = 0")
    with mpmath.workdps(DPS):
        return RatioSample(n, _mp(table.nu[n]) / (_mp(table.gamma[n]) * _scale(n)))


def ratio_cor1(table: SeqTable, n: int) -> RatioSample:
    """p(n) zeta(2) / (n gamma(n))."""
    if n < GAMMA_START or table.gamma[n] == 0:
        raise ValueError(f"ratio undefined at n={n}: gamma(n) = 0")
    with mpmath.workdps(DPS):
        return RatioSample(n, _mp(table.p[n]) * zeta2() / (n * _mp(table.gamma[n])))


def asymptotic_report(
    table: SeqTable,
    checkpoints: Sequence[int] = CHECKPOINTS,
    thresholds: tuple[float, float, float] = (0.05, 0.05, 0.10),
    product_digits: int = 30,
) -> VerificationReport:
    """Deviations shrink across checkpoints and end below ``thresholds``.

    Also checks ratio_cor1 = ratio_thm1 * ratio_thm2 to ``product_digits``
    significant digits at every checkpoint.
    """
    points = [n for n in checkpoints if n <= table.n_max]
    if not points:
        raise ValueError("no checkpoint inside the table")
    fns = (("thm1", ratio_thm1), ("thm2", ratio_thm2), ("cor1", ratio_cor1))
    samples = {name: [fn(table, n) for n in points] for name, fn in fns}
    bad: list[Witness] = []
    extra: list[Witness] = []
    with mpmath.workdps(DPS):
        for (name, _), limit in zip(fns, thresholds):
            seq = samples[name]
            for s in seq:
                extra.append(Witness(s.n, s.ratio_text(), f"ratio_{name}"))
            for prev, cur in zip(seq, seq[1:]):
                if not cur.deviation < prev.deviation:
                    bad.append(Witness(cur.n, cur.deviation_text(), f"{name}_not_decreasing"))
            last = seq[-1]
            if not last.deviation < limit:
                bad.append(Witness(last.n, last.deviation_text(), f"{name}_above_{limit}"))
        tol = _mp(10) ** (-product_digits)
        for a, b, c in zip(samples["thm1"], samples["thm2"], samples["cor1"]):
            if abs(a.ratio * b.ratio - c.ratio) > tol * abs(c.ratio):
                bad.append(Witness(c.n, fixed_point(a.ratio * b.ratio - c.ratio, 40), "product_identity"))
    return VerificationReport.from_checks(
        "asymptotics",
        (points[0], points[-1]),
        bad,
        extra,
        {"checkpoints": points, "thresholds": list(thresholds)},
    )


def _residue_args(a: int, b: int, lo: int, hi: int) -> range:
    first = b + a * max(0, -(-(lo - b) // a))
    return range(first, hi + 1, a)


def check_ramanujan(table: SeqTable) -> VerificationReport:
    """p(5k+4) = 0 mod 5, p(7k+5) = 0 mod 7, p(11k+6) = 0 mod 11 over the table."""
    bad, counts = [], {}
    for c, b in RAMANUJAN:
        args = _residue_args(c, b, 0, table.n_max)
        counts[c] = len(args)
        bad += [Witness(m, table.p[m] % c, f"p mod {c}") for m in args if table.p[m] % c]
    return VerificationReport.from_checks(
        "ramanujan", (0, table.n_max), bad, summary={"instances": counts}
    )


def check_shifted_congruences(table: SeqTable) -> VerificationReport:
    """p(5k) = nu(5k) mod 5, p(7k+6) = nu(7k+6) mod 7, p(11k+7) = nu(11k+7) mod 11, k >= 1.

    Independently of that, checks for every m that p(m) = 0 mod c exactly
    when c divides p(m+1) - nu(m+1).
    """
    p, nu = table.p, table.nu
    bad, counts = [], {}
    for c, b in SHIFTED:
        args = _residue_args(c, b, c + b, table.n_max)
        counts[c] = len(args)
        bad += [
            Witness(m, (p[m] - nu[m]) % c, f"p-nu mod {c}") for m in args if (p[m] - nu[m]) % c
        ]
    for c, _ in SHIFTED:
        for m in range(table.n_max):
            if (p[m] % c == 0) != ((p[m + 1] - nu[m + 1]) % c == 0):
                bad.append(Witness(m, p[m] % c, f"implication mod {c}"))
    return VerificationReport.from_checks(
        "shifted-congruences", (1, table.n_max), bad, summary={"instances": counts}
    )


def _column(table: SeqTable, seq_choice: str) -> tuple[Sequence[int], int]:
    if seq_choice in ("nu", "ν"):
        return table.nu, 1
    if seq_choice in ("gamma", "γ"):
        return table.gamma, GAMMA_START
    if seq_choice == "p":
        return table.p, 0
    raise ValueError(f"unknown sequence {seq_choice!r}")


def congruence_scan(
    table: SeqTable,
    seq_choice: str,
    a_max: int = 11,
    primes: Iterable[int] = (5, 7, 11),
    a_values: Optional[Iterable[int]] = None,
    min_witnesses: Optional[int] = None,
    density: Optional[float] = None,
) -> list[tuple[int, int, int]]:
    """Ramanujan-type candidates (a, b, c) with seq(a k + b) = 0 mod c.

    By default a candidate must hold for every member of the residue class
    in range (starting at n = 1 for nu and n = 3 for gamma) and
    ``min_witnesses`` is the class size.  ``density`` switches to an
    exploratory mode that keeps classes where at least that fraction of
    members vanish mod c.
    """
    values, start = _column(table, seq_choice)
    a_list = sorted(set(a_values)) if a_values is not None else range(1, a_max + 1)
    found = []
    for c in sorted(set(primes)):
        for a in a_list:
            for b in range(a):
                args = _residue_args(a, b, start, table.n_max)
                need = len(args) if min_witnesses is None else min_witnesses
                if len(args) == 0 or len(args) < need:
                    continue
                hits = sum(1 for m in args if values[m] % c == 0)
                if density is None:
                    ok = hits == len(args)
                else:
                    ok = hits >= density * len(args)
                if ok:
                    found.append((a, b, c))
    return found


def congruence_scan_report(
    table: SeqTable, a_values=(5, 7, 11), primes=(5, 7, 11)
) -> VerificationReport:
    bad = []
    for seq in ("nu", "gamma"):
        for a, b, c in congruence_scan(table, seq, a_values=a_values, primes=primes):
            bad.append(Witness(b, f"{seq}({a}k+{b}) = 0 mod {c}", "unexpected_congruence"))
    return VerificationReport.from_checks(
        "congruence-scan",
        (1, table.n_max),
        bad,
        summary={"a": list(a_values), "c": list(primes)},
    )


def check_gcd_identities(table: SeqTable) -> VerificationReport:
    """gcd(x, y) = gcd(y, z) = gcd(x, z) along x = y + z, for (p, nu, p_) and (nu, gamma, nu_)."""
    p, nu, g = table.p, table.nu, table.gamma
    bad = []
    for n in range(1, table.n_max + 1):
        chain = (gcd(p[n], nu[n]), gcd(nu[n], p[n - 1]), gcd(p[n], p[n - 1]))
        if len(set(chain)) != 1:
            bad.append(Witness(n, list(chain), "p_nu_chain"))
        if n >= GAMMA_START:
            chain = (gcd(nu[n], g[n]), gcd(g[n], nu[n - 1]), gcd(nu[n], nu[n - 1]))
            if len(set(chain)) != 1:
                bad.append(Witness(n, list(chain), "nu_gamma_chain"))
    return VerificationReport.from_checks("gcd-identities", (1, table.n_max), bad)


@dataclass(frozen=True)
class GcdStats:
    n_range: tuple[int, int]
    total: int
    count_pair: int
    count_triple: int
    pair_witnesses: tuple[int, ...]
    triple_witnesses: tuple[int, ...]

    @property
    def percent_pair(self) -> float:
        return 100 * self.count_pair / self.total

    @property
    def percent_triple(self) -> float:
        return 100 * self.count_triple / self.total


def _float64_columns(table: SeqTable):
    # mimics a double-precision pipeline: p stored as float64, nu and gamma by float subtraction
    pf = [float(x) for x in table.p]
    nuf = [1.0] + [pf[n] - pf[n - 1] for n in range(1, len(pf))]
    gf = [0.0] * GAMMA_START + [nuf[n] - nuf[n - 1] for n in range(GAMMA_START, len(nuf))]
    as_int = lambda col: [abs(int(x)) for x in col]  # noqa: E731
    return as_int(pf), as_int(nuf), as_int(gf[: len(pf)])


def gcd_statistics(
    table: SeqTable,
    n_range: Optional[tuple[int, int]] = None,
    arithmetic: str = "exact",
) -> GcdStats:
    """Share of n with gcd(p, nu) > 1 and with gcd(p, nu, gamma) > 1.

    ``n_range`` is inclusive and defaults to (2, n_max).  ``arithmetic``
    "float64" recomputes the statistic from double-precision columns instead
    of exact ones; it exists to diagnose figures produced by floating-point
    tools and must not be used for verification.
    """
    lo, hi = n_range if n_range is not None else (2, table.n_max)
    lo = max(lo, 0)
    if hi < lo or hi > table.n_max:
        raise ValueError(f"invalid range ({lo}, {hi}) for table up to {table.n_max}")
    if arithmetic == "exact":
        p, nu, g = table.p, table.nu, table.gamma
    elif arithmetic == "float64":
        p, nu, g = _float64_columns(table)
    else:
        raise ValueError(f"unknown arithmetic {arithmetic!r}")
    pair, triple = [], []
    for n in range(lo, hi + 1):
        d = gcd(p[n], nu[n])
        if d > 1:
            pair.append(n)
            if gcd(d, g[n]) > 1:
                triple.append(n)
    return GcdStats((lo, hi), hi - lo + 1, len(pair), len(triple), tuple(pair), tuple(triple))


def check_gcd_statistics(
    table: SeqTable,
    n_range: Optional[tuple[int, int]] = None,
    targets: tuple[float, float] = (PAPER_PERCENT_PAIR, PAPER_PERCENT_TRIPLE),
    tolerance: float = 0.5,
) -> VerificationReport:
    """Exact percentages against the published figures; float64 figures go in the summary."""
    st = gcd_statistics(table, n_range)
    fl = gcd_statistics(table, n_range, arithmetic="float64")
    bad = []
    for kind, observed, target in (
        ("percent_pair", st.percent_pair, targets[0]),
        ("percent_triple", st.percent_triple, targets[1]),
    ):
        if abs(observed - target) > tolerance:
            bad.append(Witness(st.n_range[1], f"{observed:.1f} (target {target} +- {tolerance})", kind))
    summary = {
        "range": list(st.n_range),
        "total": st.total,
        "count_pair": st.count_pair,
        "count_triple": st.count_triple,
        "percent_pair": f"{st.percent_pair:.1f}",
        "percent_triple": f"{st.percent_triple:.1f}",
        "float64_percent_pair": f"{fl.percent_pair:.1f}",
        "float64_percent_triple": f"{fl.percent_triple:.1f}",
    }
    return VerificationReport.from_checks("gcd-statistics", st.n_range, bad, summary=summary)


MONOTONE_FROM = 26


def monotonicity_report(table: SeqTable) -> VerificationReport:
    """gamma(n) >= gamma(n-2) from n = 3, gamma(n) >= gamma(n-1) from n = 26.

    Lists the n < 26 where gamma drops (oscillation witnesses) and checks
    pointwise that gamma(n) - gamma(n-1) equals the third difference of p.
    That check starts at n = 4: with gamma(2) = 0 instead of the second
    difference p(2) - 2 p(1) + p(0) = 1, the two differ by exactly 1 at n = 3.
    """
    g = table.gamma
    d3 = finite_difference(table.p, 3)
    bad: list[Witness] = []
    drops: list[Witness] = []
    for n in range(GAMMA_START, table.n_max + 1):
        if g[n] < g[n - 2]:
            bad.append(Witness(n, g[n] - g[n - 2], "gamma(n)<gamma(n-2)"))
        step = g[n] - g[n - 1]
        if n >= MONOTONE_FROM and step < 0:
            bad.append(Witness(n, step, "gamma(n)<gamma(n-1)"))
        if n < MONOTONE_FROM and step < 0:
            drops.append(Witness(n, step, "oscillation"))
        if n >= 4 and d3[n] != step:
            bad.append(Witness(n, d3[n], "delta3_mismatch"))
        if n >= MONOTONE_FROM and d3[n] < 0:
            bad.append(Witness(n, d3[n], "delta3_negative"))
    if not drops:
        bad.append(Witness(MONOTONE_FROM - 1, "no drop below 26", "no_oscillation"))
    return VerificationReport.from_checks(
        "monotonicity",
        (GAMMA_START, table.n_max),
        bad,
        drops,
        {"oscillation_witnesses": [w.n for w in drops]},
    )


def epsilon_lower_bound(n: int) -> int:
    return sigma0(n - 1) - mod_floor(n - 1, 2) - 2


def gamma_star_check(table: SeqTable, eps: dict[int, int]) -> VerificationReport:
    """gamma(n) = gamma(n-1) + eps(n) - sigma0(n-1) + mod_floor(n-1, 2) + 2, and the eps bound from n = 26."""
    ns = sorted(eps)
    if not ns or ns[0] < GAMMA_START or ns[-1] > table.n_max:
        raise ValueError("epsilon series must cover n >= 3 inside the table")
    g = table.gamma
    bad = []
    for n in ns:
        rhs = g[n - 1] + eps[n] - sigma0(n - 1) + mod_floor(n - 1, 2) + 2
        if g[n] != rhs:
            bad.append(Witness(n, rhs - g[n], "identity"))
        if n >= MONOTONE_FROM and eps[n] < epsilon_lower_bound(n):
            bad.append(Witness(n, eps[n], "epsilon_bound"))
    return VerificationReport.from_checks("gamma-star", (ns[0], ns[-1]), bad)
