"""Acceptance criteria, one test each.

Every test records a PASS/FAIL line that is printed in the pytest terminal
summary; ``python tests/test_acceptance.py`` prints the same lines directly.
"""
import sys
import time
from decimal import Decimal, localcontext
from math import gcd
from pathlib import Path

import mpmath
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from conftest import TABLE1, TABLE2, record_acceptance  # noqa: E402
from nupart import analysis, cli  # noqa: E402
from nupart.cache import dumps, loads  # noqa: E402
from nupart.enumeration import (  # noqa: E402
    classify_ground_states,
    enumerate_partitions,
    epsilon_series,
    guy_counts,
)
from nupart.seqcore import SeqTable, finite_difference, mod_floor, sigma0  # noqa: E402

PI = Decimal("3.14159265358979323846264338327950288419716939937510582097494459")


def _check(label, failures, note=""):
    ok = not failures
    line = f"[{'PASS' if ok else 'FAIL'}] {label}"
    if note:
        line += f" ({note})"
    if failures:
        line += f": {failures[:5]}"
    record_acceptance(line)
    print(line)
    assert ok, line


@pytest.fixture(scope="module")
def t3000():
    return SeqTable.build(3000)


def test_c01_table1():
    start = time.perf_counter()
    t = SeqTable.build(100)
    bad = [n for n, row in TABLE1.items() if (t.gamma[n], t.nu[n], t.p[n]) != row]
    elapsed = time.perf_counter() - start
    if elapsed >= 1.0:
        bad.append(f"runtime {elapsed:.2f}s")
    _check("1 Table 1 rows n=1..20 and n=100", bad, f"{elapsed * 1000:.1f} ms")


def test_c02_table2():
    t = SeqTable.build(40)
    bad = [n for n, (g, d) in TABLE2.items() if (t.gamma[n], t.gamma[n] - t.gamma[n - 1]) != (g, d)]
    _check("2 Table 2 rows n=21..40", bad)


def test_c03_oracle_equivalence():
    start = time.perf_counter()
    t = SeqTable.build(45)
    bad = []
    for n in range(46):
        counts = [0, 0, 0]
        for lam in enumerate_partitions(n, 1):
            counts[0] += 1
            if 1 not in lam:
                counts[1] += 1
                if len(lam) >= 2 and lam[0] == lam[1]:
                    counts[2] += 1
        if tuple(counts) != (t.p[n], t.nu[n], t.gamma[n]):
            bad.append(n)
    elapsed = time.perf_counter() - start
    if elapsed >= 60:
        bad.append(f"runtime {elapsed:.1f}s")
    _check("3 enumeration = recurrence for n<=45", bad, f"{elapsed:.2f} s")


def test_c04_decomposition():
    t = SeqTable.build(45)
    bad = []
    for n in range(2, 46):
        d = classify_ground_states(n)  # raises on any disjoint-union contradiction
        if d.g1 + d.g2 != d.g_total or d.g_total != t.gamma[n]:
            bad.append((n, "union"))
        if set(d.members["g1"]) & set(d.members["g2"]):
            bad.append((n, "overlap"))
        if d.g2 != mod_floor(n - 1, 2):
            bad.append((n, "g2"))
        if d.g0 != t.gamma[n] - sigma0(n) + 2:
            bad.append((n, "eq7"))
    eps = epsilon_series(45)
    for n in range(3, 46):
        if t.gamma[n] != t.gamma[n - 1] + eps[n] - sigma0(n - 1) + mod_floor(n - 1, 2) + 2:
            bad.append((n, "eq9"))
        if n >= 26 and eps[n] < sigma0(n - 1) - mod_floor(n - 1, 2) - 2:
            bad.append((n, "eps_bound"))
    _check("4 decomposition, G2 count, non-rectangle count, gamma identity, eps bound", bad)


def test_c05_congruences(t3000):
    start = time.perf_counter()
    bad = []
    for m in range(3001):
        for c, b in ((5, 4), (7, 5), (11, 6)):
            if m % c == b and t3000.p[m] % c:
                bad.append(("ramanujan", m))
    for m in range(1, 3001):
        for c, b in ((5, 0), (7, 6), (11, 7)):
            if m % c == b and m >= c and (t3000.p[m] - t3000.nu[m]) % c:
                bad.append(("shifted", m))
    for seq in ("nu", "gamma"):
        found = analysis.congruence_scan(t3000, seq, a_values=[5, 7, 11], primes=[5, 7, 11])
        bad += [(seq, f) for f in found]
    for rep in (analysis.check_ramanujan(t3000), analysis.check_shifted_congruences(t3000)):
        if not rep.passed:
            bad.append(rep.claim_id)
    elapsed = time.perf_counter() - start
    if elapsed >= 10:
        bad.append(f"runtime {elapsed:.1f}s")
    _check("5 Ramanujan, shifted congruences, no nu/gamma congruences", bad, f"{elapsed:.2f} s")


def test_c06_gcd(t3000):
    t = t3000
    bad = []
    for n in range(1, 3001):
        if len({gcd(t.p[n], t.nu[n]), gcd(t.nu[n], t.p[n - 1]), gcd(t.p[n], t.p[n - 1])}) != 1:
            bad.append(("p-chain", n))
        if n >= 3 and len({gcd(t.nu[n], t.gamma[n]), gcd(t.gamma[n], t.nu[n - 1]),
                           gcd(t.nu[n], t.nu[n - 1])}) != 1:
            bad.append(("nu-chain", n))
    observed = []
    for start in (1, 2):
        st = analysis.gcd_statistics(t, (start, 3000))
        observed.append((start, round(st.percent_pair, 1), round(st.percent_triple, 1)))
    if not any(abs(pp - 94.6) <= 0.5 and abs(pt - 91.8) <= 0.5 for _, pp, pt in observed):
        bad.append(("percentages (start, pair, triple)", observed))
    fl = analysis.gcd_statistics(t, (0, 3000), arithmetic="float64")
    note = f"exact {observed}; float64 columns give {fl.percent_pair:.1f}/{fl.percent_triple:.1f}"
    _check("6 gcd chains exact; pair 94.6+-0.5, triple 91.8+-0.5", bad, note)


def test_c07_monotonicity(t3000):
    g = t3000.gamma
    bad = [("step2", n) for n in range(3, 3001) if g[n] < g[n - 2]]
    bad += [("step1", n) for n in range(26, 3001) if g[n] < g[n - 1]]
    drops = [n for n in range(3, 26) if g[n] < g[n - 1]]
    if not {21, 23, 25} <= set(drops):
        bad.append(("witnesses", drops))
    _check("7 gamma(n)>=gamma(n-2) n>=3, gamma(n)>=gamma(n-1) n>=26, drops below 26", bad,
           f"drops at {drops}")


def test_c07_delta3_agreement(t3000):
    g = t3000.gamma
    d3 = finite_difference(t3000.p, 3)
    bad = [(n, d3[n], g[n] - g[n - 1]) for n in range(3, 3001) if d3[n] != g[n] - g[n - 1]]
    _check("7 third difference of p = gamma(n)-gamma(n-1) exactly for n>=3", bad)


def _decimal_ratio(num, den, n):
    with localcontext() as ctx:
        ctx.prec = 60
        return Decimal(num) / Decimal(den) / (Decimal(n) / (PI * PI / 6)).sqrt()


def test_c08_asymptotics(t3000):
    bad = []
    fns = {"thm1": analysis.ratio_thm1, "thm2": analysis.ratio_thm2, "cor1": analysis.ratio_cor1}
    with mpmath.workdps(analysis.DPS):
        for name, fn in fns.items():
            devs = [fn(t3000, n).deviation for n in analysis.CHECKPOINTS]
            if not all(b < a for a, b in zip(devs, devs[1:])):
                bad.append((name, "not decreasing"))
        limits = {"thm1": 0.05, "thm2": 0.05, "cor1": 0.10}
        for name, lim in limits.items():
            if not fns[name](t3000, 3000).deviation < lim:
                bad.append((name, "limit"))
        for n in analysis.CHECKPOINTS:
            a = analysis.ratio_thm1(t3000, n).ratio
            b = analysis.ratio_thm2(t3000, n).ratio
            c = analysis.ratio_cor1(t3000, n).ratio
            if abs(a * b - c) > abs(c) * mpmath.mpf(10) ** -30:
                bad.append((n, "product"))
    r1 = analysis.ratio_thm1(t3000, 100)
    r2 = analysis.ratio_thm2(t3000, 100)
    o1 = _decimal_ratio(190569292, 21339417, 100)
    o2 = _decimal_ratio(21339417, 2307678, 100)
    for got, want in ((r1, o1), (r2, o2)):
        if round(Decimal(got.ratio_text()), 4) != round(want, 4):
            bad.append(("n=100", got.ratio_text(), str(want)))
    note = f"n=100: {r1.ratio_text(4)}, {r2.ratio_text(4)}; n=3000 thm1 {analysis.ratio_thm1(t3000, 3000).ratio_text(4)}"
    _check("8 checkpoint convergence, limits, product identity, n=100 values", bad, note)


def test_c09_guy():
    bad = [n for n in range(41) if guy_counts(n)[0] != guy_counts(n)[1]]
    _check("9 Guy equinumerosity n<=40", bad)


def test_c10_determinism(tmp_path, capsys):
    bad = []
    args = ["verify", "--no-cache", "--format", "json"]
    outs = []
    for d in ("a", "b"):
        cli.main(args + ["--report-dir", str(tmp_path / d)])
        outs.append(capsys.readouterr().out)
    if outs[0] != outs[1]:
        bad.append("stdout differs")
    for f in sorted((tmp_path / "a").iterdir()):
        if f.read_bytes() != (tmp_path / "b" / f.name).read_bytes():
            bad.append(f.name)
    t = SeqTable.build(3000)
    if loads(dumps(t)) != t:
        bad.append("cache round trip")
    _check("10 byte-identical verify reports, lossless cache", bad)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
