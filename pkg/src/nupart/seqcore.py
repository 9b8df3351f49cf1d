"""Exact tables of p(n), nu(n) and gamma(n), finite differences, small helpers.

nu(n) counts partitions of n with no part equal to 1 and gamma(n) counts
those whose largest part occurs at least twice.  Everything here is exact
Python ``int`` arithmetic.

Conventions: p(0) = nu(0) = 1 and gamma(0) = gamma(1) = gamma(2) = 0.  The
difference identity gamma(n) = nu(n) - nu(n-1) is only applied for n >= 3,
because at n = 2 it would give 1 while the partition (2) is not a ground
state.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb, isqrt
from typing import Optional, Sequence

__all__ = [
    "SeqTable",
    "TableError",
    "compute_p_table",
    "derive_gamma",
    "derive_nu",
    "finite_difference",
    "mod_floor",
    "sigma0",
]

GAMMA_START = 3


class TableError(ValueError):
    """A sequence table fails one of its defining invariants."""

    def __init__(self, message: str, n: Optional[int] = None):
        super().__init__(message)
        self.n = n


def compute_p_table(n_max: int, prefix: Optional[Sequence[int]] = None) -> list[int]:
    """Return ``[p(0), ..., p(n_max)]`` by Euler's pentagonal recurrence.

    ``prefix`` may hold already known values p(0..m); only the missing tail
    is computed, so extending a cached table costs nothing for the prefix.
    """
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    p = list(prefix) if prefix else [1]
    if p[0] != 1:
        raise TableError("p[0] must be 1", 0)
    del p[n_max + 1:]
    for n in range(len(p), n_max + 1):
        total = 0
        k = 1
        while True:
            g = k * (3 * k - 1) // 2
            if g > n:
                break
            term = p[n - g]
            if g + k <= n:
                term += p[n - g - k]
            total += term if k & 1 else -term
            k += 1
        p.append(total)
    return p


def derive_nu(p: Sequence[int]) -> list[int]:
    """nu(n) = p(n) - p(n-1) for n >= 1, with nu(0) = 1."""
    if not p:
        raise TableError("empty p-table")
    if p[0] != 1:
        raise TableError(f"p[0] must be 1, got {p[0]}", 0)
    nu = [1]
    for n in range(1, len(p)):
        d = p[n] - p[n - 1]
        if d < 0:
            raise TableError(f"p-table decreases at n={n}", n)
        nu.append(d)
    return nu


def derive_gamma(nu: Sequence[int]) -> list[int]:
    """gamma(n) = nu(n) - nu(n-1) for n >= 3; gamma(0..2) = 0."""
    if not nu:
        raise TableError("empty nu-table")
    gamma = [0] * min(len(nu), GAMMA_START)
    for n in range(GAMMA_START, len(nu)):
        d = nu[n] - nu[n - 1]
        if d < 0:
            raise TableError(f"nu-table decreases at n={n}", n)
        gamma.append(d)
    return gamma


def finite_difference(seq: Sequence[Optional[int]], r: int) -> list[Optional[int]]:
    """Backward difference of order ``r``, aligned with the input.

    Entry ``n`` of the result is the r-th difference at n, computed as
    ``sum((-1)**k * C(r, k) * seq[n-k])``.  Entries below index ``r``, and any
    entry that would touch an undefined (``None``) input, are ``None``.
    Results are signed.
    """
    if r < 1:
        raise ValueError(f"difference order must be >= 1, got {r}")
    if r >= len(seq):
        raise ValueError(f"order {r} needs more than {len(seq)} terms")
    coeffs = [(-1) ** k * comb(r, k) for k in range(r + 1)]
    out: list[Optional[int]] = [None] * r
    for n in range(r, len(seq)):
        window = seq[n - r:n + 1]
        if any(v is None for v in window):
            out.append(None)
            continue
        out.append(sum(c * window[r - k] for k, c in enumerate(coeffs)))
    return out


def sigma0(n: int) -> int:
    """Number of positive divisors of ``n``."""
    if n < 1:
        raise ValueError(f"sigma0 is defined for n >= 1, got {n}")
    root = isqrt(n)
    count = 0
    for d in range(1, root + 1):
        if n % d == 0:
            count += 2
    if root * root == n:
        count -= 1
    return count


def mod_floor(num: int, den: int) -> int:
    """Floor of num/den, except 0 when the quotient is an integer."""
    if den < 1:
        raise ValueError(f"denominator must be >= 1, got {den}")
    q, r = divmod(num, den)
    return 0 if r == 0 else q


@dataclass(frozen=True)
class SeqTable:
    """Immutable columns p, nu, gamma over 0..n_max.

    Build with :meth:`build`; :meth:`from_columns` accepts externally
    supplied columns (e.g. from a cache file) and checks them.
    """

    n_max: int
    p: tuple[int, ...]
    nu: tuple[int, ...]
    gamma: tuple[int, ...]

    @classmethod
    def build(cls, n_max: int) -> "SeqTable":
        p = compute_p_table(n_max)
        nu = derive_nu(p)
        return cls(n_max, tuple(p), tuple(nu), tuple(derive_gamma(nu)))

    @classmethod
    def from_columns(cls, p, nu, gamma, check: bool = True) -> "SeqTable":
        if not (len(p) == len(nu) == len(gamma)) or not p:
            raise TableError("columns must be nonempty and of equal length")
        table = cls(len(p) - 1, tuple(p), tuple(nu), tuple(gamma))
        if check:
            bad = table.violations()
            if bad:
                n, msg = bad[0]
                raise TableError(f"invariant fails at n={n}: {msg}", n)
        return table

    def extend(self, n_max: int) -> "SeqTable":
        """Table up to ``n_max`` reusing this table's p-prefix."""
        if n_max <= self.n_max:
            return self.truncate(n_max)
        p = compute_p_table(n_max, prefix=self.p)
        nu = derive_nu(p)
        return SeqTable(n_max, tuple(p), tuple(nu), tuple(derive_gamma(nu)))

    def truncate(self, n_max: int) -> "SeqTable":
        if n_max > self.n_max:
            raise ValueError(f"table only reaches {self.n_max}")
        k = n_max + 1
        return SeqTable(n_max, self.p[:k], self.nu[:k], self.gamma[:k])

    def violations(self) -> list[tuple[int, str]]:
        """All (n, message) pairs where a recurrence invariant fails."""
        p, nu, gamma = self.p, self.nu, self.gamma
        bad: list[tuple[int, str]] = []
        if p[0] != 1:
            bad.append((0, f"p(0)={p[0]}, expected 1"))
        if nu[0] != 1:
            bad.append((0, f"nu(0)={nu[0]}, expected 1"))
        for n in range(min(GAMMA_START, len(gamma))):
            if gamma[n] != 0:
                bad.append((n, f"gamma({n})={gamma[n]}, expected 0"))
        for n in range(1, self.n_max + 1):
            if p[n] != p[n - 1] + nu[n]:
                bad.append((n, "p(n) != p(n-1) + nu(n)"))
            if nu[n] < 0 or gamma[n] < 0:
                bad.append((n, "negative count"))
            if n >= 2 and p[n] <= p[n - 1]:
                bad.append((n, "p not strictly increasing"))
            if n >= GAMMA_START and nu[n] != nu[n - 1] + gamma[n]:
                bad.append((n, "nu(n) != nu(n-1) + gamma(n)"))
        return bad

    def row(self, n: int) -> tuple[int, int, int, int]:
        """``(n, p(n), nu(n), gamma(n))``."""
        return n, self.p[n], self.nu[n], self.gamma[n]

    def __len__(self) -> int:
        return self.n_max + 1
