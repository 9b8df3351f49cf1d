"""Brute-force partition enumeration, used as ground truth for the recurrences.

Also builds the split of the ground states G_n into
G_n^(1) (some part can be lowered by one, giving a ground state of n-1) and
G_n^(2) (the shapes (c,c), (c,c,2,...,2) and (2,...,2)), the non-rectangle
subset G_n^(0), and the statistic epsilon(n) = #G_n^(1) - #G_{n-1}^(0).
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Optional

from nupart.seqcore import mod_floor, sigma0

__all__ = [
    "ContradictionError",
    "GroundStateDecomposition",
    "Partition",
    "classify_ground_states",
    "conjugate",
    "decomposition_jsonl",
    "enumerate_partitions",
    "epsilon_series",
    "ground_states",
    "guy_counts",
    "is_ground_state",
    "is_g2_shape",
    "is_non_unitary",
    "is_rectangle",
]


class ContradictionError(RuntimeError):
    """A partition contradicts the claimed disjoint union G_n = G_n^(1) + G_n^(2)."""

    def __init__(self, n: int, partition: "Partition", reason: str):
        super().__init__(f"n={n}, partition={tuple(partition)}: {reason}")
        self.n = n
        self.partition = partition
        self.reason = reason


class Partition(tuple):
    """Weakly decreasing tuple of positive parts."""

    __slots__ = ()

    def __new__(cls, parts=()):
        parts = tuple(parts)
        for i, x in enumerate(parts):
            if not isinstance(x, int) or x < 1:
                raise ValueError(f"parts must be positive integers, got {x!r}")
            if i and x > parts[i - 1]:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def _trusted(cls, parts: tuple[int, ...]) -> "Partition":
        return tuple.__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def parts(self) -> tuple[int, ...]:
        return tuple(self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"


def enumerate_partitions(n: int, min_part: int = 1) -> Iterator[Partition]:
    """Yield each partition of ``n`` with all parts >= ``min_part`` once.

    Order is reverse-lexicographic: (n) first when allowed.
    """
    if n < 0 or min_part < 1:
        raise ValueError("need n >= 0 and min_part >= 1")

    def rec(rest: int, cap: int, head: tuple[int, ...]):
        if rest == 0:
            yield Partition._trusted(head)
            return
        for first in range(min(rest, cap), min_part - 1, -1):
            left = rest - first
            if 0 < left < min_part:
                continue
            yield from rec(left, first, head + (first,))

    yield from rec(n, n, ())


def is_non_unitary(lam) -> bool:
    return 1 not in lam


def is_ground_state(lam) -> bool:
    return len(lam) >= 2 and lam[-1] >= 2 and lam[0] == lam[1]


def is_rectangle(lam) -> bool:
    """Rectangular Young diagram (d,...,d) with d >= 2 repeated at least twice."""
    return len(lam) >= 2 and lam[0] >= 2 and lam[0] == lam[-1]


def is_g2_shape(lam) -> bool:
    """(c,c) or (c,c,2,...,2) with c >= 2; this includes (2,...,2)."""
    return (
        len(lam) >= 2
        and lam[0] == lam[1] >= 2
        and all(x == 2 for x in lam[2:])
    )


def conjugate(lam) -> Partition:
    if not lam:
        return Partition._trusted(())
    return Partition._trusted(
        tuple(sum(1 for x in lam if x > i) for i in range(lam[0]))
    )


def _decrements(lam: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    # lowering the last copy of each distinct value keeps the tuple sorted
    for i, x in enumerate(lam):
        if i + 1 == len(lam) or lam[i + 1] < x:
            yield lam[:i] + (x - 1,) + lam[i + 1:]


@lru_cache(maxsize=None)
def ground_states(n: int) -> tuple[Partition, ...]:
    """G_n by filtering the non-unitary partitions of ``n``."""
    if n < 2:
        return ()
    return tuple(lam for lam in enumerate_partitions(n, 2) if is_ground_state(lam))


@dataclass(frozen=True)
class GroundStateDecomposition:
    n: int
    g_total: int
    g1: int
    g2: int
    g0: int
    epsilon: int
    members: Optional[dict[str, tuple[Partition, ...]]] = field(
        default=None, compare=False, repr=False
    )

    def to_dict(self, verbose: bool = False) -> dict:
        out = {
            "n": self.n,
            "g_total": self.g_total,
            "g1": self.g1,
            "g2": self.g2,
            "g0": self.g0,
            "epsilon": self.epsilon,
        }
        if verbose and self.members is not None:
            out["partitions"] = {k: [list(p) for p in v] for k, v in self.members.items()}
        return out


def _g0_count(k: int) -> int:
    return sum(1 for lam in ground_states(k) if not is_rectangle(lam))


def classify_ground_states(n: int) -> GroundStateDecomposition:
    """Split G_n into G_n^(1) and G_n^(2) and count G_n^(0).

    Every member is checked against both definitions: shape members must
    admit no decrement into G_{n-1}, all others must admit one.  Any
    exception raises :class:`ContradictionError`.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n < 2:
        return GroundStateDecomposition(n, 0, 0, 0, 0, 0, {"g1": (), "g2": (), "g0": ()})
    prev = set(ground_states(n - 1))
    g1: list[Partition] = []
    g2: list[Partition] = []
    for lam in ground_states(n):
        lowers = any(mu in prev for mu in _decrements(lam))
        if is_g2_shape(lam):
            if lowers:
                raise ContradictionError(n, lam, "G^(2) shape also lies in G^(1)")
            g2.append(lam)
        else:
            if not lowers:
                raise ContradictionError(n, lam, "no part can be lowered into G_{n-1}")
            g1.append(lam)
    g0 = tuple(lam for lam in ground_states(n) if not is_rectangle(lam))
    eps = len(g1) - _g0_count(n - 1)
    return GroundStateDecomposition(
        n,
        len(g1) + len(g2),
        len(g1),
        len(g2),
        len(g0),
        eps,
        {"g1": tuple(g1), "g2": tuple(g2), "g0": g0},
    )


def epsilon_series(n_max: int) -> dict[int, int]:
    """``{n: epsilon(n)}`` for 3 <= n <= n_max, from direct set construction."""
    if n_max < 3:
        raise ValueError(f"n_max must be >= 3, got {n_max}")
    return {n: classify_ground_states(n).epsilon for n in range(3, n_max + 1)}


def decomposition_jsonl(ns: Iterable[int], verbose: bool = False) -> str:
    """One JSON object per n; ``verbose`` adds the member partitions."""
    lines = [
        json.dumps(classify_ground_states(n).to_dict(verbose), sort_keys=True) for n in ns
    ]
    return "\n".join(lines) + "\n"


def _is_power_of_two(x: int) -> bool:
    return x & (x - 1) == 0


def guy_counts(n: int) -> tuple[int, int]:
    """(#partitions into odd parts >= 3, #partitions into distinct parts that are not powers of 2)."""
    odd = distinct = 0
    for lam in enumerate_partitions(n, 1):
        if all(x & 1 and x >= 3 for x in lam):
            odd += 1
        if len(set(lam)) == len(lam) and not any(_is_power_of_two(x) for x in lam):
            distinct += 1
    return odd, distinct


def g2_expected(n: int) -> int:
    """Closed-form size of G_n^(2)."""
    return mod_floor(n - 1, 2) if n >= 2 else 0


def g0_expected(k: int, gamma_k: int) -> int:
    """Closed-form size of G_k^(0), valid for k >= 2."""
    return gamma_k - sigma0(k) + 2
