import json

import pytest
from hypothesis import given, strategies as st

from conftest import TABLE1
from nupart import enumeration
from nupart.enumeration import (
    ContradictionError,
    Partition,
    classify_ground_states,
    conjugate,
    decomposition_jsonl,
    enumerate_partitions,
    epsilon_series,
    ground_states,
    guy_counts,
    is_g2_shape,
    is_ground_state,
    is_non_unitary,
    is_rectangle,
)
from nupart.seqcore import SeqTable, mod_floor, sigma0


def test_enumerate_examples():
    assert list(enumerate_partitions(4, 2)) == [(4,), (2, 2)]
    assert list(enumerate_partitions(0, 1)) == [()]
    assert sum(1 for _ in enumerate_partitions(8, 2)) == 7


def test_enumeration_order_is_reverse_lex():
    parts = list(enumerate_partitions(12))
    assert parts == sorted(parts, reverse=True)


@pytest.mark.parametrize("n", range(0, 26))
def test_stream_unique_and_valid(n):
    seen = list(enumerate_partitions(n))
    assert len(seen) == len(set(seen))
    for lam in seen:
        assert Partition(lam) == lam  # re-validates
        assert lam.size == n


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((3, 0))
    assert Partition(()).size == 0


def test_predicates():
    assert is_non_unitary((3, 2)) and not is_non_unitary((2, 1))
    assert is_non_unitary(())
    assert is_ground_state((2, 2)) and not is_ground_state((2,))
    assert is_ground_state((5, 5, 3, 2))
    assert not is_ground_state(()) and not is_ground_state((3, 3, 1))
    assert sum(is_non_unitary(l) for l in enumerate_partitions(12)) == 21
    assert sum(is_ground_state(l) for l in enumerate_partitions(20)) == 32


def test_oracle_equivalence_small():
    t = SeqTable.build(30)
    for n in range(31):
        assert sum(1 for _ in enumerate_partitions(n, 1)) == t.p[n]
        assert sum(1 for _ in enumerate_partitions(n, 2)) == t.nu[n]
        assert len(ground_states(n)) == t.gamma[n]


def test_conjugate_examples():
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate((2, 2)) == (2, 2)
    assert conjugate(()) == ()
    members = set(ground_states(12))
    assert all(conjugate(l) in members for l in members)


@given(st.lists(st.integers(1, 12), max_size=12))
def test_conjugate_involution(parts):
    lam = Partition(sorted(parts, reverse=True))
    mu = conjugate(lam)
    assert conjugate(mu) == lam
    assert mu.size == lam.size


def test_shape_predicates():
    assert is_g2_shape((4, 4)) and is_g2_shape((3, 3, 2)) and is_g2_shape((2, 2, 2, 2))
    assert not is_g2_shape((3, 3, 3)) and not is_g2_shape((4, 4, 3))
    assert is_rectangle((3, 3, 3)) and is_rectangle((2, 2))
    assert not is_rectangle((3, 3, 2)) and not is_rectangle((4,))


def test_classify_8():
    d = classify_ground_states(8)
    assert (d.g_total, d.g1, d.g2) == (3, 0, 3)
    assert set(d.members["g2"]) == {(4, 4), (3, 3, 2), (2, 2, 2, 2)}


def test_classify_small_n():
    for n in (0, 1):
        d = classify_ground_states(n)
        assert (d.g_total, d.g1, d.g2, d.g0, d.epsilon) == (0, 0, 0, 0, 0)
    assert classify_ground_states(12).g_total == TABLE1[12][0] == 7


@pytest.mark.parametrize("n", range(2, 46))
def test_decomposition(n):
    t = SeqTable.build(45)
    d = classify_ground_states(n)
    assert d.g1 + d.g2 == d.g_total == t.gamma[n]
    assert not set(d.members["g1"]) & set(d.members["g2"])
    assert d.g2 == mod_floor(n - 1, 2)
    if n % 2:
        assert d.g2 == 0
    assert d.g0 == t.gamma[n] - sigma0(n) + 2
    assert d.g0 == d.g_total - max(sigma0(n) - 2, 0)


def test_epsilon_series():
    eps = epsilon_series(10)
    assert sorted(eps) == list(range(3, 11))
    assert eps[4] == 0
    with pytest.raises(ValueError):
        epsilon_series(2)


def test_contradiction_is_loud(monkeypatch):
    # pretend (3, 3, 3) is a G^(2) shape; it can be lowered to (3, 3, 2), so it must be rejected
    real = enumeration.is_g2_shape
    monkeypatch.setattr(enumeration, "is_g2_shape", lambda lam: real(lam) or lam == (3, 3, 3))
    with pytest.raises(ContradictionError) as err:
        classify_ground_states(9)
    assert err.value.n == 9 and err.value.partition == (3, 3, 3)


def test_contradiction_missing_decrement(monkeypatch):
    monkeypatch.setattr(enumeration, "is_g2_shape", lambda lam: False)
    with pytest.raises(ContradictionError):
        classify_ground_states(4)


def test_guy_examples():
    assert guy_counts(0) == (1, 1)
    assert guy_counts(3) == (1, 1)


def test_guy_up_to_40():
    for n in range(41):
        a, b = guy_counts(n)
        assert a == b, n


def test_decomposition_dump():
    lines = decomposition_jsonl([8, 9]).splitlines()
    first = json.loads(lines[0])
    assert first == {"n": 8, "g_total": 3, "g1": 0, "g2": 3, "g0": 1, "epsilon": 0}
    verbose = json.loads(decomposition_jsonl([8], verbose=True))
    assert [4, 4] in verbose["partitions"]["g2"]
