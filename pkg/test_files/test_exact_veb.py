"""Tests for the exact van Emde Boas multiset."""

from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from approx_veb.errors import DomainError, InvariantViolation, StaleNameError
from approx_veb.oracles import OracleMultiset
from approx_veb.structures import VebSet, tower_level
from approx_veb.word import WordConfig


def keys_of(veb: VebSet) -> list[int]:
    return [veb.key(name) for name in veb]


class TestTower:
    @pytest.mark.parametrize(
        ("size", "level"),
        [(1, 0), (64, 0), (65, 1), (2**12, 1), (2**24, 2), (2**48, 3), (2**64, 4)],
    )
    def test_tower_level(self, size, level):
        assert tower_level(size, 64) == level

    def test_padded_universe(self, word8):
        veb = VebSet(16, word=word8)
        assert veb.depth == 1
        assert veb.padded_universe == 64


class TestInsert:
    def test_first_insert_is_held_without_children(self, word64):
        veb = VebSet(2**20, word=word64)
        name = veb.insert(5)
        assert veb.minimum() == name == veb.maximum()
        assert veb.root.clusters is None and veb.root.summary is None

    def test_duplicate_key_shares_a_bucket(self, word64):
        veb = VebSet(100, word=word64)
        veb.insert(5)
        veb.insert(5)
        assert len(veb) == 2
        assert veb.distinct == 1

    def test_bucket_order_and_summary(self):
        veb = VebSet(256, word=WordConfig(b=16))
        for key in (9, 3, 12):
            veb.insert(key)
        assert list(veb.keys()) == [3, 9, 12]
        assert list(veb.root.summary.iter_keys()) == [0]
        veb.insert(200)
        assert list(veb.root.summary.iter_keys()) == [0, 12]
        veb.check_invariants()

    def test_insert_before_inside_bucket(self, word64):
        veb = VebSet(100, word=word64)
        last = veb.insert(5, "b")
        first = veb.insert_before(last, "a")
        middle = veb.insert_before(last, "m")
        assert [veb.element(n) for n in veb] == ["a", "m", "b"]
        assert veb.minimum() == first
        assert veb.predecessor(last) == middle
        assert veb.key(middle) == 5
        assert veb.distinct == 1 and len(veb) == 3
        veb.check_invariants()

    def test_key_outside_universe(self, word64):
        veb = VebSet(10, word=word64)
        with pytest.raises(DomainError):
            veb.insert(10)
        with pytest.raises(DomainError):
            veb.insert(-1)

    def test_low_offset(self, word64):
        veb = VebSet(10, low=100, word=word64)
        veb.insert(105)
        assert veb.key(veb.search(109)) == 105
        assert veb.search(104) is None
        with pytest.raises(DomainError):
            veb.insert(99)


class TestDelete:
    def test_insert_then_delete_empties(self, word64):
        veb = VebSet(100, word=word64)
        veb.delete(veb.insert(42))
        assert veb.minimum() is None
        assert len(veb) == 0

    def test_delete_one_of_two_occurrences(self, word64):
        veb = VebSet(100, word=word64)
        first = veb.insert(5)
        veb.insert(5)
        veb.delete(first)
        assert 5 in veb
        assert veb.search(5) is not None

    def test_two_to_one_collapse_destroys_children(self, word64):
        veb = VebSet(2**20, word=word64)
        veb.insert(3)
        nine = veb.insert(9)
        assert veb.root.clusters is not None
        veb.delete(nine)
        assert veb.root.clusters is None and veb.root.summary is None
        assert veb.root.min == veb.root.max == 3
        assert veb.stats.nodes_live == 1
        veb.check_invariants()

    def test_stale_name(self, word64):
        veb = VebSet(100, word=word64)
        name = veb.insert(7, "x", "d")
        veb.delete(name)
        assert not name.is_live
        with pytest.raises(StaleNameError):
            veb.delete(name)
        with pytest.raises(StaleNameError):
            veb.element(name)
        with pytest.raises(StaleNameError):
            veb.successor(name)

    def test_foreign_name(self, word64):
        a, b = VebSet(100, word=word64), VebSet(100, word=word64)
        name = a.insert(1)
        with pytest.raises(StaleNameError):
            b.delete(name)


class TestQueries:
    @pytest.fixture
    def two_seven(self, word64):
        veb = VebSet(100, word=word64)
        return veb, veb.insert(2), veb.insert(7)

    def test_search(self, two_seven):
        veb, two, seven = two_seven
        assert veb.search(7) == seven
        assert veb.search(6) == two
        assert veb.search(1) is None
        assert veb.search(99) == seven

    def test_empty_search(self, word64):
        assert VebSet(100, word=word64).search(50) is None

    def test_search_zero(self, word64):
        veb = VebSet(100, word=word64)
        zero = veb.insert(0)
        assert veb.search(0) == zero

    def test_extremes_follow_list_order(self, word64):
        veb = VebSet(100, word=word64)
        one = veb.insert(1)
        veb.insert(8)
        last_eight = veb.insert(8)
        assert veb.minimum() == one
        assert veb.maximum() == last_eight
        assert veb.search(8) == last_eight

    def test_singleton_neighbours(self, word64):
        veb = VebSet(100, word=word64)
        name = veb.insert(4)
        assert veb.predecessor(name) is None
        assert veb.successor(name) is None

    def test_successor_chain_through_bucket(self, word64):
        veb = VebSet(100, word=word64)
        nine = veb.insert(9)
        two = veb.insert(2)
        a = veb.insert(7)
        b = veb.insert(7)
        chain = [two]
        while (nxt := veb.successor(chain[-1])) is not None:
            chain.append(nxt)
        assert chain == [two, a, b, nine]
        assert veb.predecessor(a) == two

    def test_element_and_data(self, word64):
        veb = VebSet(100, word=word64)
        first = veb.insert(3, 2.5, "a")
        second = veb.insert(3, 2.75, "b")
        assert veb.element(first) == 2.5
        assert veb.data(first) == "a"
        assert veb.data(second) == "b"


class TestInvariantCheck:
    def test_detects_corrupted_cache(self, word64):
        veb = VebSet(2**20, word=word64)
        for key in (1, 500, 70000):
            veb.insert(key)
        veb.root.min = 2
        with pytest.raises(InvariantViolation):
            veb.check_invariants()


# ------------------------------------------------------------------
# Oracle equivalence
# ------------------------------------------------------------------


class Replay:
    """Drives a ``VebSet`` and an ``OracleMultiset`` with the same operations."""

    def __init__(self, veb: VebSet, oracle: OracleMultiset) -> None:
        self.veb = veb
        self.oracle = oracle
        self.live: list[tuple[object, int]] = []
        self.token_of: dict[object, int] = {}

    def token(self, name) -> int | None:
        return None if name is None else self.token_of[name]

    def insert(self, key: int) -> None:
        name = self.veb.insert(key, key)
        token = self.oracle.insert(key, key)
        self.live.append((name, token))
        self.token_of[name] = token

    def delete(self, index: int) -> None:
        if not self.live:
            return
        name, token = self.live.pop(index % len(self.live))
        self.veb.delete(name)
        self.oracle.delete(token)
        del self.token_of[name]

    def check(self, query: int) -> None:
        veb, oracle = self.veb, self.oracle
        assert self.token(veb.search(query)) == oracle.search(query)
        assert self.token(veb.minimum()) == oracle.minimum()
        assert self.token(veb.maximum()) == oracle.maximum()
        assert len(veb) == len(oracle)
        if self.live:
            name, token = self.live[query % len(self.live)]
            assert self.token(veb.predecessor(name)) == oracle.predecessor(token)
            assert self.token(veb.successor(name)) == oracle.successor(token)


operations = st.lists(
    st.tuples(st.sampled_from(["insert", "delete"]), st.integers(min_value=0), st.integers(min_value=0)),
    max_size=60,
)


@given(bits=st.integers(min_value=6, max_value=24), ops=operations)
def test_matches_oracle(bits, ops):
    size = 2**bits
    replay = Replay(VebSet(size, word=WordConfig(b=64)), OracleMultiset(size))
    for kind, value, query in ops:
        if kind == "insert":
            replay.insert(value % size)
        else:
            replay.delete(value)
        replay.check(query % size)
    replay.veb.check_invariants()


@given(ops=operations)
def test_matches_oracle_small_word(ops):
    size = 4096
    replay = Replay(VebSet(size, word=WordConfig(b=8)), OracleMultiset(size))
    for kind, value, query in ops:
        if kind == "insert":
            replay.insert(value % size)
        else:
            replay.delete(value)
        replay.check(query % size)
        replay.veb.check_invariants()


def _run_sequence(sequence, queries=range(16)) -> None:
    replay = Replay(VebSet(16, word=WordConfig(b=8)), OracleMultiset(16))
    for step in sequence:
        if step[0] == "insert":
            replay.insert(step[1])
        else:
            replay.delete(step[1])
        for q in queries:
            replay.check(q)
        replay.veb.check_invariants()


SHORT_ALPHABET = [("insert", 0), ("insert", 7), ("insert", 8), ("insert", 15), ("delete", 0), ("delete", -1)]


def test_exhaustive_short_sequences():
    for length in range(1, 5):
        for sequence in itertools.product(SHORT_ALPHABET, repeat=length):
            _run_sequence(sequence)


@pytest.mark.slow
def test_exhaustive_sequences_up_to_eight():
    alphabet = [("insert", 3), ("insert", 12), ("delete", 0), ("delete", -1)]
    for length in range(1, 9):
        for sequence in itertools.product(alphabet, repeat=length):
            _run_sequence(sequence, queries=(2, 3, 11, 12, 15))


@pytest.mark.slow
def test_long_random_sequences_match_oracle():
    rng = random.Random(7)
    for bits in (6, 12, 18, 24):
        size = 2**bits
        replay = Replay(VebSet(size, word=WordConfig(b=64)), OracleMultiset(size))
        for _ in range(10_000):
            if rng.random() < 0.6:
                replay.insert(rng.randrange(size))
            else:
                replay.delete(rng.randrange(1 << 30))
            replay.check(rng.randrange(size))
        replay.veb.check_invariants()


# ------------------------------------------------------------------
# Descent and space proxies
# ------------------------------------------------------------------


def _random_workload(veb: VebSet, ops: int, seed: int) -> None:
    rng = random.Random(seed)
    live = []
    for _ in range(ops):
        draw = rng.random()
        if draw < 0.4 or not live:
            live.append(veb.insert(rng.randrange(veb.universe_size)))
        elif draw < 0.6:
            veb.delete(live.pop(rng.randrange(len(live))))
        else:
            veb.search(rng.randrange(veb.universe_size))


@pytest.mark.parametrize("bits", [12, 24, 48, 64])
def test_descents_bounded_by_tower_depth(bits):
    veb = VebSet(2**bits, word=WordConfig(b=64))
    _random_workload(veb, 3000, seed=bits)
    assert veb.stats.max_descents <= veb.depth
    assert veb.stats.max_descents <= 4


def test_descents_with_clustered_keys():
    veb = VebSet(2**64, word=WordConfig(b=64))
    base = 2**40
    names = [veb.insert(base + i * 977) for i in range(2000)]
    for i in range(0, 2000, 3):
        veb.delete(names[i])
        veb.search(base + i * 977 + 5)
    assert veb.stats.max_descents <= 4
    veb.check_invariants()


@pytest.mark.parametrize("n", [1000, pytest.param(100_000, marks=pytest.mark.slow)])
def test_space_proxy(n):
    rng = random.Random(n)
    veb = VebSet(2**32, word=WordConfig(b=64))
    for _ in range(n):
        veb.insert(rng.randrange(2**32))
    assert veb.allocated() <= 4 * (len(veb) + 5 * veb.distinct)
    assert veb.stats.nodes_peak <= 4 * (len(veb) + 5 * veb.distinct)
