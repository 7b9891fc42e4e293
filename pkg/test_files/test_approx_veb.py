"""Tests for the approximate multisets and the priority-queue adapter."""

from __future__ import annotations

import heapq
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from approx_veb.errors import DomainError, EmptyQueueError, StaleNameError
from approx_veb.oracles import OracleMultiset
from approx_veb.structures import ApproxVeb, Variant, VebPriorityQueue, make_priority_queue
from approx_veb.word import FixedPoint, WordConfig

WORD = WordConfig(b=64)


class TestMultiplicative:
    def test_same_bucket_search(self):
        veb = ApproxVeb.multiplicative(1, 100, WORD)
        five = veb.insert(5)
        found = veb.search(7)
        assert found == five
        assert veb.element(found) == 5

    def test_factor_two_keeps_order(self):
        veb = ApproxVeb.multiplicative(1, 100, WORD)
        four, eight = veb.insert(4), veb.insert(8)
        assert veb.key(four) < veb.key(eight)
        assert veb.search(7) == four

    def test_query_below_bucket(self):
        veb = ApproxVeb.multiplicative(1, 100, WORD)
        veb.insert(4)
        assert veb.search(3) is None

    def test_queries_outside_universe(self):
        veb = ApproxVeb.multiplicative(1, 100, WORD)
        assert veb.search(50) is None
        top = veb.insert(60)
        assert veb.search(0.5) is None
        assert veb.search(-3) is None
        assert veb.search(1000) == top
        assert veb.search(2**70) == top

    def test_insert_outside_universe(self):
        veb = ApproxVeb.multiplicative(1, 100, WORD)
        with pytest.raises(DomainError):
            veb.insert(0)
        with pytest.raises(DomainError):
            veb.insert(101)

    def test_element_is_original_value(self):
        veb = ApproxVeb.multiplicative(Fraction(1, 4), 1000, WORD)
        name = veb.insert(Fraction(10, 3), datum="third")
        assert veb.element(name) == Fraction(10, 3)
        assert veb.data(name) == "third"

    def test_stale_name(self):
        veb = ApproxVeb.multiplicative(1, 100, WORD)
        name = veb.insert(9)
        veb.delete(name)
        with pytest.raises(StaleNameError):
            veb.delete(name)

    def test_descents_for_fine_epsilon(self):
        rng = random.Random(3)
        veb = ApproxVeb.multiplicative(Fraction(1, 2**20), 2**64 - 1, WORD)
        live = []
        for _ in range(3000):
            draw = rng.random()
            x = rng.randint(1, 2 ** rng.randint(1, 64) - 1)
            if draw < 0.4 or not live:
                live.append(veb.insert(x))
            elif draw < 0.6:
                veb.delete(live.pop(rng.randrange(len(live))))
            else:
                veb.search(x)
        assert veb.stats.max_descents <= 2
        veb.check_invariants()


class TestAdditive:
    def test_search_by_bucket(self):
        veb = ApproxVeb.additive(10, 100, WORD)
        three = veb.insert(3)
        veb.insert(47)
        assert veb.search(12) == three

    def test_empty(self):
        assert ApproxVeb.additive(10, 100, WORD).search(50) is None

    def test_insert_before_keeps_bucket_order(self):
        veb = ApproxVeb.additive(10, 100, WORD)
        assert veb.map_key(3) == veb.map_key(7)
        seven = veb.insert(7)
        veb.insert(47)
        three = veb.insert_before(seven, 3, "d")
        assert [veb.element(n) for n in veb] == [3, 7, 47]
        assert veb.minimum() == three
        assert veb.data(three) == "d"
        assert veb.successor(three) == seven
        veb.check_invariants()

    def test_insert_before_rejects_other_bucket(self):
        veb = ApproxVeb.additive(10, 100, WORD)
        seven = veb.insert(7)
        with pytest.raises(DomainError):
            veb.insert_before(seven, 47)
        assert len(veb) == 1

    def test_insert_before_stale_anchor(self):
        veb = ApproxVeb.additive(10, 100, WORD)
        seven = veb.insert(7)
        veb.delete(seven)
        with pytest.raises(StaleNameError):
            veb.insert_before(seven, 3)

    def test_exact_variant(self):
        veb = ApproxVeb.exact(1000, WORD)
        assert veb.variant is Variant.EXACT
        names = {k: veb.insert(k) for k in (5, 17, 900)}
        assert veb.search(16) == names[5]
        assert veb.search(17) == names[17]
        assert [veb.element(n) for n in veb] == [5, 17, 900]


def _replay(veb: ApproxVeb, ops, values) -> None:
    """Replay ``ops`` on ``veb`` and on an oracle keyed by ``veb.map_key``."""
    oracle = OracleMultiset()
    live = []
    token_of = {}
    for kind, value, query in ops:
        x = values(value)
        if kind == "insert":
            name = veb.insert(x)
            token = oracle.insert(veb.map_key(x), x)
            live.append((name, token))
            token_of[name] = token
        elif live:
            name, token = live.pop(value % len(live))
            veb.delete(name)
            oracle.delete(token)
        q = values(query)
        found = veb.search(q)
        expected = oracle.search(veb.map_key(q))
        assert (None if found is None else token_of[found]) == expected
        minimum = veb.minimum()
        assert (None if minimum is None else token_of[minimum]) == oracle.minimum()
    veb.check_invariants()


operations = st.lists(
    st.tuples(st.sampled_from(["insert", "insert", "delete"]), st.integers(0, 10**9), st.integers(0, 10**9)),
    max_size=50,
)


@pytest.mark.parametrize("epsilon", [Fraction(1), Fraction(1, 2), Fraction(1, 16), Fraction(1, 256)])
@given(ops=operations)
def test_multiplicative_consistent_with_mapped_oracle(epsilon, ops):
    veb = ApproxVeb.multiplicative(epsilon, 10**6, WORD)
    _replay(veb, ops, lambda v: Fraction(v % 10**6 + 1000, 1000))


@pytest.mark.parametrize("delta", [1, 3, Fraction(10**6, 256)])
@given(ops=operations)
def test_additive_consistent_with_mapped_oracle(delta, ops):
    veb = ApproxVeb.additive(delta, 10**6, WORD)
    _replay(veb, ops, lambda v: v % (10**6 + 1))


@given(
    values=st.lists(st.integers(1, 10**6), min_size=1, max_size=40),
    query=st.integers(1, 10**6),
    epsilon=st.sampled_from([Fraction(1), Fraction(1, 10), Fraction(1, 100)]),
)
def test_multiplicative_search_error_bound(values, query, epsilon):
    veb = ApproxVeb.multiplicative(epsilon, 10**6, WORD)
    for v in values:
        veb.insert(v)
    found = veb.search(query)
    below = [v for v in values if v <= query]
    if found is None:
        assert not below
        return
    y = veb.element(found)
    assert y <= query * (1 + epsilon)
    for z in below:
        assert z <= y * (1 + epsilon)


@given(
    values=st.lists(st.integers(0, 10**6), min_size=1, max_size=40),
    query=st.integers(0, 10**6),
    delta=st.sampled_from([1, 7, 1000]),
)
def test_additive_search_error_bound(values, query, delta):
    veb = ApproxVeb.additive(delta, 10**6, WORD)
    for v in values:
        veb.insert(v)
    found = veb.search(query)
    below = [v for v in values if v <= query]
    if found is None:
        assert not below
        return
    y = veb.element(found)
    assert y < query + delta
    for z in below:
        assert z < y + delta


class TestPriorityQueue:
    def test_single_entry(self):
        pq = make_priority_queue(Variant.MULTIPLICATIVE, 100, epsilon=Fraction(1), word=WORD)
        pq.insert(42, "item")
        assert pq.extract_min() == (42, "item")
        assert not pq

    def test_same_bucket_may_return_larger(self):
        pq = make_priority_queue(Variant.MULTIPLICATIVE, 100, epsilon=Fraction(1), word=WORD)
        pq.insert(11, "b")
        pq.insert(10, "a")
        priority, item = pq.extract_min()
        assert (priority, item) == (11, "b")
        assert priority <= pq.error_bound(10) == 20

    def test_distinct_buckets_are_ordered(self):
        pq = make_priority_queue(Variant.MULTIPLICATIVE, 100, epsilon=Fraction(1), word=WORD)
        pq.insert(21, "b")
        pq.insert(10, "a")
        assert pq.extract_min() == (10, "a")

    def test_empty_extract(self):
        pq = make_priority_queue(Variant.EXACT, 100, word=WORD)
        with pytest.raises(EmptyQueueError):
            pq.extract_min()
        with pytest.raises(EmptyQueueError):
            pq.peek_min()

    def test_missing_parameters(self):
        with pytest.raises(DomainError):
            make_priority_queue(Variant.MULTIPLICATIVE, 100)
        with pytest.raises(DomainError):
            make_priority_queue(Variant.ADDITIVE, 100)

    def test_delete_then_reinsert(self):
        pq = make_priority_queue(Variant.EXACT, 100, word=WORD)
        name = pq.insert(50, "v")
        pq.insert(60, "w")
        pq.delete(name)
        pq.insert(40, "v")
        assert pq.extract_min() == (40, "v")
        assert pq.operations == 5
        assert pq.summary().extractions == 1

    @pytest.mark.parametrize(
        "pq_factory",
        [
            lambda: make_priority_queue(Variant.MULTIPLICATIVE, 10**6, epsilon=Fraction(1, 4), word=WORD),
            lambda: make_priority_queue(Variant.ADDITIVE, 10**6, delta=500, word=WORD),
            lambda: make_priority_queue(Variant.EXACT, 10**6, word=WORD),
        ],
    )
    @given(ops=st.lists(st.one_of(st.integers(1, 10**6), st.none()), max_size=80))
    def test_extract_min_bound_against_heap(self, pq_factory, ops):
        pq: VebPriorityQueue = pq_factory()
        heap: list[tuple[int, int]] = []
        names = {}
        for seq, op in enumerate(ops):
            if op is not None:
                names[seq] = pq.insert(op, seq)
                heapq.heappush(heap, (op, seq))
            elif heap:
                true_min = heap[0][0]
                priority, seq_out = pq.extract_min()
                assert true_min <= priority <= pq.error_bound(true_min)
                heap.remove((priority, seq_out))
                heapq.heapify(heap)
        assert len(pq) == len(heap)

    def test_exact_extraction_is_monotone(self):
        rng = random.Random(11)
        pq = make_priority_queue(Variant.EXACT, 10**6, word=WORD)
        for i in range(500):
            pq.insert(rng.randint(1, 10**6), i)
        out = [pq.extract_min()[0] for _ in range(500)]
        assert out == sorted(out)


def test_fixed_point_elements():
    veb = ApproxVeb.additive(Fraction(1, 4), 10, WORD)
    name = veb.insert(FixedPoint(2, 2**63))
    assert veb.key(name) == 10
    assert veb.search(FixedPoint(2, 2**62)) is None
    assert veb.search(2.75) == name
