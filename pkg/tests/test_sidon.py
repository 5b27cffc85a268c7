import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cubedraw.sidon import (
    SidonError,
    SidonSet,
    erdos_turan_sidon,
    is_prime,
    is_sidon,
    is_weak_sidon,
    singer_difference_set,
    singer_sidon,
    smallest_prime_at_least,
)

PRIMES = [p for p in range(2, 32) if all(p % f for f in range(2, p))]


def sidon_by_quadruples(s):
    # direct definition: a+b == c+d forces {a,b} == {c,d}
    for a, b, c, d in itertools.product(s, repeat=4):
        if a + b == c + d and {a, b} != {c, d}:
            return False
    return True


@pytest.mark.parametrize(
    "s,expected",
    [((1, 2, 5, 7), True), ((1, 2, 3, 5), False), ((1,), True), ((), True)],
)
def test_is_sidon_examples(s, expected):
    assert is_sidon(s) is expected


@pytest.mark.parametrize("s,expected", [((1, 2, 3, 5), True), ((1, 2, 3, 4), False)])
def test_is_weak_sidon_examples(s, expected):
    assert is_weak_sidon(s) is expected


def test_non_increasing_rejected():
    with pytest.raises(SidonError):
        is_sidon((1, 3, 2))
    with pytest.raises(SidonError):
        is_weak_sidon((2, 2))


@given(st.sets(st.integers(1, 40), max_size=7))
def test_is_sidon_matches_definition(elems):
    s = tuple(sorted(elems))
    assert is_sidon(s) == sidon_by_quadruples(s)
    if is_sidon(s):
        assert is_weak_sidon(s)


@pytest.mark.parametrize("k,p", [(1, 2), (8, 11), (13, 13), (2, 2), (24, 29)])
def test_smallest_prime(k, p):
    assert smallest_prime_at_least(k) == p


def test_bertrand_window():
    for k in range(1, 500):
        p = smallest_prime_at_least(k)
        assert k <= p <= 2 * k and is_prime(p)
        assert not any(is_prime(x) for x in range(k, p))


def test_erdos_turan_examples():
    assert erdos_turan_sidon(3).elements == (1, 8, 14)
    assert erdos_turan_sidon(2).elements == (1, 6)
    s5 = erdos_turan_sidon(5)
    assert s5.elements == (1, 12, 25, 35, 42) and max(s5.elements) <= 45


def test_singer_q2():
    s = singer_sidon(2)
    assert len(s) == 3 and s.universe_bound == 7 and max(s.elements) <= 7
    diffs = [(a - b) % 7 for a, b in itertools.permutations(s.elements, 2)]
    assert sorted(diffs) == list(range(1, 7))


@pytest.mark.parametrize("q", PRIMES)
def test_singer_perfect_difference_set(q):
    big_n = q * q + q + 1
    d = singer_difference_set(q)
    diffs = [(a - b) % big_n for a, b in itertools.permutations(d, 2)]
    assert len(diffs) == q * q + q
    assert sorted(diffs) == list(range(1, big_n))


@pytest.mark.parametrize("q", PRIMES)
def test_singer_sidon_properties(q):
    s = singer_sidon(q)
    assert len(s) == q + 1
    assert s.universe_bound == q * q + q + 1
    assert 1 == s.elements[0] and s.elements[-1] <= s.universe_bound
    assert is_sidon(s.elements)


@pytest.mark.parametrize("p", PRIMES)
def test_erdos_turan_properties(p):
    s = erdos_turan_sidon(p)
    assert len(s) == p and max(s.elements) <= p * (2 * p - 1)
    assert is_sidon(s.elements)


@given(st.sampled_from(PRIMES), st.data())
def test_erdos_turan_hereditary(p, data):
    elems = erdos_turan_sidon(p).elements
    sub = data.draw(st.lists(st.sampled_from(elems), unique=True))
    assert is_sidon(tuple(sorted(sub)))


@pytest.mark.parametrize("fn", [singer_sidon, erdos_turan_sidon])
@pytest.mark.parametrize("bad", [1, 4, 9, 15])
def test_constructions_reject_composites(fn, bad):
    with pytest.raises(SidonError):
        fn(bad)


def test_sidon_set_validates():
    with pytest.raises(SidonError):
        SidonSet((1, 2, 3), 3)
    with pytest.raises(SidonError):
        SidonSet((1, 2, 5), 4)
