"""Kernel tests against brute-force counting oracles.

The oracles below enumerate set partitions directly and weight each block
by the number of ways to arrange it in a line.  They share no code with
the closed forms under test.
"""

import pytest
from hypothesis import given, strategies as st

from lahbell.exact_core import (
    IntegralityError,
    binomial,
    exact_div,
    factorial,
    lah,
    lah_bell_number,
    multinomial,
    r_lah_bell_number,
    rlah,
)


def _set_partitions(items):
    """All partitions of items into nonempty blocks, as lists of lists."""
    if not items:
        yield []
        return
    head, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [part[i] + [head]] + part[i + 1 :]
        yield part + [[head]]


def brute_lah(n, k):
    # partitions of an n-set into k blocks, each block linearly ordered
    total = 0
    for part in _set_partitions(list(range(n))):
        if len(part) == k:
            weight = 1
            for block in part:
                weight *= factorial(len(block))
            total += weight
    return total


def brute_rlah(n, k, r):
    # same on an (n+r)-set into k+r ordered blocks, with the r marked
    # elements required to land in r distinct blocks
    marked = list(range(n, n + r))
    total = 0
    for part in _set_partitions(list(range(n + r))):
        if len(part) != k + r:
            continue
        if any(sum(1 for m in marked if m in block) > 1 for block in part):
            continue
        weight = 1
        for block in part:
            weight *= factorial(len(block))
        total += weight
    return total


def test_factorial_matches_running_product():
    product = 1
    for n in range(13):
        assert factorial(n) == product
        product *= n + 1


def test_binomial_matches_pascal_triangle():
    row = [1]
    for n in range(15):
        for k in range(n + 1):
            assert binomial(n, k) == row[k]
        row = [1] + [row[i] + row[i + 1] for i in range(n)] + [1]


def test_binomial_outside_range_is_zero():
    assert binomial(5, 6) == 0
    assert binomial(5, -1) == 0
    assert binomial(0, 0) == 1


def test_binomial_rejects_negative_n():
    with pytest.raises(ValueError):
        binomial(-1, 0)


def test_multinomial_matches_factorial_quotient():
    for parts in [(), (0,), (3,), (1, 2), (2, 2, 1), (3, 1, 4), (0, 5, 0)]:
        denom = 1
        for p in parts:
            denom *= factorial(p)
        assert multinomial(parts) == factorial(sum(parts)) // denom
    assert multinomial((2, 3)) == 10


def test_exact_div():
    assert exact_div(12, 4) == 3
    assert exact_div(0, 7) == 0
    with pytest.raises(IntegralityError):
        exact_div(7, 2)


def test_lah_matches_ordered_block_oracle():
    for n in range(7):
        for k in range(n + 2):
            assert lah(n, k) == brute_lah(n, k), (n, k)


def test_lah_small_triangle():
    rows = [
        [1],
        [0, 1],
        [0, 2, 1],
        [0, 6, 6, 1],
        [0, 24, 36, 12, 1],
        [0, 120, 240, 120, 20, 1],
    ]
    for n, row in enumerate(rows):
        assert [lah(n, k) for k in range(n + 1)] == row


def test_lah_edges():
    assert lah(0, 0) == 1
    assert lah(4, 0) == 0
    assert lah(3, 5) == 0
    with pytest.raises(ValueError):
        lah(-1, 0)
    with pytest.raises(ValueError):
        lah(3, -2)


def test_rlah_matches_marked_block_oracle():
    for n in range(5):
        for r in range(3):
            for k in range(n + 2):
                assert rlah(n, k, r) == brute_rlah(n, k, r), (n, k, r)


def test_rlah_reduces_to_lah_at_r_zero():
    for n in range(10):
        for k in range(n + 1):
            assert rlah(n, k, 0) == lah(n, k)


def test_rlah_rejects_negative_arguments():
    with pytest.raises(ValueError):
        rlah(2, 1, -1)


def test_lah_bell_number_is_row_total():
    for n in range(15):
        assert lah_bell_number(n) == sum(lah(n, k) for k in range(n + 1))


def test_lah_bell_sequence():
    values = [lah_bell_number(n) for n in range(7)]
    assert values == [1, 1, 3, 13, 73, 501, 4051]


def test_r_lah_bell_number_is_row_total():
    for n in range(12):
        for r in range(4):
            assert r_lah_bell_number(n, r) == sum(rlah(n, k, r) for k in range(n + 1))
    assert r_lah_bell_number(2, 1) == 13


@given(st.integers(min_value=0, max_value=40), st.integers(min_value=1, max_value=40))
def test_lah_row_recurrence(n, k):
    assert lah(n + 1, k) == lah(n, k - 1) + (n + k) * lah(n, k)


@given(
    st.integers(min_value=0, max_value=30),
    st.integers(min_value=1, max_value=30),
    st.integers(min_value=0, max_value=4),
)
def test_rlah_row_recurrence(n, k, r):
    assert rlah(n + 1, k, r) == rlah(n, k - 1, r) + (n + k + 2 * r) * rlah(n, k, r)
