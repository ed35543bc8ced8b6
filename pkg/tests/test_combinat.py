from fractions import Fraction as Fr
from itertools import permutations
from math import factorial

import pytest

from umbralkit import (
    Series,
    bernoulli_number,
    binomial,
    falling_factorial,
    series_int_pow,
    stirling1_unsigned,
    stirling2,
    stirling_table,
)


def set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def cycle_count(perm):
    seen, cycles = set(), 0
    for start in range(len(perm)):
        if start in seen:
            continue
        cycles += 1
        j = start
        while j not in seen:
            seen.add(j)
            j = perm[j]
    return cycles


def brute_s2(n, m):
    return sum(1 for p in set_partitions(list(range(n))) if len(p) == m)


def brute_c1(n, m):
    return sum(1 for p in permutations(range(n)) if cycle_count(p) == m)


def test_binomial_and_falling_factorial():
    assert binomial(4, 2) == 6
    assert binomial(7, 0) == 1
    assert binomial(3, 5) == 0
    assert binomial(3, -1) == 0
    assert falling_factorial(5, 2) == 20
    assert falling_factorial(9, 0) == 1
    assert falling_factorial(3, 5) == 0


def test_small_examples():
    assert stirling2(4, 2) == 7
    assert stirling1_unsigned(3, 2) == 3
    assert all(stirling2(n, n) == 1 for n in range(10))


@pytest.mark.parametrize("n", range(0, 9))
def test_stirling_against_enumeration(n):
    s2 = stirling_table("second", 8)
    c1 = stirling_table("first-unsigned", 8)
    signed = stirling_table("first-signed", 8)
    for m in range(n + 1):
        assert s2[n, m] == brute_s2(n, m)
        if n <= 7:
            assert c1[n, m] == brute_c1(n, m)
        assert abs(signed[n, m]) == c1[n, m]
        assert signed[n, m] * (-1) ** (n - m) >= 0


def test_table_shape_and_bounds():
    table = stirling_table("second", 5)
    assert table.max_n == 5
    assert table[3, 4] == 0
    assert table[0, 0] == 1
    with pytest.raises(IndexError):
        table[6, 1]
    with pytest.raises(ValueError):
        stirling_table("third", 3)


def test_stirling2_egf():
    N = 10
    em1 = Series.exp(N) - 1
    for m in range(6):
        f = series_int_pow(em1, m) / factorial(m)
        for n in range(N):
            assert f.egf_coefficient(n) == stirling2(n, m)


def test_bernoulli_numbers():
    assert [bernoulli_number(n) for n in range(7)] == [
        1, Fr(-1, 2), Fr(1, 6), 0, Fr(-1, 30), 0, Fr(1, 42)
    ]
