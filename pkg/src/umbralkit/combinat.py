"""Integer combinatorics: binomials, falling factorials, Stirling triangles.

Everything here is computed by integer recurrences and cached; none of it
goes through the series kernel, which lets the audits use these numbers as
independent data.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

STIRLING_KINDS = ("first-signed", "first-unsigned", "second")


def binomial(n: int, k: int) -> Fraction:
    """``C(n, k)``, zero outside ``0 <= k <= n``."""
    if n < 0:
        raise ValueError("binomial: n must be >= 0")
    if k < 0 or k > n:
        return Fraction(0)
    return Fraction(comb(n, k))


def falling_factorial(n: int, m: int) -> Fraction:
    """``(n)_m = n (n-1) ... (n-m+1)``; 1 for m = 0 and 0 for m > n >= 0."""
    if m < 0:
        raise ValueError("falling_factorial: m must be >= 0")
    out = 1
    for i in range(m):
        out *= n - i
    return Fraction(out)


@lru_cache(maxsize=None)
def _stirling2_rows(max_n: int) -> tuple[tuple[int, ...], ...]:
    rows = [(1,)]
    for n in range(1, max_n + 1):
        prev = rows[-1]
        row = [0] * (n + 1)
        for m in range(1, n + 1):
            left = prev[m - 1]
            up = prev[m] if m < n else 0
            row[m] = left + m * up
        rows.append(tuple(row))
    return tuple(rows)


@lru_cache(maxsize=None)
def _stirling1u_rows(max_n: int) -> tuple[tuple[int, ...], ...]:
    rows = [(1,)]
    for n in range(1, max_n + 1):
        prev = rows[-1]
        row = [0] * (n + 1)
        for m in range(1, n + 1):
            left = prev[m - 1]
            up = prev[m] if m < n else 0
            row[m] = left + (n - 1) * up
        rows.append(tuple(row))
    return tuple(rows)


@dataclass(frozen=True)
class StirlingTable:
    """Triangular table of Stirling numbers, indexed ``table[n, m]``.

    Entries outside ``0 <= m <= n <= max_n`` read as zero for ``m > n``
    and raise ``IndexError`` past ``max_n``.
    """

    kind: str
    values: tuple[tuple[Fraction, ...], ...]

    @property
    def max_n(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        n, m = key
        if n < 0 or n > self.max_n:
            raise IndexError(f"row {n} outside table (max_n={self.max_n})")
        if m < 0 or m > n:
            return Fraction(0)
        return self.values[n][m]

    def row(self, n: int) -> tuple[Fraction, ...]:
        return self.values[n]


def stirling_table(kind: str, max_n: int) -> StirlingTable:
    if kind not in STIRLING_KINDS:
        raise ValueError(f"unknown Stirling kind {kind!r}; choose from {STIRLING_KINDS}")
    if max_n < 0:
        raise ValueError("max_n must be >= 0")
    if kind == "second":
        raw = _stirling2_rows(max_n)
        values = tuple(tuple(Fraction(v) for v in row) for row in raw)
    else:
        raw = _stirling1u_rows(max_n)
        signed = kind == "first-signed"
        values = tuple(
            tuple(Fraction(-v if signed and (n - m) % 2 else v) for m, v in enumerate(row))
            for n, row in enumerate(raw)
        )
    return StirlingTable(kind, values)


def stirling2(n: int, m: int) -> Fraction:
    """``S_2(n, m)``; zero when ``m > n`` or ``m < 0``."""
    if m < 0 or m > n:
        return Fraction(0)
    return Fraction(_stirling2_rows(n)[n][m])


def stirling1_unsigned(n: int, m: int) -> Fraction:
    """``[n; m] = |S_1(n, m)|``, the number of permutations of n with m cycles."""
    if m < 0 or m > n:
        return Fraction(0)
    return Fraction(_stirling1u_rows(n)[n][m])


@lru_cache(maxsize=None)
def _bernoulli_list(n: int) -> tuple[Fraction, ...]:
    bs = [Fraction(1)]
    for m in range(1, n + 1):
        acc = sum(comb(m + 1, j) * bs[j] for j in range(m))
        bs.append(-acc / (m + 1))
    return tuple(bs)


def bernoulli_number(n: int) -> Fraction:
    """Ordinary Bernoulli number with ``B_1 = -1/2`` (EGF ``t/(e^t - 1)``).

    Uses the recurrence ``sum_{j<=m} C(m+1, j) B_j = 0``.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    return _bernoulli_list(n)[n]
