"""Partition combinatorics and scalar kernels.

Partitions are weakly decreasing tuples of nonnegative integers, always
stored in canonical form (trailing zeros stripped), so ``(2, 0)`` and
``(2,)`` are the same key everywhere in the package.  All scalar
arithmetic is exact, over ``fractions.Fraction``.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Iterable, Iterator, Sequence

Partition = tuple[int, ...]

EMPTY: Partition = ()


def canonical(parts: Iterable[int]) -> Partition:
    """Canonical form: tuple with trailing zeros stripped; validates shape."""
    t = tuple(int(p) for p in parts)
    if any(p < 0 for p in t):
        raise ValueError(f"negative part in partition {t}")
    if any(t[i] < t[i + 1] for i in range(len(t) - 1)):
        raise ValueError(f"parts not weakly decreasing: {t}")
    while t and t[-1] == 0:
        t = t[:-1]
    return t


def pad(m: Partition, length: int) -> tuple[int, ...]:
    """Zero-pad to the given length (must not truncate nonzero parts)."""
    if len(m) > length:
        raise ValueError(f"partition {m} has more than {length} parts")
    return m + (0,) * (length - len(m))


def weight(m: Partition) -> int:
    return sum(m)


def conjugate(m: Partition) -> Partition:
    """Transpose of the Young diagram: m'_j = #{i : m_i >= j}."""
    m = canonical(m)
    if not m:
        return EMPTY
    return tuple(sum(1 for p in m if p >= j) for j in range(1, m[0] + 1))


def dominance_less(k: Partition, m: Partition) -> bool:
    """Strict dominance order: k != m and every prefix sum of k is <= that of m.

    Only defined within a fixed weight; unequal weights signal misuse by the
    caller and raise.
    """
    k, m = canonical(k), canonical(m)
    if weight(k) != weight(m):
        raise ValueError(f"dominance compares equal weights only: {k} vs {m}")
    if k == m:
        return False
    n = max(len(k), len(m))
    kp, mp = pad(k, n), pad(m, n)
    acc_k = acc_m = 0
    for i in range(n):
        acc_k += kp[i]
        acc_m += mp[i]
        if acc_k > acc_m:
            return False
    return True


def contains(m: Partition, k: Partition) -> bool:
    """Diagram containment: k_i <= m_i for all i after zero padding."""
    k, m = canonical(k), canonical(m)
    if len(k) > len(m):
        return False
    return all(k[i] <= m[i] for i in range(len(k)))


def cells(m: Partition) -> Iterator[tuple[int, int]]:
    """Cells (i, j) of the Young diagram, 1-based, row by row."""
    for i, p in enumerate(canonical(m), start=1):
        for j in range(1, p + 1):
            yield (i, j)


def enumerate_partitions(r: int, max_weight: int) -> list[Partition]:
    """All partitions with at most r parts and weight <= max_weight.

    Ordered by weight ascending, then lexicographically descending within a
    weight.  This is the canonical term order for every serialized object.
    """
    if r < 1:
        raise ValueError("need r >= 1")
    if max_weight < 0:
        raise ValueError("need max_weight >= 0")
    out: list[Partition] = []
    for n in range(max_weight + 1):
        out.extend(partitions_of(n, r))
    return out


def partitions_of(n: int, r: int) -> list[Partition]:
    """Partitions of n into at most r parts, lexicographically descending."""

    def rec(remaining: int, cap: int, slots: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in rec(remaining - first, first, slots - 1):
                yield (first,) + rest

    return [canonical(t) for t in rec(n, n, r)]


def subpartitions(m: Partition) -> list[Partition]:
    """All partitions contained in the diagram of m, weight ascending."""
    m = canonical(m)
    found = [
        canonical(t)
        for t in product(*(range(p + 1) for p in m))
        if all(t[i] >= t[i + 1] for i in range(len(t) - 1))
    ]
    found = sorted(set(found), key=lambda k: (weight(k), tuple(-p for p in k)))
    return found


def rising_factorial(a: Fraction, k: int) -> Fraction:
    """(a)_k = a (a+1) ... (a+k-1), with (a)_0 = 1."""
    out = Fraction(1)
    for i in range(k):
        out *= a + i
    return out


def falling_factorial(a: Fraction, k: int) -> Fraction:
    """a (a-1) ... (a-k+1), with empty product 1."""
    out = Fraction(1)
    for i in range(k):
        out *= a - i
    return out


def gen_pochhammer(a: Fraction, m: Partition, d: Fraction) -> Fraction:
    """Partition Pochhammer symbol: prod_j (a - (d/2)(j-1))_{m_j}."""
    a, d = Fraction(a), Fraction(d)
    out = Fraction(1)
    for j, mj in enumerate(canonical(m), start=1):
        out *= rising_factorial(a - d / 2 * (j - 1), mj)
    return out


def staircase(r: int) -> tuple[int, ...]:
    """(r-1, r-2, ..., 1, 0)."""
    return tuple(range(r - 1, -1, -1))


def shifted_point(m: Partition, r: int, d: Fraction) -> tuple[Fraction, ...]:
    """The interpolation node attached to m: m + (d/2) * staircase, length r."""
    d = Fraction(d)
    mp = pad(canonical(m), r)
    return tuple(Fraction(mp[i]) + d / 2 * (r - 1 - i) for i in range(r))


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or "p" into an exact Fraction."""
    return Fraction(text.strip())


def format_rational(x: Fraction) -> str:
    """Serialize a Fraction as "p/q", or "p" when the denominator is 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"
