"""Brute-force ground truth for the generators in :mod:`lucasnum.sequences`.

Nothing here calls into the generators: tilings, permutations, set
partitions and lattice paths are listed one by one and counted.
"""
from __future__ import annotations

from collections import Counter
from itertools import permutations
from typing import Iterator

from .polyring import ONE, Poly

MONOMINO, DOMINO = 1, 2


class ClassicalValue(int):
    """A nonnegative integer tagged with how it was obtained."""

    source: str

    def __new__(cls, value: int, source: str):
        if value < 0:
            raise ValueError("classical values are nonnegative")
        obj = super().__new__(cls, value)
        obj.source = source
        return obj

    def __repr__(self) -> str:
        return f"ClassicalValue({int(self)}, {self.source!r})"


def tilings(n: int) -> Iterator[tuple[int, ...]]:
    """All monomino/domino tilings of a 1 x n row, as tuples of piece lengths."""
    if n < 0:
        raise ValueError("row length must be >= 0")
    if n == 0:
        yield ()
        return
    for rest in tilings(n - 1):
        yield (MONOMINO,) + rest
    if n >= 2:
        for rest in tilings(n - 2):
            yield (DOMINO,) + rest


def tiling_weight(tiling: tuple[int, ...]) -> Poly:
    return Poly.monomial(tiling.count(MONOMINO), tiling.count(DOMINO))


def tiling_weight_sum(n: int) -> tuple[Poly, int]:
    """Sum of ``s^(#monominoes) t^(#dominoes)`` over all tilings of a 1 x n row, and their count."""
    weights: Counter = Counter()
    count = 0
    for tl in tilings(n):
        assert sum(tl) == n
        weights[(tl.count(MONOMINO), tl.count(DOMINO))] += 1
        count += 1
    return Poly(dict(weights)), count


def staircase_weight(n: int) -> Poly:
    """Weight of all tilings of the staircase with rows n-1, n-2, ..., 1."""
    if n < 0:
        raise ValueError("n must be >= 0")
    total = ONE
    for length in range(n - 1, 0, -1):
        total = total * tiling_weight_sum(length)[0]
    return total


def fibonacci(n: int) -> ClassicalValue:
    if n < 0:
        raise ValueError("n must be >= 0")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return ClassicalValue(a, "fibonacci")


def descents(perm) -> int:
    return sum(1 for x, y in zip(perm, perm[1:]) if x > y)


def classical_eulerian(n: int, k: int) -> ClassicalValue:
    """Permutations of ``{1..n+1}`` with exactly ``k`` descents.

    The row index is shifted by one so that row ``n`` has ``n + 1`` entries.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    count = sum(1 for p in permutations(range(n + 1)) if descents(p) == k)
    return ClassicalValue(count, "descents")


def set_partitions(n: int) -> Iterator[list[int]]:
    """Restricted growth strings of length n (block label of each element)."""
    if n == 0:
        yield []
        return

    def grow(prefix: list[int], top: int):
        if len(prefix) == n:
            yield list(prefix)
            return
        for b in range(top + 2):
            prefix.append(b)
            yield from grow(prefix, max(top, b))
            prefix.pop()

    yield from grow([0], 0)


def classical_stirling2(n: int, k: int) -> ClassicalValue:
    """Partitions of ``{1..n}`` into exactly ``k`` nonempty blocks."""
    if n < 0:
        raise ValueError("n must be >= 0")
    count = sum(1 for rgs in set_partitions(n) if (max(rgs) + 1 if rgs else 0) == k)
    return ClassicalValue(count, "partitions")


def motzkin_paths(n: int) -> Iterator[str]:
    """Words over U/F/D of length n that never dip below zero and end at zero."""
    if n < 0:
        raise ValueError("n must be >= 0")

    def walk(prefix: list[str], height: int):
        left = n - len(prefix)
        if left == 0:
            if height == 0:
                yield "".join(prefix)
            return
        for step, dh in (("U", 1), ("F", 0), ("D", -1)):
            h = height + dh
            if 0 <= h <= left - 1:
                prefix.append(step)
                yield from walk(prefix, h)
                prefix.pop()

    yield from walk([], 0)


def classical_motzkin(n: int) -> ClassicalValue:
    return ClassicalValue(sum(1 for _ in motzkin_paths(n)), "paths")


def classical_binomial(n: int, k: int) -> ClassicalValue:
    """Number of k-element subsets of an n-set, by counting bitmasks."""
    if k < 0 or k > n:
        return ClassicalValue(0, "binomial")
    return ClassicalValue(sum(1 for m in range(1 << n) if bin(m).count("1") == k), "binomial")
