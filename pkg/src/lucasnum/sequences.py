"""Lucas analogues of the classical combinatorial triangles.

Every generator is a pure function of its indices, memoized with
``functools.lru_cache``.  Values are :class:`~lucasnum.polyring.Poly` except
where a formula genuinely leaves the polynomial ring (negative Lucas indices,
``eulerian_dblprime`` and ``motzkin_rec``), which return
:class:`~lucasnum.polyring.RationalFunction`.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Union

from .polyring import (
    ONE, S, T, ZERO, AuxPoly, NotDivisible, Poly, RationalFunction, div_exact,
)

Value = Union[Poly, RationalFunction]


class InternalInconsistency(RuntimeError):
    """A result that the mathematics guarantees failed to materialize."""


def _exact(a: Poly, b: Poly, what: str) -> Poly:
    try:
        return div_exact(a, b)
    except NotDivisible as exc:
        raise InternalInconsistency(f"{what}: quotient is not a polynomial") from exc


# -- Lucas numbers ----------------------------------------------------------

@lru_cache(maxsize=None)
def _lucas_poly(n: int) -> Poly:
    a, b = ZERO, ONE
    for _ in range(n):
        a, b = b, S * b + T * a
    return a


@lru_cache(maxsize=None)
def _lucas_neg(n: int) -> RationalFunction:
    # {n-2} = ({n} - s{n-1}) / t, walking down from {1}, {0}
    hi, lo = RationalFunction(ONE), RationalFunction(ZERO)
    for _ in range(-n):
        hi, lo = lo, (hi - S * lo) / T
    return lo


def lucas(n: int) -> Value:
    """Generalized Lucas number ``{n}``.

    ``{0}=0``, ``{1}=1``, ``{n}=s{n-1}+t{n-2}``.  For ``n >= 0`` this is a
    ``Poly``; negative ``n`` runs the recurrence backwards and gives a
    ``RationalFunction`` (``{-1} = 1/t``).
    """
    if n >= 0:
        return _lucas_poly(n)
    return _lucas_neg(n)


def lucas_rf(n: int) -> RationalFunction:
    v = lucas(n)
    return v if isinstance(v, RationalFunction) else RationalFunction(v)


@lru_cache(maxsize=None)
def lucastorial(n: int) -> Poly:
    """``{n}! = {n}{n-1}...{1}`` with ``{0}! = 1``."""
    if n < 0:
        raise ValueError("lucastorial needs n >= 0")
    if n == 0:
        return ONE
    return lucas(n) * lucastorial(n - 1)


# -- Lucasnomials -----------------------------------------------------------

@lru_cache(maxsize=None)
def lucasnomial_closed(n: int, k: int) -> Poly:
    if k < 0 or k > n:
        return ZERO
    if k == 0 or k == n:
        return ONE
    return _exact(
        lucastorial(n), lucastorial(k) * lucastorial(n - k), f"lucasnomial({n},{k})"
    )


@lru_cache(maxsize=None)
def lucasnomial_rec(n: int, k: int) -> Poly:
    """``B{n,k} = {k+1} B{n-1,k} + t {n-k-1} B{n-1,k-1}``."""
    if k < 0 or k > n:
        return ZERO
    if k == 0 or k == n:
        return ONE
    return lucas(k + 1) * lucasnomial_rec(n - 1, k) + T * lucas(n - k - 1) * lucasnomial_rec(n - 1, k - 1)


lucasnomial = lucasnomial_closed


@lru_cache(maxsize=None)
def catalan(k: int) -> Poly:
    if k < 0:
        raise ValueError("catalan needs k >= 0")
    return _exact(lucasnomial(2 * k, k), lucas(k + 1), f"catalan({k})")


# -- Narayana ---------------------------------------------------------------

def _narayana_boundary(n: int, k: int) -> Poly | None:
    if n == 0 and k == 0:
        return ONE
    if k <= 0 or k > n:
        return ZERO
    if k == 1 or k == n:
        return ONE
    return None


@lru_cache(maxsize=None)
def narayana_closed(n: int, k: int) -> Poly:
    if n == 0 and k == 0:
        return ONE  # 1/{0} is undefined
    if k < 1 or k > n:
        return ZERO
    return _exact(
        lucasnomial(n, k) * lucasnomial(n, k - 1), lucas(n), f"narayana({n},{k})"
    )


@lru_cache(maxsize=None)
def narayana_gk(n: int, k: int) -> Poly:
    """Sum-of-Lucasnomial-products form, valid on ``2 <= k <= n-1``."""
    b = _narayana_boundary(n, k)
    if b is not None:
        return b
    return lucasnomial(n - 1, k - 1) ** 2 + T * lucasnomial(n - 1, k) * lucasnomial(n - 1, k - 2)


@lru_cache(maxsize=None)
def narayana_rec(n: int, k: int) -> Poly:
    """Recursion with rational step coefficients.

    Each cell is computed in rational arithmetic and must collapse back to a
    polynomial; if it does not, ``InternalInconsistency`` is raised.
    """
    b = _narayana_boundary(n, k)
    if b is not None:
        return b
    n1 = lucas(n - 1)
    value = (
        RationalFunction(lucas(k) * n1, lucas(n - k)) * narayana_rec(n - 1, k)
        + RationalFunction(T * lucas(n - k) * n1, lucas(k)) * narayana_rec(n - 1, k - 1)
    )
    if not value.is_polynomial():
        raise InternalInconsistency(f"narayana_rec({n},{k}) = {value} is not a polynomial")
    return value.num


# -- Eulerian ---------------------------------------------------------------

@lru_cache(maxsize=None)
def eulerian(n: int, k: int) -> Poly:
    """``E{n,k} = {k+1} E{n-1,k} + {n-k+1} E{n-1,k-1}``, ``E{n,0}=E{n,n}=1``."""
    if k < 0 or k > n:
        return ZERO
    if k == 0 or k == n:
        return ONE
    return lucas(k + 1) * eulerian(n - 1, k) + lucas(n - k + 1) * eulerian(n - 1, k - 1)


def eulerian_first_column(n: int) -> Poly:
    """``sum_{j=0}^{n} {n-j} {2}^j``; equals ``eulerian(n, 1)``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    two = lucas(2)
    return sum((lucas(n - j) * two**j for j in range(n + 1)), ZERO)


def a_n1_poly(n: int) -> AuxPoly:
    """``{n} + {n-1} x + ... + {1} x^(n-1) + {0} x^n``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return AuxPoly(lucas(n - j) for j in range(n + 1))


def _alternating_sum(n: int, k: int, sign: Value) -> Value:
    # Eulerian alternating-sum template with -1 replaced by `sign`; the
    # usual conventions E{n,n}=1 and E{n,k}=0 for k>n apply outside 0<=k<n.
    if k < 0 or k > n:
        return ZERO
    if k == n:
        return ONE
    total: Value = ZERO
    for j in range(k + 2):
        total = total + sign ** (k + 1 - j) * lucasnomial(n + 2, k + 1 - j) * lucas(j) ** (n + 1)
    return total


@lru_cache(maxsize=None)
def eulerian_prime(n: int, k: int) -> Poly:
    """Alternating-sum formula with ``-1`` replaced by ``t``."""
    return _alternating_sum(n, k, T)


@lru_cache(maxsize=None)
def eulerian_dblprime(n: int, k: int) -> RationalFunction:
    """Alternating-sum formula with ``-1`` replaced by ``{-1} = 1/t``."""
    v = _alternating_sum(n, k, lucas(-1))
    return v if isinstance(v, RationalFunction) else RationalFunction(v)


# -- Stirling, Motzkin ------------------------------------------------------

@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> Poly:
    """``St2{n,k} = {k} St2{n-1,k} + St2{n-1,k-1}``.

    Initial conditions: ``St2{0,0}=1``, ``1`` when ``k == n`` or ``k == 1``,
    ``0`` for ``k = 0 < n`` and ``n < k``.
    """
    if n == 0 and k == 0:
        return ONE
    if k <= 0 or k > n:
        return ZERO
    if k == 1 or k == n:
        return ONE
    return lucas(k) * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


@lru_cache(maxsize=None)
def motzkin_rec(n: int) -> RationalFunction:
    """``M{n} = ({2n+1} M{n-1} + {3n-3} M{n-2}) / {n+2}``, ``M{0}=M{1}=1``.

    Generally not a polynomial.
    """
    if n < 0:
        raise ValueError("motzkin_rec needs n >= 0")
    if n <= 1:
        return RationalFunction(ONE)
    d = lucas(n + 2)
    return (
        RationalFunction(lucas(2 * n + 1), d) * motzkin_rec(n - 1)
        + RationalFunction(lucas(3 * n - 3), d) * motzkin_rec(n - 2)
    )


@lru_cache(maxsize=None)
def motzkin_sum(n: int) -> Poly:
    """``sum_k B{n,2k} C{k}``; polynomial with nonnegative coefficients."""
    if n < 0:
        raise ValueError("motzkin_sum needs n >= 0")
    return sum((lucasnomial(n, 2 * k) * catalan(k) for k in range(n // 2 + 1)), ZERO)


# -- registry / tables ------------------------------------------------------

class SequenceId(str, enum.Enum):
    lucas = "lucas"
    lucastorial = "lucastorial"
    lucasnomial_closed = "lucasnomial_closed"
    lucasnomial_rec = "lucasnomial_rec"
    catalan = "catalan"
    narayana_closed = "narayana_closed"
    narayana_gk = "narayana_gk"
    narayana_rec = "narayana_rec"
    eulerian = "eulerian"
    eulerian_prime = "eulerian_prime"
    eulerian_dblprime = "eulerian_dblprime"
    stirling2 = "stirling2"
    motzkin_rec = "motzkin_rec"
    motzkin_sum = "motzkin_sum"

    def __str__(self) -> str:
        return self.value


class UnknownSequence(KeyError):
    pass


@dataclass(frozen=True)
class SequenceInfo:
    id: SequenceId
    generator: Callable[..., Value]
    arity: int
    formula: str
    min_n: int | None = 0


SEQUENCES: dict[SequenceId, SequenceInfo] = {
    info.id: info
    for info in [
        SequenceInfo(SequenceId.lucas, lucas, 1, "{0}=0, {1}=1, {n}=s{n-1}+t{n-2}", None),
        SequenceInfo(SequenceId.lucastorial, lucastorial, 1, "{n}! = {n}{n-1}...{1}"),
        SequenceInfo(SequenceId.lucasnomial_closed, lucasnomial_closed, 2, "{n}!/({k}!{n-k}!)"),
        SequenceInfo(SequenceId.lucasnomial_rec, lucasnomial_rec, 2,
                     "B{n,k} = {k+1}B{n-1,k} + t{n-k-1}B{n-1,k-1}"),
        SequenceInfo(SequenceId.catalan, catalan, 1, "C{k} = B{2k,k}/{k+1}"),
        SequenceInfo(SequenceId.narayana_closed, narayana_closed, 2, "N{n,k} = B{n,k}B{n,k-1}/{n}"),
        SequenceInfo(SequenceId.narayana_gk, narayana_gk, 2,
                     "N{n,k} = B{n-1,k-1}^2 + t B{n-1,k}B{n-1,k-2}"),
        SequenceInfo(SequenceId.narayana_rec, narayana_rec, 2,
                     "N{n,k} = {k}{n-1}/{n-k} N{n-1,k} + t{n-k}{n-1}/{k} N{n-1,k-1}"),
        SequenceInfo(SequenceId.eulerian, eulerian, 2, "E{n,k} = {k+1}E{n-1,k} + {n-k+1}E{n-1,k-1}"),
        SequenceInfo(SequenceId.eulerian_prime, eulerian_prime, 2,
                     "E'{n,k} = sum_j t^(k+1-j) B{n+2,k+1-j} {j}^(n+1)"),
        SequenceInfo(SequenceId.eulerian_dblprime, eulerian_dblprime, 2,
                     "E''{n,k} = sum_j (1/t)^(k+1-j) B{n+2,k+1-j} {j}^(n+1)"),
        SequenceInfo(SequenceId.stirling2, stirling2, 2, "St2{n,k} = {k}St2{n-1,k} + St2{n-1,k-1}"),
        SequenceInfo(SequenceId.motzkin_rec, motzkin_rec, 1,
                     "M{n} = {2n+1}/{n+2} M{n-1} + {3n-3}/{n+2} M{n-2}"),
        SequenceInfo(SequenceId.motzkin_sum, motzkin_sum, 1, "M{n} = sum_k B{n,2k} C{k}"),
    ]
}


def sequence_info(seq: SequenceId | str) -> SequenceInfo:
    try:
        return SEQUENCES[SequenceId(seq)]
    except ValueError:
        raise UnknownSequence(seq) from None


def value(seq: SequenceId | str, n: int, k: int | None = None) -> Value:
    """Look up one value by sequence id; ``k`` is required exactly for two-index sequences."""
    info = sequence_info(seq)
    if info.arity == 2:
        if k is None:
            raise ValueError(f"{info.id} takes two indices (n, k)")
        return info.generator(n, k)
    if k is not None:
        raise ValueError(f"{info.id} takes a single index n")
    if info.min_n is not None and n < info.min_n:
        raise ValueError(f"{info.id} needs n >= {info.min_n}")
    return info.generator(n)


@dataclass
class TriangleTable:
    """Cells ``(n, k) -> value`` for ``0 <= k <= n <= rows``.

    Single-index sequences are stored in column ``k = 0``.
    """

    name: SequenceId
    rows: int
    generator: Callable[..., Value]
    arity: int
    cells: dict[tuple[int, int], Value] = field(default_factory=dict)

    def __getitem__(self, nk: tuple[int, int]) -> Value:
        return self.cells[nk]

    def row(self, n: int) -> list[Value]:
        width = n + 1 if self.arity == 2 else 1
        return [self.cells[(n, k)] for k in range(width)]

    def regenerate(self, n: int, k: int = 0) -> Value:
        fn = getattr(self.generator, "__wrapped__", self.generator)
        return fn(n, k) if self.arity == 2 else fn(n)


def triangle(seq: SequenceId | str, rows: int) -> TriangleTable:
    if rows < 0:
        raise ValueError("rows must be >= 0")
    info = sequence_info(seq)
    table = TriangleTable(info.id, rows, info.generator, info.arity)
    for n in range(rows + 1):
        if info.arity == 2:
            for k in range(n + 1):
                table.cells[(n, k)] = info.generator(n, k)
        else:
            table.cells[(n, 0)] = info.generator(n)
    return table


def clear_caches() -> None:
    for info in SEQUENCES.values():
        getattr(info.generator, "cache_clear", lambda: None)()
    for fn in (_lucas_poly, _lucas_neg):
        fn.cache_clear()
