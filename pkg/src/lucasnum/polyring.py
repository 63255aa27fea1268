"""Exact arithmetic in Z[s, t] and a thin rational-function layer on top.

Polynomials are sparse maps ``(s_exp, t_exp) -> int``.  Rational functions
are kept as (numerator, denominator) pairs with only cheap normalization:
integer content, a common monomial factor, sign, and collapse when one side
divides the other exactly.  Equality of rational functions is decided by
cross-multiplication, so no multivariate GCD is ever needed.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Tuple

Monomial = Tuple[int, int]


class NotDivisible(ArithmeticError):
    """Raised by :func:`div_exact` when the quotient is not a polynomial."""


def _order_key(mono: Monomial) -> Tuple[int, int]:
    # display order: s exponent descending, then t exponent ascending
    return (-mono[0], mono[1])


class Poly:
    """Immutable sparse polynomial in ``s`` and ``t`` with integer coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        clean: dict[Monomial, int] = {}
        for mono, coeff in (terms or {}).items():
            i, j = mono
            if not (isinstance(i, int) and isinstance(j, int)) or i < 0 or j < 0:
                raise ValueError(f"bad monomial exponents {mono!r}")
            if not isinstance(coeff, int):
                raise TypeError(f"coefficient must be int, got {type(coeff).__name__}")
            if coeff:
                clean[(i, j)] = clean.get((i, j), 0) + coeff
                if not clean[(i, j)]:
                    del clean[(i, j)]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "Poly":
        # caller guarantees no zero coefficients
        p = object.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c: int) -> "Poly":
        return cls._raw({(0, 0): c} if c else {})

    @classmethod
    def monomial(cls, s_exp: int = 0, t_exp: int = 0, coeff: int = 1) -> "Poly":
        return cls({(s_exp, t_exp): coeff})

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> dict[Monomial, int]:
        return dict(self._terms)

    def items(self) -> list[tuple[Monomial, int]]:
        """Terms in canonical display order."""
        return sorted(self._terms.items(), key=lambda kv: _order_key(kv[0]))

    def __iter__(self) -> Iterator[tuple[Monomial, int]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {(0, 0)}

    def leading_term(self) -> tuple[Monomial, int]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        mono = min(self._terms, key=_order_key)
        return mono, self._terms[mono]

    def degree_s(self) -> int:
        return max((i for i, _ in self._terms), default=-1)

    def degree_t(self) -> int:
        return max((j for _, j in self._terms), default=-1)

    def content(self) -> int:
        return math.gcd(*self._terms.values()) if self._terms else 0

    def coefficients(self) -> list[int]:
        return [c for _, c in self.items()]

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "Poly | None":
        if isinstance(other, Poly):
            return other
        if isinstance(other, int):
            return Poly.const(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for mono, c in o._terms.items():
            v = out.get(mono, 0) + c
            if v:
                out[mono] = v
            else:
                out.pop(mono, None)
        return Poly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict[Monomial, int] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in o._terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + c1 * c2
        return Poly._raw({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly":
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative int")
        result, base = ONE, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, (Poly, int)):
            return RationalFunction(self, other)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, int):
            return RationalFunction(Poly.const(other), self)
        return NotImplemented

    def scale_down(self, d: int) -> "Poly":
        """Divide every coefficient by ``d``; ``d`` must divide the content."""
        return Poly._raw({m: c // d for m, c in self._terms.items()})

    def shift_down(self, ds: int, dt: int) -> "Poly":
        return Poly._raw({(i - ds, j - dt): c for (i, j), c in self._terms.items()})

    # -- evaluation / comparison --------------------------------------------

    def eval_int(self, s0, t0):
        """Value at ``(s0, t0)``; exact for ints and Fractions."""
        total = 0
        for (i, j), c in self._terms.items():
            total += c * s0**i * t0**j
        return total

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == Poly.const(other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __str__(self) -> str:
        return canonical_string(self)

    def __repr__(self) -> str:
        return f"Poly('{canonical_string(self)}')"


ZERO = Poly()
ONE = Poly.const(1)
S = Poly.monomial(1, 0)
T = Poly.monomial(0, 1)


def _as_poly(x) -> Poly:
    if isinstance(x, Poly):
        return x
    if isinstance(x, int):
        return Poly.const(x)
    raise TypeError(f"expected Poly or int, got {type(x).__name__}")


def add(a: Poly, b: Poly) -> Poly:
    return _as_poly(a) + _as_poly(b)


def mul(a: Poly, b: Poly) -> Poly:
    return _as_poly(a) * _as_poly(b)


def div_exact(a: Poly, b: Poly) -> Poly:
    """Return ``q`` with ``q * b == a`` or raise :class:`NotDivisible`.

    Leading terms are cancelled in display order.  That order is not a
    well-order in ``t``, so quotient terms are also bounded by the t-degree
    gap between ``a`` and ``b``; an exact quotient can never exceed it.
    """
    a, b = _as_poly(a), _as_poly(b)
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero():
        return ZERO
    (bs, bt), bc = b.leading_term()
    max_t = a.degree_t() - b.degree_t()
    max_s = a.degree_s() - b.degree_s()
    rem = dict(a._terms)
    quot: dict[Monomial, int] = {}
    while rem:
        (rs, rt), rc = min(rem.items(), key=lambda kv: _order_key(kv[0]))
        qs, qt = rs - bs, rt - bt
        if qs < 0 or qt < 0 or qs > max_s or qt > max_t or rc % bc:
            raise NotDivisible(f"{a} is not divisible by {b}")
        qc = rc // bc
        quot[(qs, qt)] = qc
        for (i, j), c in b._terms.items():
            key = (i + qs, j + qt)
            v = rem.get(key, 0) - qc * c
            if v:
                rem[key] = v
            else:
                rem.pop(key, None)
    return Poly._raw(quot)


def eval_int(p: Poly, s0: int, t0: int) -> int:
    return _as_poly(p).eval_int(s0, t0)


def _term_string(mono: Monomial, coeff: int, first: bool) -> str:
    i, j = mono
    var = ""
    if i:
        var += "s" if i == 1 else f"s^{i}"
    if j:
        var += "t" if j == 1 else f"t^{j}"
    mag = abs(coeff)
    body = var if (var and mag == 1) else f"{mag}{var}"
    if coeff < 0:
        return "-" + body
    return body if first else "+" + body


def canonical_string(p: Poly) -> str:
    """Render ``p`` like ``s^4+3s^2t+t^2``; the zero polynomial is ``0``."""
    p = _as_poly(p)
    if p.is_zero():
        return "0"
    return "".join(_term_string(m, c, idx == 0) for idx, (m, c) in enumerate(p.items()))


_TERM = re.compile(r"([+-])?(\d+)?(?:(s)(?:\^(\d+))?)?(?:(t)(?:\^(\d+))?)?(?:/t(?:\^(\d+))?)?")


def _parse_terms(text: str, allow_laurent: bool) -> list[tuple[int, int, int, int]]:
    text = text.replace(" ", "")
    if not text:
        raise ValueError("empty polynomial string")
    out = []
    pos = 0
    while pos < len(text):
        m = _TERM.match(text, pos)
        sign, coef, s, se, t, te = m.group(1, 2, 3, 4, 5, 6)
        div = m.group(0).find("/t") >= 0
        if m.end() == pos or (coef is None and s is None and t is None):
            raise ValueError(f"cannot parse {text!r} at offset {pos}")
        if sign is None and pos != 0:
            raise ValueError(f"missing operator in {text!r} at offset {pos}")
        if div and not allow_laurent:
            raise ValueError(f"unexpected '/t' in {text!r}")
        c = int(coef) if coef is not None else 1
        if sign == "-":
            c = -c
        i = (int(se) if se else 1) if s else 0
        j = (int(te) if te else 1) if t else 0
        neg_t = (int(m.group(7)) if m.group(7) else 1) if div else 0
        out.append((c, i, j, neg_t))
        pos = m.end()
    return out


def parse_poly(text: str) -> Poly:
    """Inverse of :func:`canonical_string` (terms in any order).

    Strict: doubled operators and stray characters raise ``ValueError``.
    """
    terms: dict[Monomial, int] = {}
    for c, i, j, _ in _parse_terms(text, allow_laurent=False):
        terms[(i, j)] = terms.get((i, j), 0) + c
    return Poly(terms)


def parse_laurent(text: str) -> "RationalFunction":
    """Parse a sum whose terms may carry a ``/t`` or ``/t^e`` suffix, e.g. ``2s+s^3+s^3/t``."""
    parsed = _parse_terms(text, allow_laurent=True)
    shift = max(n for *_, n in parsed)
    terms: dict[Monomial, int] = {}
    for c, i, j, n in parsed:
        key = (i, j + shift - n)
        terms[key] = terms.get(key, 0) + c
    return RationalFunction(Poly(terms), T**shift)


class RationalFunction:
    """Quotient ``num/den`` of two polynomials, lightly normalized.

    Equality is by cross-multiplication, so two unreduced representations of
    the same function compare equal.  Instances are therefore unhashable.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Poly | int, den: Poly | int = 1):
        num, den = _as_poly(num), _as_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.num, self.den = _normalize(num, den)

    @classmethod
    def _raw(cls, num: Poly, den: Poly) -> "RationalFunction":
        r = object.__new__(cls)
        r.num, r.den = num, den
        return r

    def is_polynomial(self) -> bool:
        return self.den == ONE

    def as_poly(self) -> Poly:
        if not self.is_polynomial():
            raise ValueError(f"{self} is not a polynomial")
        return self.num

    @staticmethod
    def _coerce(other) -> "RationalFunction | None":
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (Poly, int)):
            return RationalFunction._raw(_as_poly(other), ONE)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _rf_add(self, o)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction._raw(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _rf_add(self, -o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _rf_add(o, -self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _rf_mul(self, o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _rf_mul(self, o.inverse())

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _rf_mul(o, self.inverse())

    def __pow__(self, e: int) -> "RationalFunction":
        if e < 0:
            return self.inverse() ** -e
        return RationalFunction(self.num**e, self.den**e)

    def inverse(self) -> "RationalFunction":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RationalFunction(self.den, self.num)

    def eval_int(self, s0, t0) -> Fraction:
        d = self.den.eval_int(s0, t0)
        if d == 0:
            raise ZeroDivisionError(f"denominator {self.den} vanishes at s={s0}, t={t0}")
        return Fraction(self.num.eval_int(s0, t0), d)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num * o.den == o.num * self.den

    __hash__ = None

    def __str__(self) -> str:
        if self.is_polynomial():
            return canonical_string(self.num)
        return f"({canonical_string(self.num)})/({canonical_string(self.den)})"

    def __repr__(self) -> str:
        return f"RationalFunction('{self}')"


def _try_div(a: Poly, b: Poly) -> Poly | None:
    try:
        return div_exact(a, b)
    except NotDivisible:
        return None


def _normalize(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    if num.is_zero():
        return ZERO, ONE
    # common monomial factor s^a t^b
    ds = min(i for i, _ in (*num._terms, *den._terms))
    dt = min(j for _, j in (*num._terms, *den._terms))
    if ds or dt:
        num, den = num.shift_down(ds, dt), den.shift_down(ds, dt)
    if den != ONE:
        q = _try_div(num, den)
        if q is not None:
            return q, ONE
        q = _try_div(den, num)
        if q is not None:
            num, den = ONE, q
    g = math.gcd(num.content(), den.content())
    if g > 1:
        num, den = num.scale_down(g), den.scale_down(g)
    if den.leading_term()[1] < 0:
        num, den = -num, -den
    return num, den


def _rf_add(a: RationalFunction, b: RationalFunction) -> RationalFunction:
    if a.den == b.den:
        return RationalFunction(a.num + b.num, a.den)
    q = _try_div(a.den, b.den)
    if q is not None:
        return RationalFunction(a.num + b.num * q, a.den)
    q = _try_div(b.den, a.den)
    if q is not None:
        return RationalFunction(a.num * q + b.num, b.den)
    return RationalFunction(a.num * b.den + b.num * a.den, a.den * b.den)


def _rf_mul(a: RationalFunction, b: RationalFunction) -> RationalFunction:
    n1, d2 = a.num, b.den
    n2, d1 = b.num, a.den
    if d2 != ONE and (q := _try_div(n1, d2)) is not None:
        n1, d2 = q, ONE
    if d1 != ONE and (q := _try_div(n2, d1)) is not None:
        n2, d1 = q, ONE
    return RationalFunction(n1 * n2, d1 * d2)


def rf_make(num: Poly | int, den: Poly | int = 1) -> RationalFunction:
    return RationalFunction(num, den)


def rf_arith(a, b, op: str) -> RationalFunction:
    """Apply ``op`` (one of ``add``, ``sub``, ``mul``, ``div``) to two rational functions."""
    a = RationalFunction._coerce(a)
    b = RationalFunction._coerce(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def rf_eq(a, b) -> bool:
    a = RationalFunction._coerce(a)
    b = RationalFunction._coerce(b)
    return a.num * b.den == b.num * a.den


class AuxPoly:
    """Polynomial in an auxiliary variable ``x`` with coefficients in Z[s, t]."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Poly | int]):
        cs = [_as_poly(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs: tuple[Poly, ...] = tuple(cs)

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> Poly:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else ZERO

    def xddx(self) -> "AuxPoly":
        """The operator x d/dx."""
        return AuxPoly(c * i for i, c in enumerate(self.coeffs))

    def eval_at(self, x: Poly | int) -> Poly:
        """Horner evaluation at a bivariate polynomial."""
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def reversed(self, n: int) -> "AuxPoly":
        """``x^n p(1/x)``; ``n`` must be at least the degree."""
        if n < self.degree():
            raise ValueError("reversal degree below polynomial degree")
        return AuxPoly(self[n - i] for i in range(n + 1))

    def __eq__(self, other):
        if isinstance(other, AuxPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            xs = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            parts.append(f"({c}){xs}" if xs else f"({c})")
        return "+".join(parts)

    def __repr__(self) -> str:
        return f"AuxPoly({list(map(str, self.coeffs))})"


def phi(n: int) -> AuxPoly:
    """``1 + x + ... + x^n``."""
    return AuxPoly([ONE] * (n + 1))


def aux_derivative_xddx(p: AuxPoly) -> AuxPoly:
    return p.xddx()


def aux_eval(p: AuxPoly, at: Poly) -> Poly:
    return p.eval_at(at)

