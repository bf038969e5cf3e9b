"""Exact numbers of the form ``sum_i q_i * sqrt(r_i)``.

Coefficients are :class:`fractions.Fraction`; radicands are squarefree
positive integers, with radicand 1 holding the rational part.  Every
Schur-Weyl amplitude produced by this package lives in this ring.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Union

Rational = Fraction

__all__ = [
    "Rational",
    "SurdSum",
    "squarefree_decompose",
    "surd_sqrt_of_rational",
    "surd_mul",
    "surd_add",
    "surd_to_float",
    "ZERO",
    "ONE",
]


@lru_cache(maxsize=65536)
def squarefree_decompose(x: int) -> tuple[int, int]:
    """Split ``x > 0`` as ``s*s*r`` with ``r`` squarefree; return ``(s, r)``."""
    if x <= 0:
        raise ValueError(f"expected a positive integer, got {x}")
    s, r, w = 1, 1, x
    p = 2
    while p * p * p <= w:
        if w % p == 0:
            e = 0
            while w % p == 0:
                w //= p
                e += 1
            s *= p ** (e // 2)
            if e % 2:
                r *= p
        p += 1 if p == 2 else 2
    # every prime factor of w is >= p and p**3 > w: w is 1, q, q*q or q1*q2
    q = math.isqrt(w)
    if q * q == w:
        s *= q
    else:
        r *= w
    return s, r


Number = Union["SurdSum", Fraction, int]


class SurdSum:
    """Immutable exact value ``sum q * sqrt(r)`` in canonical form.

    Two instances are equal iff their term maps are identical, which is
    exact equality of the represented reals because square roots of
    distinct squarefree integers are linearly independent over Q.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, Fraction] | Iterable[tuple[int, Fraction]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, Fraction] = {}
        for radicand, coeff in items:
            radicand = int(radicand)
            coeff = Fraction(coeff)
            if coeff == 0:
                continue
            s, r = squarefree_decompose(radicand)
            acc[r] = acc.get(r, Fraction(0)) + coeff * s
        self._terms = tuple(sorted((r, c) for r, c in acc.items() if c != 0))
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[int, Fraction]) -> "SurdSum":
        # terms already canonical: squarefree keys, nonzero coefficients
        obj = cls.__new__(cls)
        obj._terms = tuple(sorted(terms.items()))
        obj._hash = None
        return obj

    @classmethod
    def rational(cls, q) -> "SurdSum":
        q = Fraction(q)
        return cls._raw({1: q} if q else {})

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def items(self):
        return iter(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_rational(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and self._terms[0][0] == 1)

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is irrational")
        return self._terms[0][1] if self._terms else Fraction(0)

    def normalize(self) -> "SurdSum":
        return SurdSum(self._terms)

    # arithmetic -----------------------------------------------------------
    @staticmethod
    def _coerce(other) -> "SurdSum | None":
        if isinstance(other, SurdSum):
            return other
        if isinstance(other, (int, Fraction)):
            return SurdSum.rational(other)
        return None

    def __add__(self, other: Number) -> "SurdSum":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        acc = dict(self._terms)
        for r, c in other._terms:
            v = acc.get(r, 0) + c
            if v:
                acc[r] = v
            else:
                acc.pop(r, None)
        return SurdSum._raw(acc)

    __radd__ = __add__

    def __neg__(self) -> "SurdSum":
        return SurdSum._raw({r: -c for r, c in self._terms})

    def __sub__(self, other: Number) -> "SurdSum":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Number) -> "SurdSum":
        return (-self) + other

    def __mul__(self, other: Number) -> "SurdSum":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self._terms or not other._terms:
            return ZERO
        acc: dict[int, Fraction] = {}
        for r1, c1 in self._terms:
            for r2, c2 in other._terms:
                # r1, r2 squarefree: r1*r2 = g^2 * (r1/g)*(r2/g), the latter squarefree
                g = math.gcd(r1, r2)
                r = (r1 // g) * (r2 // g)
                v = acc.get(r, 0) + c1 * c2 * g
                if v:
                    acc[r] = v
                else:
                    acc.pop(r, None)
        return SurdSum._raw(acc)

    __rmul__ = __mul__

    def __truediv__(self, other: Number) -> "SurdSum":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if len(other._terms) != 1:
            raise ZeroDivisionError("division by zero") if not other._terms else \
                ValueError("division only supported by single-term surds")
        (r, c), = other._terms
        # 1/(c sqrt r) = sqrt(r) / (c r)
        return self * SurdSum._raw({r: 1 / (c * r)})

    def square(self) -> "SurdSum":
        return self * self

    def sign(self) -> int:
        """Exact sign for sums of at most two terms, float otherwise."""
        if not self._terms:
            return 0
        if len(self._terms) == 1:
            return 1 if self._terms[0][1] > 0 else -1
        if len(self._terms) == 2:
            (r1, c1), (r2, c2) = self._terms
            if (c1 > 0) == (c2 > 0):
                return 1 if c1 > 0 else -1
            # compare |c1| sqrt r1 with |c2| sqrt r2 by squaring
            a, b = c1 * c1 * r1, c2 * c2 * r2
            return (1 if c1 > 0 else -1) if a > b else (1 if c2 > 0 else -1)
        v = float(self)
        return (v > 0) - (v < 0)

    def __abs__(self) -> "SurdSum":
        return -self if self.sign() < 0 else self

    # comparison / conversion ---------------------------------------------
    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __float__(self) -> float:
        return math.fsum(float(c) * math.sqrt(r) for r, c in self._terms)

    def __repr__(self) -> str:
        return f"SurdSum({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for r, c in self._terms:
            num, den = c.numerator, c.denominator
            sign = "-" if num < 0 else "+"
            num = abs(num)
            if r == 1:
                body = f"{num}"
            elif num == 1:
                body = f"sqrt({r})"
            else:
                body = f"{num}*sqrt({r})"
            if den != 1:
                body += f"/{den}"
            out.append((sign, body))
        first_sign, first = out[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text

    def to_json(self) -> dict:
        return {
            "terms": [
                {"num": c.numerator, "den": c.denominator, "radicand": r}
                for r, c in self._terms
            ],
            "float": float(self),
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "SurdSum":
        return cls((t["radicand"], Fraction(t["num"], t["den"])) for t in data["terms"])


ZERO = SurdSum()
ONE = SurdSum.rational(1)


def surd_sqrt_of_rational(x, sign: int = 1) -> SurdSum:
    """Return ``sign * sqrt(x)`` for a non-negative rational ``x``."""
    x = Fraction(x)
    if x < 0:
        raise ValueError(f"square root of negative rational {x}")
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    if x == 0:
        return ZERO
    # sqrt(a/b) = sqrt(a*b)/b
    a, b = x.numerator, x.denominator
    s, r = squarefree_decompose(a * b)
    return SurdSum._raw({r: Fraction(sign * s, b)})


def surd_mul(a: SurdSum, b: SurdSum) -> SurdSum:
    return a * b


def surd_add(a: SurdSum, b: SurdSum) -> SurdSum:
    return a + b


def surd_to_float(a: SurdSum) -> float:
    return float(a)
