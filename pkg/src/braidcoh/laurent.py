"""Exact Laurent polynomials in one variable ``q`` with integer coefficients."""

from __future__ import annotations

from typing import Iterable, Mapping, Union

Scalar = Union[int, "LaurentPoly"]


class LaurentPoly:
    """An element of Z[q, q^-1], stored as ``{exponent: coefficient}``.

    Zero coefficients are never stored, so equality is plain map equality.

    >>> q = LaurentPoly.q()
    >>> str(q * q - 1)
    'q^2 - 1'
    >>> q * q.inverse() == 1
    True
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for exp, coef in items:
            acc[exp] = acc.get(exp, 0) + coef
        self._terms = {e: c for e, c in acc.items() if c != 0}
        self._hash = None

    @classmethod
    def constant(cls, c: int) -> LaurentPoly:
        return cls({0: c})

    @classmethod
    def monomial(cls, exp: int, coef: int = 1) -> LaurentPoly:
        return cls({exp: coef})

    @classmethod
    def q(cls) -> LaurentPoly:
        return cls({1: 1})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_unit(self) -> bool:
        """Units of Z[q, q^-1] are exactly +-q^k."""
        if len(self._terms) != 1:
            return False
        (c,) = self._terms.values()
        return c in (1, -1)

    def inverse(self) -> LaurentPoly:
        if not self.is_unit():
            raise ZeroDivisionError(f"{self} is not a unit in Z[q, q^-1]")
        ((e, c),) = self._terms.items()
        return LaurentPoly({-e: c})

    def degree_range(self) -> tuple[int, int]:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return min(self._terms), max(self._terms)

    def evaluate(self, value):
        return sum(c * value**e for e, c in self._terms.items())

    def specialize_one(self) -> LaurentPoly:
        """Substitute q := 1."""
        return LaurentPoly.constant(sum(self._terms.values()))

    @staticmethod
    def coerce(x: Scalar) -> LaurentPoly:
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return LaurentPoly.constant(x)
        return NotImplemented

    def __add__(self, other: Scalar) -> LaurentPoly:
        other = LaurentPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        return LaurentPoly(list(self._terms.items()) + list(other._terms.items()))

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: Scalar) -> LaurentPoly:
        other = LaurentPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other: Scalar) -> LaurentPoly:
        other = LaurentPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self._terms or not other._terms:
            return ZERO
        return LaurentPoly(
            (e1 + e2, c1 * c2)
            for e1, c1 in self._terms.items()
            for e2, c2 in other._terms.items()
        )

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentPoly({self._terms!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, e in enumerate(sorted(self._terms, reverse=True)):
            c = self._terms[e]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                power = "q" if e == 1 else f"q^{e}"
                body = power if mag == 1 else f"{mag}*{power}"
            if i == 0:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)
