"""Sparse integer Laurent polynomials in a single variable."""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from typing import Iterable, Mapping


class LaurentPoly:
    """Immutable map exponent -> nonzero integer coefficient."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = defaultdict(int)
        for e, c in items:
            acc[int(e)] += int(c)
        self._terms = tuple(sorted((e, c) for e, c in acc.items() if c))
        self._hash = hash(self._terms)

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exponent: coeff})

    @property
    def terms(self) -> tuple[tuple[int, int], ...]:
        """(exponent, coefficient) pairs in ascending exponent order."""
        return self._terms

    def as_dict(self) -> dict[int, int]:
        return dict(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        return isinstance(other, LaurentPoly) and self._terms == other._terms

    def __hash__(self):
        return self._hash

    def __add__(self, other):
        other = _coerce(other)
        return LaurentPoly(self._terms + other._terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly((e, -c) for e, c in self._terms)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        acc: dict[int, int] = defaultdict(int)
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                acc[e1 + e2] += c1 * c2
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._terms) != 1 or abs(self._terms[0][1]) != 1:
                raise ValueError("only unit monomials have Laurent inverses")
            (e, c), = self._terms
            return LaurentPoly({e * k: c ** (-k)})
        out = LaurentPoly({0: 1})
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def mirror(self) -> "LaurentPoly":
        """Substitute the variable by its inverse (negate every exponent)."""
        return LaurentPoly((-e, c) for e, c in self._terms)

    def substitute_power(self, k: int) -> "LaurentPoly":
        """Rewrite in the variable ``x**k``; every exponent must be divisible by ``k``."""
        if any(e % k for e, _ in self._terms):
            raise ValueError(f"exponents not all divisible by {k}")
        return LaurentPoly((e // k, c) for e, c in self._terms)

    def __call__(self, x):
        if x == 0 and any(e < 0 for e, _ in self._terms):
            raise ZeroDivisionError("negative exponent at 0")
        x = Fraction(x) if isinstance(x, int) else x
        total = sum(c * x**e for e, c in self._terms)
        if isinstance(total, Fraction) and total.denominator == 1:
            return int(total)
        return total

    @property
    def min_degree(self) -> int:
        return self._terms[0][0]

    @property
    def max_degree(self) -> int:
        return self._terms[-1][0]

    def format(self, var: str = "A") -> str:
        """Ascending terms as ``c*var^e`` joined by `` + `` (``"0"`` when empty)."""
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*{var}^{e}" for e, c in self._terms)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"LaurentPoly({dict(self._terms)!r})"

    @classmethod
    def parse(cls, text: str, var: str = "A") -> "LaurentPoly":
        """Inverse of :meth:`format`."""
        text = text.strip()
        if text == "0":
            return cls()
        terms = []
        for tok in text.split(" + "):
            coeff, _, exp = tok.partition(f"*{var}^")
            terms.append((int(exp), int(coeff)))
        return cls(terms)


def _coerce(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly({0: x})
    raise TypeError(f"cannot combine LaurentPoly with {type(x).__name__}")


ONE = LaurentPoly({0: 1})
A = LaurentPoly({1: 1})
# loop value -A^2 - A^-2
DELTA = LaurentPoly({2: -1, -2: -1})
