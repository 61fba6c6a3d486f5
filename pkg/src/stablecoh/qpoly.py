"""Exact integer polynomials and truncated power series in one variable.

Everything downstream (Poincare polynomials, graded ranks, Gaussian
binomials) is carried by :class:`IntPoly`.  Coefficients are Python ints,
so there is no overflow and no floating point anywhere.

A polynomial may be *truncated*: ``IntPoly({0: 1, 3: -1}, trunc=5)`` means
``1 - t^3 mod t^5``.  Truncation travels with the value, and arithmetic
between a truncated and any other operand is only known modulo the smaller
order.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping, Union

__all__ = ["IntPoly", "poly_mul", "gaussian_binomial", "series_inverse", "T", "ONE", "ZERO"]


class IntPoly:
    """Sparse polynomial with int coefficients, optionally known mod t^N."""

    __slots__ = ("_c", "_trunc")

    def __init__(
        self,
        coeffs: Union[Mapping[int, int], Iterable[int], None] = None,
        trunc: int | None = None,
    ):
        if trunc is not None and trunc < 0:
            raise ValueError("truncation order must be nonnegative")
        if coeffs is None:
            items: Iterable[tuple[int, int]] = ()
        elif isinstance(coeffs, Mapping):
            items = coeffs.items()
        else:
            items = enumerate(coeffs)
        c: dict[int, int] = {}
        for deg, val in items:
            if deg < 0:
                raise ValueError(f"negative degree {deg}")
            if trunc is not None and deg >= trunc:
                continue
            val = int(val)
            if val:
                c[deg] = c.get(deg, 0) + val
                if not c[deg]:
                    del c[deg]
        self._c = dict(sorted(c.items()))
        self._trunc = trunc

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1, trunc: int | None = None) -> IntPoly:
        return cls({degree: coeff}, trunc)

    # -- inspection --------------------------------------------------------

    @property
    def trunc(self) -> int | None:
        """Truncation order N (value known mod t^N), or None if exact."""
        return self._trunc

    @property
    def is_exact(self) -> bool:
        return self._trunc is None

    def terms(self) -> tuple[tuple[int, int], ...]:
        """Nonzero (degree, coefficient) pairs in increasing degree."""
        return tuple(self._c.items())

    def coeff(self, degree: int) -> int:
        if self._trunc is not None and degree >= self._trunc:
            raise ValueError(f"coefficient of t^{degree} unknown mod t^{self._trunc}")
        return self._c.get(degree, 0)

    __getitem__ = coeff

    @property
    def degree(self) -> int:
        """Largest degree with a nonzero coefficient; -1 for zero."""
        return next(reversed(self._c), -1)

    def is_zero(self) -> bool:
        return not self._c

    def dense(self, length: int | None = None) -> list[int]:
        if length is None:
            length = self.degree + 1
        return [self._c.get(i, 0) for i in range(length)]

    def evaluate(self, x: int) -> int:
        return sum(c * x**d for d, c in self._c.items())

    def total(self) -> int:
        """Sum of coefficients (total rank, for a Poincare polynomial)."""
        return sum(self._c.values())

    def is_palindromic(self, top: int | None = None) -> bool:
        if top is None:
            top = self.degree
        return all(self._c.get(top - d, 0) == c for d, c in self._c.items())

    # -- derived polynomials ----------------------------------------------

    def truncate(self, n: int) -> IntPoly:
        if self._trunc is not None:
            n = min(n, self._trunc)
        return IntPoly(self._c, n)

    def shift(self, k: int) -> IntPoly:
        """Multiply by t^k."""
        trunc = None if self._trunc is None else self._trunc + k
        return IntPoly({d + k: c for d, c in self._c.items()}, trunc)

    def substitute_power(self, k: int) -> IntPoly:
        """Substitute t -> t^k (used for q = t^2)."""
        if k < 1:
            raise ValueError("substitution exponent must be positive")
        trunc = None if self._trunc is None else k * self._trunc
        return IntPoly({k * d: c for d, c in self._c.items()}, trunc)

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(other) -> IntPoly:
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return IntPoly({0: other})
        return NotImplemented

    @staticmethod
    def _meet(a: int | None, b: int | None) -> int | None:
        if a is None:
            return b
        if b is None:
            return a
        return min(a, b)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        c = dict(self._c)
        for d, v in other._c.items():
            c[d] = c.get(d, 0) + v
        return IntPoly(c, self._meet(self._trunc, other._trunc))

    __radd__ = __add__

    def __neg__(self) -> IntPoly:
        return IntPoly({d: -c for d, c in self._c.items()}, self._trunc)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        trunc = self._meet(self._trunc, other._trunc)
        c: dict[int, int] = {}
        for da, ca in self._c.items():
            if trunc is not None and da >= trunc:
                break
            for db, cb in other._c.items():
                d = da + db
                if trunc is not None and d >= trunc:
                    break
                c[d] = c.get(d, 0) + ca * cb
        return IntPoly(c, trunc)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> IntPoly:
        if e < 0:
            raise ValueError("negative power")
        out = IntPoly({0: 1}, self._trunc)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPoly({0: other})
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self._c == other._c and self._trunc == other._trunc

    def __hash__(self) -> int:
        return hash((tuple(self._c.items()), self._trunc))

    def __bool__(self) -> bool:
        return bool(self._c)

    def __repr__(self) -> str:
        if self._trunc is None:
            return f"IntPoly({self._c!r})"
        return f"IntPoly({self._c!r}, trunc={self._trunc})"

    def __str__(self) -> str:
        return self.format()

    def format(self, var: str = "t") -> str:
        parts = []
        for d, c in self._c.items():
            if d == 0:
                mono = str(abs(c))
            else:
                power = var if d == 1 else f"{var}^{d}"
                mono = power if abs(c) == 1 else f"{abs(c)}{power}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, mono))
        if not parts:
            body = "0"
        else:
            body = ("-" if parts[0][0] == "-" else "") + parts[0][1]
            for sign, mono in parts[1:]:
                body += f" {sign} {mono}"
        if self._trunc is not None:
            body += f" mod {var}^{self._trunc}"
        return body


ZERO = IntPoly()
ONE = IntPoly({0: 1})
T = IntPoly({1: 1})


def poly_mul(a: IntPoly, b: IntPoly) -> IntPoly:
    return a * b


@lru_cache(maxsize=None)
def gaussian_binomial(m: int, p: int) -> IntPoly:
    """The q-binomial coefficient [m choose p]_q via the Pascal recurrence

        [m, p] = [m-1, p-1] + q^p [m-1, p],   [m, 0] = 1.

    Returns the zero polynomial when p > m.
    """
    if m < 0 or p < 0:
        raise ValueError("gaussian_binomial needs nonnegative arguments")
    if p == 0:
        return ONE
    if p > m:
        return ZERO
    return gaussian_binomial(m - 1, p - 1) + gaussian_binomial(m - 1, p).shift(p)


def series_inverse(a: IntPoly, n: int) -> IntPoly:
    """Power series b with a*b = 1 mod t^n.

    The constant term of ``a`` must be +1 or -1 so that the inverse stays
    integral.
    """
    a0 = a.coeff(0) if a.trunc != 0 else 0
    if a0 not in (1, -1):
        raise ValueError(f"constant term {a0} is not a unit in Z")
    if a.trunc is not None:
        n = min(n, a.trunc)
    coeffs = dict(a.terms())
    b = [0] * n
    for k in range(n):
        s = 1 if k == 0 else 0
        s -= sum(c * b[k - d] for d, c in coeffs.items() if 0 < d <= k)
        b[k] = a0 * s
    return IntPoly(b, n)
