"""Schubert symbols and rational homology ranks of complex Grassmannians.

A Schubert symbol for Gr(p, C^m) is a sequence ``a_0, ..., a_m`` with
``a_0 = 0``, ``a_m = p`` and unit-or-zero steps.  The cells are enumerated
directly from their step sequences; the Gaussian binomial in
:mod:`stablecoh.qpoly` is only ever used as an independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .qpoly import IntPoly

__all__ = [
    "SchubertSymbol",
    "enumerate_symbols",
    "cell_dimension",
    "grassmannian_poincare",
    "total_betti_sum",
]


@dataclass(frozen=True, order=True)
class SchubertSymbol:
    a: tuple[int, ...]

    def __post_init__(self):
        a = tuple(self.a)
        object.__setattr__(self, "a", a)
        if not a or a[0] != 0:
            raise ValueError(f"Schubert symbol must start at 0: {a}")
        for lo, hi in zip(a, a[1:]):
            if hi - lo not in (0, 1):
                raise ValueError(f"steps of a Schubert symbol must be 0 or 1: {a}")

    @classmethod
    def from_steps(cls, steps) -> SchubertSymbol:
        a = [0]
        for b in steps:
            a.append(a[-1] + b)
        return cls(tuple(a))

    @property
    def ambient_dim(self) -> int:
        return len(self.a) - 1

    @property
    def plane_dim(self) -> int:
        return self.a[-1]

    @property
    def steps(self) -> tuple[int, ...]:
        return tuple(hi - lo for lo, hi in zip(self.a, self.a[1:]))

    def jump_positions(self) -> tuple[int, ...]:
        """1-based positions i with a_i - a_{i-1} = 1."""
        return tuple(i for i, b in enumerate(self.steps, start=1) if b)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.a)) + ")"


def _jump_sets(p: int, m: int, a1_zero: bool) -> Iterator[tuple[int, ...]]:
    # 1-based jump positions; a_1 = 0 means position 1 carries no jump
    start = 2 if a1_zero and m >= 1 else 1
    return combinations(range(start, m + 1), p)


def _dim(jumps: tuple[int, ...]) -> int:
    return sum(j - i for i, j in enumerate(jumps, start=1))


def enumerate_symbols(p: int, m: int, a1_zero: bool = False) -> list[SchubertSymbol]:
    """All Schubert symbols of Gr(p, C^m), lexicographic in the steps.

    With ``a1_zero`` only symbols with ``a_1 = 0`` are kept (vacuous for
    m = 0).  Returns an empty list when p > m.
    """
    out = []
    for jumps in _jump_sets(p, m, a1_zero):
        steps = [0] * m
        for j in jumps:
            steps[j - 1] = 1
        out.append(SchubertSymbol.from_steps(steps))
    out.sort(key=lambda s: s.steps)
    return out


def cell_dimension(s: SchubertSymbol) -> int:
    """Complex dimension of the Schubert cell; its class sits in degree 2x this."""
    return _dim(s.jump_positions())


def schubert_poincare(p: int, m: int, a1_zero: bool = False) -> IntPoly:
    """Sum of t^(2 dim) over the (optionally a_1 = 0) Schubert cells."""
    ranks: dict[int, int] = {}
    for jumps in _jump_sets(p, m, a1_zero):
        deg = 2 * _dim(jumps)
        ranks[deg] = ranks.get(deg, 0) + 1
    return IntPoly(ranks)


def grassmannian_poincare(p: int, m: int) -> IntPoly:
    return schubert_poincare(p, m)


def total_betti_sum(m: int) -> int:
    return sum(grassmannian_poincare(p, m).total() for p in range(m + 1))
