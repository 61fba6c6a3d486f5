"""Borel-Moore homology of unordered configuration spaces with sign twist.

For the closed case, the rank of UConf_j(P^n; +-Q) in degree m is the rank
of H_{m - j(j-1)}(Gr(j, C^{n+1})).  For P^n minus a point only the
Schubert cells with a_1 = 0 survive, under the same shift.  Ranks are
obtained by enumerating Schubert cells, never from the closed forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .qpoly import IntPoly
from .schubert import schubert_poincare

__all__ = [
    "ConfSpec",
    "GradedDims",
    "conf_bm_poincare",
    "verify_split",
    "SplitReport",
    "total_conf_dimension",
]

SIGN_TWIST = "sign"


@dataclass(frozen=True, order=True)
class ConfSpec:
    j: int
    n: int
    punctured: bool = False
    twist: str = SIGN_TWIST

    def __post_init__(self):
        if self.j < 0 or self.n < 0:
            raise ValueError("j and n must be nonnegative")
        if self.twist != SIGN_TWIST:
            raise ValueError("only the sign local system is supported")

    @property
    def label(self) -> str:
        space = f"P^{self.n} - pt" if self.punctured else f"P^{self.n}"
        return f"UConf_{self.j}({space})"


@dataclass(frozen=True)
class GradedDims:
    """Nonzero ranks by homological degree, tagged with the space they describe."""

    ranks: tuple[tuple[int, int], ...]
    space: str
    twist: str = SIGN_TWIST

    @classmethod
    def from_poly(cls, poly: IntPoly, space: str, twist: str = SIGN_TWIST) -> GradedDims:
        return cls(poly.terms(), space, twist)

    def rank(self, degree: int) -> int:
        return dict(self.ranks).get(degree, 0)

    def as_dict(self) -> dict[int, int]:
        return dict(self.ranks)

    def as_poly(self) -> IntPoly:
        return IntPoly(dict(self.ranks))

    def total(self) -> int:
        return sum(r for _, r in self.ranks)

    def degrees(self) -> list[int]:
        return [d for d, _ in self.ranks]


@lru_cache(maxsize=None)
def conf_bm_poincare(spec: ConfSpec) -> GradedDims:
    cells = schubert_poincare(spec.j, spec.n + 1, a1_zero=spec.punctured)
    return GradedDims.from_poly(cells.shift(spec.j * (spec.j - 1)), spec.label, spec.twist)


@dataclass(frozen=True)
class SplitReport:
    j: int
    n: int
    # (degree, rank closed j, rank punctured j, rank punctured j-1)
    rows: tuple[tuple[int, int, int, int], ...]
    passed: bool

    @property
    def witness(self) -> int | None:
        for m, whole, a, b in self.rows:
            if whole != a + b:
                return m
        return None


def verify_split(j: int, n: int) -> SplitReport:
    """Degreewise check that UConf_j(P^n) splits as UConf_j(P^n - pt) + UConf_(j-1)(P^n - pt)."""
    if j < 1:
        raise ValueError("verify_split needs j >= 1")
    whole = conf_bm_poincare(ConfSpec(j, n))
    top = conf_bm_poincare(ConfSpec(j, n, punctured=True))
    low = conf_bm_poincare(ConfSpec(j - 1, n, punctured=True))
    degrees = sorted(set(whole.degrees()) | set(top.degrees()) | set(low.degrees()))
    rows = tuple((m, whole.rank(m), top.rank(m), low.rank(m)) for m in degrees)
    return SplitReport(j, n, rows, all(w == a + b for _, w, a, b in rows))


def total_conf_dimension(n: int) -> int:
    # UConf_j(P^n; +-Q) vanishes for j > n + 1; one extra j confirms it
    return sum(conf_bm_poincare(ConfSpec(j, n)).total() for j in range(n + 3))
