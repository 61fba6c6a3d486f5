"""Stable cohomology rings of the hypersurface spaces and their arithmetic.

Spaces (all with rational coefficients, valid in a stable range of degrees):

======  ===========================================================
X       nonsingular forms of degree d in n+1 variables
Xv      forms in X with prescribed value and differential at a point
Xp      forms in X vanishing at a fixed point
Xstar   pairs (f, p) with f in X and f(p) = 0
Ustar   the universal smooth hypersurface, Xstar / C*
Mstar   Xstar / GL_{n+1}
======  ===========================================================

Each is presented by exterior generators of odd degree and at most one
truncated polynomial generator ``x`` of degree 2 with ``x^n = 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator, Sequence

from .liegroups import gl_poincare, pgl_poincare
from .qpoly import ONE, IntPoly, series_inverse

__all__ = [
    "SPACES",
    "RingGenerator",
    "GradedRingPresentation",
    "ring_presentation",
    "ring_poincare",
    "monomial_product",
    "serre_einfty",
    "SerreResult",
    "degenerate_contradiction",
    "contradiction_series",
    "twisted_coefficients",
    "TwistedRank",
    "fiberwise_chern_coefficient",
]

EXTERIOR = "exterior"
NILPOTENT = "nilpotent_poly"

SPACES = ("X", "Xp", "Xv", "Xstar", "Ustar", "Mstar")
_ALIASES = {"X^p": "Xp", "X_v": "Xv", "X*": "Xstar", "U*": "Ustar", "M*": "Mstar"}

Monomial = tuple[int, ...]


@dataclass(frozen=True)
class RingGenerator:
    name: str
    degree: int
    kind: str = EXTERIOR
    nu: int | None = None  # truncation order, x^nu = 0

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError(f"{self.name}: generator degree must be positive")
        if self.kind == EXTERIOR:
            if self.degree % 2 == 0:
                raise ValueError(f"{self.name}: exterior generators have odd degree")
        elif self.kind == NILPOTENT:
            if self.degree % 2:
                raise ValueError(f"{self.name}: polynomial generators have even degree")
            if self.nu is None or self.nu < 1:
                raise ValueError(f"{self.name}: truncation order must be >= 1")
        else:
            raise ValueError(f"unknown generator kind {self.kind!r}")

    @property
    def max_exponent(self) -> int:
        return 1 if self.kind == EXTERIOR else self.nu - 1

    @property
    def is_odd(self) -> bool:
        return self.degree % 2 == 1

    def poincare(self) -> IntPoly:
        return IntPoly({self.degree * e: 1 for e in range(self.max_exponent + 1)})


@dataclass(frozen=True)
class GradedRingPresentation:
    space: str
    generators: tuple[RingGenerator, ...]
    d: int | None = None
    n: int | None = None
    bound: int | None = None  # valid in degrees < bound
    hypothesis_ok: bool = True

    def index(self, name: str) -> int:
        for i, g in enumerate(self.generators):
            if g.name == name:
                return i
        raise KeyError(name)

    def monomial(self, **exponents: int) -> Monomial:
        mono = [0] * len(self.generators)
        for name, e in exponents.items():
            mono[self.index(name)] = e
        return tuple(mono)

    @property
    def one(self) -> Monomial:
        return (0,) * len(self.generators)

    def is_normal(self, mono: Sequence[int]) -> bool:
        return len(mono) == len(self.generators) and all(
            0 <= e <= g.max_exponent for e, g in zip(mono, self.generators)
        )

    def degree(self, mono: Sequence[int]) -> int:
        return sum(e * g.degree for e, g in zip(mono, self.generators))

    def basis(self, max_degree: int | None = None) -> Iterator[Monomial]:
        """Normal-form monomials (square-free exterior part times x^e, e < nu)."""
        ranges = [range(g.max_exponent + 1) for g in self.generators]
        for mono in product(*ranges):
            if max_degree is None or self.degree(mono) <= max_degree:
                yield mono

    def format_monomial(self, mono: Sequence[int]) -> str:
        parts = []
        for e, g in zip(mono, self.generators):
            if e == 1:
                parts.append(g.name)
            elif e > 1:
                parts.append(f"{g.name}^{e}")
        return "*".join(parts) or "1"


def _normalize_space(space: str) -> str:
    space = _ALIASES.get(space, space)
    if space not in SPACES:
        raise ValueError(f"unknown space {space!r}; expected one of {SPACES}")
    return space


def _exterior(degrees, prefix="u") -> list[RingGenerator]:
    return [RingGenerator(f"{prefix}{deg}", deg) for deg in degrees]


def ring_presentation(space: str, d: int, n: int) -> GradedRingPresentation:
    if d < 1 or n < 1:
        raise ValueError("ring_presentation needs d >= 1 and n >= 1")
    space = _normalize_space(space)
    x = RingGenerator("x", 2, NILPOTENT, nu=n)
    gl_n = range(1, 2 * n, 2)
    gl_n1 = range(1, 2 * n + 2, 2)
    if space == "X":
        gens = _exterior(gl_n1)
    elif space == "Xv":
        gens = _exterior(gl_n)
    elif space == "Xp":
        gens = _exterior(gl_n) + [RingGenerator(f"e{2 * n - 1}", 2 * n - 1)]
    elif space == "Xstar":
        gens = _exterior(gl_n1) + [x]
    elif space == "Ustar":
        gens = _exterior(range(3, 2 * n + 2, 2)) + [x]
    else:
        gens = [x]
    bound = (d + 1) // 2 if space == "X" else (d - 1) // 2
    return GradedRingPresentation(space, tuple(gens), d, n, bound, d >= 4 * n + 1)


def ring_poincare(pres: GradedRingPresentation, truncate: bool = False) -> IntPoly:
    out = ONE
    for g in pres.generators:
        out = out * g.poincare()
    if truncate and pres.bound is not None:
        out = out.truncate(pres.bound)
    return out


def monomial_product(
    pres: GradedRingPresentation, m1: Sequence[int], m2: Sequence[int]
) -> tuple[int, Monomial] | None:
    """Graded-commutative product of normal-form monomials.

    Returns ``(sign, monomial)`` or ``None`` when the product vanishes.
    The sign counts the odd generators of ``m2`` that must move left past
    odd generators of ``m1`` with a larger index.
    """
    if not (pres.is_normal(m1) and pres.is_normal(m2)):
        raise ValueError("monomials must be in normal form for this presentation")
    out = []
    for a, b, g in zip(m1, m2, pres.generators):
        if a + b > g.max_exponent:
            return None
        out.append(a + b)
    swaps = 0
    odd_in_m1_after = 0
    for i in reversed(range(len(pres.generators))):
        if not pres.generators[i].is_odd:
            continue
        if m2[i]:
            swaps += odd_in_m1_after
        if m1[i]:
            odd_in_m1_after += 1
    return (-1 if swaps % 2 else 1), tuple(out)


# -- Serre spectral sequence of U* -> P^n ---------------------------------

@dataclass(frozen=True)
class SerreResult:
    n: int
    transgression: bool
    e2_poincare: IntPoly
    einfty_poincare: IntPoly
    target: IntPoly

    @property
    def matches_target(self) -> bool:
        return self.einfty_poincare == self.target


def _rank(rows: list[dict[int, Fraction]]) -> int:
    """Rank over Q of a sparse matrix given as row dicts."""
    rows = [dict(r) for r in rows if r]
    rank = 0
    while rows:
        pivot_row = rows.pop()
        if not pivot_row:
            continue
        col, val = next(iter(pivot_row.items()))
        rank += 1
        reduced = []
        for r in rows:
            if col in r:
                factor = r[col] / val
                for c, v in pivot_row.items():
                    nv = r.get(c, 0) - factor * v
                    if nv:
                        r[c] = nv
                    else:
                        r.pop(c, None)
            if r:
                reduced.append(r)
        rows = reduced
    return rank


def _differential(pres, dgen, mono) -> dict[Monomial, int]:
    """Leibniz extension of a differential given on exterior generators."""
    out: dict[Monomial, int] = {}
    prefix_degree = 0
    for i, g in enumerate(pres.generators):
        if mono[i] and g.name in dgen:
            if g.kind != EXTERIOR:
                raise ValueError("differential is only supported on exterior generators")
            prefix = tuple(e if j < i else 0 for j, e in enumerate(mono))
            suffix = tuple(e if j > i else 0 for j, e in enumerate(mono))
            koszul = -1 if prefix_degree % 2 else 1
            for coeff, image in dgen[g.name]:
                left = monomial_product(pres, prefix, image)
                if left is None:
                    continue
                whole = monomial_product(pres, left[1], suffix)
                if whole is None:
                    continue
                c = koszul * coeff * left[0] * whole[0]
                out[whole[1]] = out.get(whole[1], 0) + c
        prefix_degree += mono[i] * g.degree
    return {m: c for m, c in out.items() if c}


def serre_einfty(n: int, transgression: bool = True) -> SerreResult:
    """E_infinity of the Serre spectral sequence for U* over P^n.

    E_2 is Lambda(u_3, ..., u_{2n-1}) (x) Lambda(e_{2n-1}) (x) Q[x]/(x^{n+1}),
    the last factor coming from the base.  The only differential is the
    transgression e_{2n-1} -> x^n (coefficient normalized to 1), extended
    multiplicatively.
    """
    if n < 2:
        raise ValueError("serre_einfty needs n >= 2")
    gens = _exterior(range(3, 2 * n, 2))
    e = RingGenerator(f"e{2 * n - 1}", 2 * n - 1)
    x = RingGenerator("x", 2, NILPOTENT, nu=n + 1)
    e2 = GradedRingPresentation("E2", tuple(gens + [e, x]))
    dgen = {e.name: [(1, e2.monomial(x=n))]} if transgression else {}

    by_degree: dict[int, list[Monomial]] = {}
    for mono in e2.basis():
        by_degree.setdefault(e2.degree(mono), []).append(mono)
    rank_out: dict[int, int] = {}
    for deg, monos in by_degree.items():
        targets = {m: i for i, m in enumerate(by_degree.get(deg + 1, []))}
        # one row per source basis element; transposing does not change rank
        rows = []
        for mono in monos:
            image = _differential(e2, dgen, mono)
            rows.append({targets[m]: Fraction(c) for m, c in image.items()})
        rank_out[deg] = _rank(rows)

    e2_ranks = {deg: len(monos) for deg, monos in by_degree.items()}
    survivors = {
        deg: dim - rank_out.get(deg, 0) - rank_out.get(deg - 1, 0)
        for deg, dim in e2_ranks.items()
    }
    geometric = IntPoly({2 * i: 1 for i in range(n)})
    return SerreResult(
        n, transgression, IntPoly(e2_ranks), IntPoly(survivors), pgl_poincare(n + 1) * geometric
    )


# -- divisibility contradiction -------------------------------------------

def contradiction_series(n: int, bound: int) -> IntPoly:
    """(1 + t^2 + ... + t^(2n)) / (1 + t^(2n+1)) mod t^bound."""
    numerator = IntPoly({2 * i: 1 for i in range(n + 1)})
    denominator = IntPoly({0: 1, 2 * n + 1: 1})
    return numerator * series_inverse(denominator, bound)


def degenerate_contradiction(n: int, bound: int) -> int | None:
    """Smallest degree below ``bound`` where the forced cofactor goes negative.

    If H^*(U*) were free over Lambda(u_3, ..., u_{2n+1}) while the
    transgression vanished, the cofactor would be this series; a negative
    coefficient rules that out at the given truncation.
    """
    for deg, c in contradiction_series(n, bound).terms():
        if c < 0:
            return deg
    return None


# -- twisted coefficients and the Chern coefficient ------------------------

@dataclass(frozen=True)
class TwistedRank:
    rank: int
    guaranteed: bool


def twisted_coefficients(d: int, n: int, k: int) -> TwistedRank:
    """Rank of H^k(X; H^(n-1)(Z(f))) in the stable window.

    Zero for even n, h^k(GL_{n+1}) for odd n.  Queries outside
    d >= 4n+1, k < floor((d-1)/2) come back with ``guaranteed=False``.
    """
    rank = 0 if n % 2 == 0 else gl_poincare(n + 1)[k]
    return TwistedRank(rank, d >= 4 * n + 1 and 0 <= k < (d - 1) // 2)


@dataclass(frozen=True)
class ChernCoefficient:
    coefficient: int
    nonvanishing: bool


def fiberwise_chern_coefficient(d: int, n: int) -> ChernCoefficient:
    """c_1 of the fiberwise canonical bundle on a fiber Z, in units of omega_Z."""
    if d < 1 or n < 1:
        raise ValueError("fiberwise_chern_coefficient needs d, n >= 1")
    return ChernCoefficient(d * (d - n - 1), d > n + 1)
