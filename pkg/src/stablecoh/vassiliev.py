"""Rank bookkeeping for the Vassiliev spectral sequence of a discriminant.

Two variants are supported:

``full``
    the discriminant inside the space V_d of all degree-d forms, with
    columns built from closed configuration spaces UConf_j(P^n);
``marked``
    the singular locus inside V_v (forms vanishing at a marked point with
    prescribed differential there), with columns built from
    UConf_j(P^n - pt).

A column carrying ``j`` singular points contributes conf degree ``m`` at
total Borel-Moore degree ``T = 2(e - (n+1)j) + (j-1) + m`` where ``e`` is
the complex dimension of the ambient vector space; Alexander duality turns
this into cohomological degree ``k = 2e - 1 - T = (2n+1)j - m``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .conf import ConfSpec, conf_bm_poincare
from .liegroups import gl_poincare

__all__ = [
    "VARIANTS",
    "ParamDims",
    "PageEntry",
    "SpectralSequencePage",
    "param_dims",
    "build_e1_page",
    "diagonal_sum",
    "DiagonalSum",
    "stability_cutoff",
]

VARIANTS = ("full", "marked")


def _check_variant(variant: str) -> None:
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}, got {variant!r}")


@dataclass(frozen=True)
class ParamDims:
    d: int
    n: int
    dim_V: int
    dim_Vp: int
    e_d: int
    N: int
    stable_bound: int

    def ambient(self, variant: str) -> int:
        """Complex dimension of the vector space the discriminant lives in."""
        _check_variant(variant)
        return self.dim_V if variant == "full" else self.e_d


def param_dims(d: int, n: int) -> ParamDims:
    if d < 1 or n < 1:
        raise ValueError("param_dims needs d >= 1 and n >= 1")
    dim_V = comb(n + d, n)
    # vanishing at the marked point plus n prescribed first derivatives
    e_d = dim_V - (n + 1)
    N = (d - 1) // 2
    return ParamDims(d, n, dim_V, dim_V - 1, e_d, N, N)


@dataclass(frozen=True)
class PageEntry:
    column: int
    degree: int  # total Borel-Moore degree T
    rank: int
    source: ConfSpec
    conf_degree: int
    dual_degree: int  # cohomological degree 2e - 1 - T


@dataclass(frozen=True)
class SpectralSequencePage:
    params: ParamDims
    variant: str
    ambient_dim: int
    truncation_column: int
    stability_degree: int
    entries: dict[tuple[int, int], PageEntry] = field(default_factory=dict, compare=False)

    def columns(self) -> list[int]:
        return sorted({j for j, _ in self.entries})

    def column(self, j: int) -> list[PageEntry]:
        return [e for (c, _), e in sorted(self.entries.items()) if c == j]

    def rows(self) -> list[PageEntry]:
        return [self.entries[key] for key in sorted(self.entries)]

    def total_rank(self) -> int:
        return sum(e.rank for e in self.entries.values())

    @property
    def trusted_below(self) -> int:
        """Dual degrees k < this value are unaffected by the truncated tail."""
        return self.truncation_column - 1


def stability_cutoff(d: int, n: int, variant: str) -> int:
    """Borel-Moore degrees above 2e - N do not see the tail past column N."""
    if d < 3:
        raise ValueError("stability cutoff needs d >= 3")
    pd = param_dims(d, n)
    return 2 * pd.ambient(variant) - pd.N


def build_e1_page(d: int, n: int, variant: str) -> SpectralSequencePage:
    if d < 3:
        raise ValueError(f"E1 page needs d >= 3 (got d={d}); no column would survive truncation")
    pd = param_dims(d, n)
    e = pd.ambient(variant)
    if e - (n + 1) * pd.N < 0:
        raise ValueError(
            f"unsupported parameter range: strata dimension e - (n+1)N = {e - (n + 1) * pd.N} < 0"
        )
    punctured = variant == "marked"
    entries: dict[tuple[int, int], PageEntry] = {}
    for j in range(1, pd.N + 1):
        spec = ConfSpec(j, n, punctured)
        for m, rank in conf_bm_poincare(spec).ranks:
            T = 2 * (e - (n + 1) * j) + (j - 1) + m
            entries[(j, T)] = PageEntry(j, T, rank, spec, m, 2 * e - 1 - T)
    return SpectralSequencePage(
        params=pd,
        variant=variant,
        ambient_dim=e,
        truncation_column=pd.N,
        stability_degree=2 * e - pd.N,
        entries=entries,
    )


@dataclass(frozen=True)
class DiagonalSum:
    n: int
    k: int
    variant: str
    lhs: int
    rhs: int
    contributions: tuple[tuple[int, int, int], ...]  # (points j, conf degree m, rank)

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs

    def __iter__(self):
        return iter((self.lhs, self.rhs, self.equal))


def diagonal_sum(n: int, k: int, variant: str) -> DiagonalSum:
    """Compare the k-th antidiagonal of the E1 page with h^k of GL.

    The left side sums rank_{(2n+1)j - k} over UConf_j (closed for ``full``,
    punctured for ``marked``); the right side is h^k(GL_{n+1}) for ``full``
    and h^k(GL_n) for ``marked``.
    """
    _check_variant(variant)
    punctured = variant == "marked"
    contributions = []
    j = 0
    # ranks vanish once j exceeds n + 1 points
    while j <= n + 2:
        m = (2 * n + 1) * j - k
        if m >= 0:
            r = conf_bm_poincare(ConfSpec(j, n, punctured)).rank(m)
            if r:
                contributions.append((j, m, r))
        j += 1
    lhs = sum(r for _, _, r in contributions)
    group = gl_poincare(n + 1 if variant == "full" else n)
    return DiagonalSum(n, k, variant, lhs, group[k], tuple(contributions))
