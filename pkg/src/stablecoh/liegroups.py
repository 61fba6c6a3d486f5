"""Poincare polynomials of GL_m(C) and PGL_m(C) with rational coefficients.

Both are exterior algebras on odd generators: degrees 1, 3, ..., 2m-1 for
GL_m and 3, 5, ..., 2m-1 for PGL_m.  No Lie theory is computed here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .qpoly import ONE, IntPoly

__all__ = ["exterior_poincare", "gl_poincare", "pgl_poincare", "verify_gl_step", "GLStepReport"]


def exterior_poincare(degrees: Iterable[int]) -> IntPoly:
    out = ONE
    for deg in degrees:
        if deg < 1 or deg % 2 == 0:
            raise ValueError(f"exterior generators need positive odd degree, got {deg}")
        out = out * IntPoly({0: 1, deg: 1})
    return out


def gl_degrees(m: int) -> list[int]:
    return [2 * i - 1 for i in range(1, m + 1)]


def gl_poincare(m: int) -> IntPoly:
    if m < 0:
        raise ValueError("m must be nonnegative")
    return exterior_poincare(gl_degrees(m))


def pgl_poincare(m: int) -> IntPoly:
    if m < 1:
        raise ValueError("PGL_m needs m >= 1")
    return exterior_poincare(gl_degrees(m)[1:])


@dataclass(frozen=True)
class GLStepReport:
    n: int
    rows: tuple[tuple[int, int, int, int], ...]  # (k, h^k(GL_n), h^{k-2n-1}(GL_n), h^k(GL_{n+1}))
    passed: bool

    @property
    def witness(self) -> int | None:
        for k, a, b, c in self.rows:
            if a + b != c:
                return k
        return None


def verify_gl_step(n: int, k_max: int) -> GLStepReport:
    """Check h^k(GL_n) + h^(k-2n-1)(GL_n) = h^k(GL_(n+1)) for 0 <= k <= k_max."""
    small, big = gl_poincare(n), gl_poincare(n + 1)
    shift = 2 * n + 1
    rows = []
    for k in range(k_max + 1):
        a = small[k]
        b = small[k - shift] if k >= shift else 0
        rows.append((k, a, b, big[k]))
    return GLStepReport(n, tuple(rows), all(a + b == c for _, a, b, c in rows))
