"""Verification harness: every identity the library relies on, as a sweep.

Each ``check_*`` function runs one family of identities over explicit
parameter ranges and returns a :class:`VerificationReport`.  A failing
report always carries a witness (the first parameter tuple that broke).
"""

from __future__ import annotations

import os
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from math import comb
from typing import Any, Callable

from .conf import ConfSpec, conf_bm_poincare, total_conf_dimension, verify_split
from .liegroups import gl_poincare, pgl_poincare, verify_gl_step
from .qpoly import ONE, IntPoly, gaussian_binomial, series_inverse
from .schubert import enumerate_symbols, grassmannian_poincare, total_betti_sum
from .stablering import (
    SPACES,
    degenerate_contradiction,
    fiberwise_chern_coefficient,
    monomial_product,
    ring_poincare,
    ring_presentation,
    serre_einfty,
    twisted_coefficients,
)
from .vassiliev import build_e1_page, diagonal_sum, param_dims, stability_cutoff

PASS, FAIL, UNSUPPORTED = "pass", "fail", "unsupported"

THREADS_ENV = "STABLECOH_THREADS"


class Failure(Exception):
    def __init__(self, witness: dict[str, Any]):
        super().__init__(witness)
        self.witness = witness


def expect(condition: bool, **witness: Any) -> None:
    if not condition:
        raise Failure(witness)


@dataclass
class VerificationReport:
    check: str
    params: dict[str, Any]
    status: str
    witness: dict[str, Any] | None = None
    elapsed: float = field(default=0.0, compare=False)
    cases: int = 0

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def row(self, timing: bool = False) -> dict[str, Any]:
        out: dict[str, Any] = {
            "check": self.check,
            "params": self.params,
            "status": self.status,
            "cases": self.cases,
            "witness": self.witness,
        }
        if timing:
            out["elapsed"] = round(self.elapsed, 6)
        return out


def _run(name: str, params: dict[str, Any], body: Callable[[], int]) -> VerificationReport:
    start = time.perf_counter()
    try:
        cases = body()
        status, witness = (PASS if cases else UNSUPPORTED), None
    except Failure as exc:
        cases, status, witness = 0, FAIL, exc.witness
    return VerificationReport(name, params, status, witness, time.perf_counter() - start, cases)


# -- acceptance-level checks -----------------------------------------------

def check_schubert_oracle(m_max: int = 12) -> VerificationReport:
    def body():
        cases = 0
        for m in range(m_max + 1):
            for p in range(m + 1):
                enum = grassmannian_poincare(p, m)
                oracle = gaussian_binomial(m, p).substitute_power(2)
                expect(enum == oracle, p=p, m=m, enumerated=str(enum), oracle=str(oracle))
                cases += 1
        return cases

    return _run("schubert_oracle", {"m_max": m_max}, body)


def check_two_powers(m_max: int = 16, n_max: int = 6) -> VerificationReport:
    def body():
        for m in range(m_max + 1):
            expect(total_betti_sum(m) == 2**m, identity="grassmannian", m=m)
        for n in range(n_max + 1):
            expect(total_conf_dimension(n) == 2 ** (n + 1), identity="configuration", n=n)
        return m_max + n_max + 2

    return _run("two_powers", {"m_max": m_max, "n_max": n_max}, body)


def check_split(n_max: int = 5) -> VerificationReport:
    def body():
        cases = 0
        for n in range(n_max + 1):
            for j in range(1, n + 2):
                report = verify_split(j, n)
                expect(report.passed, j=j, n=n, degree=report.witness)
                cases += 1
        return cases

    return _run("split_decomposition", {"n_max": n_max}, body)


def check_diagonal_full(n_max: int = 5) -> VerificationReport:
    def body():
        cases = 0
        for n in range(1, n_max + 1):
            for k in range((2 * n + 1) * (n + 1) + 1):
                s = diagonal_sum(n, k, "full")
                expect(s.equal, n=n, k=k, lhs=s.lhs, rhs=s.rhs)
                cases += 1
        return cases

    return _run("diagonal_full", {"n_max": n_max}, body)


def check_diagonal_marked(n_max: int = 5, step_n_max: int = 8) -> VerificationReport:
    def body():
        cases = 0
        for n in range(1, n_max + 1):
            # beyond this degree both sides vanish identically
            for k in range((2 * n + 1) * (n + 1) + 1):
                s = diagonal_sum(n, k, "marked")
                expect(s.equal, n=n, k=k, lhs=s.lhs, rhs=s.rhs)
                cases += 1
        for n in range(1, step_n_max + 1):
            report = verify_gl_step(n, (n + 1) ** 2)
            expect(report.passed, identity="gl_step", n=n, k=report.witness)
            cases += 1
        return cases

    return _run("diagonal_marked", {"n_max": n_max, "step_n_max": step_n_max}, body)


def check_e1_pages(pairs) -> VerificationReport:
    pairs = sorted(pairs)

    def body():
        cases = 0
        for d, n in pairs:
            for variant in ("full", "marked"):
                page = build_e1_page(d, n, variant)
                e = page.ambient_dim
                expect(
                    stability_cutoff(d, n, variant) == 2 * e - page.params.N == page.stability_degree,
                    d=d, n=n, variant=variant, item="stability_cutoff",
                )
                limit = n + 1 if variant == "full" else n
                expect(all(j <= limit for j in page.columns()), d=d, n=n, variant=variant,
                       item="empty_columns")
                for entry in page.rows():
                    expect(entry.dual_degree == 2 * e - 1 - entry.degree,
                           d=d, n=n, variant=variant, column=entry.column, T=entry.degree)
                    s = diagonal_sum(n, entry.dual_degree, variant)
                    expect(
                        (entry.column, entry.conf_degree, entry.rank) in s.contributions,
                        d=d, n=n, variant=variant, column=entry.column, k=entry.dual_degree,
                    )
                    cases += 1
        return cases

    return _run("e1_page_consistency", {"pairs": [list(p) for p in pairs]}, body)


def check_serre(n_max: int = 5) -> VerificationReport:
    def body():
        cases = 0
        for n in range(2, n_max + 1):
            result = serre_einfty(n)
            expect(result.matches_target, n=n, einfty=str(result.einfty_poincare))
            ustar = ring_poincare(ring_presentation("Ustar", 4 * n + 1, n))
            expect(result.target == ustar, n=n, item="ustar_target")
            expect(not serre_einfty(n, transgression=False).matches_target, n=n,
                   item="degenerate_case_matches")
            cases += 1
        return cases

    return _run("serre_einfty", {"n_max": n_max}, body)


def check_contradiction(n_max: int = 6) -> VerificationReport:
    def body():
        cases = 0
        for n in range(1, n_max + 1):
            for bound in range(1, 2 * (2 * n + 1) + 3):
                got = degenerate_contradiction(n, bound)
                want = 2 * n + 1 if bound > 2 * n + 1 else None
                expect(got == want, n=n, bound=bound, got=got, expected=want)
                cases += 1
        return cases

    return _run("divisibility_contradiction", {"n_max": n_max}, body)


def _hypothesis_degrees(n: int, d_max: int | None) -> list[int]:
    low = 4 * n + 1
    if d_max is None or d_max < low:
        return [low]
    return list(range(low, d_max + 1))


def check_ring_chain(n_max: int = 5, d_max: int | None = None) -> VerificationReport:
    def body():
        cases = 0
        for n in range(1, n_max + 1):
            for d in _hypothesis_degrees(n, d_max):
                xs = ring_poincare(ring_presentation("Xstar", d, n))
                us = ring_poincare(ring_presentation("Ustar", d, n))
                ms = ring_poincare(ring_presentation("Mstar", d, n))
                expect(xs == us * IntPoly({0: 1, 1: 1}), n=n, d=d, item="Xstar=Ustar(1+t)")
                expect(xs == gl_poincare(n + 1) * ms, n=n, d=d, item="Xstar=GL*Mstar")
                for space in ("Xstar", "Ustar", "Mstar"):
                    pres = ring_presentation(space, d, n)
                    x = pres.index("x")
                    last = pres.monomial(x=n - 1)
                    gen = pres.monomial(x=1) if n > 1 else None
                    expect(pres.is_normal(last), n=n, space=space, item="x^(n-1) nonzero")
                    expect(not pres.is_normal(pres.monomial(x=n)), n=n, space=space,
                           item="x^n outside the basis")
                    if gen is not None:
                        expect(monomial_product(pres, last, gen) is None, n=n, space=space,
                               item="x^n = 0")
                    expect(pres.generators[x].nu == n, n=n, space=space)
                window = (d - 1) // 2
                gl = gl_poincare(n + 1)
                for k in range(window):
                    tw = twisted_coefficients(d, n, k)
                    want = 0 if n % 2 == 0 else gl[k]
                    expect(tw.guaranteed and tw.rank == want, n=n, d=d, k=k, rank=tw.rank)
                cases += 1
        return cases

    return _run("ring_chain", {"n_max": n_max, "d_max": d_max}, body)


# -- module invariants -----------------------------------------------------

def _random_poly(rng: random.Random, max_degree: int) -> IntPoly:
    deg = rng.randint(0, max_degree)
    return IntPoly({rng.randint(0, deg): rng.randint(-9, 9) for _ in range(rng.randint(0, 6))})


def check_qpoly(seed: int = 0, trials: int = 50) -> VerificationReport:
    def body():
        rng = random.Random(seed)
        for i in range(trials):
            a, b, c = (_random_poly(rng, 64) for _ in range(3))
            expect(a * b == b * a, trial=i, law="commutative")
            expect((a * b) * c == a * (b * c), trial=i, law="associative")
            expect(a * (b + c) == a * b + a * c, trial=i, law="distributive")
            unit = IntPoly({0: rng.choice((1, -1))}) + _random_poly(rng, 12).shift(1)
            N = rng.randint(0, 30)
            expect(unit * series_inverse(unit, N) == ONE.truncate(N), trial=i, law="inverse")
        for m in range(13):
            for p in range(m + 1):
                g = gaussian_binomial(m, p)
                expect(g == gaussian_binomial(m, m - p), m=m, p=p, law="symmetry")
                expect(g.evaluate(1) == comb(m, p), m=m, p=p, law="q=1")
        return trials + 91

    return _run("qpoly_laws", {"seed": seed, "trials": trials}, body)


def check_schubert_shape(m_max: int = 12) -> VerificationReport:
    def body():
        cases = 0
        for m in range(m_max + 1):
            for p in range(m + 1):
                expect(len(enumerate_symbols(p, m)) == comb(m, p), m=m, p=p, item="count")
                poly = grassmannian_poincare(p, m)
                expect(poly.is_palindromic(2 * p * (m - p)), m=m, p=p, item="palindromic")
                cases += 1
        return cases

    return _run("schubert_shape", {"m_max": m_max}, body)


def check_conf_closed_forms(n_max: int = 6) -> VerificationReport:
    def body():
        cases = 0
        for n in range(n_max + 1):
            for j in range(n + 3):
                closed = conf_bm_poincare(ConfSpec(j, n)).as_poly()
                punct = conf_bm_poincare(ConfSpec(j, n, True)).as_poly()
                expect(closed == gaussian_binomial(n + 1, j).substitute_power(2).shift(j * (j - 1)),
                       n=n, j=j, item="closed")
                expect(punct == gaussian_binomial(n, j).substitute_power(2).shift(j * (j + 1)),
                       n=n, j=j, item="punctured")
                expect(closed.is_zero() == (j > n + 1), n=n, j=j, item="closed vanishing")
                expect(punct.is_zero() == (j > n), n=n, j=j, item="punctured vanishing")
                cases += 1
        return cases

    return _run("conf_closed_forms", {"n_max": n_max}, body)


def check_gl(m_max: int = 16) -> VerificationReport:
    def body():
        for m in range(m_max + 1):
            expect(gl_poincare(m).evaluate(1) == 2**m, m=m, item="total")
            if m >= 1:
                expect(gl_poincare(m) == pgl_poincare(m) * IntPoly({0: 1, 1: 1}), m=m,
                       item="gl=pgl(1+t)")
        return m_max + 1

    return _run("gl_identities", {"m_max": m_max}, body)


def check_diagonal_totals(n_max: int = 5) -> VerificationReport:
    def body():
        for n in range(1, n_max + 1):
            top = (2 * n + 1) * (n + 1)
            total = sum(diagonal_sum(n, k, "full").lhs for k in range(top + 1))
            expect(total == total_conf_dimension(n) == 2 ** (n + 1), n=n, total=total)
        return n_max

    return _run("diagonal_totals", {"n_max": n_max}, body)


def check_ring_basis(n_max: int = 5, max_degree: int = 20, seed: int = 0) -> VerificationReport:
    def body():
        rng = random.Random(seed)
        cases = 0
        for n in range(1, n_max + 1):
            d = 4 * n + 1
            for space in SPACES:
                pres = ring_presentation(space, d, n)
                counts: dict[int, int] = {}
                for mono in pres.basis(max_degree):
                    deg = pres.degree(mono)
                    counts[deg] = counts.get(deg, 0) + 1
                closed = ring_poincare(pres).truncate(max_degree + 1)
                expect(IntPoly(counts, max_degree + 1) == closed, n=n, space=space,
                       item="basis count")
                basis = list(pres.basis())
                for _ in range(20):
                    a, b, c = (rng.choice(basis) for _ in range(3))
                    ab, ba = monomial_product(pres, a, b), monomial_product(pres, b, a)
                    expect((ab is None) == (ba is None), n=n, space=space, item="commutes")
                    if ab is not None:
                        sign = (-1) ** (pres.degree(a) * pres.degree(b))
                        expect(ab == (sign * ba[0], ba[1]), n=n, space=space, item="koszul")
                    left = _triple(pres, a, b, c, left_first=True)
                    right = _triple(pres, a, b, c, left_first=False)
                    expect(left == right, n=n, space=space, item="associative")
                cases += 1
            xp = ring_poincare(ring_presentation("Xp", d, n))
            xv = ring_poincare(ring_presentation("Xv", d, n))
            expect(xp == xv * IntPoly({0: 1, 2 * n - 1: 1}), n=n, item="Xp=Xv(1+t^(2n-1))")
        return cases

    return _run("ring_basis", {"n_max": n_max, "max_degree": max_degree, "seed": seed}, body)


def _triple(pres, a, b, c, left_first):
    if left_first:
        first = monomial_product(pres, a, b)
        if first is None:
            return None
        second = monomial_product(pres, first[1], c)
    else:
        first = monomial_product(pres, b, c)
        if first is None:
            return None
        second = monomial_product(pres, a, first[1])
    if second is None:
        return None
    return first[0] * second[0], second[1]


def check_chern(n_max: int = 5, d_max: int = 30) -> VerificationReport:
    def body():
        for n in range(1, n_max + 1):
            for d in range(1, d_max + 1):
                c = fiberwise_chern_coefficient(d, n)
                expect(c.coefficient == d * (d - n - 1), n=n, d=d)
                expect(c.nonvanishing == (c.coefficient > 0), n=n, d=d)
        return n_max * d_max

    return _run("chern_coefficient", {"n_max": n_max, "d_max": d_max}, body)


# -- the full suite --------------------------------------------------------

def page_pairs(n_max: int, d_max: int) -> list[tuple[int, int]]:
    pairs = []
    for d, n in product(range(3, d_max + 1), range(1, n_max + 1)):
        pd = param_dims(d, n)
        if pd.e_d - (n + 1) * pd.N >= 0:
            pairs.append((d, n))
    return pairs


def suite(n_max: int, d_max: int) -> list[Callable[[], VerificationReport]]:
    """Every check, with ranges scaled by ``n_max`` and ``d_max``.

    Grassmannian and polynomial sweeps never drop below their default
    ranges; everything indexed by the projective dimension uses ``n_max``.
    """
    m_max = max(12, n_max + 1)
    return [
        lambda: check_schubert_oracle(m_max),
        lambda: check_two_powers(max(16, m_max), n_max),
        lambda: check_split(n_max),
        lambda: check_diagonal_full(n_max),
        lambda: check_diagonal_marked(n_max, max(8, n_max)),
        lambda: check_e1_pages(page_pairs(n_max, d_max)),
        lambda: check_serre(n_max),
        lambda: check_contradiction(n_max),
        lambda: check_ring_chain(n_max, d_max),
        lambda: check_qpoly(),
        lambda: check_schubert_shape(m_max),
        lambda: check_conf_closed_forms(n_max),
        lambda: check_gl(max(16, n_max)),
        lambda: check_diagonal_totals(n_max),
        lambda: check_ring_basis(n_max),
        lambda: check_chern(n_max, max(d_max, 4 * n_max + 1)),
    ]


def thread_count() -> int:
    raw = os.environ.get(THREADS_ENV)
    if raw is None:
        return min(8, os.cpu_count() or 1)
    try:
        value = int(raw)
    except ValueError:
        value = 0
    if value < 1:
        raise ValueError(f"{THREADS_ENV} must be a positive integer, got {raw!r}")
    return value


def verify_all(n_max: int, d_max: int, threads: int | None = None) -> list[VerificationReport]:
    """Run the full suite; output order is fixed regardless of scheduling."""
    jobs = suite(n_max, d_max)
    threads = threads or thread_count()
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda job: job(), jobs))
