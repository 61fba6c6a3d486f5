import pytest
from hypothesis import given
from hypothesis import strategies as st

from stablecoh.liegroups import gl_poincare, pgl_poincare
from stablecoh.qpoly import IntPoly
from stablecoh.stablering import (
    SPACES,
    RingGenerator,
    contradiction_series,
    degenerate_contradiction,
    fiberwise_chern_coefficient,
    monomial_product,
    ring_poincare,
    ring_presentation,
    serre_einfty,
    twisted_coefficients,
)


def P(*degrees):
    out = {}
    for d in degrees:
        out[d] = out.get(d, 0) + 1
    return IntPoly(out)


def test_generator_validation():
    with pytest.raises(ValueError):
        RingGenerator("u2", 2)
    with pytest.raises(ValueError):
        RingGenerator("x", 3, "nilpotent_poly", nu=2)
    with pytest.raises(ValueError):
        RingGenerator("x", 2, "nilpotent_poly", nu=0)


def test_presentation_examples():
    m = ring_presentation("Mstar", 9, 2)
    assert [(g.name, g.degree, g.nu) for g in m.generators] == [("x", 2, 2)]
    assert ring_poincare(m) == P(0, 2)
    u = ring_presentation("Ustar", 9, 2)
    assert [g.name for g in u.generators] == ["u3", "u5", "x"]
    assert ring_poincare(u) == P(0, 3) * P(0, 5) * P(0, 2)
    x = ring_presentation("Xstar", 5, 1)
    assert [g.degree for g in x.generators] == [1, 3, 2]
    assert x.generators[-1].nu == 1
    assert ring_poincare(x) == P(0, 1) * P(0, 3)


def test_presentation_generators_and_windows():
    n = 3
    degs = lambda s: [g.degree for g in ring_presentation(s, 13, n).generators]
    assert degs("X") == [1, 3, 5, 7]
    assert degs("Xv") == [1, 3, 5]
    assert degs("Xp") == [1, 3, 5, 5]
    assert degs("Xstar") == [1, 3, 5, 7, 2]
    assert degs("Ustar") == [3, 5, 7, 2]
    assert degs("Mstar") == [2]
    assert ring_presentation("X", 13, n).bound == 7
    assert ring_presentation("Ustar", 13, n).bound == 6
    assert ring_presentation("Ustar", 13, n).hypothesis_ok
    assert not ring_presentation("Ustar", 12, n).hypothesis_ok
    assert ring_presentation("X^p", 13, n).space == "Xp"
    with pytest.raises(ValueError):
        ring_presentation("Y", 13, n)


def test_ring_poincare_truncated():
    assert ring_poincare(ring_presentation("Mstar", 9, 3)) == P(0, 2, 4)
    got = ring_poincare(ring_presentation("Xstar", 9, 2), truncate=True)
    assert got == IntPoly({0: 1, 1: 1, 2: 1, 3: 2}, trunc=4)


@pytest.mark.parametrize("space", SPACES)
@pytest.mark.parametrize("n", range(1, 6))
def test_basis_matches_poincare(space, n):
    pres = ring_presentation(space, 4 * n + 1, n)
    counts = {}
    for mono in pres.basis(20):
        counts[pres.degree(mono)] = counts.get(pres.degree(mono), 0) + 1
    assert IntPoly(counts, 21) == ring_poincare(pres).truncate(21)


def test_monomial_product_examples():
    m = ring_presentation("Mstar", 9, 3)
    assert monomial_product(m, m.monomial(x=2), m.monomial(x=1)) is None
    assert monomial_product(m, m.monomial(x=1), m.monomial(x=1)) == (1, m.monomial(x=2))
    u = ring_presentation("Ustar", 9, 2)
    u3, u5 = u.monomial(u3=1), u.monomial(u5=1)
    both = u.monomial(u3=1, u5=1)
    assert monomial_product(u, u3, u5) == (1, both)
    assert monomial_product(u, u5, u3) == (-1, both)
    assert monomial_product(u, u3, u3) is None
    assert monomial_product(u, u.monomial(x=1), u3) == (1, u.monomial(u3=1, x=1))
    with pytest.raises(ValueError):
        monomial_product(u, u.monomial(x=2), u3)


@pytest.mark.parametrize("n", range(1, 6))
def test_powers_of_x(n):
    for space in ("Xstar", "Ustar", "Mstar"):
        pres = ring_presentation(space, 4 * n + 1, n)
        acc = (1, pres.one)
        for _ in range(n - 1):
            acc = monomial_product(pres, acc[1], pres.monomial(x=1))
            assert acc is not None
        assert acc == (1, pres.monomial(x=n - 1))
        if n > 1:
            assert monomial_product(pres, acc[1], pres.monomial(x=1)) is None


@st.composite
def monomial_triples(draw):
    n = draw(st.integers(1, 5))
    space = draw(st.sampled_from(SPACES))
    pres = ring_presentation(space, 4 * n + 1, n)
    basis = list(pres.basis())
    return pres, draw(st.sampled_from(basis)), draw(st.sampled_from(basis)), draw(st.sampled_from(basis))


def _mul(pres, a, b):
    if a is None or b is None:
        return None
    r = monomial_product(pres, a[1], b[1])
    return None if r is None else (a[0] * b[0] * r[0], r[1])


@given(monomial_triples())
def test_graded_commutative_and_associative(triple):
    pres, a, b, c = triple
    A, B, C = (1, a), (1, b), (1, c)
    assert _mul(pres, _mul(pres, A, B), C) == _mul(pres, A, _mul(pres, B, C))
    ab, ba = _mul(pres, A, B), _mul(pres, B, A)
    if ab is None:
        assert ba is None
    else:
        assert ab == ((-1) ** (pres.degree(a) * pres.degree(b)) * ba[0], ba[1])


def test_consistency_chain():
    for n in range(1, 6):
        for d in (4 * n + 1, 4 * n + 7):
            xs = ring_poincare(ring_presentation("Xstar", d, n))
            assert xs == ring_poincare(ring_presentation("Ustar", d, n)) * P(0, 1)
            assert xs == gl_poincare(n + 1) * ring_poincare(ring_presentation("Mstar", d, n))
            xp = ring_poincare(ring_presentation("Xp", d, n))
            assert xp == ring_poincare(ring_presentation("Xv", d, n)) * P(0, 2 * n - 1)


def test_serre_n2():
    r = serre_einfty(2)
    assert r.einfty_poincare == P(0, 3) * P(0, 2, 5, 7)
    assert r.einfty_poincare == P(0, 3) * P(0, 5) * P(0, 2)
    assert r.matches_target


def test_serre_n3():
    r = serre_einfty(3)
    assert r.einfty_poincare == P(0, 3) * P(0, 5) * P(0, 7) * P(0, 2, 4)
    assert r.matches_target


def test_serre_degenerate_case():
    r = serre_einfty(2, transgression=False)
    # Lambda(u3) x Lambda(e3) x Q[x]/(x^3): 2 * 2 * 3
    assert r.einfty_poincare == r.e2_poincare
    assert r.einfty_poincare.total() == 12
    assert r.target.total() == 8
    assert not r.matches_target


@pytest.mark.parametrize("n", range(2, 6))
def test_serre_range(n):
    assert serre_einfty(n).matches_target
    assert not serre_einfty(n, transgression=False).matches_target
    geometric = IntPoly({2 * i: 1 for i in range(n)})
    assert serre_einfty(n).target == pgl_poincare(n + 1) * geometric
    assert serre_einfty(n).target == ring_poincare(ring_presentation("Ustar", 4 * n + 1, n))


def test_serre_rejects_n1():
    with pytest.raises(ValueError):
        serre_einfty(1)


def test_contradiction_examples():
    assert contradiction_series(1, 6) == IntPoly({0: 1, 2: 1, 3: -1, 5: -1}, trunc=6)
    assert degenerate_contradiction(1, 6) == 3
    assert degenerate_contradiction(2, 4) is None
    assert degenerate_contradiction(2, 8) == 5


def test_contradiction_threshold():
    for n in range(1, 7):
        for bound in range(1, 4 * n + 6):
            want = 2 * n + 1 if bound > 2 * n + 1 else None
            assert degenerate_contradiction(n, bound) == want


def test_twisted_examples():
    assert twisted_coefficients(9, 2, 1).rank == 0
    assert twisted_coefficients(13, 3, 0).rank == 1
    assert twisted_coefficients(13, 3, 2).rank == 0
    assert [twisted_coefficients(13, 3, k).rank for k in range(6)] == gl_poincare(4).dense(6)
    assert all(twisted_coefficients(13, 3, k).guaranteed for k in range(6))
    assert not twisted_coefficients(13, 3, 6).guaranteed
    assert not twisted_coefficients(12, 3, 0).guaranteed


def test_chern_coefficient():
    c = fiberwise_chern_coefficient(5, 1)
    assert (c.coefficient, c.nonvanishing) == (15, True)
    c = fiberwise_chern_coefficient(9, 2)
    assert (c.coefficient, c.nonvanishing) == (54, True)
    for n in range(1, 6):
        c = fiberwise_chern_coefficient(n + 1, n)
        assert (c.coefficient, c.nonvanishing) == (0, False)
    with pytest.raises(ValueError):
        fiberwise_chern_coefficient(0, 1)
