import pytest

from stablecoh.conf import ConfSpec
from stablecoh.liegroups import gl_poincare
from stablecoh.qpoly import IntPoly, gaussian_binomial
from stablecoh.vassiliev import (
    build_e1_page,
    diagonal_sum,
    param_dims,
    stability_cutoff,
)


def test_param_dims_examples():
    pd = param_dims(5, 1)
    assert (pd.dim_V, pd.dim_Vp, pd.e_d, pd.N, pd.stable_bound) == (6, 5, 4, 2, 2)
    pd = param_dims(3, 2)
    assert (pd.dim_V, pd.e_d, pd.N) == (10, 7, 1)
    for n in range(1, 5):
        pd = param_dims(1, n)
        assert (pd.dim_V, pd.e_d, pd.N) == (n + 1, 0, 0)
    assert param_dims(4, 1).N == 1  # floor for even d
    with pytest.raises(ValueError):
        param_dims(0, 2)
    with pytest.raises(ValueError):
        param_dims(3, 0)


def test_column_count_threshold():
    for d in range(1, 12):
        assert (param_dims(d, 2).N >= 1) == (d >= 3)


def test_page_marked_d5_n1():
    page = build_e1_page(5, 1, "marked")
    (entry,) = page.rows()
    assert entry.column == 1 and entry.source == ConfSpec(1, 1, True)
    assert (entry.conf_degree, entry.degree, entry.dual_degree, entry.rank) == (2, 6, 1, 1)
    assert page.stability_degree == 6 and page.truncation_column == 2


def test_page_marked_d3_n1():
    page = build_e1_page(3, 1, "marked")
    (entry,) = page.rows()
    assert (entry.column, entry.degree, entry.dual_degree) == (1, 2, 1)


def test_page_full_d5_n1():
    page = build_e1_page(5, 1, "full")
    col1 = page.column(1)
    assert [(e.degree, e.dual_degree) for e in col1] == [(8, 3), (10, 1)]
    assert all(e.source == ConfSpec(1, 1) for e in col1)


def test_page_rejects_small_d():
    with pytest.raises(ValueError):
        build_e1_page(2, 1, "full")
    with pytest.raises(ValueError):
        build_e1_page(5, 1, "other")


@pytest.mark.parametrize("d, n", [(5, 1), (7, 1), (9, 2), (13, 3), (17, 4)])
def test_page_shift_equation(d, n):
    for variant in ("full", "marked"):
        page = build_e1_page(d, n, variant)
        e = page.ambient_dim
        limit = n + 1 if variant == "full" else n
        assert all(j <= limit for j in page.columns())
        for entry in page.rows():
            j, m = entry.column, entry.conf_degree
            assert entry.degree == 2 * (e - (n + 1) * j) + (j - 1) + m
            assert entry.dual_degree == 2 * e - 1 - entry.degree == (2 * n + 1) * j - m
            assert entry.rank > 0


@pytest.mark.parametrize(
    "args, expected", [((5, 1, "marked"), 6), ((3, 1, "marked"), 3), ((3, 2, "marked"), 13)]
)
def test_stability_cutoff(args, expected):
    assert stability_cutoff(*args) == expected


def test_diagonal_examples():
    assert tuple(diagonal_sum(1, 4, "full")) == (1, 1, True)
    assert diagonal_sum(1, 4, "full").contributions == ((2, 2, 1),)
    for n in range(1, 4):
        for variant in ("full", "marked"):
            assert tuple(diagonal_sum(n, 0, variant)) == (1, 1, True)
    s = diagonal_sum(2, 6, "full")
    assert (s.lhs, s.rhs) == (1, 1) and s.contributions == ((2, 4, 1),)
    s = diagonal_sum(1, 1, "marked")
    assert (s.lhs, s.rhs) == (1, 1) and s.contributions == ((1, 2, 1),)


def test_diagonal_n1_profile():
    assert [diagonal_sum(1, k, "full").lhs for k in range(6)] == [1, 1, 0, 1, 1, 0]
    assert [diagonal_sum(2, k, "full").lhs for k in (4, 6, 8, 9)] == [1, 1, 1, 1]


def q_binomial_theorem(m):
    """sum_j t^(j^2) [m, j]_(t^2), which must equal prod (1 + t^(2i-1))."""
    out = IntPoly()
    for j in range(m + 1):
        out = out + gaussian_binomial(m, j).substitute_power(2).shift(j * j)
    return out


@pytest.mark.parametrize("n", range(1, 6))
def test_diagonal_matches_q_binomial_theorem(n):
    top = (2 * n + 1) * (n + 1) + 3
    full = IntPoly({k: diagonal_sum(n, k, "full").lhs for k in range(top)})
    marked = IntPoly({k: diagonal_sum(n, k, "marked").lhs for k in range(top)})
    assert full == q_binomial_theorem(n + 1) == gl_poincare(n + 1)
    assert marked == q_binomial_theorem(n) == gl_poincare(n)
    assert full.total() == 2 ** (n + 1)
