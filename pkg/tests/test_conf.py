import pytest

from stablecoh.conf import ConfSpec, conf_bm_poincare, total_conf_dimension, verify_split
from stablecoh.qpoly import gaussian_binomial


def ranks(j, n, punctured=False):
    return conf_bm_poincare(ConfSpec(j, n, punctured)).as_dict()


def test_examples():
    assert ranks(2, 1) == {2: 1}
    assert ranks(1, 2) == {0: 1, 2: 1, 4: 1}
    assert ranks(1, 1, punctured=True) == {2: 1}
    assert ranks(2, 1, punctured=True) == {}
    assert ranks(0, 3) == {0: 1}
    assert ranks(0, 3, punctured=True) == {0: 1}


def test_graded_dims_metadata():
    dims = conf_bm_poincare(ConfSpec(1, 1, True))
    assert dims.space == "UConf_1(P^1 - pt)"
    assert dims.twist == "sign"
    assert dims.rank(2) == 1 and dims.rank(0) == 0
    with pytest.raises(ValueError):
        ConfSpec(-1, 2)
    with pytest.raises(ValueError):
        ConfSpec(1, 2, twist="trivial")


@pytest.mark.parametrize("n", range(7))
def test_closed_forms(n):
    for j in range(n + 3):
        closed = conf_bm_poincare(ConfSpec(j, n)).as_poly()
        punct = conf_bm_poincare(ConfSpec(j, n, True)).as_poly()
        assert closed == gaussian_binomial(n + 1, j).substitute_power(2).shift(j * (j - 1))
        assert punct == gaussian_binomial(n, j).substitute_power(2).shift(j * (j + 1))
        assert closed.is_zero() == (j > n + 1)
        assert punct.is_zero() == (j > n)


def test_split_examples():
    r = verify_split(1, 1)
    assert r.passed
    assert r.rows == ((0, 1, 0, 1), (2, 1, 1, 0))
    r = verify_split(2, 1)
    assert r.passed and r.rows == ((2, 1, 0, 1),)
    assert verify_split(1, 0).passed
    with pytest.raises(ValueError):
        verify_split(0, 3)


def test_split_range():
    for n in range(6):
        for j in range(1, n + 2):
            assert verify_split(j, n).passed, (j, n)


@pytest.mark.parametrize("n, total", [(1, 4), (0, 2), (2, 8)])
def test_total_conf_dimension_examples(n, total):
    assert total_conf_dimension(n) == total


def test_total_conf_dimension_contributions():
    assert [conf_bm_poincare(ConfSpec(j, 1)).total() for j in range(3)] == [1, 2, 1]
    assert [conf_bm_poincare(ConfSpec(j, 2)).total() for j in range(4)] == [1, 3, 3, 1]
    assert [total_conf_dimension(n) for n in range(7)] == [2 ** (n + 1) for n in range(7)]
