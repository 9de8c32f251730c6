import pytest

from torushom.laurent import LaurentPoly, qbinom, qint
from torushom.moy import ladder_poly, moy_circle, sln_polynomial


def test_moy_circle():
    assert moy_circle(3, 1) == LaurentPoly({2: 1, 0: 1, -2: 1})
    assert moy_circle(2, 2) == LaurentPoly.one()
    assert moy_circle(4, 2) == qbinom(4, 2)
    assert moy_circle(4, 2).eval_at_one() == 6
    with pytest.raises(ValueError):
        moy_circle(3, 3)
    with pytest.raises(ValueError):
        moy_circle(1, 1)


def test_ladder_poly():
    for n in (2, 3, 5):
        assert ladder_poly(n, 0) == qint(n) * qint(n)
        assert ladder_poly(n, 1) == qint(n) * qint(n - 1)
    assert ladder_poly(2, 3) == qint(2) ** 3  # [2]^2 [2] [1]
    with pytest.raises(ValueError):
        ladder_poly(2, -1)


def test_sln_polynomial_reidemeister_one():
    for n in range(2, 9):
        assert sln_polynomial(n, 1) == qint(n), n


def test_sln_polynomial_unlink():
    for n in (2, 3, 4):
        assert sln_polynomial(n, 0) == qint(n) * qint(n)


def test_sln_polynomial_trefoil_sl2():
    # expanding the four resolution terms by hand:
    #   q^3 [2]^2 - 3 q^4 [2] + 3 q^5 [2]^2 - q^6 [2]^3 = q + q^3 + q^5 - q^9
    p = sln_polynomial(2, 3)
    assert p == LaurentPoly({1: 1, 3: 1, 5: 1, 9: -1})
    assert p.eval_at_one() == 2


def test_sln_polynomial_mirror_symmetry():
    for n in range(2, 6):
        for m in range(0, 9):
            assert sln_polynomial(n, -m) == sln_polynomial(n, m).bar(), (n, m)
