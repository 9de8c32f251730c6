import pytest

from torushom.cohomring import flag_ring, gysin_circle_ut
from torushom.knotcomplex import (
    A_COMPLEX,
    THETA,
    UNKNOT,
    BigradedComplex,
    BigradedGroup,
    SummandDescriptor,
    bigraded_homology,
    build_A_complex,
    build_torus_complex,
    decompose_summands,
    dualize,
    euler_characteristic,
    summand_homology,
    torus_link_homology,
    unlink_homology,
)
from torushom.laurent import LaurentPoly, qint
from torushom.moy import sln_polynomial
from torushom.zlinalg import AbGroup, IntMatrix


def closed_form_total(n, m):
    """Total group of KR_N(T(2,m)) from the summand counts."""
    if m % 2 == 1:
        k = (m - 1) // 2
        return AbGroup(n + 2 * k * (n - 1), tuple([n] * k))
    k = m // 2
    return AbGroup(n * n + (2 * k - 2) * (n - 1), tuple([n] * (k - 1)))


def test_A_complex_structure():
    a = build_A_complex(2)
    assert list(a.positions()) == [-1, 0]
    assert a.diffs[0] == IntMatrix.from_rows([[0, 0], [2, 0]])
    assert a.qdegs[0] == [0, 2]
    assert a.qdegs[1] == [-2, 0]


def test_A_complex_homology_matches_unit_tangent_bundle():
    # the h = 0 row carries the even cohomology shifted by 2-2N, the
    # h = -1 row the odd cohomology shifted by 3-2N
    for n in range(2, 7):
        h = bigraded_homology(build_A_complex(n))
        ut = gysin_circle_ut(n)
        rebuilt = {}
        for d in ut.degrees():
            g = ut.degree(d)
            if d % 2 == 0:
                rebuilt[(0, d + 2 - 2 * n)] = g
            else:
                rebuilt[(-1, d + 3 - 2 * n)] = g
        assert h == BigradedGroup(rebuilt), n


def test_A_complex_euler_characteristic():
    for n in (2, 3, 4):
        pf = flag_ring(n).poincare_polynomial()
        chi = euler_characteristic(build_A_complex(n))
        assert chi == pf.shift(2 - 2 * n) - pf.shift(4 - 2 * n), n


def test_bigrading_placement():
    for n in range(2, 7):
        for (h, q), g in bigraded_homology(build_A_complex(n)).entries():
            if h == 0 and q == 0:
                assert g == AbGroup(0, (n,))
            elif h == 0:
                assert q % 2 == 0 and 2 - 2 * n <= q <= -2
                assert g == AbGroup.free(1)
            else:
                assert h == -1 and q % 2 == 0 and 2 <= q <= 2 * n - 2
                assert g == AbGroup.free(1)


def test_torus_complex_m1():
    for n in (2, 3, 4):
        h = bigraded_homology(build_torus_complex(n, 1))
        assert all(hh == 0 for (hh, _), _ in h.entries())
        assert h.total() == AbGroup.free(n)
        # graded rank [n]: q-degrees 1-n, 3-n, ..., n-1
        assert euler_characteristic(h) == qint(n)


def test_torus_complex_m2_m3():
    for n in (2, 3, 4, 5):
        assert bigraded_homology(build_torus_complex(n, 2)).total() == AbGroup.free(n * n)
        assert bigraded_homology(build_torus_complex(n, 3)).total() == AbGroup(
            3 * n - 2, (n,)
        )
    assert bigraded_homology(build_torus_complex(3, 4)).total() == AbGroup(13, (3,))


def test_torus_complex_rejects_bad_m():
    with pytest.raises(ValueError):
        build_torus_complex(2, 0)
    with pytest.raises(ValueError):
        build_torus_complex(2, -1)
    with pytest.raises(ValueError):
        build_torus_complex(1, 3)


def test_homogeneity_enforced():
    with pytest.raises(ValueError):
        BigradedComplex(0, [[0], [1]], [IntMatrix.from_rows([[1]])])
    # matching q-degrees are fine
    BigradedComplex(0, [[1], [1]], [IntMatrix.from_rows([[1]])])


def test_dd_zero_enforced():
    d = IntMatrix.from_rows([[1]])
    with pytest.raises(ValueError):
        BigradedComplex(0, [[0], [0], [0]], [d, d])


def test_decompose_summands():
    assert decompose_summands(3, 1) == [SummandDescriptor(UNKNOT, 0, 1 - 3 + 2 * 1)]
    kinds4 = [d.kind for d in decompose_summands(2, 4)]
    assert sorted(kinds4) == sorted([UNKNOT, A_COMPLEX, THETA])
    kinds5 = [d.kind for d in decompose_summands(2, 5)]
    assert sorted(kinds5) == sorted([UNKNOT, A_COMPLEX, A_COMPLEX])
    with pytest.raises(ValueError):
        decompose_summands(2, 0)


def test_summand_shifts():
    n, m = 3, 5
    descs = decompose_summands(n, m)
    base = m * (n - 1)
    assert descs[0] == SummandDescriptor(UNKNOT, 0, 1 - n + base)
    assert SummandDescriptor(A_COMPLEX, -2, 4 + base) in descs
    assert SummandDescriptor(A_COMPLEX, -4, 8 + base) in descs


def test_pipelines_agree():
    for n in range(2, 6):
        for m in range(1, 9):
            a = bigraded_homology(build_torus_complex(n, m))
            b = summand_homology(n, decompose_summands(n, m))
            assert a == b, (n, m)


def test_closed_form_totals():
    for n in range(2, 6):
        for m in range(1, 9):
            assert (
                bigraded_homology(build_torus_complex(n, m)).total()
                == closed_form_total(n, m)
            ), (n, m)


def test_summand_homology_examples():
    # m = 1: q^(1-N) H*(CP^(N-1)) at h = 0
    for n in (2, 3):
        h = summand_homology(n, decompose_summands(n, 1))
        expected = BigradedGroup(
            {(0, 2 * i + 1 - n + (n - 1)): AbGroup.free(1) for i in range(n)}
        )
        assert h == expected, n
    assert summand_homology(3, decompose_summands(3, 2)).total() == AbGroup.free(9)
    assert summand_homology(2, decompose_summands(2, 3)).total() == AbGroup(4, (2,))


def test_euler_characteristic_complex_vs_homology():
    for n in (2, 3):
        for m in (1, 2, 3, 4, 5):
            c = build_torus_complex(n, m)
            assert euler_characteristic(c) == euler_characteristic(bigraded_homology(c))


def test_euler_characteristic_matches_skein():
    for n in range(2, 6):
        for m in range(1, 9):
            assert euler_characteristic(build_torus_complex(n, m)) == sln_polynomial(n, m)


def test_euler_characteristic_rejects_other_types():
    with pytest.raises(TypeError):
        euler_characteristic(42)


def test_dualize():
    g = BigradedGroup({(0, 3): AbGroup.free(1)})
    assert dualize(g) == BigradedGroup({(0, -3): AbGroup.free(1)})
    t = BigradedGroup({(-2, 7): AbGroup(0, (5,))})
    assert dualize(t) == BigradedGroup({(3, -7): AbGroup(0, (5,))})
    for n, m in ((2, 3), (3, 4)):
        h = torus_link_homology(n, m)
        assert dualize(dualize(h)) == h
        assert euler_characteristic(dualize(h)) == sln_polynomial(n, -m)


def test_unlink():
    assert unlink_homology(2).total() == AbGroup.free(4)
    u = unlink_homology(3)
    assert u.total() == AbGroup.free(9)
    # Poincare polynomial is ([3] shifted)^2
    assert euler_characteristic(u) == qint(3) * qint(3)
    assert torus_link_homology(3, 0) == u


def test_torus_link_homology_negative_m():
    assert torus_link_homology(2, -3) == dualize(torus_link_homology(2, 3))


def test_bigraded_group_json():
    g = torus_link_homology(3, 3)
    data = g.to_json(n=3, m=3)
    assert data["N"] == 3 and data["m"] == 3
    hq = [(e["h"], e["q"]) for e in data["groups"]]
    assert hq == sorted(hq)
    assert BigradedGroup.from_json(data) == g
