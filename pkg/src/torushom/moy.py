"""MOY-calculus evaluations for the closed webs reachable from T(2,m).

Every resolution of the closed 2-strand braid with j thick rungs gives the
same ladder web, so the full cube of 2^m resolutions collapses to a
binomial sum.  The webs that occur need only four local relations: the
1- and 2-labeled circles, the bigon and the digon.
"""

from __future__ import annotations

from math import comb

from .laurent import LaurentPoly, qbinom, qint


def moy_circle(n: int, label: int) -> LaurentPoly:
    """Value of a single circle: [N] for a 1-labeled one, [N choose 2]
    for a 2-labeled one."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if label == 1:
        return qint(n)
    if label == 2:
        return qbinom(n, 2)
    raise ValueError(f"labels are 1 or 2, got {label}")


def ladder_poly(n: int, j: int) -> LaurentPoly:
    """Value of the closed 2-strand ladder with j thick rungs.

    No rungs leaves two disjoint circles, [N]^2.  Otherwise each adjacent
    pair of rungs collapses by the bigon relation at the cost of a factor
    [2], and the last rung leaves a theta web worth [N][N-1].
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if j < 0:
        raise ValueError(f"need j >= 0, got {j}")
    if j == 0:
        return qint(n) * qint(n)
    return qint(2) ** (j - 1) * qint(n) * qint(n - 1)


def sln_polynomial(n: int, m: int) -> LaurentPoly:
    """The sl(N) polynomial of T(2,m) by the skein expansion.

    A positive crossing contributes q^(N-1) (oriented smoothing) minus
    q^N (thick smoothing); a negative crossing q^(1-N) minus q^(-N).
    Resolutions with j thick rungs all close to the same ladder, giving a
    binomial-weighted sum.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    crossings = abs(m)
    out = LaurentPoly.zero()
    for j in range(crossings + 1):
        if m >= 0:
            shift = (n - 1) * (crossings - j) + n * j
        else:
            shift = (1 - n) * (crossings - j) - n * j
        sign = -1 if j % 2 else 1
        out = out + ladder_poly(n, j).shift(shift) * (sign * comb(crossings, j))
    return out
