"""Connected components of the SU(N) representation space of T(2,m).

A representation is pinned down by the Hermitian angle theta between the
two meridian eigenlines, and the braid relation forces the quantization
condition m*theta in Z*pi.  The admissible angles theta = pi*t/m with
0 <= t <= floor(m/2) give the components: the diagonal copy of CP^(N-1)
at t = 0, the flag manifold at theta = pi/2, and a unit tangent bundle of
CP^(N-1) for everything in between.  Total cohomology is the direct sum
over components, and ``compare`` checks it against the link homology.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cohomring import GradedAbGroup, cp_ring, flag_ring, gysin_circle_ut
from .knotcomplex import (
    A_COMPLEX,
    THETA,
    UNKNOT,
    BigradedGroup,
    SummandDescriptor,
    decompose_summands,
    summand_homology,
    torus_link_homology,
)
from .zlinalg import AbGroup

KIND_CP = "CP"
KIND_UT = "UT"
KIND_FLAG = "FLAG"
# marker for the m = 0 unlink, whose representation space is the full
# product CP^(N-1) x CP^(N-1) rather than a single orbit
KIND_TWO_CIRCLES = "TWO_CIRCLES"

_SUMMAND_TO_COMPONENT = {A_COMPLEX: KIND_UT, UNKNOT: KIND_CP, THETA: KIND_FLAG}


@dataclass(frozen=True)
class ComponentLabel:
    """One connected component, tagged by the angle numerator t (theta = pi t / m)."""

    kind: str
    angle_numerator: int


def components(n: int, m: int) -> list[ComponentLabel]:
    """Component labels for t = 0..floor(m/2); m = 0 gets the product marker."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if m < 0:
        raise ValueError(f"need m >= 0, got {m}")
    if m == 0:
        return [ComponentLabel(KIND_TWO_CIRCLES, 0)]
    out = []
    for t in range(m // 2 + 1):
        if t == 0:
            kind = KIND_CP
        elif 2 * t == m:
            kind = KIND_FLAG
        else:
            kind = KIND_UT
        out.append(ComponentLabel(kind, t))
    return out


def component_cohomology(label: ComponentLabel, n: int) -> GradedAbGroup:
    """Integral cohomology of a single component."""
    if label.kind == KIND_CP:
        return cp_ring(n).graded_group()
    if label.kind == KIND_FLAG:
        return flag_ring(n).graded_group()
    if label.kind == KIND_UT:
        return gysin_circle_ut(n)
    if label.kind == KIND_TWO_CIRCLES:
        ring = cp_ring(n)
        groups: dict[int, AbGroup] = {}
        for d1 in ring.degrees:
            for d2 in ring.degrees:
                d = d1 + d2
                groups[d] = groups.get(d, AbGroup.trivial()) + AbGroup.free(1)
        return GradedAbGroup(groups)
    raise ValueError(f"unknown component kind {label.kind!r}")


def total_cohomology(n: int, m: int) -> GradedAbGroup:
    """Degreewise direct sum over all components."""
    out = GradedAbGroup()
    for label in components(n, m):
        out = out + component_cohomology(label, n)
    return out


@dataclass
class VerificationReport:
    """Both total groups, the isomorphism verdict and the summand pairing."""

    n: int
    m: int
    kr_total: AbGroup
    rep_total: AbGroup
    isomorphic: bool
    summand_table: list[dict] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "kr_total": self.kr_total.to_json(),
            "rep_total": self.rep_total.to_json(),
            "isomorphic": self.isomorphic,
            "summand_table": self.summand_table,
        }

    @classmethod
    def from_json(cls, data: dict) -> "VerificationReport":
        return cls(
            n=int(data["n"]),
            m=int(data["m"]),
            kr_total=AbGroup.from_json(data["kr_total"]),
            rep_total=AbGroup.from_json(data["rep_total"]),
            isomorphic=bool(data["isomorphic"]),
            summand_table=list(data["summand_table"]),
        )


def _pair_summands(
    n: int, descriptors: list[SummandDescriptor], labels: list[ComponentLabel]
) -> list[dict]:
    """Match each complex summand with the component of the same type.

    The unknot column goes with the diagonal CP^(N-1), each Euler-class
    complex with one unit tangent bundle (in angle order) and the theta
    column with the flag manifold.  The pairing is reported as data; no
    canonical grading-preserving map is claimed.
    """
    pool: dict[str, list[ComponentLabel]] = {}
    for label in labels:
        pool.setdefault(label.kind, []).append(label)
    table = []
    for desc in descriptors:
        summand_h = summand_homology(n, [desc])
        want = _SUMMAND_TO_COMPONENT[desc.kind]
        label = pool[want].pop(0)
        comp_h = component_cohomology(label, n)
        table.append(
            {
                "summand": {
                    "kind": desc.kind,
                    "h_shift": desc.h_shift,
                    "q_shift": desc.q_shift,
                    "homology": summand_h.to_json(),
                },
                "component": {
                    "kind": label.kind,
                    "angle_numerator": label.angle_numerator,
                    "cohomology": comp_h.to_json(),
                },
                "totals_match": summand_h.total() == comp_h.total(),
            }
        )
    return table


def compare(n: int, m: int) -> VerificationReport:
    """Check the link homology of T(2,m) against the representation space.

    Totals are compared with all gradings forgotten; the per-summand
    bigraded tables ride along in the report.
    """
    if m < 0:
        raise ValueError(f"need m >= 0, got {m}")
    kr = torus_link_homology(n, m)
    rep = total_cohomology(n, m)
    kr_total = kr.total()
    rep_total = rep.total()
    if m == 0:
        unlink = BigradedGroup(
            {key: g for key, g in kr.groups.items()}
        )
        table = [
            {
                "summand": {
                    "kind": "TENSOR_SQUARE",
                    "h_shift": 0,
                    "q_shift": 0,
                    "homology": unlink.to_json(),
                },
                "component": {
                    "kind": KIND_TWO_CIRCLES,
                    "angle_numerator": 0,
                    "cohomology": component_cohomology(
                        ComponentLabel(KIND_TWO_CIRCLES, 0), n
                    ).to_json(),
                },
                "totals_match": kr_total == rep_total,
            }
        ]
    else:
        table = _pair_summands(n, decompose_summands(n, m), components(n, m))
    return VerificationReport(
        n=n,
        m=m,
        kr_total=kr_total,
        rep_total=rep_total,
        isomorphic=kr_total == rep_total,
        summand_table=table,
    )
