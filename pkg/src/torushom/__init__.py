"""Exact computation of the sl(N) homology of T(2,m) torus links.

Two independent pipelines build the answer from the reduced complex and
from its direct-sum decomposition; the result is cross-checked against the
cohomology of the associated SU(N) representation spaces, against the two
Gysin-sequence routes to H*(UT CP^(N-1)), and against the skein-theoretic
sl(N) polynomial through the graded Euler characteristic.
"""

from .cohomring import (
    GradedAbGroup,
    GradedRing,
    cp_ring,
    cup_operator,
    euler_class,
    flag_ring,
    gysin_circle_ut,
    gysin_sphere_ut,
    product_cp_ring,
    pullback_matrix,
    pushforward_matrix,
)
from .knotcomplex import (
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
from .laurent import LaurentPoly, qbinom, qfactorial, qint
from .moy import ladder_poly, moy_circle, sln_polynomial
from .repspace import (
    ComponentLabel,
    VerificationReport,
    compare,
    component_cohomology,
    components,
    total_cohomology,
)
from .zlinalg import (
    AbGroup,
    FreeChainComplex,
    IntMatrix,
    SmithDecomposition,
    complex_homology,
    gaussian_eliminate,
    homology_at,
    smith_normal_form,
)

__version__ = "0.1.0"
