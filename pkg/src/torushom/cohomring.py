"""Cohomology rings of CP^(N-1), the two-line flag manifold and their product.

Each ring is presented by a finite monomial basis together with a reduction
rule, enough to realize cup products, the tautological first Chern classes
a, b, the Euler class e = a - b of the circle bundle over the flag manifold,
the pullback/pushforward along the two projections, and the two independent
Gysin-sequence computations of H*(UT CP^(N-1)).

Monomials are exponent tuples: ``(i,)`` for X^i over CP^(N-1), ``(i, j)``
for a^i b^j over the flag manifold and for X^i (x) Y^j over the product.
Ring elements are dicts mapping basis monomials to integer coefficients.

The flag-manifold presentation comes from the splitting of the trivial
rank-N bundle into the two tautological lines and their complement, which
forces the complete homogeneous symmetric relations h_{N-1}(a, b) = 0 and
h_N(a, b) = 0; equivalently a^N = 0, b^N = 0 and
b^(N-1) = -(a b^(N-2) + a^2 b^(N-3) + ... + a^(N-1)).
"""

from __future__ import annotations

from .zlinalg import AbGroup, IntMatrix, smith_normal_form

CP = "CP"
FLAG = "FLAG"
PRODUCT_CP = "PRODUCT_CP"


def _merge(acc: dict, term: dict, sign: int = 1) -> None:
    for m, c in term.items():
        s = acc.get(m, 0) + sign * c
        if s:
            acc[m] = s
        elif m in acc:
            del acc[m]


class GradedRing:
    """A finite-rank graded ring with a fixed ordered monomial basis."""

    def __init__(self, label: str, n: int, basis, degree_fn, reduce_fn):
        self.label = label
        self.n = n
        self.basis = list(basis)
        self.degrees = [degree_fn(m) for m in self.basis]
        self.index = {m: i for i, m in enumerate(self.basis)}
        self._degree_fn = degree_fn
        self._reduce_fn = reduce_fn

    @property
    def rank(self) -> int:
        return len(self.basis)

    def reduce_monomial(self, monomial) -> dict:
        """Normal form of an arbitrary exponent tuple as a basis combination."""
        return self._reduce_fn(monomial)

    def one(self) -> dict:
        return {self.basis[0]: 1} if self.basis else {}

    def monomial_element(self, monomial) -> dict:
        return dict(self.reduce_monomial(monomial))

    def mul(self, x: dict, y: dict) -> dict:
        out: dict = {}
        for m1, c1 in x.items():
            for m2, c2 in y.items():
                prod = tuple(e1 + e2 for e1, e2 in zip(m1, m2))
                _merge(out, self._reduce_fn(prod), c1 * c2)
        return out

    def element_degree(self, x: dict):
        """Common degree of a homogeneous element; None for zero, error if mixed."""
        degs = {self._degree_fn(m) for m in x}
        if not degs:
            return None
        if len(degs) > 1:
            raise ValueError(f"element is not homogeneous: degrees {sorted(degs)}")
        return degs.pop()

    def poincare_polynomial(self):
        from .laurent import LaurentPoly

        return LaurentPoly([(d, 1) for d in self.degrees])

    def basis_indices_by_degree(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for i, d in enumerate(self.degrees):
            out.setdefault(d, []).append(i)
        return out

    def graded_group(self, shift: int = 0) -> "GradedAbGroup":
        """The underlying graded free abelian group, optionally degree-shifted."""
        counts: dict[int, int] = {}
        for d in self.degrees:
            counts[d + shift] = counts.get(d + shift, 0) + 1
        return GradedAbGroup({d: AbGroup.free(r) for d, r in counts.items()})


def cp_ring(n: int) -> GradedRing:
    """H*(CP^(n-1)) = Z[X]/X^n with basis 1, X, ..., X^(n-1)."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")

    def reduce_monomial(m):
        return {m: 1} if m[0] < n else {}

    return GradedRing(
        CP,
        n,
        [(i,) for i in range(n)],
        lambda m: 2 * m[0],
        reduce_monomial,
    )


def flag_ring(n: int) -> GradedRing:
    """H* of the two-line flag manifold, basis a^i b^j (i <= n-1, j <= n-2)."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")

    def reduce_monomial(m):
        i, j = m
        if i >= n or j >= n:
            return {}
        if j <= n - 2:
            return {(i, j): 1}
        # j == n-1: apply b^(n-1) -> -(a b^(n-2) + ... + a^(n-1))
        out = {}
        for s in range(1, n):
            if i + s < n:
                out[(i + s, n - 1 - s)] = -1
        return out

    return GradedRing(
        FLAG,
        n,
        [(i, j) for i in range(n) for j in range(n - 1)],
        lambda m: 2 * (m[0] + m[1]),
        reduce_monomial,
    )


def product_cp_ring(n: int) -> GradedRing:
    """H*(CP^(n-1) x CP^(n-1)) with basis X^i (x) Y^j, 0 <= i, j <= n-1."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")

    def reduce_monomial(m):
        return {m: 1} if m[0] < n and m[1] < n else {}

    return GradedRing(
        PRODUCT_CP,
        n,
        [(i, j) for i in range(n) for j in range(n)],
        lambda m: 2 * (m[0] + m[1]),
        reduce_monomial,
    )


def cup_operator(ring: GradedRing, c: dict) -> IntMatrix:
    """Matrix of x -> c*x in the ring's basis order (columns are inputs)."""
    ring.element_degree(c)  # raises if inhomogeneous
    cols = []
    for m in ring.basis:
        prod = ring.mul(c, {m: 1})
        col = [0] * ring.rank
        for mono, coeff in prod.items():
            col[ring.index[mono]] = coeff
        cols.append(col)
    return IntMatrix(
        ring.rank, ring.rank, [cols[j][i] for i in range(ring.rank) for j in range(ring.rank)]
    )


def euler_class(n: int) -> dict:
    """e = c1(A) - c1(B) = a - b in the flag ring, in normal form."""
    ring = flag_ring(n)
    out = dict(ring.reduce_monomial((1, 0)))
    _merge(out, ring.reduce_monomial((0, 1)), -1)
    return out


def pullback_matrix(n: int) -> IntMatrix:
    """The ring map H*(CP x CP) -> H*(flag), X^i (x) Y^j -> a^i b^j.

    Columns are indexed by the product basis, rows by the flag basis.
    """
    flag = flag_ring(n)
    prod = product_cp_ring(n)
    entries = [[0] * prod.rank for _ in range(flag.rank)]
    for j, m in enumerate(prod.basis):
        for mono, coeff in flag.reduce_monomial(m).items():
            entries[flag.index[mono]][j] = coeff
    return IntMatrix.from_rows(entries)


# The underlying pairing is Poincare duality for a negative orientation,
# which would flip the sign of every pushforward; homology groups cannot
# see a global sign, so we fix +1 and keep the knob for functoriality work.
PUSHFORWARD_SIGN = 1


def pushforward_matrix(n: int) -> IntMatrix:
    """Transpose of the pullback with respect to the Poincare pairings.

    Both pairings read off the coefficient of the top class in a cup
    product (with the global sign fixed to +1, see PUSHFORWARD_SIGN).
    Concretely, the coefficient of X^p (x) Y^r in the image of a flag
    monomial u is the top coefficient of u * pullback(X^(n-1-p) Y^(n-1-r));
    the map raises cohomological degree by 2.
    """
    flag = flag_ring(n)
    prod = product_cp_ring(n)
    top = (n - 1, n - 2)
    entries = [[0] * flag.rank for _ in range(prod.rank)]
    for col, u in enumerate(flag.basis):
        for rowi, (p, r) in enumerate(prod.basis):
            w = flag.reduce_monomial((n - 1 - p, n - 1 - r))
            prod_elt = flag.mul({u: 1}, w)
            c = prod_elt.get(top, 0)
            if c:
                entries[rowi][col] = PUSHFORWARD_SIGN * c
    return IntMatrix.from_rows(entries)


class GradedAbGroup:
    """A finitely supported assignment of abelian groups to degrees >= 0."""

    def __init__(self, groups: dict[int, AbGroup] | None = None):
        self.groups = {
            int(d): g for d, g in (groups or {}).items() if not g.is_trivial()
        }
        if any(d < 0 for d in self.groups):
            raise ValueError("negative cohomological degree")

    def degree(self, d: int) -> AbGroup:
        return self.groups.get(d, AbGroup.trivial())

    def degrees(self) -> list[int]:
        return sorted(self.groups)

    def total(self) -> AbGroup:
        out = AbGroup.trivial()
        for d in sorted(self.groups):
            out = out + self.groups[d]
        return out

    def __add__(self, other: "GradedAbGroup") -> "GradedAbGroup":
        out = dict(self.groups)
        for d, g in other.groups.items():
            out[d] = out.get(d, AbGroup.trivial()) + g
        return GradedAbGroup(out)

    def __eq__(self, other):
        if not isinstance(other, GradedAbGroup):
            return NotImplemented
        return self.groups == other.groups

    def __repr__(self):
        inner = ", ".join(f"{d}: {self.groups[d]}" for d in self.degrees())
        return f"GradedAbGroup({{{inner}}})"

    def to_json(self) -> dict:
        return {
            "degrees": {str(d): self.groups[d].to_json() for d in self.degrees()}
        }

    @classmethod
    def from_json(cls, data: dict) -> "GradedAbGroup":
        return cls(
            {int(d): AbGroup.from_json(g) for d, g in data["degrees"].items()}
        )


def _kernel_cokernel(block: IntMatrix) -> tuple[int, AbGroup]:
    """Kernel rank and cokernel of an integer matrix, via SNF."""
    snf = smith_normal_form(block)
    diag = [d for d in snf.diagonal() if d]
    ker_rank = block.cols - len(diag)
    coker = AbGroup.from_invariant_factors(
        block.rows - len(diag), [d for d in diag if d >= 2]
    )
    return ker_rank, coker


def _degree_block(ring: GradedRing, op: IntMatrix, d_src: int, d_tgt: int) -> IntMatrix:
    by_deg = ring.basis_indices_by_degree()
    src = by_deg.get(d_src, [])
    tgt = by_deg.get(d_tgt, [])
    return IntMatrix(
        len(tgt), len(src), [op[i, j] for i in tgt for j in src]
    )


def gysin_circle_ut(n: int) -> GradedAbGroup:
    """H*(UT CP^(n-1)) from the circle bundle over the flag manifold.

    The base has no odd cohomology, so the Gysin sequence splits into
    four-term exact pieces and cup product with e computes everything:
    H^(2i+1) is the kernel of e on degree 2i, H^(2i+2) is its cokernel,
    and H^0 = Z is seeded by connectedness.
    """
    ring = flag_ring(n)
    op = cup_operator(ring, euler_class(n))
    top = max(ring.degrees)
    groups: dict[int, AbGroup] = {0: AbGroup.free(1)}
    for d in range(0, top + 1, 2):
        block = _degree_block(ring, op, d, d + 2)
        ker_rank, coker = _kernel_cokernel(block)
        if ker_rank:
            groups[d + 1] = AbGroup.free(ker_rank)
        if not coker.is_trivial():
            groups[d + 2] = coker
    return GradedAbGroup(groups)


def gysin_sphere_ut(n: int) -> GradedAbGroup:
    """H*(UT CP^(n-1)) from the sphere bundle over CP^(n-1).

    Here the Euler class is n times the orientation class, so the relevant
    two-term complex is Z[X]/X^n acting on itself by n X^(n-1).  Cokernels
    land in the even degrees of the total space (Z in 0..2n-4 plus Z/n in
    degree 2n-2) and kernels in the odd degrees 2n-1..4n-5, shifted up by
    the fiber dimension 2n-3.
    """
    ring = cp_ring(n)
    op = cup_operator(ring, {(n - 1,): n})
    shift = 2 * n - 2
    top = max(ring.degrees)
    groups: dict[int, AbGroup] = {}
    for d_tgt in range(0, top + 1, 2):
        block = _degree_block(ring, op, d_tgt - shift, d_tgt)
        if block.cols == 0:
            coker = AbGroup.free(block.rows)
        else:
            _, coker = _kernel_cokernel(block)
        if not coker.is_trivial():
            groups[d_tgt] = coker
    for d_src in range(0, top + 1, 2):
        block = _degree_block(ring, op, d_src, d_src + shift)
        ker_rank = block.cols - smith_normal_form(block).rank()
        if ker_rank:
            groups[d_src + shift - 1] = AbGroup.free(ker_rank)
    return GradedAbGroup(groups)
