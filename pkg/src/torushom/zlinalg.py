"""Exact integer linear algebra.

Smith normal form with unimodular transforms, homology of chain complexes
of finitely generated free abelian groups, and matrix-level Gaussian
elimination of complexes.  Everything is dense and exact; the matrices in
this package stay below ~60 per side, so no sparsity or modular tricks.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class IntMatrix:
    """A dense integer matrix, stored row-major.

    Treated as an immutable value; the elimination algorithms work on
    private list-of-list copies.
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries):
        entries = tuple(int(x) for x in entries)
        if rows < 0 or cols < 0 or len(entries) != rows * cols:
            raise ValueError(
                f"entry count {len(entries)} does not match shape {rows}x{cols}"
            )
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def from_rows(cls, rows_list) -> "IntMatrix":
        rows_list = [list(r) for r in rows_list]
        r = len(rows_list)
        c = len(rows_list[0]) if rows_list else 0
        if any(len(row) != c for row in rows_list):
            raise ValueError("ragged rows")
        return cls(r, c, [x for row in rows_list for x in row])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    def __getitem__(self, ij) -> int:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row(self, i) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def is_zero(self) -> bool:
        return not any(self.entries)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            self.cols,
            self.rows,
            [self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)],
        )

    def mul(self, other: "IntMatrix") -> "IntMatrix":
        """Matrix product self * other (column-vector convention)."""
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} * {other.rows}x{other.cols}")
        a, b = self.to_rows(), other.to_rows()
        out = []
        for i in range(self.rows):
            ai = a[i]
            for j in range(other.cols):
                out.append(sum(ai[k] * b[k][j] for k in range(self.cols)))
        return IntMatrix(self.rows, other.cols, out)

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"IntMatrix.from_rows({self.to_rows()!r})"

    def to_json(self) -> list[list[int]]:
        return self.to_rows()


def det(m: IntMatrix) -> int:
    """Exact determinant via Bareiss fraction-free elimination."""
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    a = m.to_rows()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * (a[n - 1][n - 1] if n else 1)


@dataclass(frozen=True)
class SmithDecomposition:
    """U * M * V = S with U, V unimodular and S diagonal in divisor-chain form."""

    u: IntMatrix
    s: IntMatrix
    v: IntMatrix
    source_rows: int
    source_cols: int

    def diagonal(self) -> list[int]:
        return [self.s[i, i] for i in range(min(self.s.rows, self.s.cols))]

    def rank(self) -> int:
        return sum(1 for d in self.diagonal() if d)

    def verify(self, m: IntMatrix) -> None:
        """Check every decomposition invariant exactly; raises on failure."""
        if (m.rows, m.cols) != (self.source_rows, self.source_cols):
            raise AssertionError("source dimensions do not match")
        if self.u.mul(m).mul(self.v) != self.s:
            raise AssertionError("U*M*V != S")
        for i in range(self.s.rows):
            for j in range(self.s.cols):
                if i != j and self.s[i, j]:
                    raise AssertionError("S is not diagonal")
        diag = self.diagonal()
        if any(d < 0 for d in diag):
            raise AssertionError("negative diagonal entry")
        for a, b in zip(diag, diag[1:]):
            if a == 0 and b != 0:
                raise AssertionError("zero before nonzero on the diagonal")
            if a and b % a:
                raise AssertionError(f"divisor chain violated: {a} does not divide {b}")
        if det(self.u) not in (1, -1) or det(self.v) not in (1, -1):
            raise AssertionError("transform is not unimodular")


def _snf_with_transforms(m: IntMatrix):
    """Diagonalize by unimodular row/column operations.

    Returns (u, s, v, u_inv, v_inv) as lists of rows with u*m*v = s,
    s in divisor-chain form with nonnegative diagonal.  Pivoting always
    picks the entry of smallest absolute value, which keeps intermediate
    entries small at the sizes this package meets.
    """
    rows, cols = m.rows, m.cols
    a = m.to_rows()
    u = IntMatrix.identity(rows).to_rows()
    uinv = IntMatrix.identity(rows).to_rows()
    v = IntMatrix.identity(cols).to_rows()
    vinv = IntMatrix.identity(cols).to_rows()

    def swap_rows(i, j):
        if i == j:
            return
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]
        for r in uinv:  # column swap on the inverse
            r[i], r[j] = r[j], r[i]

    def swap_cols(i, j):
        if i == j:
            return
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]
        vinv[i], vinv[j] = vinv[j], vinv[i]

    def add_row(src, dst, c):
        # row_dst += c * row_src
        if not c:
            return
        asrc, adst = a[src], a[dst]
        for k in range(cols):
            adst[k] += c * asrc[k]
        usrc, udst = u[src], u[dst]
        for k in range(rows):
            udst[k] += c * usrc[k]
        for r in uinv:  # inverse: col_src -= c * col_dst
            r[src] -= c * r[dst]

    def add_col(src, dst, c):
        # col_dst += c * col_src
        if not c:
            return
        for r in a:
            r[dst] += c * r[src]
        for r in v:
            r[dst] += c * r[src]
        vsrc, vdst = vinv[src], vinv[dst]
        for k in range(cols):
            vsrc[k] -= c * vdst[k]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]
        for r in uinv:
            r[i] = -r[i]

    for t in range(min(rows, cols)):
        while True:
            pivot = None
            best = None
            for i in range(t, rows):
                ai = a[i]
                for j in range(t, cols):
                    x = ai[j]
                    if x and (best is None or abs(x) < best):
                        best = abs(x)
                        pivot = (i, j)
                        if best == 1:
                            break
                if best == 1:
                    break
            if pivot is None:
                break
            swap_rows(t, pivot[0])
            swap_cols(t, pivot[1])
            p = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(t, i, -(a[i][t] // p))
                    if a[i][t]:
                        dirty = True
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(t, j, -(a[t][j] // p))
                    if a[t][j]:
                        dirty = True
            if dirty:
                continue
            # pivot must divide the rest of the submatrix, so that the
            # final diagonal automatically satisfies the divisor chain
            offender = None
            for i in range(t + 1, rows):
                ai = a[i]
                for j in range(t + 1, cols):
                    if ai[j] % p:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            add_row(offender, t, 1)
        if a[t][t] == 0:
            break
    for t in range(min(rows, cols)):
        if a[t][t] < 0:
            negate_row(t)
    return u, a, v, uinv, vinv


def smith_normal_form(m: IntMatrix) -> SmithDecomposition:
    """Smith normal form with the two unimodular transforms."""
    u, s, v, _, _ = _snf_with_transforms(m)
    return SmithDecomposition(
        u=IntMatrix.from_rows(u) if u else IntMatrix.identity(0),
        s=IntMatrix(m.rows, m.cols, [x for row in s for x in row]),
        v=IntMatrix.from_rows(v) if v else IntMatrix.identity(0),
        source_rows=m.rows,
        source_cols=m.cols,
    )


def _trial_factor(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def normalize_torsion(orders) -> tuple[int, ...]:
    """Rewrite a list of cyclic orders (>= 2) in divisor-chain form."""
    primes: dict[int, list[int]] = {}
    for d in orders:
        if d < 2:
            raise ValueError(f"cyclic order must be >= 2, got {d}")
        for p, e in _trial_factor(d).items():
            primes.setdefault(p, []).append(e)
    if not primes:
        return ()
    depth = max(len(v) for v in primes.values())
    factors = []
    for i in range(depth):
        f = 1
        for p, es in primes.items():
            es = sorted(es, reverse=True)
            if i < len(es):
                f *= p ** es[i]
        factors.append(f)
    factors.reverse()
    return tuple(factors)


@dataclass(frozen=True)
class AbGroup:
    """A finitely generated abelian group: free rank plus divisor-chain torsion."""

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("negative free rank")
        object.__setattr__(self, "torsion", tuple(int(d) for d in self.torsion))
        for d in self.torsion:
            if d < 2:
                raise ValueError(f"torsion order must be >= 2, got {d}")
        for x, y in zip(self.torsion, self.torsion[1:]):
            if y % x:
                raise ValueError(f"torsion not in divisor-chain form: {self.torsion}")

    @classmethod
    def trivial(cls) -> "AbGroup":
        return cls(0, ())

    @classmethod
    def free(cls, rank: int) -> "AbGroup":
        return cls(rank, ())

    @classmethod
    def from_invariant_factors(cls, free_rank: int, factors) -> "AbGroup":
        """Build from arbitrary cyclic orders, renormalizing the chain."""
        return cls(free_rank, normalize_torsion([d for d in factors if d >= 2]))

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __add__(self, other: "AbGroup") -> "AbGroup":
        """Direct sum (torsion renormalized into a single chain)."""
        return AbGroup.from_invariant_factors(
            self.free_rank + other.free_rank, self.torsion + other.torsion
        )

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank:
            parts.append(f"Z^{self.free_rank}")
        i = 0
        while i < len(self.torsion):
            d = self.torsion[i]
            j = i
            while j < len(self.torsion) and self.torsion[j] == d:
                j += 1
            count = j - i
            parts.append(f"Z/{d}" if count == 1 else f"(Z/{d})^{count}")
            i = j
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {"free": self.free_rank, "torsion": list(self.torsion)}

    @classmethod
    def from_json(cls, data: dict) -> "AbGroup":
        return cls(int(data["free"]), tuple(int(d) for d in data["torsion"]))


def homology_at(d_in: IntMatrix, d_out: IntMatrix) -> AbGroup:
    """Homology ker(d_out)/im(d_in) at the middle of a two-step complex.

    d_in maps into the middle group, d_out maps out of it; matrices act on
    column vectors, so the middle rank is d_in.rows == d_out.cols.
    """
    if d_in.rows != d_out.cols:
        raise ValueError(
            f"middle rank mismatch: d_in has {d_in.rows} rows, d_out has {d_out.cols} cols"
        )
    if d_out.rows and d_in.cols and not d_out.mul(d_in).is_zero():
        raise ValueError("d_out * d_in is nonzero; not a chain complex")
    n = d_in.rows
    if n == 0:
        return AbGroup.trivial()
    _, s, _, _, vinv = _snf_with_transforms(d_out)
    r = sum(1 for i in range(min(d_out.rows, n)) if s[i][i])
    k = n - r  # kernel rank
    if k == 0:
        return AbGroup.trivial()
    if d_in.cols == 0 or d_in.is_zero():
        return AbGroup.free(k)
    # express im(d_in) in the kernel basis: the last k rows of vinv * d_in
    vinv_din = IntMatrix.from_rows(vinv).mul(d_in)
    for i in range(r):
        if any(vinv_din.row(i)):
            raise AssertionError("image does not lie in the kernel")
    rel = IntMatrix.from_rows([list(vinv_din.row(i)) for i in range(r, n)])
    snf_rel = smith_normal_form(rel)
    diag = [d for d in snf_rel.diagonal() if d]
    return AbGroup.from_invariant_factors(k - len(diag), [d for d in diag if d >= 2])


@dataclass
class FreeChainComplex:
    """A bounded complex of free abelian groups with integer differentials.

    ``ranks[i]`` is the rank at position ``start + i`` and ``diffs[i]``
    maps position ``start + i`` to ``start + i + 1`` (differentials raise
    the position; d composed with d is checked to vanish).
    """

    start: int
    ranks: list[int]
    diffs: list[IntMatrix] = field(default_factory=list)

    def __post_init__(self):
        if len(self.diffs) != max(len(self.ranks) - 1, 0):
            raise ValueError("need exactly one differential per adjacent pair")
        for i, d in enumerate(self.diffs):
            if (d.rows, d.cols) != (self.ranks[i + 1], self.ranks[i]):
                raise ValueError(
                    f"differential {i} has shape {d.rows}x{d.cols}, "
                    f"expected {self.ranks[i + 1]}x{self.ranks[i]}"
                )
        for i in range(len(self.diffs) - 1):
            if not self.diffs[i + 1].mul(self.diffs[i]).is_zero():
                raise ValueError(f"d∘d != 0 at position {self.start + i}")

    def positions(self) -> range:
        return range(self.start, self.start + len(self.ranks))

    def rank_at(self, position: int) -> int:
        return self.ranks[position - self.start]


def complex_homology(c: FreeChainComplex) -> dict[int, AbGroup]:
    """Homology at every position, with zero maps padded at the ends."""
    out = {}
    n = len(c.ranks)
    for i in range(n):
        d_in = c.diffs[i - 1] if i > 0 else IntMatrix.zeros(c.ranks[i], 0)
        d_out = c.diffs[i] if i < n - 1 else IntMatrix.zeros(0, c.ranks[i])
        out[c.start + i] = homology_at(d_in, d_out)
    return out


def gaussian_eliminate(
    c: FreeChainComplex, position: int, row: int, col: int
) -> FreeChainComplex:
    """Cancel a +-1 entry of the differential out of ``position``.

    Returns a complex with one generator fewer at ``position`` and at
    ``position + 1`` and the same homology everywhere: the middle
    differential picks up the usual correction term, while the adjacent
    differentials simply drop the cancelled row/column.
    """
    i = position - c.start
    if not (0 <= i < len(c.diffs)):
        raise ValueError(f"no differential out of position {position}")
    d = c.diffs[i]
    eps = d[row, col]
    if eps not in (1, -1):
        raise ValueError(f"pivot entry must be +-1, got {eps}")
    rows_keep = [r for r in range(d.rows) if r != row]
    cols_keep = [s for s in range(d.cols) if s != col]
    mid = [
        [d[r, s] - d[r, col] * eps * d[row, s] for s in cols_keep]
        for r in rows_keep
    ]
    ranks = list(c.ranks)
    ranks[i] -= 1
    ranks[i + 1] -= 1
    diffs = list(c.diffs)
    diffs[i] = IntMatrix(len(rows_keep), len(cols_keep), [x for r in mid for x in r])
    if i > 0:
        prev = c.diffs[i - 1]
        diffs[i - 1] = IntMatrix.from_rows(
            [list(prev.row(r)) for r in range(prev.rows) if r != col]
        ) if prev.rows - 1 else IntMatrix.zeros(0, prev.cols)
    if i + 1 < len(c.diffs):
        nxt = c.diffs[i + 1]
        diffs[i + 1] = IntMatrix.from_rows(
            [[nxt[r, s] for s in range(nxt.cols) if s != row] for r in range(nxt.rows)]
        ) if nxt.rows else IntMatrix.zeros(0, nxt.cols - 1)
    return FreeChainComplex(c.start, ranks, diffs)
