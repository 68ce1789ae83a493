"""The matrix superalgebra M_{m|2n}(R).

Rows/columns 1..m are even, the remaining 2n are odd; the degree of a
matrix unit e_ij(a) is |i|+|j|+|a|.  The odd part is organized in two
n-blocks so the generalized orthosymplectic involution can be written
blockwise:

    (A  B1 C2)osp      ( bar(A)^t        -bar(rho(B2))^t   bar(rho(C1))^t )
    (C1 D11 D12)   =   ( bar(rho(C2))^t   bar(D22)^t       -bar(D12)^t   )
    (B2 D21 D22)       (-bar(rho(B1))^t  -bar(D21)^t        bar(D11)^t   )

with rho(a) = (-1)^{|a|} a.  Matrices are stored sparsely by slot; each
occupied slot holds a coordinate vector over the coefficient algebra.
Indices are 1-based in the public API (matching the classical notation)
and 0-based internally.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidInput, MixedShapes
from .linalg import vec_add, vec_is_zero, vec_scale, vec_sub, vec_zero
from .superalg import AlgElement, SuperAlgebra


@dataclass(frozen=True)
class MatrixShape:
    m: int
    n: int

    def __post_init__(self):
        if self.m < 0 or self.n < 0 or self.m + 2 * self.n < 1:
            raise InvalidInput(f"illegal shape ({self.m},{self.n})")

    @property
    def size(self) -> int:
        return self.m + 2 * self.n

    def row_parity(self, i) -> int:
        """Parity of a 0-based row/column index."""
        return 0 if i < self.m else 1

    def block(self, i) -> int:
        """0 for the even rows, 1 / 2 for the two odd n-blocks (0-based)."""
        if i < self.m:
            return 0
        if i < self.m + self.n:
            return 1
        return 2


# source block pair -> (bar-with-rho?, sign) of the transposed image slot
_OSP_RULE = {
    (0, 0): (False, 1),
    (2, 0): (True, -1),
    (1, 0): (True, 1),
    (0, 2): (True, 1),
    (2, 2): (False, 1),
    (1, 2): (False, -1),
    (0, 1): (True, -1),
    (2, 1): (False, -1),
    (1, 1): (False, 1),
}
_BLOCK_SWAP = {0: 0, 1: 2, 2: 1}


class SuperMatrix:
    """Sparse matrix over a SuperAlgebra; entries keyed by 0-based (i, j)."""

    __slots__ = ("shape", "algebra", "entries")

    def __init__(self, shape: MatrixShape, algebra: SuperAlgebra, entries=None):
        self.shape = shape
        self.algebra = algebra
        ent = {}
        if entries:
            f = algebra.field
            for (i, j), v in entries.items():
                v = list(v)
                if not vec_is_zero(f, v):
                    ent[(i, j)] = v
        self.entries = ent

    # -- basic algebra ------------------------------------------------------

    def _same(self, other):
        if not isinstance(other, SuperMatrix):
            raise InvalidInput("not a SuperMatrix")
        if other.shape != self.shape or other.algebra is not self.algebra:
            raise MixedShapes("shape or coefficient algebra mismatch")

    def __add__(self, other):
        self._same(other)
        f = self.algebra.field
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = vec_add(f, out[k], v) if k in out else list(v)
        return SuperMatrix(self.shape, self.algebra, out)

    def __sub__(self, other):
        self._same(other)
        f = self.algebra.field
        out = {k: list(v) for k, v in self.entries.items()}
        for k, v in other.entries.items():
            out[k] = vec_sub(f, out.get(k, vec_zero(f, self.algebra.dim)), v)
        return SuperMatrix(self.shape, self.algebra, out)

    def __neg__(self):
        f = self.algebra.field
        m1 = f.neg(f.one())
        return self.scale(m1)

    def scale(self, c):
        f = self.algebra.field
        c = f.coerce(c)
        return SuperMatrix(
            self.shape, self.algebra, {k: vec_scale(f, c, v) for k, v in self.entries.items()}
        )

    def matmul(self, other):
        self._same(other)
        A = self.algebra
        f = A.field
        out = {}
        cols = {}
        for (k, j), v in other.entries.items():
            cols.setdefault(k, []).append((j, v))
        for (i, k), u in self.entries.items():
            for j, v in cols.get(k, ()):
                prod = A.mul_vec(u, v)
                if vec_is_zero(f, prod):
                    continue
                if (i, j) in out:
                    out[(i, j)] = vec_add(f, out[(i, j)], prod)
                else:
                    out[(i, j)] = prod
        return SuperMatrix(self.shape, self.algebra, out)

    def __eq__(self, other):
        if not isinstance(other, SuperMatrix):
            return NotImplemented
        self._same(other)
        return self.entries == other.entries

    def is_zero(self):
        return not self.entries

    # -- grading ------------------------------------------------------------

    def entry_degree(self, i, j, q):
        return (self.shape.row_parity(i) + self.shape.row_parity(j) + q) % 2

    def component(self, d):
        """Homogeneous component of degree d (0 or 1)."""
        A = self.algebra
        f = A.field
        out = {}
        for (i, j), v in self.entries.items():
            q = (d + self.shape.row_parity(i) + self.shape.row_parity(j)) % 2
            w = A.component(v, q)
            if not vec_is_zero(f, w):
                out[(i, j)] = w
        return SuperMatrix(self.shape, self.algebra, out)

    def degree(self):
        """Parity if homogeneous, else None; zero matrices report 0."""
        seen = set()
        f = self.algebra.field
        for (i, j), v in self.entries.items():
            for q, c in enumerate(v):
                if not f.is_zero(c):
                    seen.add(self.entry_degree(i, j, self.algebra.parity[q]))
        if len(seen) > 1:
            return None
        return seen.pop() if seen else 0

    # -- flattening ---------------------------------------------------------

    def flat_dim(self):
        return self.shape.size ** 2 * self.algebra.dim

    def flatten(self):
        f = self.algebra.field
        d = self.algebra.dim
        size = self.shape.size
        out = vec_zero(f, size * size * d)
        for (i, j), v in self.entries.items():
            base = (i * size + j) * d
            for q, c in enumerate(v):
                out[base + q] = c
        return out


def zero_matrix(shape, algebra):
    return SuperMatrix(shape, algebra)


def unflatten(shape: MatrixShape, algebra: SuperAlgebra, vec) -> SuperMatrix:
    size = shape.size
    d = algebra.dim
    if len(vec) != size * size * d:
        raise InvalidInput("flat vector length mismatch")
    f = algebra.field
    entries = {}
    for i in range(size):
        for j in range(size):
            base = (i * size + j) * d
            v = [f.coerce(vec[base + q]) for q in range(d)]
            if not vec_is_zero(f, v):
                entries[(i, j)] = v
    return SuperMatrix(shape, algebra, entries)


def flat_coordinate_parity(shape: MatrixShape, algebra: SuperAlgebra):
    """Parity of each flat coordinate (slot parity + coefficient parity)."""
    size = shape.size
    out = []
    for i in range(size):
        for j in range(size):
            s = (shape.row_parity(i) + shape.row_parity(j)) % 2
            for q in range(algebra.dim):
                out.append((s + algebra.parity[q]) % 2)
    return out


def matrix_unit(shape: MatrixShape, algebra: SuperAlgebra, i: int, j: int, a) -> SuperMatrix:
    """e_ij(a) with 1-based indices i, j."""
    if not (1 <= i <= shape.size and 1 <= j <= shape.size):
        raise InvalidInput(f"matrix unit index out of range: ({i},{j})")
    coords = a.coords if isinstance(a, AlgElement) else list(a)
    return SuperMatrix(shape, algebra, {(i - 1, j - 1): coords})


def osp_involution(X: SuperMatrix) -> SuperMatrix:
    """The generalized orthosymplectic superinvolution (blockwise, exact)."""
    A = X.algebra
    if A.invol is None:
        raise InvalidInput("osp involution needs an involutive coefficient algebra")
    shape = X.shape
    m, n = shape.m, shape.n
    bases = {0: 0, 1: m, 2: m + n}
    f = A.field
    out = {}
    for (i, j), v in X.entries.items():
        bi, bj = shape.block(i), shape.block(j)
        ti, tj = _BLOCK_SWAP[bj], _BLOCK_SWAP[bi]
        r = j - bases[bj] + bases[ti]
        c = i - bases[bi] + bases[tj]
        use_rho, sign = _OSP_RULE[(bi, bj)]
        w = A.bar_vec(v)
        if use_rho:
            w = A.rho_vec(w)
        if sign < 0:
            w = vec_scale(f, f.neg(f.one()), w)
        if (r, c) in out:
            out[(r, c)] = vec_add(f, out[(r, c)], w)
        else:
            out[(r, c)] = w
    return SuperMatrix(shape, A, out)


def supercommutator(X: SuperMatrix, Y: SuperMatrix) -> SuperMatrix:
    """[X,Y] = XY - (-1)^{|X||Y|} YX on homogeneous parts, bilinear overall."""
    X._same(Y)
    out = zero_matrix(X.shape, X.algebra)
    for dx in (0, 1):
        Xd = X.component(dx)
        if Xd.is_zero():
            continue
        for dy in (0, 1):
            Yd = Y.component(dy)
            if Yd.is_zero():
                continue
            term = Xd.matmul(Yd)
            swap = Yd.matmul(Xd)
            out = out + (term + swap if dx * dy else term - swap)
    return out
