"""Concrete finite-dimensional Lie superalgebras over an exact field.

An algebra is a homogeneous basis plus sparse bracket structure constants.
Bases are always ordered with the even vectors first, then the odd ones,
row-echelon order within each parity; this makes structure constants and
reports reproducible.

Verification checks grading, super skew-symmetry and the super Jacobi
identity.  Jacobi is evaluated on ordered triples i <= j <= k only: the
identity is multilinear and transforms into itself (up to sign) under
permutations of the arguments, so ordered triples over a basis are
exhaustive.  For speed it runs on an integer rescaling of the table,
which preserves the identity.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .errors import InvalidInput, MixedShapes, NotClosed
from .linalg import Echelon, ExactMatrix, kernel_basis, vec_is_zero, vec_zero
from .reports import Report
from .supermatrix import SuperMatrix, flat_coordinate_parity, supercommutator, unflatten


class LieSuperAlgebra:
    """Structure-constant Lie superalgebra.

    table[(i, j)] = tuple of (k, coeff): [b_i, b_j] = sum coeff * b_k.
    Only one of (i, j) / (j, i) needs to be stored; the other is filled in
    from super skew-symmetry at construction.
    """

    __slots__ = ("name", "field", "dim", "parity", "table")

    def __init__(self, name, field, parity, table, complete=True):
        self.name = name
        self.field = field
        self.parity = tuple(int(p) % 2 for p in parity)
        self.dim = len(self.parity)
        t = {}
        for (i, j), terms in table.items():
            terms = tuple((k, field.coerce(c)) for k, c in terms if not field.is_zero(field.coerce(c)))
            if terms:
                t[(i, j)] = terms
        if complete:
            for (i, j), terms in list(t.items()):
                if (j, i) not in t and i != j:
                    # [b_j, b_i] = -(-1)^{|i||j|} [b_i, b_j]
                    flip = not (self.parity[i] and self.parity[j])
                    t[(j, i)] = tuple((k, field.neg(c) if flip else c) for k, c in terms)
        self.table = t

    def bracket_basis(self, i, j):
        return self.table.get((i, j), ())

    def bracket_vec(self, x, y):
        f = self.field
        out = vec_zero(f, self.dim)
        for i, xi in enumerate(x):
            if f.is_zero(xi):
                continue
            for j, yj in enumerate(y):
                if f.is_zero(yj):
                    continue
                terms = self.table.get((i, j))
                if terms:
                    c = f.mul(xi, yj)
                    for k, coef in terms:
                        out[k] = f.add(out[k], f.mul(c, coef))
        return out

    def basis_vec(self, i):
        v = vec_zero(self.field, self.dim)
        v[i] = self.field.one()
        return v

    def component(self, x, q):
        f = self.field
        return [c if self.parity[i] == q else f.zero() for i, c in enumerate(x)]

    def homogeneous_parity(self, x):
        f = self.field
        seen = {self.parity[i] for i, c in enumerate(x) if not f.is_zero(c)}
        if len(seen) > 1:
            return None
        return seen.pop() if seen else 0

    def even_dim(self):
        return sum(1 for p in self.parity if p == 0)

    def odd_dim(self):
        return self.dim - self.even_dim()

    def __repr__(self):
        return f"LieSuperAlgebra({self.name}, dim={self.dim}, {self.field.token()})"


def _int_table(L: LieSuperAlgebra):
    """Uniformly rescaled integer structure constants (identity-preserving)."""
    if L.field.kind == "Fp":
        return {k: tuple((i, int(c)) for i, c in v) for k, v in L.table.items()}, L.field.p
    den = 1
    for terms in L.table.values():
        for _, c in terms:
            den = lcm(den, Fraction(c).denominator)
    out = {}
    for k, terms in L.table.items():
        out[k] = tuple((i, int(Fraction(c) * den)) for i, c in terms)
    return out, 0


def verify_lie(L: LieSuperAlgebra) -> Report:
    """Grading, super skew-symmetry and super Jacobi, exhaustively."""
    rep = Report("lie-axioms", algebra=L.name)
    bad = None
    for (i, j), terms in L.table.items():
        want = (L.parity[i] + L.parity[j]) % 2
        for k, _ in terms:
            if L.parity[k] != want:
                bad = (i, j, k)
                break
        if bad:
            break
    rep.add("grading", bad is None, witness=bad)

    # skew: [b_i,b_j] + (-1)^{|i||j|}[b_j,b_i] = 0
    f = L.field
    bad = None
    for i in range(L.dim):
        for j in range(i, L.dim):
            lhs = dict(L.bracket_basis(i, j))
            rhs = dict(L.bracket_basis(j, i))
            odd_pair = bool(L.parity[i] * L.parity[j])
            ok = True
            for k in set(lhs) | set(rhs):
                a = lhs.get(k, f.zero())
                b = rhs.get(k, f.zero())
                good = f.is_zero(f.sub(a, b)) if odd_pair else f.is_zero(f.add(a, b))
                if not good:
                    ok = False
                    break
            if not ok:
                bad = (i, j)
                break
        if bad:
            break
    rep.add("super-skew", bad is None, witness=bad)

    table, p = _int_table(L)
    parity = L.parity
    bad = None
    for i in range(L.dim):
        for j in range(i, L.dim):
            tij = table.get((i, j), ())
            tji = table.get((j, i), ())
            for k in range(j, L.dim):
                acc = {}

                def _accum(terms, kk, sign, acc=acc, table=table):
                    for t, c in terms:
                        for s, c2 in table.get((t, kk), ()):
                            acc[s] = acc.get(s, 0) + sign * c * c2

                s1 = -1 if parity[i] * parity[k] else 1
                s2 = -1 if parity[j] * parity[i] else 1
                s3 = -1 if parity[k] * parity[j] else 1
                _accum(tij, k, s1)
                _accum(table.get((j, k), ()), i, s2)
                _accum(table.get((k, i), ()), j, s3)
                if p:
                    ok = all(v % p == 0 for v in acc.values())
                else:
                    ok = all(v == 0 for v in acc.values())
                if not ok:
                    bad = (i, j, k)
                    break
            if bad:
                break
        if bad:
            break
    rep.add("super-jacobi", bad is None, witness=bad)
    return rep


# -- Lie algebras from matrix spans -----------------------------------------


class MatrixLieAlgebra(LieSuperAlgebra):
    """A Lie superalgebra together with its realization by supermatrices."""

    __slots__ = ("shape", "coeff_algebra", "basis_mats", "_even_ech", "_odd_ech", "_flat_parity")

    def __init__(self, name, field, parity, table, shape, coeff_algebra, basis_mats,
                 even_ech, odd_ech, flat_parity):
        super().__init__(name, field, parity, table)
        self.shape = shape
        self.coeff_algebra = coeff_algebra
        self.basis_mats = basis_mats
        self._even_ech = even_ech
        self._odd_ech = odd_ech
        self._flat_parity = flat_parity

    def to_coords(self, X: SuperMatrix):
        """Coordinates of X in the chosen basis, or None if outside the span."""
        flat = X.flatten()
        f = self.field
        even = [c if self._flat_parity[i] == 0 else f.zero() for i, c in enumerate(flat)]
        odd = [c if self._flat_parity[i] == 1 else f.zero() for i, c in enumerate(flat)]
        c0 = self._even_ech.coords(even)
        c1 = self._odd_ech.coords(odd)
        if c0 is None or c1 is None:
            return None
        return c0 + c1

    def from_coords(self, v) -> SuperMatrix:
        X = None
        f = self.field
        for c, B in zip(v, self.basis_mats):
            if f.is_zero(f.coerce(c)):
                continue
            T = B.scale(c)
            X = T if X is None else X + T
        if X is None:
            from .supermatrix import zero_matrix

            return zero_matrix(self.shape, self.coeff_algebra)
        return X

    def bracket_mats(self, X, Y):
        return supercommutator(X, Y)


def from_matrix_span(mats, name="span") -> MatrixLieAlgebra:
    """Lie superalgebra on the span of the given supermatrices.

    The span must be closed under the supercommutator (verified; NotClosed
    otherwise).  The basis is the row reduction of the flattened matrices,
    homogeneous components split first, even before odd.
    """
    if not mats:
        raise InvalidInput("empty matrix family")
    shape = mats[0].shape
    A = mats[0].algebra
    for X in mats:
        if X.shape != shape or X.algebra is not A:
            raise MixedShapes("matrix family mixes shapes or coefficient algebras")
    f = A.field
    flat_parity = flat_coordinate_parity(shape, A)
    nflat = len(flat_parity)
    even_ech = Echelon(f, nflat)
    odd_ech = Echelon(f, nflat)
    for X in mats:
        for d, ech in ((0, even_ech), (1, odd_ech)):
            Xd = X.component(d)
            if not Xd.is_zero():
                ech.add(Xd.flatten())
    basis_flat = even_ech.basis() + odd_ech.basis()
    parity = [0] * even_ech.rank + [1] * odd_ech.rank
    basis_mats = [unflatten(shape, A, v) for v in basis_flat]
    dim = len(basis_mats)

    def coords_of(X):
        flat = X.flatten()
        even = [c if flat_parity[i] == 0 else f.zero() for i, c in enumerate(flat)]
        odd = [c if flat_parity[i] == 1 else f.zero() for i, c in enumerate(flat)]
        c0 = even_ech.coords(even)
        c1 = odd_ech.coords(odd)
        if c0 is None or c1 is None:
            return None
        return c0 + c1

    table = {}
    for i in range(dim):
        for j in range(i, dim):
            Bij = supercommutator(basis_mats[i], basis_mats[j])
            if Bij.is_zero():
                continue
            c = coords_of(Bij)
            if c is None:
                raise NotClosed(f"bracket of basis elements {i},{j} leaves the span")
            terms = tuple((k, v) for k, v in enumerate(c) if not f.is_zero(v))
            if terms:
                table[(i, j)] = terms
    return MatrixLieAlgebra(name, f, parity, table, shape, A, basis_mats,
                            even_ech, odd_ech, flat_parity)


def lie_from_algebra_subspace(A, vectors, name):
    """Lie superalgebra on a supercommutator-closed subspace of an associative
    superalgebra (e.g. the skew elements of an involution)."""
    f = A.field
    even_ech = Echelon(f, A.dim)
    odd_ech = Echelon(f, A.dim)
    for v in vectors:
        for q, ech in ((0, even_ech), (1, odd_ech)):
            w = A.component(v, q)
            if not vec_is_zero(f, w):
                ech.add(w)
    basis = even_ech.basis() + odd_ech.basis()
    parity = [0] * even_ech.rank + [1] * odd_ech.rank

    def coords_of(x):
        e = [c if A.parity[i] == 0 else f.zero() for i, c in enumerate(x)]
        o = [c if A.parity[i] == 1 else f.zero() for i, c in enumerate(x)]
        c0 = even_ech.coords(e)
        c1 = odd_ech.coords(o)
        if c0 is None or c1 is None:
            return None
        return c0 + c1

    table = {}
    for i in range(len(basis)):
        for j in range(i, len(basis)):
            br = A.commutator_vec(basis[i], basis[j])
            if vec_is_zero(f, br):
                continue
            c = coords_of(br)
            if c is None:
                raise NotClosed(f"subspace not bracket-closed at pair {i},{j}")
            terms = tuple((k, v) for k, v in enumerate(c) if not f.is_zero(v))
            if terms:
                table[(i, j)] = terms
    return LieSuperAlgebra(name, f, parity, table)


# -- subalgebra machinery ----------------------------------------------------


def _graded_echelons(L, vectors):
    f = L.field
    even, odd = Echelon(f, L.dim), Echelon(f, L.dim)
    for v in vectors:
        for q, ech in ((0, even), (1, odd)):
            w = L.component(v, q)
            if not vec_is_zero(f, w):
                ech.add(w)
    return even, odd


class Subalgebra(LieSuperAlgebra):
    """A Lie subalgebra presented on its own basis with an inclusion map."""

    __slots__ = ("parent", "inclusion", "_even", "_odd")

    def __init__(self, name, parent, basis_vectors):
        f = parent.field
        even, odd = _graded_echelons(parent, basis_vectors)
        basis = even.basis() + odd.basis()
        parity = [0] * even.rank + [1] * odd.rank

        def coords_of(x):
            c0 = even.coords(parent.component(x, 0))
            c1 = odd.coords(parent.component(x, 1))
            if c0 is None or c1 is None:
                return None
            return c0 + c1

        table = {}
        for i in range(len(basis)):
            for j in range(i, len(basis)):
                br = parent.bracket_vec(basis[i], basis[j])
                if vec_is_zero(f, br):
                    continue
                c = coords_of(br)
                if c is None:
                    raise NotClosed(f"span is not a subalgebra at pair {i},{j}")
                terms = tuple((k, v) for k, v in enumerate(c) if not f.is_zero(v))
                if terms:
                    table[(i, j)] = terms
        super().__init__(name, f, parity, table)
        self.parent = parent
        self.inclusion = LinearMap(self, parent, basis)
        self._even = even
        self._odd = odd

    def coords_in_sub(self, parent_vec):
        """Coordinates of a parent vector in this basis, or None if outside."""
        c0 = self._even.coords(self.parent.component(parent_vec, 0))
        c1 = self._odd.coords(self.parent.component(parent_vec, 1))
        if c0 is None or c1 is None:
            return None
        return c0 + c1


def derived_subalgebra(L: LieSuperAlgebra) -> "Subalgebra":
    vecs = []
    for i in range(L.dim):
        for j in range(i, L.dim):
            terms = L.bracket_basis(i, j)
            if terms:
                v = vec_zero(L.field, L.dim)
                for k, c in terms:
                    v[k] = c
                vecs.append(v)
    return Subalgebra(f"[{L.name},{L.name}]", L, vecs)


def center(L: LieSuperAlgebra):
    """Basis of {x : [x, b_i] = 0 for all i}."""
    f = L.field
    rows = []
    for i in range(L.dim):
        cols = []
        for j in range(L.dim):
            v = vec_zero(f, L.dim)
            for k, c in L.bracket_basis(j, i):
                v[k] = c
            cols.append(v)
        for r in range(L.dim):
            rows.append([cols[j][r] for j in range(L.dim)])
    return kernel_basis(ExactMatrix(f, rows))


def is_perfect(L: LieSuperAlgebra) -> bool:
    return derived_subalgebra(L).dim == L.dim


# -- linear maps -------------------------------------------------------------


class LinearMap:
    """Map between Lie superalgebras given by images of the source basis."""

    __slots__ = ("source", "target", "images")

    def __init__(self, source, target, images):
        if len(images) != source.dim:
            raise InvalidInput("one image per source basis vector required")
        f = target.field
        self.source = source
        self.target = target
        self.images = [[f.coerce(c) for c in img] for img in images]
        for img in self.images:
            if len(img) != target.dim:
                raise InvalidInput("image length does not match target dimension")

    def apply(self, x):
        f = self.target.field
        out = vec_zero(f, self.target.dim)
        for c, img in zip(x, self.images):
            if f.is_zero(f.coerce(c)):
                continue
            for r, v in enumerate(img):
                out[r] = f.add(out[r], f.mul(f.coerce(c), v))
        return out

    def matrix(self):
        """Matrix rows indexed by target coords, columns by source basis."""
        return ExactMatrix(
            self.target.field,
            [[self.images[j][r] for j in range(self.source.dim)] for r in range(self.target.dim)],
        )

    def rank(self):
        from .linalg import rank as _rank

        return _rank(self.matrix())

    def kernel_dim(self):
        return self.source.dim - self.rank()

    def is_bijective(self):
        return self.source.dim == self.target.dim == self.rank()


def check_homomorphism(fmap: LinearMap) -> Report:
    """Parity preservation and f[x,y] = [fx, fy] on all basis pairs."""
    rep = Report("homomorphism", algebra=f"{fmap.source.name}->{fmap.target.name}")
    S, T = fmap.source, fmap.target
    f = T.field
    bad = None
    for i in range(S.dim):
        img = fmap.images[i]
        q = T.homogeneous_parity(img)
        if q is None or (not vec_is_zero(f, img) and q != S.parity[i]):
            bad = i
            break
    rep.add("parity-preserving", bad is None, witness=bad)

    bad = None
    for i in range(S.dim):
        for j in range(i, S.dim):
            lhs = fmap.apply([c for c in _basis_bracket(S, i, j)])
            rhs = T.bracket_vec(fmap.images[i], fmap.images[j])
            if lhs != rhs:
                bad = (i, j)
                break
        if bad:
            break
    rep.add("bracket-preserving", bad is None, witness=bad)
    return rep


def _basis_bracket(L, i, j):
    v = vec_zero(L.field, L.dim)
    for k, c in L.bracket_basis(i, j):
        v[k] = c
    return v
