"""Finite-dimensional associative superalgebras with superinvolution.

An algebra is a Z/2-graded unital associative algebra over an exact field,
given by structure constants on a homogeneous basis, optionally with a
superinvolution: a parity-preserving linear map a -> bar(a) satisfying
bar(ab) = (-1)^{|a||b|} bar(b) bar(a) and bar(bar(a)) = a.

The module provides the preset catalog (ground fields, dual numbers, a rank-1
Grassmann algebra, matrix algebras with the periplectic / orthosymplectic
involutions, group algebra of Z/2, S + S^op with the exchange involution,
adjunction of a square root of -1), axiom verification, the standard
subspaces R_plus/R_minus/[R,R]/[R,R]R, and the search for a central
skew-symmetric unit ("central skew unit" below).
"""

from __future__ import annotations

from .errors import InvalidInput
from .linalg import (
    Echelon,
    ExactMatrix,
    FieldSpec,
    kernel_basis,
    rank,
    vec_add,
    vec_is_zero,
    vec_scale,
    vec_sub,
    vec_zero,
)
from .reports import Report


class SuperAlgebra:
    """Structure-constant superalgebra, optionally with superinvolution.

    mul is stored sparsely: mul[(i, j)] = tuple of (k, coeff) with
    b_i b_j = sum coeff * b_k.  invol is a dim x dim matrix (rows) or None.
    """

    __slots__ = ("name", "field", "dim", "parity", "mul", "unit", "invol", "_derived_cache")

    def __init__(self, name, field, parity, mul, unit, invol=None):
        self.name = name
        self.field = field
        self.parity = tuple(int(p) % 2 for p in parity)
        self.dim = len(self.parity)
        table = {}
        for (i, j), terms in mul.items():
            terms = tuple((k, field.coerce(c)) for k, c in terms if not field.is_zero(field.coerce(c)))
            if terms:
                table[(i, j)] = terms
        self.mul = table
        self.unit = [field.coerce(x) for x in unit]
        self._derived_cache = {}
        if invol is not None:
            invol = [[field.coerce(x) for x in row] for row in invol]
        self.invol = invol

    @classmethod
    def from_dense(cls, name, field, parity, dense, unit, invol=None):
        """dense[i][j][k] = coefficient of b_k in b_i b_j."""
        mul = {}
        for i in range(len(parity)):
            for j in range(len(parity)):
                terms = [(k, c) for k, c in enumerate(dense[i][j]) if c]
                if terms:
                    mul[(i, j)] = terms
        return cls(name, field, parity, mul, unit, invol)

    # -- element arithmetic on coordinate vectors --------------------------

    def zero_vec(self):
        return vec_zero(self.field, self.dim)

    def basis_vec(self, i):
        v = self.zero_vec()
        v[i] = self.field.one()
        return v

    def mul_vec(self, x, y):
        f = self.field
        out = self.zero_vec()
        for i, xi in enumerate(x):
            if f.is_zero(xi):
                continue
            for j, yj in enumerate(y):
                if f.is_zero(yj):
                    continue
                terms = self.mul.get((i, j))
                if terms:
                    c = f.mul(xi, yj)
                    for k, coef in terms:
                        out[k] = f.add(out[k], f.mul(c, coef))
        return out

    def bar_vec(self, x):
        if self.invol is None:
            raise InvalidInput(f"algebra {self.name} carries no involution")
        f = self.field
        out = self.zero_vec()
        for j, xj in enumerate(x):
            if f.is_zero(xj):
                continue
            for i in range(self.dim):
                c = self.invol[i][j]
                if not f.is_zero(c):
                    out[i] = f.add(out[i], f.mul(c, xj))
        return out

    def rho_vec(self, x):
        """rho(a) = (-1)^{|a|} a, extended linearly over the graded basis."""
        f = self.field
        return [f.neg(c) if self.parity[i] else c for i, c in enumerate(x)]

    def commutator_vec(self, x, y):
        """Supercommutator of homogeneous vectors (or splits by parity)."""
        f = self.field
        out = self.zero_vec()
        for qx in (0, 1):
            xq = self.component(x, qx)
            if vec_is_zero(f, xq):
                continue
            for qy in (0, 1):
                yq = self.component(y, qy)
                if vec_is_zero(f, yq):
                    continue
                t = self.mul_vec(xq, yq)
                s = self.mul_vec(yq, xq)
                if qx * qy:
                    t = vec_add(f, t, s)
                else:
                    t = vec_sub(f, t, s)
                out = vec_add(f, out, t)
        return out

    def component(self, x, q):
        f = self.field
        return [c if self.parity[i] == q else f.zero() for i, c in enumerate(x)]

    def homogeneous_parity(self, x):
        f = self.field
        seen = {self.parity[i] for i, c in enumerate(x) if not f.is_zero(c)}
        if len(seen) > 1:
            return None
        return seen.pop() if seen else 0

    def element(self, coords):
        return AlgElement(self, coords)

    def is_supercommutative(self):
        f = self.field
        for i in range(self.dim):
            for j in range(self.dim):
                lhs = self.mul_vec(self.basis_vec(i), self.basis_vec(j))
                rhs = self.mul_vec(self.basis_vec(j), self.basis_vec(i))
                if self.parity[i] * self.parity[j]:
                    rhs = vec_scale(f, f.neg(f.one()), rhs)
                if lhs != rhs:
                    return False
        return True

    def __repr__(self):
        return f"SuperAlgebra({self.name}, dim={self.dim}, {self.field.token()})"


class AlgElement:
    """An algebra element: handle + coordinate vector."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra, coords):
        if len(coords) != algebra.dim:
            raise InvalidInput("coordinate length does not match algebra dimension")
        self.algebra = algebra
        self.coords = [algebra.field.coerce(c) for c in coords]

    def __add__(self, other):
        self._same(other)
        return AlgElement(self.algebra, vec_add(self.algebra.field, self.coords, other.coords))

    def __sub__(self, other):
        self._same(other)
        return AlgElement(self.algebra, vec_sub(self.algebra.field, self.coords, other.coords))

    def __mul__(self, other):
        self._same(other)
        return AlgElement(self.algebra, self.algebra.mul_vec(self.coords, other.coords))

    def __neg__(self):
        f = self.algebra.field
        return AlgElement(self.algebra, vec_scale(f, f.neg(f.one()), self.coords))

    def scale(self, c):
        f = self.algebra.field
        return AlgElement(self.algebra, vec_scale(f, f.coerce(c), self.coords))

    def bar(self):
        return AlgElement(self.algebra, self.algebra.bar_vec(self.coords))

    def rho(self):
        return AlgElement(self.algebra, self.algebra.rho_vec(self.coords))

    def plus(self):
        """a + bar(a)."""
        return self + self.bar()

    def minus(self):
        """a - bar(a)."""
        return self - self.bar()

    def parity(self):
        return self.algebra.homogeneous_parity(self.coords)

    def is_zero(self):
        return vec_is_zero(self.algebra.field, self.coords)

    def __eq__(self, other):
        return isinstance(other, AlgElement) and self.algebra is other.algebra and self.coords == other.coords

    def _same(self, other):
        if not isinstance(other, AlgElement) or other.algebra is not self.algebra:
            raise InvalidInput("elements of different algebras")

    def __repr__(self):
        return f"AlgElement({self.algebra.name}, {self.coords})"


class AlgSubspace:
    """Row-reduced subspace of an algebra's underlying vector space."""

    __slots__ = ("algebra", "echelon")

    def __init__(self, algebra, vectors):
        self.algebra = algebra
        self.echelon = Echelon(algebra.field, algebra.dim)
        for v in vectors:
            self.echelon.add(v)

    @property
    def dim(self):
        return self.echelon.rank

    def basis(self):
        return self.echelon.basis()

    def contains(self, vec):
        return self.echelon.contains(vec)


# -- axiom verification ------------------------------------------------------


def verify_superalgebra(A: SuperAlgebra) -> Report:
    """Grading, associativity, unit and superinvolution axioms, exactly."""
    f = A.field
    rep = Report("algebra-axioms", algebra=A.name)
    rep.add("characteristic-not-2", f.characteristic != 2, witness=f.characteristic)

    bad = None
    for (i, j), terms in A.mul.items():
        want = (A.parity[i] + A.parity[j]) % 2
        for k, c in terms:
            if A.parity[k] != want and not f.is_zero(c):
                bad = (i, j, k)
                break
        if bad:
            break
    rep.add("grading", bad is None, witness=bad)

    bad = None
    for i in range(A.dim):
        bi = A.basis_vec(i)
        for j in range(A.dim):
            bj = A.basis_vec(j)
            ij = A.mul_vec(bi, bj)
            for k in range(A.dim):
                bk = A.basis_vec(k)
                left = A.mul_vec(ij, bk)
                right = A.mul_vec(bi, A.mul_vec(bj, bk))
                if left != right:
                    bad = (i, j, k)
                    break
            if bad:
                break
        if bad:
            break
    rep.add("associativity", bad is None, witness=bad)

    bad = None
    for i in range(A.dim):
        bi = A.basis_vec(i)
        if A.mul_vec(A.unit, bi) != bi or A.mul_vec(bi, A.unit) != bi:
            bad = i
            break
    rep.add("unit", bad is None, witness=bad)

    if A.invol is None:
        rep.add("involution-present", False, witness="no involution")
        return rep

    bad = None
    for j in range(A.dim):
        img = A.bar_vec(A.basis_vec(j))
        q = A.homogeneous_parity(img)
        if q is None or (q != A.parity[j] and not vec_is_zero(f, img)):
            bad = j
            break
    rep.add("involution-parity", bad is None, witness=bad)

    bad = None
    for j in range(A.dim):
        v = A.basis_vec(j)
        if A.bar_vec(A.bar_vec(v)) != v:
            bad = j
            break
    rep.add("involution-involutive", bad is None, witness=bad)

    bad = None
    for i in range(A.dim):
        bi = A.basis_vec(i)
        for j in range(A.dim):
            bj = A.basis_vec(j)
            lhs = A.bar_vec(A.mul_vec(bi, bj))
            rhs = A.mul_vec(A.bar_vec(bj), A.bar_vec(bi))
            if A.parity[i] * A.parity[j]:
                rhs = vec_scale(f, f.neg(f.one()), rhs)
            if lhs != rhs:
                bad = (i, j)
                break
        if bad:
            break
    rep.add("involution-antiautomorphism", bad is None, witness=bad)
    return rep


# -- presets -----------------------------------------------------------------


def _matrix_superalgebra(name, field, even, odd):
    """Full matrix superalgebra with `even` even and `odd` odd rows/columns."""
    size = even + odd
    parity = []
    for i in range(size):
        for j in range(size):
            parity.append(((i >= even) + (j >= even)) % 2)
    idx = lambda i, j: i * size + j
    mul = {}
    one = field.one()
    for i in range(size):
        for j in range(size):
            for k in range(size):
                mul[(idx(i, j), idx(j, k))] = ((idx(i, k), one),)
    unit = vec_zero(field, size * size)
    for i in range(size):
        unit[idx(i, i)] = one
    return SuperAlgebra(name, field, parity, mul, unit), idx, size


def _prp_involution(field, l):
    """Periplectic involution on M_{l|l}: (A B; C D) -> (D^t -B^t; C^t A^t)."""
    A, idx, size = _matrix_superalgebra("tmp", field, l, l)
    dim = size * size
    inv = [[field.zero()] * dim for _ in range(dim)]
    one, mone = field.one(), field.neg(field.one())
    for i in range(l):
        for j in range(l):
            inv[idx(l + j, l + i)][idx(i, j)] = one
            inv[idx(j, i)][idx(l + i, l + j)] = one
            inv[idx(j, l + i)][idx(i, l + j)] = mone
            inv[idx(l + j, i)][idx(l + i, j)] = one
    return inv


def _osp_involution_scalar(field, k, l):
    """Orthosymplectic involution on M_{k|2l} over the (even) ground field."""
    size = k + 2 * l
    _, idx, _ = _matrix_superalgebra("tmp", field, k, 2 * l)
    dim = size * size
    inv = [[field.zero()] * dim for _ in range(dim)]
    one, mone = field.one(), field.neg(field.one())

    def block(i):
        if i < k:
            return 0
        if i < k + l:
            return 1
        return 2

    sign = {  # target block pair -> sign of the transposed source entry
        (0, 0): one, (1, 1): one, (2, 2): one,
        (0, 1): mone, (0, 2): one, (1, 0): one, (2, 0): mone,
        (1, 2): mone, (2, 1): mone,
    }
    swap = {0: 0, 1: 2, 2: 1}

    def shift(i, b_from, b_to):
        base_from = 0 if b_from == 0 else (k if b_from == 1 else k + l)
        base_to = 0 if b_to == 0 else (k if b_to == 1 else k + l)
        return i - base_from + base_to

    for i in range(size):
        for j in range(size):
            bi, bj = block(i), block(j)
            ti, tj = swap[bj], swap[bi]
            inv[idx(shift(j, bj, ti), shift(i, bi, tj))][idx(i, j)] = sign[(ti, tj)]
    return inv


def _identity_involution(field, dim):
    one = field.one()
    return [[one if i == j else field.zero() for j in range(dim)] for i in range(dim)]


PRESET_NAMES = (
    "ground_field_id",
    "dual_numbers_id",
    "grassmann_id",
    "group_c2_id",
    "matrix_prp",
    "matrix_osp",
    "m2",
    "s_plus_sop",
    "sqrtminus1",
)


def preset_algebra(name, field: FieldSpec, params=()) -> SuperAlgebra:
    """Build and verify a catalogued algebra.

    Catalog (params in brackets):
      ground_field_id          k itself, identity involution
      dual_numbers_id          k[e], e even, e^2 = 0, identity involution
      grassmann_id             k[xi], xi odd, xi^2 = 0, identity involution
      group_c2_id              group algebra k[Z/2], identity involution
      matrix_prp [l]           M_{l|l}(k), periplectic involution
      matrix_osp [k, l]        M_{k|2l}(k), orthosymplectic involution
      m2                       M_2(k), even, no involution (an S for s_plus_sop)
      s_plus_sop [S-preset...] S + S^op with the exchange involution
      sqrtminus1 [R-preset...] R + R*sqrt(-1) with the twisted involution
    """
    params = tuple(params)
    f = field
    if name == "ground_field_id":
        A = SuperAlgebra("ground_field_id", f, [0], {(0, 0): ((0, f.one()),)}, [f.one()],
                         _identity_involution(f, 1))
    elif name == "dual_numbers_id":
        A = SuperAlgebra(
            "dual_numbers_id", f, [0, 0],
            {(0, 0): ((0, f.one()),), (0, 1): ((1, f.one()),), (1, 0): ((1, f.one()),)},
            [f.one(), f.zero()], _identity_involution(f, 2))
    elif name == "grassmann_id":
        A = SuperAlgebra(
            "grassmann_id", f, [0, 1],
            {(0, 0): ((0, f.one()),), (0, 1): ((1, f.one()),), (1, 0): ((1, f.one()),)},
            [f.one(), f.zero()], _identity_involution(f, 2))
    elif name == "group_c2_id":
        A = SuperAlgebra(
            "group_c2_id", f, [0, 0],
            {(0, 0): ((0, f.one()),), (0, 1): ((1, f.one()),),
             (1, 0): ((1, f.one()),), (1, 1): ((0, f.one()),)},
            [f.one(), f.zero()], _identity_involution(f, 2))
    elif name == "matrix_prp":
        l = int(params[0]) if params else 1
        A, _, _ = _matrix_superalgebra(f"matrix_prp({l})", f, l, l)
        A = SuperAlgebra(A.name, f, A.parity, A.mul, A.unit, _prp_involution(f, l))
    elif name == "matrix_osp":
        k = int(params[0]) if params else 1
        two_l = int(params[1]) if len(params) > 1 else 2
        if two_l % 2:
            raise InvalidInput("matrix_osp needs an even odd-block size")
        l = two_l // 2
        A, _, _ = _matrix_superalgebra(f"matrix_osp({k},{two_l})", f, k, 2 * l)
        A = SuperAlgebra(A.name, f, A.parity, A.mul, A.unit, _osp_involution_scalar(f, k, l))
    elif name == "m2":
        A, _, _ = _matrix_superalgebra("m2", f, 2, 0)
    elif name == "s_plus_sop":
        S = preset_algebra(params[0] if params else "ground_field_id", f, params[1:])
        A = sum_with_opposite(S)
    elif name == "sqrtminus1":
        R = preset_algebra(params[0] if params else "ground_field_id", f, params[1:])
        A = adjoin_sqrt_minus_one(R)
    else:
        raise InvalidInput(f"unknown preset {name!r}")

    rep = verify_superalgebra(A)
    if A.invol is not None and not rep.ok():
        raise InvalidInput(f"preset {name} failed verification: {[c.name for c in rep.failures()]}")
    if A.invol is None:
        # involution-free coordinate algebras (e.g. the S of S+S^op) still
        # must be graded associative unital
        core = [c for c in rep.checks if c.name != "involution-present"]
        if not all(c.passed for c in core):
            raise InvalidInput(f"preset {name} failed verification")
    return A


def parse_preset(token: str) -> SuperAlgebra:
    """Parse a namespaced preset id "name:field[:params...]"."""
    parts = token.split(":")
    if len(parts) < 2:
        raise InvalidInput(f"preset id {token!r} must look like name:field[:params]")
    name = parts[0]
    field = FieldSpec.parse_token(parts[1])
    params = []
    for p in parts[2:]:
        params.extend(x for x in p.split(",") if x)
    return preset_algebra(name, field, tuple(params))


# -- constructions -----------------------------------------------------------


def sum_with_opposite(S: SuperAlgebra) -> SuperAlgebra:
    """S + S^op with the exchange involution a+b -> b+a.

    The second summand multiplies by a op b = (-1)^{|a||b|} b a.
    """
    f = S.field
    d = S.dim
    parity = list(S.parity) + list(S.parity)
    mul = {}
    for (i, j), terms in S.mul.items():
        mul[(i, j)] = terms
        # (0+b_j)(0+b_i) = 0 + (-1)^{|i||j|} b_i b_j
        sgn = f.neg(f.one()) if S.parity[i] * S.parity[j] else f.one()
        mul[(d + j, d + i)] = tuple((d + k, f.mul(sgn, c)) for k, c in terms)
    unit = list(S.unit) + list(S.unit)
    zero = f.zero()
    invol = [[zero] * (2 * d) for _ in range(2 * d)]
    one = f.one()
    for i in range(d):
        invol[d + i][i] = one
        invol[i][d + i] = one
    name = f"{S.name}+op"
    return SuperAlgebra(name, f, parity, mul, unit, invol)


def adjoin_sqrt_minus_one(R: SuperAlgebra) -> SuperAlgebra:
    """R + R*sqrt(-1) with bar(a + b i) = bar(a) - bar(b) i.

    Always constructed; if the base already contains a square root of -1,
    the result is still a legal algebra (possibly with zero divisors).
    """
    if R.invol is None:
        raise InvalidInput("adjoin_sqrt_minus_one needs an involutive algebra")
    f = R.field
    d = R.dim
    parity = list(R.parity) + list(R.parity)
    mul = {}
    mone = f.neg(f.one())
    for (i, j), terms in R.mul.items():
        mul[(i, j)] = terms
        mul[(d + i, d + j)] = tuple((k, f.mul(mone, c)) for k, c in terms)
        mul[(i, d + j)] = tuple((d + k, c) for k, c in terms)
        mul[(d + i, j)] = tuple((d + k, c) for k, c in terms)
    unit = list(R.unit) + [f.zero()] * d
    invol = [[f.zero()] * (2 * d) for _ in range(2 * d)]
    for i in range(d):
        for j in range(d):
            c = R.invol[i][j]
            if not f.is_zero(c):
                invol[i][j] = c
                invol[d + i][d + j] = f.neg(c)
    return SuperAlgebra(f"{R.name}[i]", f, parity, mul, unit, invol)


# -- canonical subspaces -----------------------------------------------------

SUBSPACE_KINDS = ("plus", "minus", "commutators", "commutators_times_R", "minus_plus_minus_sq")


def subspace(R: SuperAlgebra, which: str) -> AlgSubspace:
    """Row-reduced basis of R_+, R_-, [R,R], [R,R]R or R_- + R_-.R_-."""
    f = R.field
    if which in ("plus", "minus"):
        if R.invol is None:
            raise InvalidInput("plus/minus subspaces need an involution")
        sign = f.one() if which == "minus" else f.neg(f.one())
        rows = [
            [f.add(R.invol[i][j], sign if i == j else f.zero()) for j in range(R.dim)]
            for i in range(R.dim)
        ]
        return AlgSubspace(R, kernel_basis(ExactMatrix(f, rows)))
    if which == "commutators":
        vecs = [
            R.commutator_vec(R.basis_vec(i), R.basis_vec(j))
            for i in range(R.dim)
            for j in range(R.dim)
        ]
        return AlgSubspace(R, vecs)
    if which == "commutators_times_R":
        vecs = []
        for i in range(R.dim):
            for j in range(R.dim):
                c = R.commutator_vec(R.basis_vec(i), R.basis_vec(j))
                if vec_is_zero(f, c):
                    continue
                for k in range(R.dim):
                    vecs.append(R.mul_vec(c, R.basis_vec(k)))
        return AlgSubspace(R, vecs)
    if which == "minus_plus_minus_sq":
        minus = subspace(R, "minus").basis()
        vecs = [list(v) for v in minus]
        for u in minus:
            for v in minus:
                vecs.append(R.mul_vec(u, v))
        return AlgSubspace(R, vecs)
    raise InvalidInput(f"unknown subspace kind {which!r}")


def commutators_intersect_minus(R: SuperAlgebra) -> AlgSubspace:
    """[R,R] intersected with R_- (used by the trace criterion)."""
    comm = subspace(R, "commutators")
    minus = subspace(R, "minus")
    # intersection via kernel of the stacked coordinate map
    f = R.field
    cb = comm.basis()
    mb = minus.basis()
    if not cb or not mb:
        return AlgSubspace(R, [])
    cols = len(cb) + len(mb)
    rows = []
    for r in range(R.dim):
        rows.append([cb[i][r] for i in range(len(cb))] + [f.neg(mb[j][r]) for j in range(len(mb))])
    vecs = []
    for sol in kernel_basis(ExactMatrix(f, rows)):
        v = vec_zero(f, R.dim)
        for i in range(len(cb)):
            v = vec_add(f, v, vec_scale(f, sol[i], cb[i]))
        vecs.append(v)
    return AlgSubspace(R, vecs)


# -- center and the central skew unit ---------------------------------------


def center_subspace(R: SuperAlgebra, mode="super") -> AlgSubspace:
    """Solutions of b_i x = (-1)^{|x||b_i|} x b_i (super) or b_i x = x b_i (plain).

    Solved per parity of x, so the basis is homogeneous either way.
    """
    f = R.field
    vecs = []
    for q in (0, 1):
        cols = [i for i in range(R.dim) if R.parity[i] == q]
        if not cols:
            continue
        rows = []
        for i in range(R.dim):
            bi = R.basis_vec(i)
            block = []
            for c in cols:
                x = R.basis_vec(c)
                lhs = R.mul_vec(bi, x)
                rhs = R.mul_vec(x, bi)
                if mode == "super" and q * R.parity[i]:
                    rhs = vec_scale(f, f.neg(f.one()), rhs)
                block.append(vec_sub(f, lhs, rhs))
            for r in range(R.dim):
                rows.append([block[ci][r] for ci in range(len(cols))])
        for sol in kernel_basis(ExactMatrix(f, rows)):
            v = vec_zero(f, R.dim)
            for ci, c in enumerate(cols):
                v[c] = sol[ci]
            vecs.append(v)
    return AlgSubspace(R, vecs)


def _is_invertible(R: SuperAlgebra, v) -> bool:
    rows = [[R.mul_vec(v, R.basis_vec(j))[i] for j in range(R.dim)] for i in range(R.dim)]
    return rank(ExactMatrix(R.field, rows)) == R.dim


def _solve_inverse(R: SuperAlgebra, v):
    """x with v x = 1 and x v = 1, or None."""
    f = R.field
    from .linalg import solve as _solve

    left = [[R.mul_vec(v, R.basis_vec(j))[i] for j in range(R.dim)] for i in range(R.dim)]
    x = _solve(ExactMatrix(f, left), R.unit)
    if x is None:
        return None
    if R.mul_vec(x, v) != R.unit:
        return None
    return x


def _invertible_in_subspace(R: SuperAlgebra, basis):
    """An invertible element of span(basis), or None (exact decision).

    det(left-multiplication) is a polynomial of total degree <= dim R in the
    coefficients; evaluating it on the integer grid {0..dim R}^t decides
    whether it vanishes identically.  Over F_p with few enough points the
    subspace is enumerated instead.
    """
    f = R.field
    t = len(basis)
    if t == 0:
        return None
    if f.kind == "Fp" and f.p ** t <= 200_000:
        coeff_sets = _all_tuples(f.p, t)
    else:
        if t > 4:
            raise InvalidInput("central-unit search supports subspaces of dim <= 4")
        coeff_sets = _all_tuples(R.dim + 1, t)
    for coeffs in coeff_sets:
        if not any(coeffs):
            continue
        v = vec_zero(f, R.dim)
        for c, b in zip(coeffs, basis):
            v = vec_add(f, v, vec_scale(f, f.coerce(c), b))
        if _is_invertible(R, v):
            return v
    return None


def _all_tuples(base, t):
    out = [()]
    for _ in range(t):
        out = [tup + (v,) for tup in out for v in range(base)]
    return out


def assumption_checker(R: SuperAlgebra, center_mode="super"):
    """Search for a homogeneous central unit e with bar(e) = -e.

    Returns a dict: holds, witness (coords or None), parity, center dims for
    both readings of "center".  Invertibility of a found witness is
    re-certified by solving e x = 1 and x e = 1.
    """
    f = R.field
    dims = {}
    for mode in ("super", "plain"):
        dims[mode] = center_subspace(R, mode).dim
    center = center_subspace(R, center_mode)
    minus = subspace(R, "minus")
    result = {"holds": False, "witness": None, "parity": None,
              "center_dims": dims, "center_mode": center_mode}
    for q in (0, 1):
        inter = _intersect(R, center, minus, q)
        w = _invertible_in_subspace(R, inter)
        if w is not None:
            x = _solve_inverse(R, w)
            if x is not None:
                result.update(holds=True, witness=w, parity=q)
                return result
    return result


def _intersect(R, sub1: AlgSubspace, sub2: AlgSubspace, q):
    """Basis of (sub1 ∩ sub2) ∩ parity-q component."""
    f = R.field
    b1 = []
    ech = Echelon(f, R.dim)
    for v in sub1.basis():
        vq = R.component(v, q)
        if not vec_is_zero(f, vq) and ech.add(vq):
            b1.append(vq)
    b2 = sub2.basis()
    if not b1 or not b2:
        return []
    rows = []
    for r in range(R.dim):
        rows.append([v[r] for v in b1] + [f.neg(w[r]) for w in b2])
    out = Echelon(f, R.dim)
    for sol in kernel_basis(ExactMatrix(f, rows)):
        v = vec_zero(f, R.dim)
        for i in range(len(b1)):
            v = vec_add(f, v, vec_scale(f, sol[i], b1[i]))
        if not vec_is_zero(f, v):
            out.add(v)
    return out.basis()


# -- JSON config schema ------------------------------------------------------


def algebra_to_config(A: SuperAlgebra) -> dict:
    f = A.field
    field_obj = {"kind": "Q"} if f.kind == "Q" else {"kind": "Fp", "p": f.p}
    mul = []
    for (i, j), terms in sorted(A.mul.items()):
        mul.append([i, j, [[k, f.fmt(c)] for k, c in terms]])
    cfg = {
        "name": A.name,
        "field": field_obj,
        "parity": list(A.parity),
        "unit": [f.fmt(c) for c in A.unit],
        "mul": mul,
        "involution": None if A.invol is None else [[f.fmt(c) for c in row] for row in A.invol],
    }
    return cfg


def algebra_from_config(cfg: dict) -> SuperAlgebra:
    try:
        fk = cfg["field"]
        field = FieldSpec.Q() if fk["kind"] == "Q" else FieldSpec.Fp(int(fk["p"]))
        parity = [int(p) for p in cfg["parity"]]
        unit = [field.parse(s) for s in cfg["unit"]]
        mul = {}
        for i, j, terms in cfg["mul"]:
            mul[(int(i), int(j))] = tuple((int(k), field.parse(c)) for k, c in terms)
        invol = cfg.get("involution")
        if invol is not None:
            invol = [[field.parse(c) for c in row] for row in invol]
        return SuperAlgebra(cfg.get("name", "config"), field, parity, mul, unit, invol)
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise InvalidInput(f"malformed algebra config: {exc}") from exc
