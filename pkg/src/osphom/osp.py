"""Generalized orthosymplectic Lie superalgebras.

osp~_{m|2n}(R, bar) is the space of matrices X in M_{m|2n}(R) with
X^osp = -X; osp_{m|2n}(R, bar) is its derived subalgebra.  The module
builds both, realizes the canonical generator families

    t_ij(a) = e_ij(a) - e_ji(bar a)
    u_kl(a) = e_{m+k,m+l}(a) - e_{m+n+l,m+n+k}(bar a)
    v_kl(a) = e_{m+k,m+n+l}(a) + e_{m+l,m+n+k}(bar a)
    w_kl(a) = e_{m+n+k,m+l}(a) + e_{m+n+l,m+k}(bar a)
    f_ik(a) = e_{i,m+k}(a) + e_{m+n+k,i}(rho(bar a))
    g_ki(a) = e_{m+k,i}(a) - e_{i,m+n+k}(rho(bar a))

and the trace-type criterion eps(X) = Tr(A) - Tr(rho(D11) - bar(rho(D11)))
that detects membership of osp~ elements in osp (eps lands in R_-, and
X lies in osp iff eps(X) lies in [R,R] n R_-).  Structural checks:
exactness dimension count, generation by the families above, perfectness,
and the two classical identification examples (supercommutative
coefficients, S + S^op coefficients).
"""

from __future__ import annotations

from .errors import InvalidInput, InvalidShape
from .linalg import Echelon, ExactMatrix, kernel_basis, vec_is_zero, vec_zero
from .liesuper import (
    LieSuperAlgebra,
    LinearMap,
    check_homomorphism,
    derived_subalgebra,
    from_matrix_span,
    is_perfect,
    lie_from_algebra_subspace,
    verify_lie,
)
from .reports import Report
from .superalg import (
    AlgElement,
    SuperAlgebra,
    commutators_intersect_minus,
    preset_algebra,
    subspace,
)
from .supermatrix import MatrixShape, SuperMatrix, matrix_unit, osp_involution, supercommutator


class OspAlgebra:
    """osp~ and osp for one (shape, coefficient algebra) pair."""

    __slots__ = ("shape", "R", "tilde", "osp")

    def __init__(self, shape, R, tilde, osp):
        self.shape = shape
        self.R = R
        self.tilde = tilde
        self.osp = osp

    @property
    def m(self):
        return self.shape.m

    @property
    def n(self):
        return self.shape.n

    def __repr__(self):
        return f"OspAlgebra(m={self.m}, n={self.n}, R={self.R.name}, dim={self.osp.dim})"


def _all_matrix_units(shape, R):
    out = []
    for i in range(shape.size):
        for j in range(shape.size):
            for q in range(R.dim):
                out.append(matrix_unit(shape, R, i + 1, j + 1, R.element(R.basis_vec(q))))
    return out


def build_osp(m: int, n: int, R: SuperAlgebra, verify: bool = True) -> OspAlgebra:
    """Solve X^osp = -X for osp~, take its derived subalgebra for osp."""
    if m < 0 or n < 0 or m + 2 * n < 1:
        raise InvalidShape(f"illegal shape ({m},{n})")
    if R.invol is None:
        raise InvalidInput("osp needs an involutive coefficient algebra")
    shape = MatrixShape(m, n)
    f = R.field
    units = _all_matrix_units(shape, R)
    cols = [(osp_involution(U) + U).flatten() for U in units]
    nflat = len(cols[0])
    M = ExactMatrix(f, [[cols[j][r] for j in range(len(units))] for r in range(nflat)])
    mats = []
    for v in kernel_basis(M):
        X = None
        for c, U in zip(v, units):
            if not f.is_zero(c):
                T = U.scale(c)
                X = T if X is None else X + T
        if X is not None:
            mats.append(X)
    tilde = from_matrix_span(mats, f"osp~({m}|{2*n},{R.name})")

    # derived subalgebra, re-realized by matrices
    der = derived_subalgebra(tilde)
    der_mats = [tilde.from_coords(der.inclusion.images[i]) for i in range(der.dim)]
    if der_mats:
        osp = from_matrix_span(der_mats, f"osp({m}|{2*n},{R.name})")
    else:
        osp = from_matrix_span([mats[0].scale(0)], f"osp({m}|{2*n},{R.name})") if mats else tilde
    if verify:
        for L in (tilde, osp):
            rep = verify_lie(L)
            if not rep.ok():
                raise InvalidInput(f"{L.name} failed Lie verification: {[c.name for c in rep.failures()]}")
    return OspAlgebra(shape, R, tilde, osp)


# -- canonical generators ----------------------------------------------------

GENERATOR_KINDS = ("t", "u", "v", "w", "f", "g")


def generator(A: OspAlgebra, kind: str, indices, a) -> SuperMatrix:
    """One of t/u/v/w/f/g, with 1-based indices in the stated ranges."""
    m, n = A.m, A.n
    R = A.R
    shape = A.shape
    if isinstance(a, AlgElement):
        a = a.coords
    a = list(a)
    abar = R.bar_vec(a)
    rho_abar = R.rho_vec(abar)

    def unit(i, j, coords):
        return matrix_unit(shape, R, i, j, R.element(coords))

    if kind == "t":
        i, j = indices
        if not (1 <= i <= m and 1 <= j <= m):
            raise InvalidInput(f"t index out of range: {indices}")
        return unit(i, j, a) - unit(j, i, abar)
    if kind == "u":
        k, l = indices
        if not (1 <= k <= n and 1 <= l <= n):
            raise InvalidInput(f"u index out of range: {indices}")
        return unit(m + k, m + l, a) - unit(m + n + l, m + n + k, abar)
    if kind == "v":
        k, l = indices
        if not (1 <= k <= n and 1 <= l <= n):
            raise InvalidInput(f"v index out of range: {indices}")
        return unit(m + k, m + n + l, a) + unit(m + l, m + n + k, abar)
    if kind == "w":
        k, l = indices
        if not (1 <= k <= n and 1 <= l <= n):
            raise InvalidInput(f"w index out of range: {indices}")
        return unit(m + n + k, m + l, a) + unit(m + n + l, m + k, abar)
    if kind == "f":
        i, k = indices
        if not (1 <= i <= m and 1 <= k <= n):
            raise InvalidInput(f"f index out of range: {indices}")
        return unit(i, m + k, a) + unit(m + n + k, i, rho_abar)
    if kind == "g":
        k, i = indices
        if not (1 <= i <= m and 1 <= k <= n):
            raise InvalidInput(f"g index out of range: {indices}")
        return unit(m + k, i, a) - unit(i, m + n + k, rho_abar)
    raise InvalidInput(f"unknown generator kind {kind!r}")


def epsilon(A: OspAlgebra, X: SuperMatrix) -> AlgElement:
    """eps(X) = Tr(A-block) - Tr(rho(D11) - bar(rho(D11))) for X in osp~."""
    if A.tilde.to_coords(X) is None:
        raise InvalidInput("epsilon is only defined on osp~")
    R = A.R
    f = R.field
    m, n = A.m, A.n
    trA = vec_zero(f, R.dim)
    trD = vec_zero(f, R.dim)
    for (i, j), v in X.entries.items():
        if i == j:
            if i < m:
                trA = [f.add(x, y) for x, y in zip(trA, v)]
            elif i < m + n:
                trD = [f.add(x, y) for x, y in zip(trD, v)]
    rhoD = R.rho_vec(trD)
    val = [f.sub(x, f.sub(y, z)) for x, y, z in zip(trA, rhoD, R.bar_vec(rhoD))]
    return R.element(val)


def generator_images(A: OspAlgebra, include_diagonal_fg=True):
    """All generator matrices over the coefficient basis, as in the
    generation statement: t/u/v/w with distinct indices, f/g with all."""
    m, n, R = A.m, A.n, A.R
    out = []
    for q in range(R.dim):
        a = R.basis_vec(q)
        for i in range(1, m + 1):
            for j in range(1, m + 1):
                if i != j:
                    out.append(generator(A, "t", (i, j), a))
        for k in range(1, n + 1):
            for l in range(1, n + 1):
                if k != l:
                    out.append(generator(A, "u", (k, l), a))
                    out.append(generator(A, "v", (k, l), a))
                    out.append(generator(A, "w", (k, l), a))
        for i in range(1, m + 1):
            for k in range(1, n + 1):
                out.append(generator(A, "f", (i, k), a))
                out.append(generator(A, "g", (k, i), a))
    return out


def bracket_closure(L: LieSuperAlgebra, seeds, cap=None):
    """Span closure of `seeds` (coordinate vectors) under the bracket.

    Returns (echelon, stabilized): `stabilized` is False when the hard cap
    was exceeded, which callers report as a counterexample candidate.
    """
    f = L.field
    cap = L.dim if cap is None else cap
    ech = Echelon(f, L.dim)
    reps = []
    queue = []
    for v in seeds:
        if ech.add(v):
            reps.append(v)
            queue.append(v)
    while queue:
        if ech.rank >= cap:
            # closure can only grow up to the cap; callers compare dims
            return ech, True
        v = queue.pop()
        for u in list(reps):
            w = L.bracket_vec(u, v)
            if not vec_is_zero(f, w) and ech.add(w):
                reps.append(w)
                queue.append(w)
                if len(reps) > 4 * cap + 8:
                    return ech, False
    return ech, True


def check_section2(A: OspAlgebra) -> Report:
    """Exactness dimension count, generation, perfectness (m, n >= 1)."""
    if A.m < 1 or A.n < 1:
        raise InvalidShape("structural checks require m, n >= 1")
    R = A.R
    rep = Report("osp-structure", algebra=R.name, shape=(A.m, A.n))

    minus_dim = subspace(R, "minus").dim
    comm_minus_dim = commutators_intersect_minus(R).dim
    gap = A.tilde.dim - A.osp.dim
    rep.add(
        "exactness-dimension",
        gap == minus_dim - comm_minus_dim,
        witness={"tilde": A.tilde.dim, "osp": A.osp.dim,
                 "minus": minus_dim, "comm-minus": comm_minus_dim},
        dims=gap,
    )

    seeds = []
    outside = None
    for X in generator_images(A):
        c = A.osp.to_coords(X)
        if c is None:
            outside = X
            break
        seeds.append(c)
    rep.add("generators-in-osp", outside is None)
    if outside is None:
        ech, stabilized = bracket_closure(A.osp, seeds, cap=A.osp.dim)
        rep.add(
            "generation",
            stabilized and ech.rank == A.osp.dim,
            witness={"closure": ech.rank, "osp": A.osp.dim, "stabilized": stabilized},
        )
    rep.add("perfectness", is_perfect(A.osp))

    # eps lands in [R,R] n R_- on all of osp = [osp~, osp~] (linear check
    # on the basis); this is the effective form of the exact sequence.
    cm = commutators_intersect_minus(R)
    bad = None
    for i, B in enumerate(A.osp.basis_mats):
        e = epsilon(A, B)
        if not cm.contains(e.coords):
            bad = i
            break
    rep.add("trace-criterion-on-derived", bad is None, witness=bad)
    return rep


# -- classical identification examples ---------------------------------------


def tensor_lie_algebra(Lk: LieSuperAlgebra, R: SuperAlgebra, name=None) -> LieSuperAlgebra:
    """L tensor R for supercommutative R: [x*a, y*b] = (-1)^{|a||y|}[x,y]*ab."""
    f = Lk.field
    if f != R.field:
        raise InvalidInput("tensor factors over different fields")
    parity = []
    for p in Lk.parity:
        for q in R.parity:
            parity.append((p + q) % 2)
    dR = R.dim
    table = {}
    for (i, j), terms in Lk.table.items():
        for qi in range(dR):
            for qj in range(dR):
                prod = R.mul_vec(R.basis_vec(qi), R.basis_vec(qj))
                sgn = -1 if R.parity[qi] * Lk.parity[j] else 1
                entry = []
                for k, c in terms:
                    for s, cs in enumerate(prod):
                        if f.is_zero(cs):
                            continue
                        val = f.mul(c, cs)
                        if sgn < 0:
                            val = f.neg(val)
                        entry.append((k * dR + s, val))
                if entry:
                    table[(i * dR + qi, j * dR + qj)] = tuple(entry)
    return LieSuperAlgebra(name or f"{Lk.name}x{R.name}", f, parity, table, complete=False)


def _supercommutative_family(m, n):
    """The spanning family of osp_{m|2n}(k) used by the identification map:
    (kind, indices) with the image rule 'plain' or 'rho' per slot."""
    fam = []
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            fam.append(("skew", (i, j)))
    for k in range(1, n + 1):
        for l in range(1, n + 1):
            fam.append(("u", (k, l)))
    for k in range(1, n + 1):
        for l in range(k, n + 1):
            fam.append(("v", (k, l)))
            fam.append(("w", (k, l)))
    for i in range(1, m + 1):
        for k in range(1, n + 1):
            fam.append(("f", (i, k)))
            fam.append(("g", (k, i)))
    return fam


def _supercommutative_item(shape, R, item, a):
    """Domain matrix over k (a = unit) / image matrix over R for one item."""
    m, n = shape.m, shape.n
    kind, idx = item
    rho_a = R.rho_vec(a)

    def unit(i, j, coords):
        return matrix_unit(shape, R, i, j, R.element(coords))

    if kind == "skew":
        i, j = idx
        return unit(i, j, a) - unit(j, i, a)
    if kind == "u":
        k, l = idx
        return unit(m + k, m + l, rho_a) - unit(m + n + l, m + n + k, rho_a)
    if kind == "v":
        k, l = idx
        return unit(m + k, m + n + l, rho_a) + unit(m + l, m + n + k, rho_a)
    if kind == "w":
        k, l = idx
        return unit(m + n + k, m + l, rho_a) + unit(m + n + l, m + k, rho_a)
    if kind == "f":
        i, k = idx
        return unit(i, m + k, rho_a) + unit(m + n + k, i, a)
    if kind == "g":
        k, i = idx
        return unit(m + k, i, a) - unit(i, m + n + k, rho_a)
    raise InvalidInput(kind)


def example_supercommutative(m, n, R: SuperAlgebra) -> Report:
    """osp_{m|2n}(k) tensor R  ~  osp_{m|2n}(R, id) for supercommutative R."""
    rep = Report("example-supercommutative", algebra=R.name, shape=(m, n))
    f = R.field
    if not R.is_supercommutative():
        raise InvalidInput("coefficients must be supercommutative")
    idmat = [[f.one() if i == j else f.zero() for j in range(R.dim)] for i in range(R.dim)]
    if R.invol != idmat:
        raise InvalidInput("identity involution required")

    ground = preset_algebra("ground_field_id", f)
    ospk = build_osp(m, n, ground)
    dom = tensor_lie_algebra(ospk.osp, R, name=f"osp({m}|{2*n},k)x{R.name}")
    ospR = build_osp(m, n, R)

    fam = _supercommutative_family(m, n)
    ground_shape = ospk.shape
    one = [f.one()]
    fam_cols = [_supercommutative_item(ground_shape, ground, item, one).flatten() for item in fam]
    fam_matrix = ExactMatrix(f, [[col[r] for col in fam_cols] for r in range(len(fam_cols[0]))])
    from .linalg import rank as _rank, solve as _solve

    rep.add("family-spans-ospk", _rank(fam_matrix) == len(fam) == ospk.osp.dim,
            dims={"family": len(fam), "ospk": ospk.osp.dim})

    # images of my osp(k) basis: expand in the family, push through the rule
    images = []
    ok = True
    for p in range(ospk.osp.dim):
        Bp = ospk.osp.basis_mats[p]
        gamma = _solve(fam_matrix, Bp.flatten())
        if gamma is None:
            ok = False
            break
        for q in range(R.dim):
            img = None
            for c, item in zip(gamma, fam):
                if f.is_zero(c):
                    continue
                Xr = _supercommutative_item(A := ospR.shape, R, item, R.basis_vec(q)).scale(c)
                img = Xr if img is None else img + Xr
            coords = ospR.osp.to_coords(img) if img is not None else vec_zero(f, ospR.osp.dim)
            if coords is None:
                ok = False
                break
            images.append(coords)
        if not ok:
            break
    rep.add("images-in-ospR", ok)
    if not ok:
        return rep

    fmap = LinearMap(dom, ospR.osp, images)
    hom = check_homomorphism(fmap)
    rep.extend(hom, prefix="map-")
    rep.add("bijective", fmap.is_bijective(),
            dims={"domain": dom.dim, "target": ospR.osp.dim, "rank": fmap.rank()})
    return rep


def _sop_image_matrix(shape, Rss, dS, i, j, q, parS):
    """Image of gl basis element e_ij(s_q) (0-based i, j) in M(S+S^op)."""
    m, n = shape.m, shape.n
    a = [0] * (2 * dS)
    b = [0] * (2 * dS)
    f = Rss.field
    a[q] = 1  # a + 0
    b[dS + q] = 1  # 0 + a
    rsgn = -1 if parS[q] else 1  # rho on S-elements

    def unit(r, c, coords):
        return matrix_unit(shape, Rss, r + 1, c + 1, Rss.element([f.coerce(x) for x in coords]))

    def scaled(coords, s):
        return [f.coerce(x * s) for x in coords]

    bi, bj = shape.block(i), shape.block(j)
    if bi == 0 and bj == 0:
        return unit(i, j, a) - unit(j, i, b)
    if bi == 0 and bj == 1:
        k = j - m
        return unit(i, j, a) + unit(m + n + k, i, scaled(b, rsgn))
    if bi == 0 and bj == 2:
        k = j - m - n
        return unit(i, j, a) - unit(m + k, i, scaled(b, rsgn))
    if bi == 1 and bj == 0:
        k = i - m
        return unit(i, j, a) - unit(j, m + n + k, scaled(b, rsgn))
    if bi == 1 and bj == 1:
        k, l = i - m, j - m
        return unit(i, j, a) - unit(m + n + l, m + n + k, b)
    if bi == 1 and bj == 2:
        k, l = i - m, j - m - n
        return unit(i, j, a) + unit(m + l, m + n + k, b)
    if bi == 2 and bj == 0:
        k = i - m - n
        return unit(j, m + k, scaled(b, rsgn)) + unit(i, j, a)
    if bi == 2 and bj == 1:
        # + sign forced: with a minus the k = l image falls outside osp~
        # (the image must be w_{kl}(a+0) = e_{m+n+k,m+l}(a+0) + e_{m+n+l,m+k}(0+a))
        k, l = i - m - n, j - m
        return unit(i, j, a) + unit(m + n + l, m + k, b)
    k, l = i - m - n, j - m - n
    return unit(m + l, m + k, scaled(b, -1)) + unit(i, j, a)


def example_s_plus_sop(m, n, S: SuperAlgebra) -> Report:
    """gl_{m|2n}(S) ~ osp~_{m|2n}(S+S^op, ex), carrying sl onto osp."""
    from .superalg import sum_with_opposite

    rep = Report("example-s-plus-sop", algebra=S.name, shape=(m, n))
    f = S.field
    Rss = sum_with_opposite(S)
    shape = MatrixShape(m, n)
    N = shape.size
    gl = from_matrix_span(_all_matrix_units(shape, S), f"gl({m}|{2*n},{S.name})")
    ospR = build_osp(m, n, Rss)

    images = []
    ok = True
    for p in range(gl.dim):
        # gl basis vectors are single matrix units e_ij(s_q) up to echelon
        # normalization; expand the basis matrix slot by slot
        Bp = gl.basis_mats[p]
        img = None
        for (i, j), coords in Bp.entries.items():
            for q, c in enumerate(coords):
                if f.is_zero(c):
                    continue
                X = _sop_image_matrix(shape, Rss, S.dim, i, j, q, S.parity).scale(c)
                img = X if img is None else img + X
        vec = ospR.tilde.to_coords(img) if img is not None else None
        if vec is None:
            ok = False
            break
        images.append(vec)
    rep.add("images-in-osp-tilde", ok)
    if not ok:
        return rep

    fmap = LinearMap(gl, ospR.tilde, images)
    rep.extend(check_homomorphism(fmap), prefix="map-")
    rep.add("bijective", fmap.is_bijective(),
            dims={"gl": gl.dim, "osp~": ospR.tilde.dim, "rank": fmap.rank()})

    # derived of gl (= sl) must map onto osp
    sl = derived_subalgebra(gl)
    ech = Echelon(f, ospR.osp.dim)
    inside = True
    for i in range(sl.dim):
        img_tilde = fmap.apply(sl.inclusion.images[i])
        X = ospR.tilde.from_coords(img_tilde)
        c = ospR.osp.to_coords(X)
        if c is None:
            inside = False
            break
        ech.add(c)
    rep.add("sl-onto-osp", inside and ech.rank == ospR.osp.dim == sl.dim,
            dims={"sl": sl.dim, "osp": ospR.osp.dim, "image-rank": ech.rank})
    return rep


def example_isomorphisms(which: str, m: int, n: int, coeff: SuperAlgebra) -> Report:
    if which == "supercommutative":
        return example_supercommutative(m, n, coeff)
    if which == "s_plus_sop":
        return example_s_plus_sop(m, n, coeff)
    raise InvalidInput(f"unknown example {which!r}")


def periplectic_dimension_check(field) -> Report:
    """dim osp_{1|2}(M_{1|1}(k), prp) equals dim p_3(k) (smallest case)."""
    rep = Report("periplectic-dimensions")
    Rp = preset_algebra("matrix_prp", field, (1,))
    A = build_osp(1, 1, Rp)
    # p_3(k): skew part of M_{3|3}(k)^prp under the supercommutator
    M33 = preset_algebra("matrix_prp", field, (3,))
    skew = subspace(M33, "minus")
    ptilde = lie_from_algebra_subspace(M33, skew.basis(), "p~3")
    p3 = derived_subalgebra(ptilde)
    rep.add("dim-match", A.osp.dim == p3.dim,
            dims={"osp(1|2,M11prp)": A.osp.dim, "p3": p3.dim,
                  "osp~": A.tilde.dim, "p~3": ptilde.dim})
    return rep


def orthosymplectic_dimension_check(field) -> Report:
    """dim osp_{1|2}(M_{1|2}(k), osp) equals dim osp_{5|4}(k) (smallest case)."""
    rep = Report("orthosymplectic-dimensions")
    Rp = preset_algebra("matrix_osp", field, (1, 2))
    A = build_osp(1, 1, Rp)
    ground = preset_algebra("ground_field_id", field)
    big = build_osp(5, 2, ground)
    rep.add("dim-match", A.osp.dim == big.osp.dim,
            dims={"osp(1|2,M12osp)": A.osp.dim, "osp(5|4,k)": big.osp.dim})
    return rep


def classical_dimension(m, n):
    """dim osp_{m|2n}(k) = m(m-1)/2 + n(2n+1) + 2mn."""
    return m * (m - 1) // 2 + n * (2 * n + 1) + 2 * m * n
