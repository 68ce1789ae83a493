"""Graded 2-cocycles, central extensions, and the explicit cocycle models.

A 2-cocycle on a Lie superalgebra L with values in a trivial graded module
Z is a bilinear map with

  (CC1)  alpha(x,y) = -(-1)^{|x||y|} alpha(y,x)
  (CC2)  (-1)^{|x||z|} alpha([x,y],z) + (-1)^{|y||x|} alpha([y,z],x)
         + (-1)^{|z||y|} alpha([z,x],y) = 0

and L (+) Z carries the bracket [x+c, y+c'] = [x,y] + alpha(x,y).

Abstract finitely presented algebras are never constructed here: every
Steinberg-type object is realized as the bracket closure of lifted
generators inside an explicit cocycle extension, which turns each of its
defining relations into a finite linear-algebra check.  The four explicit
cocycles:

  alpha_gl       alpha(e_ij(a), e_kl(b)) = dlt_jk dlt_il
                 (-1)^{|i|(|i|+|a|+|b|)} <a,b>_d^- on gl, restricted to osp.
  beta_sto22     on the m|2n = 2|2 Steinberg model, values in R/([R,R]R):
                 beta(f_11(a), g_12(b)) = pi(a bar b),
                 beta(f_21(a), g_11(b)) = -pi(a bar b), zero otherwise.
  alpha_osp12    on osp_{1|2}, values in the modified quotient <R,R>~ with
                 a decomposition-dependent e_11 slot (well-definedness and
                 decomposition independence are verified each run).
  beta_hat_osp12 on the osp_{1|2} model, values in z = R/I3 (+) R/I3:
                 beta(v(a), g(b)) = pi_1(a_+ b), beta(f(a), w(b)) = pi_2(a b_+).

Family-indexed bilinear maps (the two betas) are defined on a labelled
spanning family; well-definedness is established by computing the kernel of
the label -> model evaluation matrix and asserting the bilinear form
annihilates it, then inducing values on the model basis.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .errors import (
    ClosureOverflow,
    CocycleInvalid,
    InvalidInput,
    NoDecomposition,
    WellDefinednessFailure,
)
from .homology import (
    i3_and_z,
    modified_skew_dihedral_quotient,
    quotient_rrr,
    skew_dihedral_quotient,
)
from .linalg import Echelon, ExactMatrix, kernel_basis, solve, vec_is_zero, vec_zero
from .liesuper import LieSuperAlgebra, LinearMap, Subalgebra, verify_lie
from .osp import OspAlgebra, bracket_closure, build_osp, generator
from .reports import Report
from .superalg import SuperAlgebra, commutators_intersect_minus


class Cocycle:
    """Bilinear map on basis pairs of `source` into a graded module Z."""

    def __init__(self, name, source: LieSuperAlgebra, zdim, zparity, values):
        self.name = name
        self.source = source
        self.zdim = zdim
        self.zparity = tuple(zparity) if zparity is not None else (0,) * zdim
        self.values = values  # values[i][j] = Z-vector

    def value(self, i, j):
        return self.values[i][j]

    def value_vec(self, x, y):
        f = self.source.field
        out = vec_zero(f, self.zdim)
        for i, xi in enumerate(x):
            if f.is_zero(xi):
                continue
            for j, yj in enumerate(y):
                if f.is_zero(yj):
                    continue
                row = self.values[i][j]
                c = f.mul(xi, yj)
                for s in range(self.zdim):
                    if not f.is_zero(row[s]):
                        out[s] = f.add(out[s], f.mul(c, row[s]))
        return out


def _int_scaled_values(coc: Cocycle):
    f = coc.source.field
    if f.kind == "Fp":
        return [[[int(c) for c in row] for row in vals] for vals in coc.values], f.p
    den = 1
    for vals in coc.values:
        for row in vals:
            for c in row:
                den = lcm(den, Fraction(c).denominator)
    out = [[[int(Fraction(c) * den) for c in row] for row in vals] for vals in coc.values]
    return out, 0


def verify_cocycle(coc: Cocycle) -> Report:
    """CC1 on ordered pairs, CC2 on ordered triples, value grading.

    Once CC1 holds, the CC2 expression is cyclic-invariant and transforms
    under a transposition of two arguments by the symmetric global sign
    -(-1)^{|x||y|+|y||z|+|z||x|}, so ordered triples i <= j <= k are
    exhaustive.
    """
    L = coc.source
    f = L.field
    rep = Report("cocycle", algebra=f"{coc.name} on {L.name}")

    bad = None
    for i in range(L.dim):
        for j in range(i, L.dim):
            v = coc.values[i][j]
            w = coc.values[j][i]
            odd_pair = bool(L.parity[i] * L.parity[j])
            for s in range(coc.zdim):
                a, b = v[s], w[s]
                good = f.is_zero(f.sub(a, b)) if odd_pair else f.is_zero(f.add(a, b))
                if not good:
                    bad = (i, j)
                    break
            if bad:
                break
        if bad:
            break
    rep.add("CC1", bad is None, witness=bad)

    bad = None
    for i in range(L.dim):
        for j in range(L.dim):
            v = coc.values[i][j]
            want = (L.parity[i] + L.parity[j]) % 2
            for s in range(coc.zdim):
                if not f.is_zero(v[s]) and coc.zparity[s] != want:
                    bad = (i, j, s)
                    break
            if bad:
                break
        if bad:
            break
    rep.add("value-grading", bad is None, witness=bad)

    # CC2 on an integer rescaling (uniform scaling preserves the identity)
    from .liesuper import _int_table

    table, p = _int_table(L)
    vals, _ = _int_scaled_values(coc)
    par = L.parity
    z = coc.zdim
    bad = None
    for i in range(L.dim):
        for j in range(i, L.dim):
            for k in range(j, L.dim):
                acc = [0] * z

                def term(pair, c_idx, sign_exp, acc=acc):
                    s = -1 if sign_exp % 2 else 1
                    for t, c in table.get(pair, ()):
                        row = vals[t][c_idx]
                        cc = s * c
                        for u in range(z):
                            if row[u]:
                                acc[u] += cc * row[u]

                term((i, j), k, par[i] * par[k])
                term((j, k), i, par[j] * par[i])
                term((k, i), j, par[k] * par[j])
                if p:
                    ok = all(v % p == 0 for v in acc)
                else:
                    ok = all(v == 0 for v in acc)
                if not ok:
                    bad = (i, j, k)
                    break
            if bad:
                break
        if bad:
            break
    rep.add("CC2", bad is None, witness=bad)
    return rep


class CentralExtension:
    """E = L (+) Z with [x+c, y+c'] = [x,y] + alpha(x,y)."""

    def __init__(self, base: LieSuperAlgebra, coc: Cocycle, name=None):
        f = base.field
        self.base = base
        self.cocycle = coc
        d, z = base.dim, coc.zdim
        parity = list(base.parity) + list(coc.zparity)
        table = {}
        for i in range(d):
            for j in range(d):
                terms = list(base.bracket_basis(i, j))
                for s in range(z):
                    c = coc.values[i][j][s]
                    if not f.is_zero(c):
                        terms.append((d + s, c))
                if terms:
                    table[(i, j)] = tuple(terms)
        self.E = LieSuperAlgebra(name or f"{base.name}+Z", f, parity, table, complete=False)
        self.projection = LinearMap(
            self.E, base,
            [base.basis_vec(i) for i in range(d)] + [vec_zero(f, d) for _ in range(z)],
        )

    def lift(self, x):
        return list(x) + [self.base.field.zero()] * self.cocycle.zdim

    def zpart(self, e_vec):
        return e_vec[self.base.dim:]

    def lpart(self, e_vec):
        return e_vec[: self.base.dim]


def central_extension(base: LieSuperAlgebra, coc: Cocycle, verify=True) -> CentralExtension:
    if verify:
        rep = verify_cocycle(coc)
        if not rep.ok():
            raise CocycleInvalid(f"{coc.name}: {[(c.name, c.witness) for c in rep.failures()]}")
    ext = CentralExtension(base, coc)
    if verify:
        vrep = verify_lie(ext.E)
        if not vrep.ok():
            raise CocycleInvalid(f"extension by {coc.name} is not a Lie superalgebra")
    return ext


# -- alpha on gl, restricted to osp ------------------------------------------


def alpha_gl(A: OspAlgebra) -> Cocycle:
    """alpha(e_ij(a), e_kl(b)) = dlt_jk dlt_il (-1)^{|i|(|i|+|a|+|b|)} <a,b>_d^-,
    evaluated on the osp basis by bilinearity through the matrix slots."""
    R = A.R
    f = R.field
    quot = skew_dihedral_quotient(R)
    d = R.dim
    pair = [[quot.pair_class(R.basis_vec(q), R.basis_vec(r)) for r in range(d)] for q in range(d)]
    L = A.osp
    shape = A.shape
    values = []
    for i in range(L.dim):
        X = L.basis_mats[i]
        row_vals = []
        for j in range(L.dim):
            Y = L.basis_mats[j]
            acc = vec_zero(f, quot.dim)
            for (r, c), xv in X.entries.items():
                yv = Y.entries.get((c, r))
                if yv is None:
                    continue
                rp = shape.row_parity(r)
                for q, xc in enumerate(xv):
                    if f.is_zero(xc):
                        continue
                    for q2, yc in enumerate(yv):
                        if f.is_zero(yc):
                            continue
                        coef = f.mul(xc, yc)
                        if rp and (rp + R.parity[q] + R.parity[q2]) % 2:
                            coef = f.neg(coef)
                        cls = pair[q][q2]
                        for s in range(quot.dim):
                            if not f.is_zero(cls[s]):
                                acc[s] = f.add(acc[s], f.mul(coef, cls[s]))
            row_vals.append(acc)
        values.append(row_vals)
    return Cocycle("alpha_gl", L, quot.dim, quot.parity, values)


# -- the Steinberg-type model inside osp (+) <R,R>_d^- ------------------------


class StoModel:
    """Bracket closure of the lifted generator families in osp (+) <R,R>_d^-."""

    def __init__(self, A: OspAlgebra, ext: CentralExtension, model: Subalgebra):
        self.A = A
        self.ext = ext
        self.model = model
        f = A.osp.field
        dL = A.osp.dim
        ech = Echelon(f, dL)
        for img in model.inclusion.images:
            ech.add(img[:dL])
        self.proj_rank = ech.rank
        self.ker_dim = model.dim - ech.rank

    def gen_vec(self, kind, idx, avec):
        """Lifted generator (kind, idx, a) in ambient extension coordinates."""
        X = generator(self.A, kind, idx, avec)
        c = self.A.osp.to_coords(X)
        if c is None:
            raise InvalidInput("generator outside osp")
        return self.ext.lift(c)

    def in_model(self, evec):
        return self.model.coords_in_sub(evec) is not None


def sto_model(m: int, n: int, R: SuperAlgebra, alpha: Cocycle = None,
              A: OspAlgebra = None) -> StoModel:
    """Model of the Steinberg orthosymplectic algebra for (m,n) != (1,1)."""
    if (m, n) == (1, 1):
        raise InvalidInput("the Steinberg model needs (m,n) != (1,1)")
    if m < 1 or n < 1:
        raise InvalidInput("m, n >= 1 required")
    A = A or build_osp(m, n, R)
    coc = alpha or alpha_gl(A)
    ext = central_extension(A.osp, coc)
    f = R.field
    seeds = []
    for q in range(R.dim):
        a = R.basis_vec(q)
        for i in range(1, m + 1):
            for j in range(1, m + 1):
                if i != j:
                    seeds.append(("t", (i, j), a))
        for k in range(1, n + 1):
            for l in range(1, n + 1):
                if k != l:
                    seeds.extend((kind, (k, l), a) for kind in ("u", "v", "w"))
        for i in range(1, m + 1):
            for k in range(1, n + 1):
                seeds.append(("f", (i, k), a))
                seeds.append(("g", (k, i), a))
    vecs = []
    for kind, idx, a in seeds:
        c = A.osp.to_coords(generator(A, kind, idx, a))
        if c is None:
            raise InvalidInput(f"generator {kind}{idx} not in osp")
        vecs.append(ext.lift(c))
    cap = ext.E.dim
    ech, stabilized = bracket_closure(ext.E, vecs, cap=cap)
    if not stabilized:
        raise ClosureOverflow("generator closure failed to stabilize")
    model = Subalgebra(f"sto({m}|{2*n},{R.name})", ext.E, ech.basis())
    return StoModel(A, ext, model)


# -- the hat-sto cocycle at shape (2,1) ---------------------------------------


def _sto22_labels(R):
    d = R.dim
    labels = []
    for i in (1, 2):
        for q in range(d):
            for r in range(d):
                labels.append(("h", i, q, r))
    for q in range(d):
        labels.append(("t", q))
        labels.append(("v1", q))
        labels.append(("w1", q))
    for i in (1, 2):
        for q in range(d):
            labels.append(("f", i, q))
            labels.append(("g", i, q))
    return labels


def _sto22_label_vec(sto: StoModel, lab):
    R = sto.A.R
    E = sto.ext.E
    kind = lab[0]
    if kind == "h":
        _, i, q, r = lab
        fv = sto.gen_vec("f", (i, 1), R.basis_vec(q))
        gv = sto.gen_vec("g", (1, i), R.basis_vec(r))
        return E.bracket_vec(fv, gv)
    if kind == "t":
        return sto.gen_vec("t", (1, 2), R.basis_vec(lab[1]))
    if kind == "v1":
        gv = sto.gen_vec("g", (1, 1), R.basis_vec(lab[1]))
        g1 = sto.gen_vec("g", (1, 1), R.unit)
        out = E.bracket_vec(gv, g1)
        f = E.field
        return [f.neg(c) for c in out]
    if kind == "w1":
        fv = sto.gen_vec("f", (1, 1), R.basis_vec(lab[1]))
        f1 = sto.gen_vec("f", (1, 1), R.unit)
        return E.bracket_vec(f1, fv)
    if kind == "f":
        _, i, q = lab
        return sto.gen_vec("f", (i, 1), R.basis_vec(q))
    _, i, q = lab
    return sto.gen_vec("g", (1, i), R.basis_vec(lab[2]))


def beta_sto22(R: SuperAlgebra, sto: StoModel = None):
    """The rank-(2,1) cocycle with values in R/([R,R]R), induced on the model.

    Returns (cocycle_on_model, sto_model, pi_quotient).  Raises
    WellDefinednessFailure when the label bilinear form does not annihilate
    the relations among the labelled spanning family.
    """
    sto = sto or sto_model(2, 1, R)
    piq = quotient_rrr(R)
    f = R.field
    labels = _sto22_labels(R)
    nlab = len(labels)
    lab_vecs = [_sto22_label_vec(sto, lab) for lab in labels]
    model = sto.model
    lab_model = []
    for v in lab_vecs:
        c = model.coords_in_sub(v)
        if c is None:
            raise WellDefinednessFailure("labelled element outside the model")
        lab_model.append(c)

    # label-level bilinear form
    zdim = piq.dim
    B = [[vec_zero(f, zdim) for _ in range(nlab)] for _ in range(nlab)]

    def lab_parity(lab):
        if lab[0] == "h":
            return (R.parity[lab[2]] + R.parity[lab[3]]) % 2
        if lab[0] in ("f", "g"):
            return (1 + R.parity[lab[2]]) % 2
        return R.parity[lab[1]]

    index = {lab: t for t, lab in enumerate(labels)}
    for q in range(R.dim):
        for r in range(R.dim):
            val = piq.pi(R.mul_vec(R.basis_vec(q), R.bar_vec(R.basis_vec(r))))
            pq, pr = (1 + R.parity[q]) % 2, (1 + R.parity[r]) % 2
            sgn = f.neg(f.one()) if (pq * pr) % 2 else f.one()
            # beta(f_11(a), g_12(b)) = pi(a bar b)
            i1, j1 = index[("f", 1, q)], index[("g", 2, r)]
            B[i1][j1] = val
            B[j1][i1] = [f.mul(f.neg(sgn), c) for c in val]
            # beta(f_21(a), g_11(b)) = -pi(a bar b)
            i2, j2 = index[("f", 2, q)], index[("g", 1, r)]
            B[i2][j2] = [f.neg(c) for c in val]
            B[j2][i2] = [f.mul(sgn, c) for c in val]

    # well-definedness: the kernel of the evaluation matrix must be
    # annihilated on both sides
    ev = ExactMatrix(f, [[lab_model[t][r] for t in range(nlab)] for r in range(model.dim)])
    for kv in kernel_basis(ev):
        for j in range(nlab):
            left = vec_zero(f, zdim)
            right = vec_zero(f, zdim)
            for i, c in enumerate(kv):
                if f.is_zero(c):
                    continue
                for s in range(zdim):
                    left[s] = f.add(left[s], f.mul(c, B[i][j][s]))
                    right[s] = f.add(right[s], f.mul(c, B[j][i][s]))
            if not (vec_is_zero(f, left) and vec_is_zero(f, right)):
                raise WellDefinednessFailure("label form does not kill the relation module")

    # induce on the model basis: express each basis vector in labels
    ev_cols = ExactMatrix(f, [[lab_model[t][r] for t in range(nlab)] for r in range(model.dim)])
    expansions = []
    for b in range(model.dim):
        x = solve(ev_cols, model.basis_vec(b))
        if x is None:
            raise WellDefinednessFailure("labels do not span the model")
        expansions.append(x)
    values = []
    for b1 in range(model.dim):
        row = []
        for b2 in range(model.dim):
            acc = vec_zero(f, zdim)
            for i, ci in enumerate(expansions[b1]):
                if f.is_zero(ci):
                    continue
                for j, cj in enumerate(expansions[b2]):
                    if f.is_zero(cj):
                        continue
                    cell = B[i][j]
                    cc = f.mul(ci, cj)
                    for s in range(zdim):
                        if not f.is_zero(cell[s]):
                            acc[s] = f.add(acc[s], f.mul(cc, cell[s]))
            row.append(acc)
        values.append(row)
    coc = Cocycle("beta_sto22", model, zdim, piq.space.parity, values)
    return coc, sto, piq


BETA22_CASE_FAMILIES = (
    ("h11-f11-g12", ("h", 1), ("f", 1), ("g", 2)),
    ("h11-f21-g11", ("h", 1), ("f", 2), ("g", 1)),
    ("h21-f11-g12", ("h", 2), ("f", 1), ("g", 2)),
    ("h21-f21-g11", ("h", 2), ("f", 2), ("g", 1)),
    ("t12-f11-g11", ("t",), ("f", 1), ("g", 1)),
    ("t12-f21-g12", ("t",), ("f", 2), ("g", 2)),
    ("v1-f11-f21", ("v1",), ("f", 1), ("f", 2)),
    ("w1-g12-g11", ("w1",), ("g", 2), ("g", 1)),
)


def beta22_case_report(R, coc: Cocycle, sto: StoModel) -> Report:
    """The eight mixed-triple families of the hat-sto cocycle, exhaustively:
    the graded cyclic sum J(x,y,z) must vanish on each instance."""
    rep = Report("beta22-cases", algebra=R.name, shape=(2, 1))
    model = sto.model
    f = R.field

    def elem(tag, args):
        kind = tag[0]
        if kind == "h":
            lab = ("h", tag[1], args[0], args[1])
            par = (R.parity[args[0]] + R.parity[args[1]]) % 2
        elif kind in ("f", "g"):
            lab = (kind, tag[1], args[0])
            par = (1 + R.parity[args[0]]) % 2
        else:
            lab = (kind, args[0])
            par = R.parity[args[0]]
        return model.coords_in_sub(_sto22_label_vec(sto, lab)), par

    d = R.dim
    for name, xt, yt, zt in BETA22_CASE_FAMILIES:
        witness = None
        x_arity = 2 if xt[0] == "h" else 1
        from itertools import product

        for args in product(range(d), repeat=x_arity + 2):
            xargs = args[:x_arity]
            y_args = (args[x_arity],)
            z_args = (args[x_arity + 1],)
            x, px = elem(xt, xargs)
            y, py = elem(yt, y_args)
            z, pz = elem(zt, z_args)
            acc = vec_zero(f, coc.zdim)
            for (u, v, w), exp in (
                ((x, y, z), px * pz),
                ((y, z, x), py * px),
                ((z, x, y), pz * py),
            ):
                br = model.bracket_vec(u, v)
                val = coc.value_vec(br, w)
                if exp % 2:
                    val = [f.neg(c) for c in val]
                acc = [f.add(a, b) for a, b in zip(acc, val)]
            if not vec_is_zero(f, acc):
                witness = (name, args)
                break
        rep.add(f"jacobi-{name}", witness is None, witness=witness)
    return rep


def hat_sto22(R: SuperAlgebra):
    """sto_{2|2} model (+) R/([R,R]R), with its defining relation lines checked.

    Returns (extension, report, sto_model, pi_quotient).
    """
    coc, sto, piq = beta_sto22(R)
    vrep = verify_cocycle(coc)
    if not vrep.ok():
        raise CocycleInvalid("beta_sto22 failed CC1/CC2")
    ext = central_extension(sto.model, coc, verify=False)
    E2 = ext.E
    f = R.field
    model = sto.model
    rep = Report("hat-sto22", algebra=R.name, shape=(2, 1))
    rep.extend(vrep, prefix="beta-")
    rep.add("dim-sum", E2.dim == sto.model.dim + piq.dim,
            dims={"hat": E2.dim, "model": sto.model.dim, "pi": piq.dim})

    def pi_vec(vec):
        out = vec_zero(f, E2.dim)
        for s, c in enumerate(piq.pi(vec)):
            out[model.dim + s] = c
        return out

    def gvec(kind, idx, v):
        """Lifted generator in hat-sto coordinates (model coords + zero Z)."""
        return ext.lift(model.coords_in_sub(sto.gen_vec(kind, idx, v)))

    d = R.dim
    checks = {
        "t-f11": None, "t-f21": None, "g11-t": None, "g12-t": None,
        "f11-f21": None, "g11-g12": None, "f11-g12": None, "f21-g11": None,
    }
    for q in range(d):
        aq = R.basis_vec(q)
        for r in range(d):
            br_ = R.basis_vec(r)
            ab = R.mul_vec(aq, br_)
            abar_b = R.mul_vec(R.bar_vec(aq), br_)
            a_barb = R.mul_vec(aq, R.bar_vec(br_))
            t_a = gvec("t", (1, 2), aq)
            f11_a, f11_b = gvec("f", (1, 1), aq), gvec("f", (1, 1), br_)
            f21_a, f21_b = gvec("f", (2, 1), aq), gvec("f", (2, 1), br_)
            g11_a, g11_b = gvec("g", (1, 1), aq), gvec("g", (1, 1), br_)
            g12_a, g12_b = gvec("g", (1, 2), aq), gvec("g", (1, 2), br_)

            def eq(tag, lhs, rhs):
                if checks[tag] is None and lhs != rhs:
                    checks[tag] = (q, r)

            eq("t-f11", E2.bracket_vec(t_a, f11_b), [f.neg(c) for c in gvec("f", (2, 1), abar_b)])
            eq("t-f21", E2.bracket_vec(t_a, f21_b), gvec("f", (1, 1), ab))
            eq("g11-t", E2.bracket_vec(g11_a, gvec("t", (1, 2), br_)), gvec("g", (1, 2), ab))
            eq("g12-t", E2.bracket_vec(g12_a, gvec("t", (1, 2), br_)),
               [f.neg(c) for c in gvec("g", (1, 1), a_barb)])
            eq("f11-f21", E2.bracket_vec(f11_a, f21_b), vec_zero(f, E2.dim))
            eq("g11-g12", E2.bracket_vec(g11_a, g12_b), vec_zero(f, E2.dim))
            lhs = E2.bracket_vec(f11_a, g12_b)
            rhs = [f.add(x, y) for x, y in zip(gvec("t", (1, 2), ab), pi_vec(a_barb))]
            eq("f11-g12", lhs, rhs)
            lhs = E2.bracket_vec(f21_a, g11_b)
            abbar = R.bar_vec(ab)
            rhs = [f.sub(f.neg(x), y) for x, y in zip(gvec("t", (1, 2), abbar), pi_vec(a_barb))]
            eq("f21-g11", lhs, rhs)
    for tag, witness in checks.items():
        rep.add(f"relation-{tag}", witness is None, witness=witness)
    return ext, rep, sto, piq


# -- the osp_{1|2} cocycle with the decomposition-dependent slot --------------


class _Osp12Labels:
    """Canonical labels of an osp_{1|2} element x:

    x = e_11(a) + t(d) + e_23(v) + e_32(w) + f(b) + g(c), read off the
    matrix slots; a must land in [R,R] n R_- (NoDecomposition otherwise,
    which for elements of osp would contradict the element decomposition).
    """

    __slots__ = ("a", "t", "f", "g", "v", "w", "decomp")

    def __init__(self, R, X, comm_minus, phi, check_membership=True, want_decomp=True):
        f = R.field
        z = vec_zero(f, R.dim)
        get = lambda i, j: list(X.entries.get((i, j), z))
        self.f = get(0, 1)
        self.g = get(1, 0)
        self.v = get(1, 2)
        self.w = get(2, 1)
        d = R.rho_vec(get(1, 1))
        self.t = d
        dmd = [f.sub(x, y) for x, y in zip(d, R.bar_vec(d))]
        self.a = [f.sub(x, y) for x, y in zip(get(0, 0), dmd)]
        if check_membership and not vec_is_zero(f, self.a):
            if not comm_minus.contains(self.a):
                raise NoDecomposition("e_11 label outside [R,R] n R_-")
        if vec_is_zero(f, self.a) or not want_decomp:
            self.decomp = None
        else:
            self.decomp = solve(phi, self.a)
            if self.decomp is None:
                raise NoDecomposition("e_11 label is not a combination of [a,b] - bar")


def _phi_matrix(R):
    """Columns (q, r) -> [b_q, b_r] - bar([b_q, b_r])."""
    f = R.field
    cols = []
    for q in range(R.dim):
        for r in range(R.dim):
            c = R.commutator_vec(R.basis_vec(q), R.basis_vec(r))
            cb = R.bar_vec(c)
            cols.append([f.sub(x, y) for x, y in zip(c, cb)])
    return ExactMatrix(f, [[cols[t][i] for t in range(len(cols))] for i in range(R.dim)])


def _j_class(R, quot, pair, x, px, y, py, z, pz, variant):
    """j(x,y,z) in <R,R>~ coordinates.

    Third-term sign: the source prints (-1)^{|c||a|} where the parallel
    cyclic family uses (-1)^{|c||b|}; `variant` selects "printed" or
    "cyclic".  verify_cocycle decides which one is a cocycle.
    """
    f = R.field
    out = vec_zero(f, quot.dim)
    third = pz * px if variant == "printed" else pz * py
    for vec, exp in (
        (quot.pair_class(R.mul_vec(x, y), z), px * pz),
        (quot.pair_class(R.mul_vec(y, z), x), py * px),
        (quot.pair_class(R.mul_vec(z, x), y), third),
    ):
        s = f.neg(f.one()) if exp % 2 else f.one()
        for i, c in enumerate(vec):
            out[i] = f.add(out[i], f.mul(s, c))
    return out


def _alpha12_values(A, quot, variant, tt_twist=True):
    """Cocycle values on the osp_{1|2} basis for one j-sign variant.

    `tt_twist` selects the diagonal-slot cell: the printed table reads
    alpha(t(a), t(b)) = <a, bar b>, which fails CC2 as soon as odd
    t-arguments occur (e.g. Grassmann or periplectic-matrix coefficients;
    the failing triples are of t-f-g type).  An exhaustive search over
    sign exponents of all table cells shows that multiplying this one cell
    by (-1)^{|a|+|b|+|a||b|} -- and changing nothing else -- restores CC1/CC2
    on every test algebra; both variants are exposed and reported.

    Also verifies that the decomposition-dependent slot is independent of
    the chosen decomposition whenever the decomposition is ambiguous.
    """
    R = A.R
    f = R.field
    L = A.osp
    comm_minus = commutators_intersect_minus(R)
    phi = _phi_matrix(R)
    labels = [_Osp12Labels(R, L.basis_mats[i], comm_minus, phi) for i in range(L.dim)]
    par = L.parity
    half = f.div(f.one(), f.coerce(2))

    def jsum(decomp, pa_of_x, bvec, pb, scale=None):
        out = vec_zero(f, quot.dim)
        if decomp is None or vec_is_zero(f, bvec):
            return out
        t = 0
        for q in range(R.dim):
            for r in range(R.dim):
                c = decomp[t]
                t += 1
                if f.is_zero(c):
                    continue
                jv = _j_class(R, quot, None, R.basis_vec(q), R.parity[q],
                              R.basis_vec(r), R.parity[r], bvec, pb, variant)
                s = f.neg(c) if (R.parity[q] * pb) % 2 else c
                for i, v in enumerate(jv):
                    out[i] = f.add(out[i], f.mul(s, v))
        return out

    # decomposition-independence: perturb by a kernel vector of phi and
    # compare against every e_11 label in play
    kdecomp = kernel_basis(phi)
    if kdecomp:
        probes = [(lab.a, par[i]) for i, lab in enumerate(labels) if lab.decomp is not None]
        for i, lab in enumerate(labels):
            if lab.decomp is None:
                continue
            alt = [f.add(x, y) for x, y in zip(lab.decomp, kdecomp[0])]
            for bvec, pb in probes:
                v1 = jsum(lab.decomp, par[i], bvec, pb)
                v2 = jsum(alt, par[i], bvec, pb)
                if v1 != v2:
                    raise WellDefinednessFailure(
                        f"e_11 slot depends on the decomposition (variant {variant})")

    values = []
    for i in range(L.dim):
        X = labels[i]
        pX = par[i]
        row = []
        for j in range(L.dim):
            Y = labels[j]
            pY = par[j]
            acc = vec_zero(f, quot.dim)

            def add(vec, sign_exp=0, scale=None, acc=acc):
                s = f.neg(f.one()) if sign_exp % 2 else f.one()
                if scale is not None:
                    s = f.mul(s, scale)
                for t, c in enumerate(vec):
                    if not f.is_zero(c):
                        acc[t] = f.add(acc[t], f.mul(s, c))

            # t-t and t-e11 cells
            if not vec_is_zero(f, X.t):
                tt_exp = (pX + pY + pX * pY) if tt_twist else 0
                add(quot.pair_class(X.t, R.bar_vec(Y.t)), tt_exp)
                add(quot.pair_class(X.t, Y.a))
            if not vec_is_zero(f, X.a) and not vec_is_zero(f, Y.t):
                # alpha(e_11(a), t(d)) = -(-1)^{|a||d|} <d, a>
                add(quot.pair_class(Y.t, X.a), pX * pY + 1)
            # f-g / g-f
            add(quot.pair_class(X.f, Y.g))
            add(quot.pair_class(Y.f, X.g), pX * pY + 1)
            # e23-e32 / e32-e23
            add(quot.pair_class(X.v, Y.w), pX + pY + 1, scale=half)
            add(quot.pair_class(Y.v, X.w), pX * pY + pX + pY, scale=half)
            # e11-e11
            if not vec_is_zero(f, X.a) and not vec_is_zero(f, Y.a):
                add(quot.pair_class(X.a, Y.a), scale=half)
                add(jsum(X.decomp, pX, Y.a, pY), 1)
            row.append(acc)
        values.append(row)
    return Cocycle(f"alpha_osp12[{variant}]", L, quot.dim, quot.parity, values)


def _alpha12_mixed(R, quot, X, pX, Y, pY):
    """The pinned cells of the table: alpha(f(a), g(b)) = <a,b>, the
    e23/e32 pairing, and zero on every other label pair."""
    f = R.field
    half = f.div(f.one(), f.coerce(2))
    acc = vec_zero(f, quot.dim)

    def add(vec, exp=0, scale=None):
        s = f.neg(f.one()) if exp % 2 else f.one()
        if scale is not None:
            s = f.mul(s, scale)
        for t, c in enumerate(vec):
            if not f.is_zero(c):
                acc[t] = f.add(acc[t], f.mul(s, c))

    add(quot.pair_class(X.f, Y.g))
    add(quot.pair_class(Y.f, X.g), pX * pY + 1)
    add(quot.pair_class(X.v, Y.w), pX + pY + 1, scale=half)
    add(quot.pair_class(Y.v, X.w), pX * pY + pX + pY, scale=half)
    return acc


def _alpha12_derived_values(A, quot):
    """Cocycle values with the diagonal cells *derived* from the pinned ones.

    Every diagonal element of osp_{1|2} is a combination of the images of
    h(a,b) = [f(a), g(b)]; once the mixed cells are fixed, CC2 on the
    triples (f(a), g(b), W) forces

      alpha([f(a),g(b)], W) = -(-1)^{|f||W|} ( (-1)^{|f||g|} alpha_mixed([g(b),W], f(a))
                                + (-1)^{|W||g|} alpha_mixed([W, f(a)], g(b)) )

    because [g(b), W] and [W, f(a)] never pair diagonally against f/g.  The
    expansion of a diagonal part in the h-image family need not be unique;
    the forced bilinear form must annihilate the relations among the columns
    (WellDefinednessFailure otherwise).  CC1/CC2 of the assembled table are
    then verified from scratch by the caller.
    """
    R = A.R
    f = R.field
    L = A.osp
    comm_minus = commutators_intersect_minus(R)
    phi = _phi_matrix(R)
    labels = [_Osp12Labels(R, L.basis_mats[i], comm_minus, phi, want_decomp=False)
              for i in range(L.dim)]
    par = L.parity
    d = R.dim

    from .supermatrix import supercommutator

    f_mats = [generator(A, "f", (1, 1), R.basis_vec(q)) for q in range(d)]
    g_mats = [generator(A, "g", (1, 1), R.basis_vec(r)) for r in range(d)]
    h_mats = {}
    h_cols = []
    for q in range(d):
        for r in range(d):
            H = supercommutator(f_mats[q], g_mats[r])
            lab = _Osp12Labels(R, H, comm_minus, phi, check_membership=False, want_decomp=False)
            if any(not f.is_zero(c) for c in lab.f + lab.g + lab.v + lab.w):
                raise WellDefinednessFailure("h image is not diagonal")
            h_mats[(q, r)] = H
            h_cols.append(list(lab.a) + list(lab.t))
    hmat = ExactMatrix(f, [[h_cols[t][i] for t in range(d * d)] for i in range(2 * d)])

    def forced(q, r, j):
        """alpha(h(e_q, e_r), B_j) via the CC2-forced formula."""
        pfq = (1 + R.parity[q]) % 2
        pgr = (1 + R.parity[r]) % 2
        pz = par[j]
        W = L.basis_mats[j]
        gW = supercommutator(g_mats[r], W)
        Wf = supercommutator(W, f_mats[q])
        lab_gW = _Osp12Labels(R, gW, comm_minus, phi, check_membership=False, want_decomp=False)
        lab_Wf = _Osp12Labels(R, Wf, comm_minus, phi, check_membership=False, want_decomp=False)
        labf = _Osp12Labels(R, f_mats[q], comm_minus, phi, check_membership=False, want_decomp=False)
        labg = _Osp12Labels(R, g_mats[r], comm_minus, phi, check_membership=False, want_decomp=False)
        t1 = _alpha12_mixed(R, quot, lab_gW, (pgr + pz) % 2, labf, pfq)
        t2 = _alpha12_mixed(R, quot, lab_Wf, (pz + pfq) % 2, labg, pgr)
        # alpha([f,g], W) = -(-1)^{|f||W|}((-1)^{|f||g|} t1 + (-1)^{|W||g|} t2)
        out = vec_zero(f, quot.dim)
        s1 = pfq * pz + pfq * pgr
        s2 = pfq * pz + pz * pgr
        for t in range(quot.dim):
            a = t1[t] if s1 % 2 else f.neg(t1[t])
            b = t2[t] if s2 % 2 else f.neg(t2[t])
            out[t] = f.add(a, b)
        return out

    # expansions of the diagonal parts, with relation annihilation
    forced_cache = {}

    def forced_cached(q, r, j):
        key = (q, r, j)
        if key not in forced_cache:
            forced_cache[key] = forced(q, r, j)
        return forced_cache[key]

    kers = kernel_basis(hmat)
    if kers:
        for kv in kers:
            for j in range(L.dim):
                acc = vec_zero(f, quot.dim)
                t = 0
                for q in range(d):
                    for r in range(d):
                        c = kv[t]
                        t += 1
                        if f.is_zero(c):
                            continue
                        val = forced_cached(q, r, j)
                        for s in range(quot.dim):
                            acc[s] = f.add(acc[s], f.mul(c, val[s]))
                if not vec_is_zero(f, acc):
                    raise WellDefinednessFailure(
                        "forced diagonal values do not kill the h-image relations")

    expansions = []
    for i in range(L.dim):
        lab = labels[i]
        dvec = list(lab.a) + list(lab.t)
        if vec_is_zero(f, dvec):
            expansions.append(None)
            continue
        x = solve(hmat, dvec)
        if x is None:
            raise NoDecomposition("diagonal part outside the h-image span")
        expansions.append(x)

    values = []
    for i in range(L.dim):
        X = labels[i]
        row = []
        for j in range(L.dim):
            Y = labels[j]
            acc = _alpha12_mixed(R, quot, X, par[i], Y, par[j])
            if expansions[i] is not None:
                t = 0
                for q in range(d):
                    for r in range(d):
                        c = expansions[i][t]
                        t += 1
                        if f.is_zero(c):
                            continue
                        val = forced_cached(q, r, j)
                        for s in range(quot.dim):
                            acc[s] = f.add(acc[s], f.mul(c, val[s]))
            # the diagonal-left values above cover alpha(D_i, B_j) fully;
            # alpha(M_i, D_j) is zero on all unlisted label pairs, which
            # _alpha12_mixed already encodes
            row.append(acc)
        values.append(row)
    return Cocycle("alpha_osp12[derived]", L, quot.dim, quot.parity, values)


def alpha_osp12(R: SuperAlgebra, A: OspAlgebra = None):
    """The osp_{1|2} cocycle with values in <R,R>~.

    The returned cocycle carries the pinned mixed cells of the table with
    diagonal cells derived from them (see _alpha12_derived_values); CC1/CC2
    are verified from scratch.  The explicitly printed diagonal-cell
    variants (both j-signs, printed and twisted (t,t) cell) are evaluated
    alongside and their pass/fail outcomes recorded: on algebras where they
    pass they are cocycles in their own right, and where they fail the
    derived table documents the correction.
    """
    A = A or build_osp(1, 1, R)
    quot = modified_skew_dihedral_quotient(R)
    rep = Report("alpha-osp12", algebra=R.name, shape=(1, 1))
    derived = _alpha12_derived_values(A, quot)
    vrep = verify_cocycle(derived)
    outcomes = {"derived": "pass" if vrep.ok()
                else f"fail:{vrep.failures()[0].witness}"}
    chosen = derived if vrep.ok() else None
    for tt_twist in (True, False):
        for variant in ("cyclic", "printed"):
            coc = _alpha12_values(A, quot, variant, tt_twist=tt_twist)
            v2 = verify_cocycle(coc)
            tag = f"j-{variant}/tt-{'twisted' if tt_twist else 'printed'}"
            outcomes[tag] = "pass" if v2.ok() else f"fail:{v2.failures()[0].witness}"
            if v2.ok() and chosen is None:
                chosen = coc
    rep.add("cocycle-variant-found", chosen is not None, witness=outcomes,
            dims={"variants-passing": sum(1 for v in outcomes.values() if v == "pass")})
    if chosen is None:
        raise CocycleInvalid("no variant yields a cocycle")
    return chosen, rep, A, quot


# -- the osp_{1|2} model and its nontrivial extension -------------------------


class Osp12Model:
    """Bracket closure of lifted f/g inside osp_{1|2} (+) <R,R>~."""

    def __init__(self, A, ext, model):
        self.A = A
        self.ext = ext
        self.model = model
        f = A.osp.field
        dL = A.osp.dim
        ech = Echelon(f, dL)
        for img in model.inclusion.images:
            ech.add(img[:dL])
        self.ker_dim = model.dim - ech.rank

    # ambient-extension coordinates of the distinguished elements
    def f_vec(self, a):
        c = self.A.osp.to_coords(generator(self.A, "f", (1, 1), a))
        return self.ext.lift(c)

    def g_vec(self, a):
        c = self.A.osp.to_coords(generator(self.A, "g", (1, 1), a))
        return self.ext.lift(c)

    def v_vec(self, a):
        E = self.ext.E
        f = E.field
        out = E.bracket_vec(self.g_vec(a), self.g_vec(self.A.R.unit))
        return [f.neg(c) for c in out]

    def w_vec(self, a):
        E = self.ext.E
        return E.bracket_vec(self.f_vec(self.A.R.unit), self.f_vec(a))

    def h_vec(self, a, b):
        E = self.ext.E
        return E.bracket_vec(self.f_vec(a), self.g_vec(b))


def hat_osp12(R: SuperAlgebra):
    """Model of the presented osp_{1|2} extension; returns (model, report)."""
    coc, arep, A, _ = alpha_osp12(R)
    ext = central_extension(A.osp, coc, verify=False)
    f = R.field
    seeds = []
    for q in range(R.dim):
        a = R.basis_vec(q)
        for kind in ("f", "g"):
            idx = (1, 1)
            c = A.osp.to_coords(generator(A, kind, idx, a))
            seeds.append(ext.lift(c))
    ech, stabilized = bracket_closure(ext.E, seeds, cap=ext.E.dim)
    if not stabilized:
        raise ClosureOverflow("f/g closure failed to stabilize")
    model = Subalgebra(f"osp^(1|2,{R.name})", ext.E, ech.basis())
    M = Osp12Model(A, ext, model)
    rep = Report("hat-osp12", algebra=R.name, shape=(1, 1))
    rep.extend(arep, prefix="alpha-")
    rep.extend(hatosp12_relations(M), prefix="")
    return M, rep


def hatosp12_relations(M: Osp12Model) -> Report:
    """The defining relation list of the presented algebra, on the model."""
    R = M.A.R
    f = R.field
    E = M.ext.E
    rep = Report("osp12-relations", algebra=R.name, shape=(1, 1))
    d = R.dim
    zero = vec_zero(f, E.dim)

    checks = {name: None for name in (
        "v-bar", "w-bar", "vv", "ww", "v-g", "f-w", "v-f", "g-w",
        "ff-w", "gg-v", "fgf-triple", "gfg-triple")}

    for q in range(d):
        a = R.basis_vec(q)
        pa = R.parity[q]
        abar = R.bar_vec(a)
        if checks["v-bar"] is None and M.v_vec(a) != M.v_vec(abar):
            checks["v-bar"] = (q,)
        if checks["w-bar"] is None and M.w_vec(a) != M.w_vec(abar):
            checks["w-bar"] = (q,)
        for r in range(d):
            b = R.basis_vec(r)
            pb = R.parity[r]
            bbar = R.bar_vec(b)
            aplus = [f.add(x, y) for x, y in zip(a, abar)]
            bplus = [f.add(x, y) for x, y in zip(b, bbar)]
            if checks["vv"] is None and any(E.bracket_vec(M.v_vec(a), M.v_vec(b))):
                checks["vv"] = (q, r)
            if checks["ww"] is None and any(E.bracket_vec(M.w_vec(a), M.w_vec(b))):
                checks["ww"] = (q, r)
            if checks["v-g"] is None and any(E.bracket_vec(M.v_vec(a), M.g_vec(b))):
                checks["v-g"] = (q, r)
            if checks["f-w"] is None and any(E.bracket_vec(M.f_vec(a), M.w_vec(b))):
                checks["f-w"] = (q, r)
            # [v(a), f(b)] = (-1)^{|b|} g(a_+ bar b)
            lhs = E.bracket_vec(M.v_vec(a), M.f_vec(b))
            rhs = M.g_vec(R.mul_vec(aplus, bbar))
            if pb:
                rhs = [f.neg(c) for c in rhs]
            if checks["v-f"] is None and lhs != rhs:
                checks["v-f"] = (q, r)
            # [g(a), w(b)] = -(-1)^{|a|} f(bar a b_+)
            lhs = E.bracket_vec(M.g_vec(a), M.w_vec(b))
            rhs = M.f_vec(R.mul_vec(abar, bplus))
            if not pa:
                rhs = [f.neg(c) for c in rhs]
            if checks["g-w"] is None and lhs != rhs:
                checks["g-w"] = (q, r)
            # [f(a), f(b)] = (-1)^{|a|} w(bar a b)
            lhs = E.bracket_vec(M.f_vec(a), M.f_vec(b))
            rhs = M.w_vec(R.mul_vec(abar, b))
            if pa:
                rhs = [f.neg(c) for c in rhs]
            if checks["ff-w"] is None and lhs != rhs:
                checks["ff-w"] = (q, r)
            # [g(a), g(b)] = -(-1)^{|b|} v(a bar b)
            lhs = E.bracket_vec(M.g_vec(a), M.g_vec(b))
            rhs = M.v_vec(R.mul_vec(a, bbar))
            if not pb:
                rhs = [f.neg(c) for c in rhs]
            if checks["gg-v"] is None and lhs != rhs:
                checks["gg-v"] = (q, r)
            for s in range(d):
                c = R.basis_vec(s)
                pc = R.parity[s]
                sgn = (pa * pb + pb * pc + pc * pa) % 2
                abc = R.mul_vec(R.mul_vec(a, b), c)
                cba = R.mul_vec(R.mul_vec(c, b), a)
                # [[f(a),g(b)],f(c)] = f(abc - bar(ab) c - (-1)^sgn cba)
                lhs = E.bracket_vec(M.h_vec(a, b), M.f_vec(c))
                arg = [f.sub(x, y) for x, y in zip(abc, R.mul_vec(R.bar_vec(R.mul_vec(a, b)), c))]
                arg = [f.sub(x, f.neg(y) if sgn else y) for x, y in zip(arg, cba)]
                if checks["fgf-triple"] is None and lhs != M.f_vec(arg):
                    checks["fgf-triple"] = (q, r, s)
                # [g(a),[f(b),g(c)]] = g(abc - a bar(bc) - (-1)^sgn cba)
                lhs = E.bracket_vec(M.g_vec(a), M.h_vec(b, c))
                arg = [f.sub(x, y) for x, y in zip(abc, R.mul_vec(a, R.bar_vec(R.mul_vec(b, c))))]
                arg = [f.sub(x, f.neg(y) if sgn else y) for x, y in zip(arg, cba)]
                if checks["gfg-triple"] is None and lhs != M.g_vec(arg):
                    checks["gfg-triple"] = (q, r, s)
    for name, witness in checks.items():
        rep.add(f"relation-{name}", witness is None, witness=witness)
    return rep


# -- beta on the osp_{1|2} model, values in z ---------------------------------


def _osp12_model_labels(R):
    d = R.dim
    labels = []
    for q in range(d):
        for r in range(d):
            labels.append(("h", q, r))
    for q in range(d):
        for kind in ("v", "w", "f", "g"):
            labels.append((kind, q))
    return labels


def _osp12_label_vec(M: Osp12Model, lab):
    R = M.A.R
    if lab[0] == "h":
        return M.h_vec(R.basis_vec(lab[1]), R.basis_vec(lab[2]))
    vec = R.basis_vec(lab[1])
    return {"v": M.v_vec, "w": M.w_vec, "f": M.f_vec, "g": M.g_vec}[lab[0]](vec)


def _osp12_label_parity(R, lab):
    if lab[0] == "h":
        return (R.parity[lab[1]] + R.parity[lab[2]]) % 2
    if lab[0] in ("f", "g"):
        return (1 + R.parity[lab[1]]) % 2
    return R.parity[lab[1]]


def beta_hat_osp12(R: SuperAlgebra, M: Osp12Model = None):
    """beta(v(a), g(b)) = pi_1(a_+ b), beta(f(a), w(b)) = pi_2(a b_+),
    induced on the model; returns (cocycle, zmodule, model, report)."""
    if M is None:
        M, _ = hat_osp12(R)
    zmod = i3_and_z(R)
    f = R.field
    model = M.model
    labels = _osp12_model_labels(R)
    nlab = len(labels)
    lab_model = []
    for lab in labels:
        c = model.coords_in_sub(_osp12_label_vec(M, lab))
        if c is None:
            raise WellDefinednessFailure("labelled element outside the model")
        lab_model.append(c)
    index = {lab: t for t, lab in enumerate(labels)}
    zdim = zmod.dim
    B = [[vec_zero(f, zdim) for _ in range(nlab)] for _ in range(nlab)]
    for q in range(R.dim):
        a = R.basis_vec(q)
        pa = R.parity[q]
        aplus = [f.add(x, y) for x, y in zip(a, R.bar_vec(a))]
        for r in range(R.dim):
            b = R.basis_vec(r)
            pb = R.parity[r]
            bplus = [f.add(x, y) for x, y in zip(b, R.bar_vec(b))]
            # beta(v(a), g(b)) = pi_1(a_+ b); |v(a)| = pa, |g(b)| = 1 + pb
            val = zmod.pi(1, R.mul_vec(aplus, b))
            i1, j1 = index[("v", q)], index[("g", r)]
            B[i1][j1] = val
            s = f.neg(f.one()) if (pa * ((1 + pb) % 2)) % 2 else f.one()
            B[j1][i1] = [f.mul(f.neg(s), c) for c in val]
            # beta(f(a), w(b)) = pi_2(a b_+); |f(a)| = 1 + pa, |w(b)| = pb
            val = zmod.pi(2, R.mul_vec(a, bplus))
            i2, j2 = index[("f", q)], index[("w", r)]
            B[i2][j2] = val
            s = f.neg(f.one()) if (((1 + pa) % 2) * pb) % 2 else f.one()
            B[j2][i2] = [f.mul(f.neg(s), c) for c in val]

    ev = ExactMatrix(f, [[lab_model[t][i] for t in range(nlab)] for i in range(model.dim)])
    for kv in kernel_basis(ev):
        for j in range(nlab):
            left = vec_zero(f, zdim)
            right = vec_zero(f, zdim)
            for i, c in enumerate(kv):
                if f.is_zero(c):
                    continue
                for s in range(zdim):
                    left[s] = f.add(left[s], f.mul(c, B[i][j][s]))
                    right[s] = f.add(right[s], f.mul(c, B[j][i][s]))
            if not (vec_is_zero(f, left) and vec_is_zero(f, right)):
                raise WellDefinednessFailure("label form does not kill the relation module")

    expansions = []
    for bidx in range(model.dim):
        x = solve(ev, model.basis_vec(bidx))
        if x is None:
            raise WellDefinednessFailure("labels do not span the model")
        expansions.append(x)
    values = []
    for b1 in range(model.dim):
        row = []
        for b2 in range(model.dim):
            acc = vec_zero(f, zdim)
            for i, ci in enumerate(expansions[b1]):
                if f.is_zero(ci):
                    continue
                for j, cj in enumerate(expansions[b2]):
                    if f.is_zero(cj):
                        continue
                    cell = B[i][j]
                    cc = f.mul(ci, cj)
                    for s in range(zdim):
                        if not f.is_zero(cell[s]):
                            acc[s] = f.add(acc[s], f.mul(cc, cell[s]))
            row.append(acc)
        values.append(row)
    coc = Cocycle("beta_hat_osp12", model, zdim, zmod.parity, values)
    rep = verify_cocycle(coc)
    return coc, zmod, M, rep


def uosp12(R: SuperAlgebra):
    """model (+) z with the pi-twisted presentation verified.

    Returns (extension, zmodule, model, report)."""
    coc, zmod, M, vrep = beta_hat_osp12(R)
    if not vrep.ok():
        raise CocycleInvalid("beta_hat_osp12 failed CC1/CC2")
    ext2 = central_extension(M.model, coc, verify=False)
    E2 = ext2.E
    model = M.model
    f = R.field
    rep = Report("uosp12", algebra=R.name, shape=(1, 1))
    rep.extend(vrep, prefix="beta-")
    rep.add("dim-sum", E2.dim == model.dim + zmod.dim,
            dims={"uosp": E2.dim, "model": model.dim, "z": zmod.dim})

    def lift(lab):
        return ext2.lift(model.coords_in_sub(_osp12_label_vec(M, lab)))

    def zvec(which, vec):
        out = vec_zero(f, E2.dim)
        for s, c in enumerate(zmod.pi(which, vec)):
            out[model.dim + s] = c
        return out

    pi1_check = None
    pi2_check = None
    vf_check = None
    for q in range(R.dim):
        a = R.basis_vec(q)
        aplus = [f.add(x, y) for x, y in zip(a, R.bar_vec(a))]
        for r in range(R.dim):
            b = R.basis_vec(r)
            pb = R.parity[r]
            bplus = [f.add(x, y) for x, y in zip(b, R.bar_vec(b))]
            lhs = E2.bracket_vec(lift(("v", q)), lift(("g", r)))
            if pi1_check is None and lhs != zvec(1, R.mul_vec(aplus, b)):
                pi1_check = (q, r)
            lhs = E2.bracket_vec(lift(("f", q)), lift(("w", r)))
            if pi2_check is None and lhs != zvec(2, R.mul_vec(a, bplus)):
                pi2_check = (q, r)
            # a zero-Z relation survives unchanged: [v(a), f(b)] = (-1)^{|b|} g(a_+ bar b)
            lhs = E2.bracket_vec(lift(("v", q)), lift(("f", r)))
            garg = R.mul_vec(aplus, R.bar_vec(b))
            gm = model.coords_in_sub(M.g_vec(garg))
            rhs = ext2.lift(gm)
            if pb:
                rhs = [f.neg(c) for c in rhs]
            if vf_check is None and lhs != rhs:
                vf_check = (q, r)
    rep.add("relation-v-g-pi1", pi1_check is None, witness=pi1_check)
    rep.add("relation-f-w-pi2", pi2_check is None, witness=pi2_check)
    rep.add("relation-v-f", vf_check is None, witness=vf_check)
    return ext2, zmod, M, rep
