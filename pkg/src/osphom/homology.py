"""Tensor-square quotient functors of an involutive superalgebra.

All functors here are finite quotients of R tensor R (or of R) by spans of
relation families instantiated over homogeneous basis tuples; multilinearity
of every family makes basis instantiation exhaustive.  The homology-type
modules are kernels of maps induced on the quotients:

  hd1_minus     first graded skew-dihedral homology HD1^-(R, bar):
                quotient by  a*b - bar(a)*bar(b),  a*b + (-1)^{|a||b|} b*a,
                and the cyclic family J(a,b,c); kernel of
                <a,b> -> [a,b] - bar([a,b]).
  hd1_tilde     the modified version with six relation families (a*1,
                antisymmetry, bar-invariance, and three J-twist families);
                same kernel condition.
  hc1           first graded cyclic homology of a superalgebra S (no
                involution): quotient by antisymmetry + J, kernel of
                <a,b> -> [a,b].
  quotient_rrr  R/([R,R]R) with its projection.
  i3_and_z      the degree-3 torsion quotient: I3 = span(3a, a - bar(a),
                ([a,b]-bar([a,b]))c, a+b+c-twist, six-term family), and
                z = R/I3 (+) R/I3 with the two projections.

Well-definedness of the induced maps is asserted (the relation span must
be annihilated), never assumed.
"""

from __future__ import annotations

from .errors import WellDefinednessFailure
from .linalg import Echelon, ExactMatrix, kernel_basis, vec_is_zero, vec_zero
from .superalg import SuperAlgebra, subspace


class QuotientSpace:
    """Ambient coordinate space modulo a relation span.

    Classes are coordinatized by the non-pivot ("free") ambient coordinates
    of the reduced relation echelon; project() is the induced linear map.
    """

    def __init__(self, field, ambient_dim, relation_vectors, ambient_parity=None):
        self.field = field
        self.ambient_dim = ambient_dim
        self.relations = Echelon(field, ambient_dim)
        for v in relation_vectors:
            self.relations.add(v)
        pivots = set(self.relations.pivots)
        self.free = [i for i in range(ambient_dim) if i not in pivots]
        self.ambient_parity = ambient_parity
        if ambient_parity is not None:
            self.parity = [ambient_parity[i] for i in self.free]
        else:
            self.parity = None

    @property
    def dim(self):
        return len(self.free)

    def project(self, vec):
        r = self.relations.residual(vec)
        return [r[i] for i in self.free]

    def lift(self, qvec):
        out = vec_zero(self.field, self.ambient_dim)
        for c, i in zip(qvec, self.free):
            out[i] = c
        return out

    def zero(self):
        return vec_zero(self.field, self.dim)


class TensorSquareQuotient:
    """(R tensor R)/I for a named relation family."""

    def __init__(self, R: SuperAlgebra, tag, relation_vectors):
        self.R = R
        self.tag = tag
        d = R.dim
        parity = [(R.parity[q] + R.parity[r]) % 2 for q in range(d) for r in range(d)]
        self.space = QuotientSpace(R.field, d * d, relation_vectors, parity)
        self._pair_table = None

    @property
    def dim(self):
        return self.space.dim

    @property
    def parity(self):
        return self.space.parity

    def pair_class(self, x, y):
        """Class of x tensor y (bilinear over a cached basis-pair table)."""
        if self._pair_table is None:
            d = self.R.dim
            self._pair_table = [
                self.space.project(_tensor(self.R, self.R.basis_vec(q), self.R.basis_vec(r)))
                for q in range(d)
                for r in range(d)
            ]
        f = self.R.field
        d = self.R.dim
        out = vec_zero(f, self.space.dim)
        for q, xq in enumerate(x):
            if f.is_zero(xq):
                continue
            for r, yr in enumerate(y):
                if f.is_zero(yr):
                    continue
                cls = self._pair_table[q * d + r]
                c = f.mul(xq, yr)
                for t, v in enumerate(cls):
                    if not f.is_zero(v):
                        out[t] = f.add(out[t], f.mul(c, v))
        return out


class HomologyModule:
    """A submodule of a quotient: basis vectors in quotient coordinates."""

    def __init__(self, kind, quotient, basis):
        self.kind = kind
        self.quotient = quotient
        self.basis = basis

    @property
    def dim(self):
        return len(self.basis)

    def __repr__(self):
        return f"HomologyModule({self.kind}, dim={self.dim})"


def _tensor(R, x, y):
    f = R.field
    d = R.dim
    out = vec_zero(f, d * d)
    for q, xq in enumerate(x):
        if f.is_zero(xq):
            continue
        for r, yr in enumerate(y):
            if not f.is_zero(yr):
                out[q * d + r] = f.mul(xq, yr)
    return out


def _sgn(f, exp):
    return f.neg(f.one()) if exp % 2 else f.one()


def j_tensor(R, x, px, y, py, z, pz):
    """J(x,y,z) = (-1)^{|x||z|} xy*z + (-1)^{|y||x|} yz*x + (-1)^{|z||y|} zx*y
    for homogeneous vectors with the given parities."""
    f = R.field
    out = vec_zero(f, R.dim * R.dim)
    for vec, sign in (
        (_tensor(R, R.mul_vec(x, y), z), px * pz),
        (_tensor(R, R.mul_vec(y, z), x), py * px),
        (_tensor(R, R.mul_vec(z, x), y), pz * py),
    ):
        s = _sgn(f, sign)
        for i, c in enumerate(vec):
            out[i] = f.add(out[i], f.mul(s, c))
    return out


def _basis(R):
    return [(q, R.basis_vec(q), R.parity[q]) for q in range(R.dim)]


def _antisym_family(R):
    f = R.field
    out = []
    for q, bq, pq in _basis(R):
        for r, br, pr in _basis(R):
            v = _tensor(R, bq, br)
            w = _tensor(R, br, bq)
            s = _sgn(f, pq * pr)
            out.append([f.add(a, f.mul(s, b)) for a, b in zip(v, w)])
    return out


def _bar_family(R):
    f = R.field
    out = []
    for q, bq, _ in _basis(R):
        for r, br, _ in _basis(R):
            v = _tensor(R, bq, br)
            w = _tensor(R, R.bar_vec(bq), R.bar_vec(br))
            out.append([f.sub(a, b) for a, b in zip(v, w)])
    return out


def _cyclic_family(R):
    out = []
    for q, bq, pq in _basis(R):
        for r, br, pr in _basis(R):
            for s, bs, ps in _basis(R):
                out.append(j_tensor(R, bq, pq, br, pr, bs, ps))
    return out


def _commutator_basis(R):
    """Homogeneous basis of [R,R] (as vectors with parities)."""
    f = R.field
    ech0, ech1 = Echelon(f, R.dim), Echelon(f, R.dim)
    for q in range(R.dim):
        for r in range(R.dim):
            c = R.commutator_vec(R.basis_vec(q), R.basis_vec(r))
            p = (R.parity[q] + R.parity[r]) % 2
            (ech0 if p == 0 else ech1).add(c)
    return [(v, 0) for v in ech0.basis()] + [(v, 1) for v in ech1.basis()]


def _nu_matrix(R, use_bar):
    """Matrix of a*b -> [a,b] (- bar([a,b]) when use_bar) on R tensor R."""
    f = R.field
    d = R.dim
    cols = []
    for q in range(d):
        for r in range(d):
            c = R.commutator_vec(R.basis_vec(q), R.basis_vec(r))
            if use_bar:
                cb = R.bar_vec(c)
                c = [f.sub(a, b) for a, b in zip(c, cb)]
            cols.append(c)
    return ExactMatrix(f, [[cols[j][i] for j in range(d * d)] for i in range(d)])


def _kernel_of_induced(R, quot: TensorSquareQuotient, nu: ExactMatrix, kind):
    """Kernel of the map induced by nu on the quotient; nu must kill I."""
    f = R.field
    for p, row in zip(quot.space.relations.pivots, quot.space.relations.basis()):
        # relation rows are stored reduced; check nu kills each
        img = nu.mat_vec(row)
        if not vec_is_zero(f, img):
            raise WellDefinednessFailure(f"{kind}: relation with pivot {p} not annihilated")
    induced = ExactMatrix(
        f, [[nu.mat_vec(quot.space.lift(_unit(f, quot.dim, j)))[i] for j in range(quot.dim)]
            for i in range(R.dim)],
    )
    return HomologyModule(kind, quot, kernel_basis(induced))


def _unit(f, n, j):
    v = vec_zero(f, n)
    v[j] = f.one()
    return v


def _cached(R, key, build):
    # tensor-square quotients are pure functions of the algebra; memoize on
    # the instance so repeated functor calls do not rebuild relation spans
    got = R._derived_cache.get(key)
    if got is None:
        got = build()
        R._derived_cache[key] = got
    return got


def skew_dihedral_quotient(R: SuperAlgebra) -> TensorSquareQuotient:
    """<R,R>_d^-: quotient by bar-invariance, antisymmetry and J."""

    def build():
        rels = _bar_family(R) + _antisym_family(R) + _cyclic_family(R)
        return TensorSquareQuotient(R, "d-", rels)

    return _cached(R, "d-", build)


def modified_skew_dihedral_quotient(R: SuperAlgebra) -> TensorSquareQuotient:
    """<R,R>~: quotient by the six modified relation families."""
    got = R._derived_cache.get("d~")
    if got is not None:
        return got
    f = R.field
    rels = []
    # (i) a * 1
    for q, bq, _ in _basis(R):
        rels.append(_tensor(R, bq, R.unit))
    # (ii) antisymmetry, (iii) bar-invariance
    rels += _antisym_family(R) + _bar_family(R)
    # (iv) J(b,a,c) - (-1)^{|a||b|+|b||c|+|c||a|} J(a,b,c - bar c)
    for q, bq, pq in _basis(R):
        for r, br, pr in _basis(R):
            for s, bs, ps in _basis(R):
                lhs = j_tensor(R, br, pr, bq, pq, bs, ps)
                cminus = [f.sub(a, b) for a, b in zip(bs, R.bar_vec(bs))]
                rhs = j_tensor(R, bq, pq, br, pr, cminus, ps)
                sign = _sgn(f, pq * pr + pr * ps + ps * pq)
                rels.append([f.sub(a, f.mul(sign, b)) for a, b in zip(lhs, rhs)])
    # (v) J(a,b,[c,d]) + (-1)^{|a||c|+|b||d|} J(c,d,[a,b])
    for q, bq, pq in _basis(R):
        for r, br, pr in _basis(R):
            for s, bs, ps in _basis(R):
                for t, bt, pt in _basis(R):
                    cd = R.commutator_vec(bs, bt)
                    ab = R.commutator_vec(bq, br)
                    lhs = j_tensor(R, bq, pq, br, pr, cd, (ps + pt) % 2)
                    rhs = j_tensor(R, bs, ps, bt, pt, ab, (pq + pr) % 2)
                    sign = _sgn(f, pq * ps + pr * pt)
                    rels.append([f.add(a, f.mul(sign, b)) for a, b in zip(lhs, rhs)])
    # (vi) J on [R,R]^3; J is trilinear over homogeneous arguments, so a
    # homogeneous basis of the commutator subspace is enough
    comm = _commutator_basis(R)
    for x, px in comm:
        for y, py in comm:
            for z, pz in comm:
                rels.append(j_tensor(R, x, px, y, py, z, pz))
    out = TensorSquareQuotient(R, "d~", rels)
    R._derived_cache["d~"] = out
    return out


def cyclic_quotient(S: SuperAlgebra) -> TensorSquareQuotient:
    """<S,S>_c: quotient by antisymmetry and J (no involution used)."""

    def build():
        rels = _antisym_family(S) + _cyclic_family(S)
        return TensorSquareQuotient(S, "c", rels)

    return _cached(S, "c", build)


def hd1_minus(R: SuperAlgebra) -> HomologyModule:
    """HD1^-(R, bar): see module docstring."""
    quot = skew_dihedral_quotient(R)
    return _kernel_of_induced(R, quot, _nu_matrix(R, use_bar=True), "hd1-")


def hd1_tilde(R: SuperAlgebra) -> HomologyModule:
    """Modified skew-dihedral homology (six relation families)."""
    quot = modified_skew_dihedral_quotient(R)
    return _kernel_of_induced(R, quot, _nu_matrix(R, use_bar=True), "hd1~")


def hc1(S: SuperAlgebra) -> HomologyModule:
    """HC1(S) = ker(<S,S>_c -> S, <a,b> -> [a,b]); no involution used."""
    quot = cyclic_quotient(S)
    return _kernel_of_induced(S, quot, _nu_matrix(S, use_bar=False), "hc1")


class PiQuotient:
    """R/I with its projection pi; doubles as a HomologyModule."""

    def __init__(self, kind, R, relation_vectors):
        self.kind = kind
        self.R = R
        self.space = QuotientSpace(R.field, R.dim, relation_vectors, list(R.parity))

    @property
    def dim(self):
        return self.space.dim

    def pi(self, vec):
        return self.space.project(vec)

    def __repr__(self):
        return f"PiQuotient({self.kind}, dim={self.dim})"


def quotient_rrr(R: SuperAlgebra) -> PiQuotient:
    """R/([R,R]R) with the canonical projection."""
    f = R.field
    rels = []
    for q in range(R.dim):
        for r in range(R.dim):
            c = R.commutator_vec(R.basis_vec(q), R.basis_vec(r))
            if vec_is_zero(f, c):
                continue
            for s in range(R.dim):
                rels.append(R.mul_vec(c, R.basis_vec(s)))
    return PiQuotient("rrr", R, rels)


class ZModule:
    """z = R/I3 (+) R/I3 with the two projections pi_1, pi_2."""

    def __init__(self, R, half: PiQuotient):
        self.R = R
        self.half = half

    @property
    def dim(self):
        return 2 * self.half.dim

    def pi(self, which, vec):
        """Image of vec under pi_which (which in {1, 2}), as z-coordinates."""
        h = self.half.pi(vec)
        z = vec_zero(self.R.field, self.dim)
        off = 0 if which == 1 else self.half.dim
        for i, c in enumerate(h):
            z[off + i] = c
        return z

    @property
    def parity(self):
        # pi_i(c) sits in odd brackets ([v(a), g(b)] etc.), so the central
        # coordinates carry the opposite parity of their representatives
        return [(p + 1) % 2 for p in self.half.space.parity] * 2

    def __repr__(self):
        return f"ZModule(dim={self.dim})"


def i3_and_z(R: SuperAlgebra) -> ZModule:
    """I3 and z = R/I3 + R/I3 (degree-3 torsion quotient)."""
    f = R.field
    three = f.coerce(3)
    rels = []
    for q, bq, pq in _basis(R):
        rels.append([f.mul(three, c) for c in bq])
        rels.append([f.sub(a, b) for a, b in zip(bq, R.bar_vec(bq))])
    for q, bq, pq in _basis(R):
        aplus = [f.add(x, y) for x, y in zip(bq, R.bar_vec(bq))]
        for r, br, pr in _basis(R):
            bplus = [f.add(x, y) for x, y in zip(br, R.bar_vec(br))]
            comm = R.commutator_vec(bq, br)
            skew = [f.sub(x, y) for x, y in zip(comm, R.bar_vec(comm))]
            for s, bs, ps in _basis(R):
                # ([a,b] - bar([a,b])) c
                rels.append(R.mul_vec(skew, bs))
                # a_+ b_+ c - (-1)^{|a||b|} b_+ a_+ c
                lhs = R.mul_vec(R.mul_vec(aplus, bplus), bs)
                rhs = R.mul_vec(R.mul_vec(bplus, aplus), bs)
                sign = _sgn(f, pq * pr)
                rels.append([f.sub(x, f.mul(sign, y)) for x, y in zip(lhs, rhs)])
                # six-term family
                rels.append(_six_term(R, bq, pq, br, pr, bs, ps))
    half = PiQuotient("i3", R, rels)
    return ZModule(R, half)


def _six_term(R, a, pa, b, pb, c, pc):
    """(-1)^{|a||c|}(a bar(b) c + bar(a) b bar(c)) + cyclic twists."""
    f = R.field
    ab_, a_b = R.bar_vec(b), R.bar_vec(a)
    c_b = R.bar_vec(c)
    out = vec_zero(f, R.dim)
    terms = (
        (pa * pc, R.mul_vec(R.mul_vec(a, ab_), c), R.mul_vec(R.mul_vec(a_b, b), c_b)),
        (pb * pa, R.mul_vec(R.mul_vec(b, c_b), a), R.mul_vec(R.mul_vec(ab_, c), a_b)),
        (pc * pb, R.mul_vec(R.mul_vec(c, a_b), b), R.mul_vec(R.mul_vec(c_b, a), ab_)),
    )
    for exp, t1, t2 in terms:
        s = _sgn(f, exp)
        for i in range(R.dim):
            out[i] = f.add(out[i], f.mul(s, f.add(t1[i], t2[i])))
    return out


def hd_membership(hm: HomologyModule, pair_list):
    """Class of sum <a_i, b_i> and whether it lies in the homology submodule."""
    f = hm.quotient.R.field
    v = hm.quotient.space.zero()
    for a, b in pair_list:
        w = hm.quotient.pair_class(a, b)
        v = [f.add(x, y) for x, y in zip(v, w)]
    ech = Echelon(f, hm.quotient.dim)
    for b in hm.basis:
        ech.add(b)
    return v, ech.contains(v)
