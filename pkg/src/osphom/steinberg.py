"""Relation and identity suites for labelled generator families.

A GeneratorFamily assigns to each label (kind, indices) a linear map from
the coefficient algebra R into a concrete Lie superalgebra.  Two families
matter in practice: the canonical osp generators (inside osp itself) and
their lifts inside the cocycle extension model.  The relation suite
instantiates each of the 28 Steinberg-orthosymplectic relation schemas over
all admissible index tuples and all homogeneous coefficient basis pairs;
additivity in the coefficient slot makes basis instantiation exhaustive
(a sampling check over random homogeneous sums guards the instantiation
code itself).

The lemma suites check the derived-element identities:

  kp        brackets of h_ik(a,b) = [f_ik(a), g_ki(b)] against every kind;
  lmd34     the diagonal families v_k(a) = -[g_k1(a), g_k1(1)],
            w_k(a) = [f_1k(1), f_1k(a)];
  lmd_kp    the h-transfer identities ([t_ij(a), t_ji(b)] etc.);
  h_rln     the four lambda(a,b) = h_11(a,b) - (-1)^{|a||b|} h_11(1, ba)
            identities;
  hatosp12_h  the lambda/J identities in the rank-(1,1) model, including
            3 J(a,b,c) = 0.

Two schemas are printed with slips in the source material (an undeclared
sign exponent and a stray index); the suites test the natural corrections
(sign (-1)^{|a||b|}, index v_kl) and report pass/fail rather than assuming.
"""

from __future__ import annotations

import random

from .errors import InvalidInput
from .linalg import Echelon, vec_is_zero, vec_zero
from .liesuper import LieSuperAlgebra
from .reports import Report


class GeneratorFamily:
    """Labelled family of elements of a Lie superalgebra, linear in R.

    builder(kind, idx, avec) must return target coordinates; results are
    cached per (kind, idx, basis index).
    """

    def __init__(self, name, target: LieSuperAlgebra, m, n, R, builder, kinds=("t", "u", "v", "w", "f", "g")):
        self.name = name
        self.target = target
        self.m = m
        self.n = n
        self.R = R
        self.kinds = kinds
        self._builder = builder
        self._cache = {}

    def elem(self, kind, idx, avec):
        f = self.target.field
        out = vec_zero(f, self.target.dim)
        for q, c in enumerate(avec):
            c = f.coerce(c)
            if f.is_zero(c):
                continue
            key = (kind, idx, q)
            col = self._cache.get(key)
            if col is None:
                col = self._builder(kind, idx, self.R.basis_vec(q))
                self._cache[key] = col
            for t, v in enumerate(col):
                if not f.is_zero(v):
                    out[t] = f.add(out[t], f.mul(c, v))
        return out

    # derived elements
    def h(self, i, k, avec, bvec):
        E = self.target
        return E.bracket_vec(self.elem("f", (i, k), avec), self.elem("g", (k, i), bvec))

    def v_diag(self, k, avec):
        E = self.target
        f = E.field
        out = E.bracket_vec(self.elem("g", (k, 1), avec), self.elem("g", (k, 1), self.R.unit))
        return [f.neg(c) for c in out]

    def w_diag(self, k, avec):
        E = self.target
        return E.bracket_vec(self.elem("f", (1, k), self.R.unit), self.elem("f", (1, k), avec))

    def lam(self, avec, pa, bvec, pb):
        """lambda(a,b) = h_11(a,b) - (-1)^{|a||b|} h_11(1, ba)."""
        E = self.target
        f = E.field
        first = self.h(1, 1, avec, bvec)
        second = self.h(1, 1, self.R.unit, self.R.mul_vec(bvec, avec))
        if pa * pb:
            return [f.add(x, y) for x, y in zip(first, second)]
        return [f.sub(x, y) for x, y in zip(first, second)]

    def linearity_check(self, samples=4, seed=0):
        """builder(a + b) = builder(a) + builder(b) on random homogeneous sums."""
        rng = random.Random(seed)
        f = self.target.field
        R = self.R
        kinds_idx = []
        for kind in self.kinds:
            kinds_idx.extend((kind, idx) for idx in self._index_range(kind))
        for _ in range(samples):
            if not kinds_idx:
                break
            kind, idx = rng.choice(kinds_idx)
            q0 = rng.randrange(R.dim)
            par = R.parity[q0]
            coeffs = [f.coerce(rng.randint(-2, 2)) if R.parity[q] == par else f.zero()
                      for q in range(R.dim)]
            direct = self._builder(kind, idx, coeffs)
            summed = self.elem(kind, idx, coeffs)
            if direct != summed:
                return False
        return True

    def _index_range(self, kind):
        m, n = self.m, self.n
        if kind == "t":
            return [(i, j) for i in range(1, m + 1) for j in range(1, m + 1) if i != j]
        if kind in ("u", "v", "w"):
            return [(k, l) for k in range(1, n + 1) for l in range(1, n + 1) if k != l]
        if kind == "f":
            return [(i, k) for i in range(1, m + 1) for k in range(1, n + 1)]
        if kind == "g":
            return [(k, i) for k in range(1, n + 1) for i in range(1, m + 1)]
        raise InvalidInput(kind)


def osp_generator_family(A) -> GeneratorFamily:
    from .osp import generator

    def builder(kind, idx, avec):
        c = A.osp.to_coords(generator(A, kind, idx, avec))
        if c is None:
            raise InvalidInput(f"generator {kind}{idx} outside osp")
        return c

    return GeneratorFamily(f"osp-gens({A.m}|{2*A.n},{A.R.name})", A.osp, A.m, A.n, A.R, builder)


def sto_lift_family(sto) -> GeneratorFamily:
    def builder(kind, idx, avec):
        return sto.gen_vec(kind, idx, avec)

    A = sto.A
    return GeneratorFamily(f"sto-lifts({A.m}|{2*A.n},{A.R.name})", sto.ext.E, A.m, A.n, A.R, builder)


def osp12_fg_family(M) -> GeneratorFamily:
    """f/g family of the rank-(1,1) model (kinds f and g only)."""

    def builder(kind, idx, avec):
        return M.f_vec(avec) if kind == "f" else M.g_vec(avec)

    return GeneratorFamily(f"osp12-fg({M.A.R.name})", M.ext.E, 1, 1, M.A.R, builder,
                           kinds=("f", "g"))


# -- the 28-relation suite ----------------------------------------------------


def _rng(m):
    return range(1, m + 1)


def verify_sto_relations(F: GeneratorFamily) -> Report:
    """All 28 relation schemas over admissible indices and basis pairs."""
    m, n, R = F.m, F.n, F.R
    E = F.target
    f = E.field
    rep = Report("sto-relations", algebra=R.name, shape=(m, n))
    rep.add("linearity", F.linearity_check())

    basis = [(q, R.basis_vec(q), R.parity[q]) for q in range(R.dim)]

    def bar(v):
        return R.bar_vec(v)

    def run(name, index_tuples, check):
        witness = None
        count = 0
        for idxs in index_tuples:
            for q, a, pa in basis:
                for r, b, pb in basis:
                    count += 1
                    if not check(idxs, a, pa, b, pb):
                        witness = (idxs, q, r)
                        break
                if witness:
                    break
            if witness:
                break
        rep.add(name, witness is None, witness=witness, dims=count)

    def eq(x, y):
        return x == y

    def brk(x, y):
        return E.bracket_vec(x, y)

    def neg(x):
        return [f.neg(c) for c in x]

    def sgn(exp, x):
        return neg(x) if exp % 2 else x

    # 01: t_ij(a) = -t_ji(bar a)
    run("t-transpose",
        [(i, j) for i in _rng(m) for j in _rng(m) if i != j],
        lambda I, a, pa, b, pb: eq(F.elem("t", I, a), neg(F.elem("t", (I[1], I[0]), bar(a)))))
    # 02: v_kl(a) = v_lk(bar a), w likewise
    run("vw-transpose",
        [(k, l) for k in _rng(n) for l in _rng(n) if k != l],
        lambda I, a, pa, b, pb: eq(F.elem("v", I, a), F.elem("v", (I[1], I[0]), bar(a)))
        and eq(F.elem("w", I, a), F.elem("w", (I[1], I[0]), bar(a))))
    # 03: [t_ii'(a), t_i'j(b)] = t_ij(ab)
    run("tt-compose",
        [(i, i2, j) for i in _rng(m) for i2 in _rng(m) for j in _rng(m)
         if len({i, i2, j}) == 3],
        lambda I, a, pa, b, pb: eq(brk(F.elem("t", (I[0], I[1]), a), F.elem("t", (I[1], I[2]), b)),
                                   F.elem("t", (I[0], I[2]), R.mul_vec(a, b))))
    # 04: [t_ij(a), t_i'j'(b)] = 0 for four distinct
    run("tt-disjoint",
        [(i, j, i2, j2) for i in _rng(m) for j in _rng(m) for i2 in _rng(m) for j2 in _rng(m)
         if len({i, j, i2, j2}) == 4],
        lambda I, a, pa, b, pb: vec_is_zero(f, brk(F.elem("t", (I[0], I[1]), a),
                                                   F.elem("t", (I[2], I[3]), b))))
    # 05: [t, u] = [t, v] = [t, w] = 0
    run("t-uvw-commute",
        [(i, j, k, l) for i in _rng(m) for j in _rng(m) if i != j
         for k in _rng(n) for l in _rng(n) if k != l],
        lambda I, a, pa, b, pb: all(
            vec_is_zero(f, brk(F.elem("t", (I[0], I[1]), a), F.elem(kind, (I[2], I[3]), b)))
            for kind in ("u", "v", "w")))
    # 06: [u_kk'(a), u_k'l(b)] = u_kl(ab)
    run("uu-compose",
        [(k, k2, l) for k in _rng(n) for k2 in _rng(n) for l in _rng(n)
         if len({k, k2, l}) == 3],
        lambda I, a, pa, b, pb: eq(brk(F.elem("u", (I[0], I[1]), a), F.elem("u", (I[1], I[2]), b)),
                                   F.elem("u", (I[0], I[2]), R.mul_vec(a, b))))
    # 07: [u_kl(a), u_k'l'(b)] = 0 along the chain condition
    run("uu-disjoint",
        [(k, l, k2, l2) for k in _rng(n) for l in _rng(n) for k2 in _rng(n) for l2 in _rng(n)
         if k != l and l != k2 and k2 != l2 and l2 != k],
        lambda I, a, pa, b, pb: vec_is_zero(f, brk(F.elem("u", (I[0], I[1]), a),
                                                   F.elem("u", (I[2], I[3]), b))))
    # 08: [u_kk'(a), v_k'l(b)] = v_kl(ab)
    run("uv-compose",
        [(k, k2, l) for k in _rng(n) for k2 in _rng(n) for l in _rng(n)
         if len({k, k2, l}) == 3],
        lambda I, a, pa, b, pb: eq(brk(F.elem("u", (I[0], I[1]), a), F.elem("v", (I[1], I[2]), b)),
                                   F.elem("v", (I[0], I[2]), R.mul_vec(a, b))))
    # 09: [u_kl(a), v_k'l'(b)] = 0 along the chain condition
    run("uv-disjoint",
        [(k, l, k2, l2) for k in _rng(n) for l in _rng(n) for k2 in _rng(n) for l2 in _rng(n)
         if k != l and l != k2 and k2 != l2 and l2 != l],
        lambda I, a, pa, b, pb: vec_is_zero(f, brk(F.elem("u", (I[0], I[1]), a),
                                                   F.elem("v", (I[2], I[3]), b))))
    # 10: [w_lk'(a), u_k'k(b)] = w_lk(ab)
    run("wu-compose",
        [(l, k2, k) for l in _rng(n) for k2 in _rng(n) for k in _rng(n)
         if len({l, k2, k}) == 3],
        lambda I, a, pa, b, pb: eq(brk(F.elem("w", (I[0], I[1]), a), F.elem("u", (I[1], I[2]), b)),
                                   F.elem("w", (I[0], I[2]), R.mul_vec(a, b))))
    # 11: [w_l'k'(a), u_lk(b)] = 0 along the chain condition
    run("wu-disjoint",
        [(l2, k2, l, k) for l2 in _rng(n) for k2 in _rng(n) for l in _rng(n) for k in _rng(n)
         if k != l and l != k2 and k2 != l2 and l2 != l],
        lambda I, a, pa, b, pb: vec_is_zero(f, brk(F.elem("w", (I[0], I[1]), a),
                                                   F.elem("u", (I[2], I[3]), b))))
    # 12: [v, v] = [w, w] = 0
    run("vv-ww-zero",
        [(k, l, k2, l2) for k in _rng(n) for l in _rng(n) if k != l
         for k2 in _rng(n) for l2 in _rng(n) if k2 != l2],
        lambda I, a, pa, b, pb: vec_is_zero(f, brk(F.elem("v", (I[0], I[1]), a),
                                                   F.elem("v", (I[2], I[3]), b)))
        and vec_is_zero(f, brk(F.elem("w", (I[0], I[1]), a), F.elem("w", (I[2], I[3]), b))))
    # 13: [v_kk'(a), w_k'l(b)] = u_kl(ab)
    run("vw-compose",
        [(k, k2, l) for k in _rng(n) for k2 in _rng(n) for l in _rng(n)
         if len({k, k2, l}) == 3],
        lambda I, a, pa, b, pb: eq(brk(F.elem("v", (I[0], I[1]), a), F.elem("w", (I[1], I[2]), b)),
                                   F.elem("u", (I[0], I[2]), R.mul_vec(a, b))))
    # 14: [v_kl(a), w_k'l'(b)] = 0 for four distinct
    run("vw-disjoint",
        [(k, l, k2, l2) for k in _rng(n) for l in _rng(n) for k2 in _rng(n) for l2 in _rng(n)
         if len({k, l, k2, l2}) == 4],
        lambda I, a, pa, b, pb: vec_is_zero(f, brk(F.elem("v", (I[0], I[1]), a),
                                                   F.elem("w", (I[2], I[3]), b))))

    def delta(x, y):
        return 1 if x == y else 0

    def combine(parts):
        out = vec_zero(f, E.dim)
        for vec, coeff in parts:
            if coeff == 0:
                continue
            for t, c in enumerate(vec):
                if not f.is_zero(c):
                    out[t] = f.add(out[t], f.mul(f.coerce(coeff), c))
        return out

    # 15: [t_ij(a), f_i'k(b)] = dlt_i'j f_ik(ab) - dlt_i'i f_jk(bar(a) b)
    run("t-f",
        [(i, j, i2, k) for i in _rng(m) for j in _rng(m) if i != j
         for i2 in _rng(m) for k in _rng(n)],
        lambda I, a, pa, b, pb: eq(
            brk(F.elem("t", (I[0], I[1]), a), F.elem("f", (I[2], I[3]), b)),
            combine([(F.elem("f", (I[0], I[3]), R.mul_vec(a, b)), delta(I[2], I[1])),
                     (F.elem("f", (I[1], I[3]), R.mul_vec(bar(a), b)), -delta(I[2], I[0]))])))
    # 16: [g_ki'(a), t_ij(b)] = dlt_i'i g_kj(ab) - dlt_i'j g_ki(a bar b)
    run("g-t",
        [(k, i2, i, j) for k in _rng(n) for i2 in _rng(m)
         for i in _rng(m) for j in _rng(m) if i != j],
        lambda I, a, pa, b, pb: eq(
            brk(F.elem("g", (I[0], I[1]), a), F.elem("t", (I[2], I[3]), b)),
            combine([(F.elem("g", (I[0], I[3]), R.mul_vec(a, b)), delta(I[1], I[2])),
                     (F.elem("g", (I[0], I[2]), R.mul_vec(a, bar(b))), -delta(I[1], I[3]))])))
    # 17: [f_ik'(a), u_kl(b)] = dlt_kk' f_il(ab)
    run("f-u",
        [(i, k2, k, l) for i in _rng(m) for k2 in _rng(n)
         for k in _rng(n) for l in _rng(n) if k != l],
        lambda I, a, pa, b, pb: eq(
            brk(F.elem("f", (I[0], I[1]), a), F.elem("u", (I[2], I[3]), b)),
            combine([(F.elem("f", (I[0], I[3]), R.mul_vec(a, b)), delta(I[2], I[1]))])))
    # 18: [u_lk(a), g_k'i(b)] = dlt_k'k g_li(ab)
    run("u-g",
        [(l, k, k2, i) for l in _rng(n) for k in _rng(n) if k != l
         for k2 in _rng(n) for i in _rng(m)],
        lambda I, a, pa, b, pb: eq(
            brk(F.elem("u", (I[0], I[1]), a), F.elem("g", (I[2], I[3]), b)),
            combine([(F.elem("g", (I[0], I[3]), R.mul_vec(a, b)), delta(I[2], I[1]))])))
    # 19: [v_kl(a), f_il'(b)] = (-1)^{|b|}(dlt_l'l g_ki(a bar b) + dlt_l'k g_li(bar a bar b))
    run("v-f",
        [(k, l, i, l2) for k in _rng(n) for l in _rng(n) if k != l
         for i in _rng(m) for l2 in _rng(n)],
        lambda I, a, pa, b, pb: eq(
            brk(F.elem("v", (I[0], I[1]), a), F.elem("f", (I[2], I[3]), b)),
            sgn(pb, combine([
                (F.elem("g", (I[0], I[2]), R.mul_vec(a, bar(b))), delta(I[3], I[1])),
                (F.elem("g", (I[1], I[2]), R.mul_vec(bar(a), bar(b))), delta(I[3], I[0]))]))))
    # 20: [g_k'i(a), v_kl(b)] = 0
    run("g-v",
        [(k2, i, k, l) for k2 in _rng(n) for i in _rng(m)
         for k in _rng(n) for l in _rng(n) if k != l],
        lambda I, a, pa, b, pb: vec_is_zero(f, brk(F.elem("g", (I[0], I[1]), a),
                                                   F.elem("v", (I[2], I[3]), b))))
    # 21: [w_kl(a), f_ik'(b)] = 0
    run("w-f",
        [(k, l, i, k2) for k in _rng(n) for l in _rng(n) if k != l
         for i in _rng(m) for k2 in _rng(n)],
        lambda I, a, pa, b, pb: vec_is_zero(f, brk(F.elem("w", (I[0], I[1]), a),
                                                   F.elem("f", (I[2], I[3]), b))))
    # 22: [g_k'i(a), w_kl(b)] = -(-1)^{|a|}(dlt_k'k f_il(bar a b) + dlt_k'l f_ik(bar a bar b))
    run("g-w",
        [(k2, i, k, l) for k2 in _rng(n) for i in _rng(m)
         for k in _rng(n) for l in _rng(n) if k != l],
        lambda I, a, pa, b, pb: eq(
            brk(F.elem("g", (I[0], I[1]), a), F.elem("w", (I[2], I[3]), b)),
            sgn(pa + 1, combine([
                (F.elem("f", (I[1], I[3]), R.mul_vec(bar(a), b)), delta(I[0], I[2])),
                (F.elem("f", (I[1], I[2]), R.mul_vec(bar(a), bar(b))), delta(I[0], I[3]))]))))
    # 23: [f_ik(a), f_il(b)] = (-1)^{|a|} w_kl(bar(a) b)
    run("ff-same-row",
        [(i, k, l) for i in _rng(m) for k in _rng(n) for l in _rng(n) if k != l],
        lambda I, a, pa, b, pb: eq(
            brk(F.elem("f", (I[0], I[1]), a), F.elem("f", (I[0], I[2]), b)),
            sgn(pa, F.elem("w", (I[1], I[2]), R.mul_vec(bar(a), b)))))
    # 24: [f_ik(a), f_jl(b)] = 0 for i != j
    run("ff-cross",
        [(i, k, j, l) for i in _rng(m) for j in _rng(m) if i != j
         for k in _rng(n) for l in _rng(n)],
        lambda I, a, pa, b, pb: vec_is_zero(f, brk(F.elem("f", (I[0], I[1]), a),
                                                   F.elem("f", (I[2], I[3]), b))))
    # 25: [g_ki(a), g_li(b)] = -(-1)^{|b|} v_kl(a bar b)
    run("gg-same-col",
        [(k, l, i) for k in _rng(n) for l in _rng(n) if k != l for i in _rng(m)],
        lambda I, a, pa, b, pb: eq(
            brk(F.elem("g", (I[0], I[2]), a), F.elem("g", (I[1], I[2]), b)),
            sgn(pb + 1, F.elem("v", (I[0], I[1]), R.mul_vec(a, bar(b))))))
    # 26: [g_ki(a), g_lj(b)] = 0 for i != j
    run("gg-cross",
        [(k, i, l, j) for k in _rng(n) for l in _rng(n)
         for i in _rng(m) for j in _rng(m) if i != j],
        lambda I, a, pa, b, pb: vec_is_zero(f, brk(F.elem("g", (I[0], I[1]), a),
                                                   F.elem("g", (I[2], I[3]), b))))
    # 27: [f_ik(a), g_lj(b)] = dlt_kl t_ij(ab) for i != j
    run("f-g-t",
        [(i, k, l, j) for i in _rng(m) for j in _rng(m) if i != j
         for k in _rng(n) for l in _rng(n)],
        lambda I, a, pa, b, pb: eq(
            brk(F.elem("f", (I[0], I[1]), a), F.elem("g", (I[2], I[3]), b)),
            combine([(F.elem("t", (I[0], I[3]), R.mul_vec(a, b)), delta(I[1], I[2]))])))
    # 28: [g_ki(a), f_il(b)] = u_kl(ab) for k != l
    run("g-f-u",
        [(k, i, l) for k in _rng(n) for l in _rng(n) if k != l for i in _rng(m)],
        lambda I, a, pa, b, pb: eq(
            brk(F.elem("g", (I[0], I[1]), a), F.elem("f", (I[1], I[2]), b)),
            F.elem("u", (I[0], I[2]), R.mul_vec(a, b))))
    return rep


def derived_elements(F: GeneratorFamily) -> GeneratorFamily:
    """The family already carries h/v_k/w_k accessors; provided for symmetry."""
    return F


# -- lemma suites -------------------------------------------------------------


def _basis3(R):
    return [(q, R.basis_vec(q), R.parity[q]) for q in range(R.dim)]


def lemma_suite(F: GeneratorFamily, which: str) -> Report:
    if which == "kp":
        return _suite_kp(F)
    if which == "lmd34":
        return _suite_lmd34(F)
    if which == "lmd_kp":
        return _suite_lmd_kp(F)
    if which == "h_rln":
        return _suite_h_rln(F)
    if which == "hatosp12_h":
        return _suite_hatosp12(F)
    raise InvalidInput(f"unknown lemma suite {which!r}")


def _suite_kp(F: GeneratorFamily) -> Report:
    m, n, R = F.m, F.n, F.R
    E = F.target
    f = E.field
    rep = Report("lemma-kp", algebra=R.name, shape=(m, n))
    basis = _basis3(R)

    def neg_if(exp, v):
        return [f.neg(c) for c in v] if exp % 2 else v

    def run(name, idx_tuples, check):
        witness = None
        for idxs in idx_tuples:
            for q, a, pa in basis:
                for r, b, pb in basis:
                    for s, c, pc in basis:
                        if not check(idxs, a, pa, b, pb, c, pc):
                            witness = (idxs, q, r, s)
                            break
                    if witness:
                        break
                if witness:
                    break
            if witness:
                break
        rep.add(name, witness is None, witness=witness)

    iks = [(i, k) for i in _rng(m) for k in _rng(n)]

    def skew_prod(a, b, c):
        ab = R.mul_vec(a, b)
        return [f.sub(x, y) for x, y in zip(R.mul_vec(ab, c), R.mul_vec(R.bar_vec(ab), c))]

    run("ht-same-row",
        [(i, k, j) for (i, k) in iks for j in _rng(m) if j != i],
        lambda I, a, pa, b, pb, c, pc: E.bracket_vec(F.h(I[0], I[1], a, b), F.elem("t", (I[0], I[2]), c))
        == F.elem("t", (I[0], I[2]), skew_prod(a, b, c)))
    run("ht-disjoint",
        [(i, k, j, j2) for (i, k) in iks for j in _rng(m) for j2 in _rng(m)
         if len({I for I in (i, j, j2)}) == 3],
        lambda I, a, pa, b, pb, c, pc: vec_is_zero(
            f, E.bracket_vec(F.h(I[0], I[1], a, b), F.elem("t", (I[2], I[3]), c))))
    run("hu-same-col",
        [(i, k, l) for (i, k) in iks for l in _rng(n) if l != k],
        lambda I, a, pa, b, pb, c, pc: E.bracket_vec(F.h(I[0], I[1], a, b), F.elem("u", (I[1], I[2]), c))
        == neg_if((pa + 1) * (pb + 1) + 1, F.elem("u", (I[1], I[2]), R.mul_vec(R.mul_vec(b, a), c))))
    # the sign of this line and of hw-same-col is the one the concrete
    # brackets force ([u_kk(1), u_lk(1)] = -u_lk(1), [u_kk(1), w_kl(1)] =
    # -w_kl(1)); the printed leading minus is absent here
    run("hu-same-col-rev",
        [(i, k, l) for (i, k) in iks for l in _rng(n) if l != k],
        lambda I, a, pa, b, pb, c, pc: E.bracket_vec(F.h(I[0], I[1], a, b), F.elem("u", (I[2], I[1]), c))
        == neg_if((pa + 1) * (pb + 1) + pb * pc + pc * pa,
                  F.elem("u", (I[2], I[1]), R.mul_vec(c, R.mul_vec(b, a)))))
    run("hu-disjoint",
        [(i, k, l, l2) for (i, k) in iks for l in _rng(n) for l2 in _rng(n)
         if len({k, l, l2}) == 3],
        lambda I, a, pa, b, pb, c, pc: vec_is_zero(
            f, E.bracket_vec(F.h(I[0], I[1], a, b), F.elem("u", (I[2], I[3]), c))))
    # printed with a stray index v_ll'; tested as the natural correction v_kl
    run("hv-same-col",
        [(i, k, l) for (i, k) in iks for l in _rng(n) if l != k],
        lambda I, a, pa, b, pb, c, pc: E.bracket_vec(F.h(I[0], I[1], a, b), F.elem("v", (I[1], I[2]), c))
        == neg_if((pa + 1) * (pb + 1) + 1, F.elem("v", (I[1], I[2]), R.mul_vec(R.mul_vec(b, a), c))))
    run("hv-disjoint",
        [(i, k, l, l2) for (i, k) in iks for l in _rng(n) for l2 in _rng(n)
         if len({k, l, l2}) == 3],
        lambda I, a, pa, b, pb, c, pc: vec_is_zero(
            f, E.bracket_vec(F.h(I[0], I[1], a, b), F.elem("v", (I[2], I[3]), c))))
    run("hw-same-col",
        [(i, k, l) for (i, k) in iks for l in _rng(n) if l != k],
        lambda I, a, pa, b, pb, c, pc: E.bracket_vec(F.h(I[0], I[1], a, b), F.elem("w", (I[1], I[2]), c))
        == neg_if((pa + 1) * (pb + 1),
                  F.elem("w", (I[1], I[2]), R.mul_vec(R.bar_vec(R.mul_vec(b, a)), c))))
    run("hw-disjoint",
        [(i, k, l, l2) for (i, k) in iks for l in _rng(n) for l2 in _rng(n)
         if len({k, l, l2}) == 3],
        lambda I, a, pa, b, pb, c, pc: vec_is_zero(
            f, E.bracket_vec(F.h(I[0], I[1], a, b), F.elem("w", (I[2], I[3]), c))))
    run("hf-same-row",
        [(i, k, l) for (i, k) in iks for l in _rng(n) if l != k],
        lambda I, a, pa, b, pb, c, pc: E.bracket_vec(F.h(I[0], I[1], a, b), F.elem("f", (I[0], I[2]), c))
        == F.elem("f", (I[0], I[2]), skew_prod(a, b, c)))
    run("hf-same-col",
        [(i, k, j) for (i, k) in iks for j in _rng(m) if j != i],
        lambda I, a, pa, b, pb, c, pc: E.bracket_vec(F.h(I[0], I[1], a, b), F.elem("f", (I[2], I[1]), c))
        == neg_if(pa * pb + pb * pc + pc * pa + 1,
                  F.elem("f", (I[2], I[1]), R.mul_vec(c, R.mul_vec(b, a)))))
    run("hf-disjoint",
        [(i, k, j, l) for (i, k) in iks for j in _rng(m) for l in _rng(n)
         if j != i and l != k],
        lambda I, a, pa, b, pb, c, pc: vec_is_zero(
            f, E.bracket_vec(F.h(I[0], I[1], a, b), F.elem("f", (I[2], I[3]), c))))
    run("gh-same-row",
        [(i, k, l) for (i, k) in iks for l in _rng(n) if l != k],
        lambda I, a, pa, b, pb, c, pc: E.bracket_vec(F.elem("g", (I[2], I[0]), a), F.h(I[0], I[1], b, c))
        == F.elem("g", (I[2], I[0]),
                  [f.sub(x, y) for x, y in zip(R.mul_vec(a, R.mul_vec(b, c)),
                                               R.mul_vec(a, R.bar_vec(R.mul_vec(b, c))))]))
    run("gh-same-col",
        [(i, k, j) for (i, k) in iks for j in _rng(m) if j != i],
        lambda I, a, pa, b, pb, c, pc: E.bracket_vec(F.elem("g", (I[1], I[2]), a), F.h(I[0], I[1], b, c))
        == neg_if(pa * pb + pb * pc + pc * pa + 1,
                  F.elem("g", (I[1], I[2]), R.mul_vec(c, R.mul_vec(b, a)))))
    run("gh-disjoint",
        [(i, k, j, l) for (i, k) in iks for j in _rng(m) for l in _rng(n)
         if j != i and l != k],
        lambda I, a, pa, b, pb, c, pc: vec_is_zero(
            f, E.bracket_vec(F.elem("g", (I[3], I[2]), a), F.h(I[0], I[1], b, c))))
    if (m, n) != (1, 1):
        def triple_arg(a, b, c, pa, pb, pc):
            ab = R.mul_vec(a, b)
            first = [f.sub(x, y) for x, y in zip(R.mul_vec(ab, c), R.mul_vec(R.bar_vec(ab), c))]
            cba = R.mul_vec(c, R.mul_vec(b, a))
            if (pa * pb + pb * pc + pc * pa) % 2:
                return [f.add(x, y) for x, y in zip(first, cba)]
            return [f.sub(x, y) for x, y in zip(first, cba)]

        run("hf-diagonal",
            iks,
            lambda I, a, pa, b, pb, c, pc: E.bracket_vec(F.h(I[0], I[1], a, b), F.elem("f", I, c))
            == F.elem("f", I, triple_arg(a, b, c, pa, pb, pc)))

        def triple_arg_g(a, pa, b, pb, c, pc):
            ab = R.mul_vec(a, b)
            first = [f.sub(x, y) for x, y in zip(R.mul_vec(c, ab), R.mul_vec(c, R.bar_vec(ab)))]
            bac = R.mul_vec(b, R.mul_vec(a, c))
            if (pa * pb + pb * pc + pc * pa) % 2:
                return [f.add(x, y) for x, y in zip(first, bac)]
            return [f.sub(x, y) for x, y in zip(first, bac)]

        run("gh-diagonal",
            iks,
            lambda I, a, pa, b, pb, c, pc: E.bracket_vec(F.elem("g", (I[1], I[0]), c), F.h(I[0], I[1], a, b))
            == F.elem("g", (I[1], I[0]), triple_arg_g(a, pa, b, pb, c, pc)))
    return rep


def _suite_lmd34(F: GeneratorFamily) -> Report:
    m, n, R = F.m, F.n, F.R
    E = F.target
    f = E.field
    rep = Report("lemma-vw-diagonal", algebra=R.name, shape=(m, n))
    basis = _basis3(R)

    def neg_if(exp, v):
        return [f.neg(c) for c in v] if exp % 2 else v

    def plus(v):
        return [f.add(x, y) for x, y in zip(v, R.bar_vec(v))]

    def run(name, idx_tuples, check):
        witness = None
        for idxs in idx_tuples:
            for q, a, pa in basis:
                for r, b, pb in basis:
                    if not check(idxs, a, pa, b, pb):
                        witness = (idxs, q, r)
                        break
                if witness:
                    break
            if witness:
                break
        rep.add(name, witness is None, witness=witness)

    ks = [(k,) for k in _rng(n)]
    run("v-diag-bar", ks,
        lambda I, a, pa, b, pb: F.v_diag(I[0], a) == F.v_diag(I[0], R.bar_vec(a)))
    run("w-diag-bar", ks,
        lambda I, a, pa, b, pb: F.w_diag(I[0], a) == F.w_diag(I[0], R.bar_vec(a)))
    run("gg-diag",
        [(k, i) for k in _rng(n) for i in _rng(m)],
        lambda I, a, pa, b, pb: E.bracket_vec(F.elem("g", (I[0], I[1]), a), F.elem("g", (I[0], I[1]), b))
        == neg_if(pb + 1, F.v_diag(I[0], R.mul_vec(a, R.bar_vec(b)))))
    run("ff-diag",
        [(i, k) for i in _rng(m) for k in _rng(n)],
        lambda I, a, pa, b, pb: E.bracket_vec(F.elem("f", (I[0], I[1]), a), F.elem("f", (I[0], I[1]), b))
        == neg_if(pa, F.w_diag(I[1], R.mul_vec(R.bar_vec(a), b))))
    run("v-diag-t",
        [(k, i, j) for k in _rng(n) for i in _rng(m) for j in _rng(m) if i != j],
        lambda I, a, pa, b, pb: vec_is_zero(f, E.bracket_vec(F.v_diag(I[0], a),
                                                             F.elem("t", (I[1], I[2]), b))))
    run("w-diag-t",
        [(k, i, j) for k in _rng(n) for i in _rng(m) for j in _rng(m) if i != j],
        lambda I, a, pa, b, pb: vec_is_zero(f, E.bracket_vec(F.w_diag(I[0], a),
                                                             F.elem("t", (I[1], I[2]), b))))
    run("uv-diag",
        [(k, l) for k in _rng(n) for l in _rng(n) if k != l],
        lambda I, a, pa, b, pb: E.bracket_vec(F.elem("u", I, a), F.elem("v", (I[1], I[0]), b))
        == F.v_diag(I[0], R.mul_vec(a, b)))
    run("wu-diag",
        [(k, l) for k in _rng(n) for l in _rng(n) if k != l],
        lambda I, a, pa, b, pb: E.bracket_vec(F.elem("w", I, a), F.elem("u", (I[1], I[0]), b))
        == F.w_diag(I[0], R.mul_vec(a, b)))
    # the delta-formulas must be read through the index symmetry
    # w_ll'(b) = w_l'l(bar b) / v_kl(a) = v_lk(bar a): both matching cases
    # contribute (they are exclusive since l != l')
    def vdiag_w_rhs(I, a, b):
        k, l, l2 = I
        if k == l2:
            return F.elem("u", (k, l), R.mul_vec(plus(a), R.bar_vec(b)))
        if k == l:
            return F.elem("u", (k, l2), R.mul_vec(plus(a), b))
        return vec_zero(f, E.dim)

    run("vdiag-w",
        [(k, l, l2) for k in _rng(n) for l in _rng(n) for l2 in _rng(n) if l != l2],
        lambda I, a, pa, b, pb: E.bracket_vec(F.v_diag(I[0], a), F.elem("w", (I[1], I[2]), b))
        == vdiag_w_rhs(I, a, b))

    # printed as u_kl; the concrete bracket lands in u_lk
    # ([v_kl(a), w_k(b)] = e_{m+l,m+k}(bar(a) b_+) - ...)
    def v_wdiag_rhs(I, a, b):
        k, l, l2 = I
        if k == l2:
            return F.elem("u", (l, k), R.mul_vec(R.bar_vec(a), plus(b)))
        if l == l2:
            return F.elem("u", (k, l), R.mul_vec(a, plus(b)))
        return vec_zero(f, E.dim)

    run("v-wdiag",
        [(k, l, l2) for k in _rng(n) for l in _rng(n) if k != l for l2 in _rng(n)],
        lambda I, a, pa, b, pb: E.bracket_vec(F.elem("v", (I[0], I[1]), a), F.w_diag(I[2], b))
        == v_wdiag_rhs(I, a, b))
    run("vdiag-f",
        [(k, i, l) for k in _rng(n) for i in _rng(m) for l in _rng(n)],
        lambda I, a, pa, b, pb: E.bracket_vec(F.v_diag(I[0], a), F.elem("f", (I[1], I[2]), b))
        == (neg_if(pb, F.elem("g", (I[0], I[1]), R.mul_vec(plus(a), R.bar_vec(b))))
            if I[0] == I[2] else vec_zero(f, E.dim)))
    run("vdiag-g",
        [(k, l, i) for k in _rng(n) for l in _rng(n) for i in _rng(m)],
        lambda I, a, pa, b, pb: vec_is_zero(f, E.bracket_vec(F.v_diag(I[0], a),
                                                             F.elem("g", (I[1], I[2]), b))))
    run("wdiag-f",
        [(k, i, l) for k in _rng(n) for i in _rng(m) for l in _rng(n)],
        lambda I, a, pa, b, pb: vec_is_zero(f, E.bracket_vec(F.w_diag(I[0], a),
                                                             F.elem("f", (I[1], I[2]), b))))
    run("g-wdiag",
        [(l, i, k) for l in _rng(n) for i in _rng(m) for k in _rng(n)],
        lambda I, a, pa, b, pb: E.bracket_vec(F.elem("g", (I[0], I[1]), a), F.w_diag(I[2], b))
        == (neg_if(pa + 1, F.elem("f", (I[1], I[0]), R.mul_vec(R.bar_vec(a), plus(b))))
            if I[0] == I[2] else vec_zero(f, E.dim)))
    return rep


def _suite_lmd_kp(F: GeneratorFamily) -> Report:
    m, n, R = F.m, F.n, F.R
    E = F.target
    f = E.field
    rep = Report("lemma-h-transfer", algebra=R.name, shape=(m, n))
    basis = _basis3(R)

    def neg_if(exp, v):
        return [f.neg(c) for c in v] if exp % 2 else v

    def run(name, idx_tuples, check):
        witness = None
        for idxs in idx_tuples:
            for q, a, pa in basis:
                for r, b, pb in basis:
                    if not check(idxs, a, pa, b, pb):
                        witness = (idxs, q, r)
                        break
                if witness:
                    break
            if witness:
                break
        rep.add(name, witness is None, witness=witness)

    def sub(x, y):
        return [f.sub(u, v) for u, v in zip(x, y)]

    def add(x, y):
        return [f.add(u, v) for u, v in zip(x, y)]

    # printed with an undeclared sign (-1)^{|r||s|}; tested as (-1)^{|a||b|}
    run("tt-h",
        [(i, j, k) for i in _rng(m) for j in _rng(m) if i != j for k in _rng(n)],
        lambda I, a, pa, b, pb: E.bracket_vec(F.elem("t", (I[0], I[1]), a), F.elem("t", (I[1], I[0]), b))
        == sub(F.h(I[0], I[2], a, b),
               neg_if(pa * pb, F.h(I[1], I[2], R.unit, R.mul_vec(b, a)))))
    run("uu-h",
        [(i, k, l) for i in _rng(m) for k in _rng(n) for l in _rng(n) if k != l],
        lambda I, a, pa, b, pb: E.bracket_vec(F.elem("u", (I[1], I[2]), a), F.elem("u", (I[2], I[1]), b))
        == neg_if(pa + pb + 1, sub(F.h(I[0], I[2], a, b),
                                   F.h(I[0], I[1], R.unit, R.mul_vec(a, b)))))
    # printed with a plus sign and bar(ab); the unique reading consistent
    # with the model across commutative, Grassmann and matrix coefficients
    # is the minus sign with bar(ba) (its diagonal sibling below is then
    # exactly the a -> a_+ specialization)
    run("vw-h",
        [(i, k, l) for i in _rng(m) for k in _rng(n) for l in _rng(n) if k != l],
        lambda I, a, pa, b, pb: E.bracket_vec(F.elem("v", (I[1], I[2]), a), F.elem("w", (I[2], I[1]), b))
        == neg_if((1 + pa) * (1 + pb) + 1,
                  add(F.h(I[0], I[1], b, a),
                      F.h(I[0], I[2], R.unit, R.bar_vec(R.mul_vec(b, a))))))
    # printed with a bare "bar a"; since v_k(a) = v_k(bar a) the left side
    # only depends on a + bar(a), and the identity indeed holds with a
    # replaced by a_+ (tested across commutative, Grassmann and matrix
    # coefficients) -- the natural correction of the printed line
    def aplus(v):
        return [f.add(x, y) for x, y in zip(v, R.bar_vec(v))]

    run("vw-diag-h",
        [(i, k, l) for i in _rng(m) for k in _rng(n) for l in _rng(n)],
        lambda I, a, pa, b, pb: E.bracket_vec(F.v_diag(I[1], a), F.w_diag(I[2], b))
        == (neg_if((pa + 1) * (pb + 1) + 1,
                   add(F.h(I[0], I[1], b, aplus(a)),
                       F.h(I[0], I[1], R.unit, R.bar_vec(R.mul_vec(b, aplus(a))))))
            if I[1] == I[2] else vec_zero(f, E.dim)))
    return rep


def _suite_h_rln(F: GeneratorFamily) -> Report:
    R = F.R
    E = F.target
    f = E.field
    rep = Report("lemma-lambda", algebra=R.name, shape=(F.m, F.n))
    basis = _basis3(R)

    witness = None
    for q, a, pa in basis:
        if any(F.lam(a, pa, R.unit, 0)) or any(F.lam(R.unit, 0, a, pa)):
            witness = (q,)
            break
    rep.add("lambda-unit", witness is None, witness=witness)

    witness = None
    for q, a, pa in basis:
        for r, b, pb in basis:
            if F.lam(a, pa, b, pb) != F.lam(R.bar_vec(a), pa, R.bar_vec(b), pb):
                witness = (q, r)
                break
        if witness:
            break
    rep.add("lambda-bar", witness is None, witness=witness)

    witness = None
    for q, a, pa in basis:
        for r, b, pb in basis:
            lhs = F.lam(a, pa, b, pb)
            rhs = F.lam(b, pb, a, pa)
            if (pa * pb) % 2 == 0:
                rhs = [f.neg(c) for c in rhs]
            if lhs != rhs:
                witness = (q, r)
                break
        if witness:
            break
    rep.add("lambda-skew", witness is None, witness=witness)

    witness = None
    for q, a, pa in basis:
        for r, b, pb in basis:
            for s, c, pc in basis:
                acc = vec_zero(f, E.dim)
                for (x, px, y, py, z, pz) in ((a, pa, b, pb, c, pc),
                                              (b, pb, c, pc, a, pa),
                                              (c, pc, a, pa, b, pb)):
                    term = F.lam(R.mul_vec(x, y), (px + py) % 2, z, pz)
                    if (px * pz) % 2:
                        term = [f.neg(v) for v in term]
                    acc = [f.add(u, v) for u, v in zip(acc, term)]
                if any(not f.is_zero(v) for v in acc):
                    witness = (q, r, s)
                    break
            if witness:
                break
        if witness:
            break
    rep.add("lambda-cyclic", witness is None, witness=witness)
    return rep


def _jvec(F, x, px, y, py, z, pz):
    """J(x,y,z) = cyclic signed sum of lambda(xy, z)."""
    R, E, f = F.R, F.target, F.target.field
    acc = vec_zero(f, E.dim)
    for (a, pa, b, pb, c, pc) in ((x, px, y, py, z, pz),
                                  (y, py, z, pz, x, px),
                                  (z, pz, x, px, y, py)):
        term = F.lam(R.mul_vec(a, b), (pa + pb) % 2, c, pc)
        if (pa * pc) % 2:
            term = [f.neg(v) for v in term]
        acc = [f.add(u, v) for u, v in zip(acc, term)]
    return acc


def _suite_hatosp12(F: GeneratorFamily) -> Report:
    """lambda/J identities in the rank-(1,1) model (family with f, g)."""
    R = F.R
    E = F.target
    f = E.field
    rep = Report("lemma-osp12-lambda", algebra=R.name, shape=(1, 1))
    rep.extend(_suite_h_rln(F))
    basis = _basis3(R)

    witness = None
    for q, a, pa in basis:
        for r, b, pb in basis:
            for s, c, pc in basis:
                lhs = _jvec(F, b, pb, a, pa, c, pc)
                cm = [f.sub(x, y) for x, y in zip(c, R.bar_vec(c))]
                rhs = _jvec(F, a, pa, b, pb, cm, pc)
                if (pa * pb + pb * pc + pc * pa) % 2:
                    rhs = [f.neg(v) for v in rhs]
                if lhs != rhs:
                    witness = (q, r, s)
                    break
            if witness:
                break
        if witness:
            break
    rep.add("J-twist", witness is None, witness=witness)

    witness = None
    for q, a, pa in basis:
        for r, b, pb in basis:
            for s, c, pc in basis:
                for t, d, pd in basis:
                    cd = R.commutator_vec(c, d)
                    ab = R.commutator_vec(a, b)
                    lhs = _jvec(F, a, pa, b, pb, cd, (pc + pd) % 2)
                    rhs = _jvec(F, c, pc, d, pd, ab, (pa + pb) % 2)
                    if (pa * pc + pb * pd) % 2 == 0:
                        rhs = [f.neg(v) for v in rhs]
                    if lhs != rhs:
                        witness = (q, r, s, t)
                        break
                if witness:
                    break
            if witness:
                break
        if witness:
            break
    rep.add("J-bracket-swap", witness is None, witness=witness)

    # J on commutator triples; J is trilinear over homogeneous arguments
    from .homology import _commutator_basis

    comm = _commutator_basis(R)
    witness = None
    for ii, (x, px) in enumerate(comm):
        for jj, (y, py) in enumerate(comm):
            for kk, (z, pz) in enumerate(comm):
                if any(_jvec(F, x, px, y, py, z, pz)):
                    witness = (ii, jj, kk)
                    break
            if witness:
                break
        if witness:
            break
    rep.add("J-commutators-vanish", witness is None, witness=witness)

    three = f.coerce(3)
    witness = None
    for q, a, pa in basis:
        for r, b, pb in basis:
            for s, c, pc in basis:
                v = _jvec(F, a, pa, b, pb, c, pc)
                if any(not f.is_zero(f.mul(three, u)) for u in v):
                    witness = (q, r, s)
                    break
            if witness:
                break
        if witness:
            break
    rep.add("3J-vanishes", witness is None, witness=witness)
    return rep


# -- the direct-sum decomposition of the model ---------------------------------


def tridec_check(sto) -> Report:
    """sto = span(h) (+) span(t,u,v,w,v_k,w_k,f,g): dimensions, direct sum,
    bracket stability, diagonal projection, injectivity off the diagonal."""
    F = sto_lift_family_for(sto)
    m, n, R = F.m, F.n, F.R
    E = F.target
    f = E.field
    rep = Report("triangular-decomposition", algebra=R.name, shape=(m, n))

    h_vecs = []
    for i in _rng(m):
        for k in _rng(n):
            for q in range(R.dim):
                for r in range(R.dim):
                    h_vecs.append(F.h(i, k, R.basis_vec(q), R.basis_vec(r)))
    off_vecs = []
    for q in range(R.dim):
        a = R.basis_vec(q)
        for i in _rng(m):
            for j in _rng(m):
                if i != j:
                    off_vecs.append(F.elem("t", (i, j), a))
        for k in _rng(n):
            for l in _rng(n):
                if k != l:
                    for kind in ("u", "v", "w"):
                        off_vecs.append(F.elem(kind, (k, l), a))
            off_vecs.append(F.v_diag(k, a))
            off_vecs.append(F.w_diag(k, a))
        for i in _rng(m):
            for k in _rng(n):
                off_vecs.append(F.elem("f", (i, k), a))
                off_vecs.append(F.elem("g", (k, i), a))

    h_ech = Echelon(f, E.dim)
    for v in h_vecs:
        h_ech.add(v)
    off_ech = Echelon(f, E.dim)
    for v in off_vecs:
        off_ech.add(v)
    both = Echelon(f, E.dim)
    for v in h_ech.basis() + off_ech.basis():
        both.add(v)
    model_dim = sto.model.dim
    rep.add("dimensions-sum", h_ech.rank + off_ech.rank == model_dim,
            dims={"h": h_ech.rank, "off": off_ech.rank, "model": model_dim})
    rep.add("direct-sum", both.rank == h_ech.rank + off_ech.rank)

    witness = None
    for hv in h_ech.basis():
        for ov in off_ech.basis():
            br = E.bracket_vec(hv, ov)
            if not vec_is_zero(f, br) and not off_ech.contains(br):
                witness = True
                break
        if witness:
            break
    rep.add("h-preserves-off-part", witness is None)

    # projection of the h-span lands in diagonal matrices of osp
    L = sto.A.osp
    witness = None
    for hv in h_ech.basis():
        X = L.from_coords(sto.ext.lpart(hv))
        if any(i != j for (i, j) in X.entries):
            witness = True
            break
    rep.add("h-projects-diagonally", witness is None)

    # the projection is injective on the off-diagonal span
    proj = Echelon(f, L.dim)
    rank_in = 0
    for ov in off_ech.basis():
        if proj.add(sto.ext.lpart(ov)):
            rank_in += 1
    rep.add("projection-injective-off-part", rank_in == off_ech.rank,
            dims={"off": off_ech.rank, "projected": rank_in})
    return rep


def sto_lift_family_for(sto) -> GeneratorFamily:
    return sto_lift_family(sto)
