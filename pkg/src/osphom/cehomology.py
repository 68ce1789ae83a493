"""Independent low-degree homology oracle via the super Chevalley-Eilenberg
complex with trivial coefficients.

Wedge degrees <= 3 only.  The super exterior power treats odd basis vectors
polynomially: a degree-2 monomial is (i, j) with i < j, or (i, i) for odd i;
degree-3 monomials are weakly increasing triples whose repeats occur only at
odd indices.  Boundaries:

    d2(x ^ y)     = [x, y]
    d3(x ^ y ^ z) = [x,y] ^ z - (-1)^{|y||z|} [x,z] ^ y
                    + (-1)^{|x|(|y|+|z|)} [y,z] ^ x

The d3 sign convention is fixed here once; d2 o d3 = 0 is *checked* on every
degree-3 monomial (SignConventionBroken otherwise), which pins the convention
against the super Jacobi identity rather than trusting it.

H2 = ker d2 / im d3 is computed blockwise: both boundaries preserve the total
Z/2 parity of monomials (the bracket is parity-additive), so the complex is
a direct sum of its even and odd subcomplexes.  Within a block the rank loop
over d3 columns stops as soon as the rank reaches dim ker d2 of the block,
which is sound because im d3 <= ker d2 has been established first.

Everything is exact: over Q the columns are rescaled to integer vectors
(column scaling cannot change ranks) and eliminated fraction-free.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import lcm

from .errors import SignConventionBroken
from .linalg import make_span
from .liesuper import LieSuperAlgebra


class WedgeSpace:
    """Monomial basis of the degree-2 or degree-3 super exterior power."""

    def __init__(self, L: LieSuperAlgebra, degree: int):
        if degree not in (2, 3):
            raise ValueError("only wedge degrees 2 and 3 are built")
        self.L = L
        self.degree = degree
        par = L.parity
        monos = []
        if degree == 2:
            for i in range(L.dim):
                for j in range(i, L.dim):
                    if i == j and par[i] == 0:
                        continue
                    monos.append((i, j))
        else:
            for i in range(L.dim):
                for j in range(i, L.dim):
                    if i == j and par[i] == 0:
                        continue
                    for k in range(j, L.dim):
                        if j == k and par[j] == 0:
                            continue
                        monos.append((i, j, k))
        self.monomials = monos
        self.index = {m: t for t, m in enumerate(monos)}
        self.parity = [sum(par[i] for i in m) % 2 for m in monos]

    @property
    def dim(self):
        return len(self.monomials)


def _pair_index(space2: WedgeSpace, par, t, u):
    """Normalize b_t ^ b_u into the monomial basis: (index, sign) or None."""
    if t == u:
        if par[t] == 0:
            return None
        return space2.index[(t, t)], 1
    if t < u:
        return space2.index[(t, u)], 1
    sign = -1 if par[t] * par[u] == 0 else 1  # swap: -(-1)^{|t||u|}
    return space2.index[(u, t)], sign


class BoundaryMaps:
    """Sparse columns of d2 and d3 over the monomial bases."""

    def __init__(self, L: LieSuperAlgebra):
        self.L = L
        self.lam2 = WedgeSpace(L, 2)
        self.lam3 = WedgeSpace(L, 3)
        f = L.field
        par = L.parity

        # d2 columns: Lambda^2 monomial -> sparse vector over L
        self.d2 = []
        for (i, j) in self.lam2.monomials:
            col = {}
            for k, c in L.bracket_basis(i, j):
                col[k] = f.add(col.get(k, f.zero()), c)
            self.d2.append({k: v for k, v in col.items() if not f.is_zero(v)})

        # d3 columns: Lambda^3 monomial -> sparse vector over Lambda^2
        self.d3 = []
        for (i, j, k) in self.lam3.monomials:
            col = {}

            def acc(bracket_pair, rest, sign_exp, col=col):
                s_outer = -1 if sign_exp % 2 else 1
                for t, c in self.L.bracket_basis(*bracket_pair):
                    hit = _pair_index(self.lam2, par, t, rest)
                    if hit is None:
                        continue
                    idx, s = hit
                    val = c if s_outer * s > 0 else f.neg(c)
                    col[idx] = f.add(col.get(idx, f.zero()), val)

            acc((i, j), k, 0)
            acc((i, k), j, par[j] * par[k] + 1)
            acc((j, k), i, par[i] * (par[j] + par[k]))
            self.d3.append({t: v for t, v in col.items() if not f.is_zero(v)})

        self._check_composite()

    def _check_composite(self):
        """d2 o d3 = 0 on every degree-3 monomial, exactly."""
        f = self.L.field
        for t, col in enumerate(self.d3):
            acc = {}
            for idx2, c in col.items():
                for k, v in self.d2[idx2].items():
                    acc[k] = f.add(acc.get(k, f.zero()), f.mul(c, v))
            if any(not f.is_zero(v) for v in acc.values()):
                raise SignConventionBroken(
                    f"d2(d3(monomial {self.lam3.monomials[t]})) != 0"
                )

    # -- ranks, blockwise by total parity ------------------------------------

    def _int_column(self, col, idxmap):
        f = self.L.field
        n = len(idxmap)
        row = [0] * n
        if f.kind == "Fp":
            for i, c in col.items():
                row[idxmap[i]] = int(c)
            return row
        den = 1
        for c in col.values():
            den = lcm(den, Fraction(c).denominator)
        for i, c in col.items():
            c = Fraction(c)
            row[idxmap[i]] = c.numerator * (den // c.denominator)
        return row

    def h1_dimension(self):
        f = self.L.field
        span = make_span(f, self.L.dim)
        for col in self.d2:
            row = [0] * self.L.dim
            if f.kind == "Fp":
                for i, c in col.items():
                    row[i] = int(c)
            else:
                den = 1
                for c in col.values():
                    den = lcm(den, Fraction(c).denominator)
                for i, c in col.items():
                    c = Fraction(c)
                    row[i] = c.numerator * (den // c.denominator)
            span.insert(row)
        return self.L.dim - span.rank

    def h2_dimension(self, shuffle_seed=0):
        f = self.L.field
        total = 0
        for parity_block in (0, 1):
            cols2 = [t for t in range(self.lam2.dim) if self.lam2.parity[t] == parity_block]
            if not cols2:
                continue
            # rank of d2 on the block: columns live in the parity block of L
            lcols = [i for i in range(self.L.dim) if self.L.parity[i] == parity_block]
            lmap = {i: a for a, i in enumerate(lcols)}
            span2 = make_span(f, len(lcols))
            for t in cols2:
                span2.insert(self._int_column(self.d2[t], lmap))
            ker2 = len(cols2) - span2.rank

            idxmap = {t: a for a, t in enumerate(cols2)}
            cols3 = [u for u in range(self.lam3.dim) if self.lam3.parity[u] == parity_block]
            order = list(cols3)
            random.Random(shuffle_seed).shuffle(order)
            span3 = make_span(f, len(cols2))
            for u in order:
                if span3.rank >= ker2:
                    break  # im d3 <= ker d2 already certified: rank is capped
                span3.insert(self._int_column(self.d3[u], idxmap))
            total += ker2 - span3.rank
        return total


def boundary_maps(L: LieSuperAlgebra) -> BoundaryMaps:
    return BoundaryMaps(L)


def h2_dimension(L: LieSuperAlgebra) -> int:
    return BoundaryMaps(L).h2_dimension()


def h1_dimension(L: LieSuperAlgebra) -> int:
    return BoundaryMaps(L).h1_dimension()
