"""Exact dense linear algebra over Q and odd prime fields.

Everything upstream (superalgebras, Lie superalgebras, homology functors,
the Chevalley-Eilenberg oracle) reduces to the primitives here: rank,
null space, linear solve, and an incremental row-echelon structure used
for span closures, membership tests and quotient constructions.

Arithmetic is exact.  Over Q, rows are rescaled to primitive integer
vectors (this changes neither row spaces, null spaces nor solution sets)
and eliminated fraction-free; over F_p everything is machine arithmetic
mod p.  The inner loops live in a backend module: the compiled
``_speedups`` extension when built, else the pure-Python ``_pure``
mirror.  Set ``OSPHOM_PURE=1`` to force the fallback.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from ..errors import InvalidInput

from . import _pure

if os.environ.get("OSPHOM_PURE") == "1":
    _impl = _pure
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = _pure

BACKEND = _impl.BACKEND_NAME


def backend_name() -> str:
    return BACKEND


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Q (characteristic 0) or F_p for an odd prime p.

    Characteristic 2 is rejected: 2 must be invertible everywhere (the
    plus/minus eigenspace splitting of an involution needs 1/2).
    Elements are ``Fraction`` over Q and ints in [0, p) over F_p.
    """

    kind: str  # "Q" | "Fp"
    p: int = 0

    def __post_init__(self):
        if self.kind == "Q":
            if self.p != 0:
                raise InvalidInput("rational field carries no characteristic")
        elif self.kind == "Fp":
            if not _is_prime(self.p) or self.p == 2:
                raise InvalidInput(f"characteristic must be an odd prime, got {self.p}")
        else:
            raise InvalidInput(f"unknown field kind {self.kind!r}")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def Q() -> "FieldSpec":
        return FieldSpec("Q")

    @staticmethod
    def Fp(p: int) -> "FieldSpec":
        return FieldSpec("Fp", p)

    @staticmethod
    def parse_token(tok: str) -> "FieldSpec":
        """Parse "Q" or "F<p>" (e.g. "F3")."""
        if tok == "Q":
            return FieldSpec.Q()
        if tok.startswith("F") and tok[1:].isdigit():
            return FieldSpec.Fp(int(tok[1:]))
        raise InvalidInput(f"cannot parse field token {tok!r}")

    def token(self) -> str:
        return "Q" if self.kind == "Q" else f"F{self.p}"

    # -- element arithmetic ------------------------------------------------

    @property
    def characteristic(self) -> int:
        return self.p

    def coerce(self, x):
        if self.kind == "Q":
            return Fraction(x)
        return int(x) % self.p

    def zero(self):
        return Fraction(0) if self.kind == "Q" else 0

    def one(self):
        return Fraction(1) if self.kind == "Q" else 1

    def add(self, a, b):
        return a + b if self.kind == "Q" else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.kind == "Q" else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.kind == "Q" else (a * b) % self.p

    def neg(self, a):
        return -a if self.kind == "Q" else (-a) % self.p

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a) if self.kind == "Q" else pow(a, -1, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a == 0

    def parse(self, s: str):
        """Parse a "num/den" (or bare "num") coefficient string."""
        s = s.strip()
        if "/" in s:
            num, den = s.split("/")
            q = Fraction(int(num), int(den))
        else:
            q = Fraction(int(s))
        if self.kind == "Q":
            return q
        return q.numerator % self.p * pow(q.denominator % self.p, -1, self.p) % self.p

    def fmt(self, a) -> str:
        if self.kind == "Q":
            f = Fraction(a)
            return f"{f.numerator}/{f.denominator}"
        return f"{int(a)}/1"

    def check_element(self, a) -> bool:
        if self.kind == "Q":
            return isinstance(a, (Fraction, int))
        return isinstance(a, int) and 0 <= a < self.p


# -- vectors ---------------------------------------------------------------


def vec_zero(field, n):
    return [field.zero()] * n


def vec_add(field, u, v):
    return [field.add(a, b) for a, b in zip(u, v)]


def vec_sub(field, u, v):
    return [field.sub(a, b) for a, b in zip(u, v)]


def vec_scale(field, c, v):
    return [field.mul(c, a) for a in v]


def vec_is_zero(field, v):
    return all(field.is_zero(a) for a in v)


def _int_row(field, vec):
    """Rescale a field vector to an equivalent integer row."""
    if field.kind == "Fp":
        return [int(x) % field.p for x in vec]
    den = 1
    for x in vec:
        f = Fraction(x)
        if f.denominator != 1:
            den = lcm(den, f.denominator)
    out = []
    for x in vec:
        f = Fraction(x)
        out.append(f.numerator * (den // f.denominator))
    return out


def make_span(field, ncols, rref=False):
    """Backend span over the given field (integer-row interface)."""
    if field.kind == "Q":
        return _impl.QSpan(ncols, rref=rref)
    return _impl.FpSpan(field.p, ncols, rref=rref)


# -- matrices --------------------------------------------------------------


class ExactMatrix:
    """Dense matrix over one FieldSpec; entries validated at construction."""

    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, field: FieldSpec, rows):
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != ncols:
                raise InvalidInput("ragged matrix")
            for x in r:
                if not field.check_element(x):
                    raise InvalidInput(f"entry {x!r} does not belong to {field.token()}")
        self.field = field
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols

    def column(self, j):
        return [r[j] for r in self.rows]

    def mat_vec(self, v):
        if len(v) != self.ncols:
            raise InvalidInput("dimension mismatch")
        f = self.field
        out = []
        for r in self.rows:
            s = f.zero()
            for a, x in zip(r, v):
                s = f.add(s, f.mul(a, x))
            out.append(s)
        return out


def rank(M: ExactMatrix) -> int:
    span = make_span(M.field, M.ncols)
    for r in M.rows:
        span.insert(_int_row(M.field, r))
    return span.rank


def _rref_int(M: ExactMatrix):
    span = make_span(M.field, M.ncols, rref=True)
    for r in M.rows:
        span.insert(_int_row(M.field, r))
    return span


def kernel_basis(M: ExactMatrix):
    """Exact basis of the right null space: len = ncols - rank(M)."""
    f = M.field
    span = _rref_int(M)
    pivots = list(span.pivots)
    pivset = set(pivots)
    rows = [list(r) for r in span.rows]
    basis = []
    for free in range(M.ncols):
        if free in pivset:
            continue
        v = vec_zero(f, M.ncols)
        v[free] = f.one()
        for p, r in zip(pivots, rows):
            # row: r[p]*x_p + r[free]*x_free (+ other free cols) = 0
            if r[free]:
                v[p] = f.neg(f.div(f.coerce(r[free]), f.coerce(r[p])))
        basis.append(v)
    return basis


def solve(M: ExactMatrix, b):
    """Some x with Mx = b, else None.  Exact; raises on dimension mismatch."""
    if len(b) != M.nrows:
        raise InvalidInput("dimension mismatch between matrix and rhs")
    f = M.field
    n = M.ncols
    aug = ExactMatrix(f, [list(r) + [f.coerce(x)] for r, x in zip(M.rows, b)])
    span = _rref_int(aug)
    x = vec_zero(f, n)
    for p, r in zip(span.pivots, span.rows):
        if p == n:
            return None  # 0 = nonzero
        x[p] = f.div(f.coerce(r[n]), f.coerce(r[p]))
    return x


class Echelon:
    """Incremental reduced row-echelon basis of a growing span.

    Supports rank queries, membership, residual (normal form mod the
    span), and coordinates with respect to the normalized basis (pivot
    entries 1).  The workhorse behind span closures and quotients.
    """

    def __init__(self, field: FieldSpec, ncols: int):
        self.field = field
        self.ncols = ncols
        self._span = make_span(field, ncols, rref=True)
        self._norm = None

    @property
    def rank(self):
        return self._span.rank

    @property
    def pivots(self):
        return list(self._span.pivots)

    def add(self, vec) -> bool:
        grew = self._span.insert(_int_row(self.field, vec))
        if grew:
            self._norm = None
        return grew

    def contains(self, vec) -> bool:
        return not any(self._span.residual(_int_row(self.field, vec)))

    def basis(self):
        """Normalized basis rows (pivot coefficient 1), echelon order."""
        if self._norm is None:
            f = self.field
            norm = []
            for p, r in zip(self._span.pivots, self._span.rows):
                inv = f.inv(f.coerce(r[p]))
                norm.append([f.mul(inv, f.coerce(x)) for x in r])
            self._norm = norm
        return self._norm

    def residual(self, vec):
        """Normal form of ``vec`` modulo the span (free coordinates kept)."""
        f = self.field
        v = [f.coerce(x) for x in vec]
        for p, row in zip(self._span.pivots, self.basis()):
            c = v[p]
            if not f.is_zero(c):
                v = [f.sub(a, f.mul(c, b)) for a, b in zip(v, row)]
        return v

    def coords(self, vec):
        """Coefficients of ``vec`` in terms of basis(), or None if outside."""
        f = self.field
        v = [f.coerce(x) for x in vec]
        out = []
        for p, row in zip(self._span.pivots, self.basis()):
            c = v[p]
            out.append(c)
            if not f.is_zero(c):
                v = [f.sub(a, f.mul(c, b)) for a, b in zip(v, row)]
        if not vec_is_zero(f, v):
            return None
        return out
