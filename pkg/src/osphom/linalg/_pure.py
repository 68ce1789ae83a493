"""Pure-Python row-reduction kernels.

Rows are plain lists of Python ints.  Rational-field work happens on
integer rows: scaling a row by a nonzero constant changes neither the row
space nor the null space, so rows are kept primitive (content 1, pivot
positive) and combined fraction-free.  Prime-field rows keep entries
reduced into [0, p).

The compiled backend in ``_speedups.pyx`` implements the same two classes
with the same observable behaviour; ``osphom.linalg`` picks whichever is
importable.
"""

from math import gcd

BACKEND_NAME = "pure"


def _content(row):
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                return 1
    return g


def _make_primitive(row, piv):
    """Divide out the content and make row[piv] positive. In place."""
    g = _content(row)
    if row[piv] < 0:
        g = -g
    if g != 1:
        for i in range(len(row)):
            row[i] //= g
    return row


class QSpan:
    """Incremental row space over Q, held as primitive integer rows.

    With ``rref=True`` every inserted pivot column is also eliminated from
    the previously stored rows, so the stored rows are a (scaled) reduced
    row echelon basis; rank-only callers skip that extra work.
    """

    def __init__(self, ncols, rref=False):
        self.ncols = ncols
        self.rref = rref
        self.pivots = []
        self.rows = []

    @property
    def rank(self):
        return len(self.rows)

    _BIG = 1 << 64

    def _reduce(self, row):
        # Fraction-free combines can grow entries fast; dividing out the
        # content whenever they get large keeps the arithmetic cheap.
        pivots = self.pivots
        rows = self.rows
        n = self.ncols
        for idx in range(len(pivots)):
            p = pivots[idx]
            a = row[p]
            if a:
                r = rows[idx]
                b = r[p]
                mx = 0
                for i in range(n):
                    x = b * row[i] - a * r[i]
                    row[i] = x
                    if x < 0:
                        x = -x
                    if x > mx:
                        mx = x
                if mx > self._BIG:
                    g = _content(row)
                    if g > 1:
                        for i in range(n):
                            row[i] //= g
        return row

    def insert(self, row):
        """Reduce ``row`` (a list of ints; consumed) and add it if independent."""
        row = self._reduce(list(row))
        piv = -1
        for i, x in enumerate(row):
            if x:
                piv = i
                break
        if piv < 0:
            return False
        _make_primitive(row, piv)
        if self.rref:
            for idx in range(len(self.rows)):
                r = self.rows[idx]
                a = r[piv]
                if a:
                    b = row[piv]
                    for i in range(self.ncols):
                        r[i] = b * r[i] - a * row[i]
                    _make_primitive(r, self.pivots[idx])
        pos = 0
        while pos < len(self.pivots) and self.pivots[pos] < piv:
            pos += 1
        self.pivots.insert(pos, piv)
        self.rows.insert(pos, row)
        return True

    def residual(self, row):
        """Fully reduced copy of ``row`` (kept primitive); not inserted."""
        row = self._reduce(list(row))
        for i, x in enumerate(row):
            if x:
                return _make_primitive(row, i)
        return row

    def contains(self, row):
        return not any(self._reduce(list(row)))


class FpSpan:
    """Incremental row space over F_p; rows have unit pivots."""

    def __init__(self, p, ncols, rref=False):
        self.p = p
        self.ncols = ncols
        self.rref = rref
        self.pivots = []
        self.rows = []

    @property
    def rank(self):
        return len(self.rows)

    def _reduce(self, row):
        p = self.p
        for idx in range(len(self.pivots)):
            c = self.pivots[idx]
            a = row[c]
            if a:
                r = self.rows[idx]
                for i in range(self.ncols):
                    row[i] = (row[i] - a * r[i]) % p
        return row

    def insert(self, row):
        p = self.p
        row = self._reduce([x % p for x in row])
        piv = -1
        for i, x in enumerate(row):
            if x:
                piv = i
                break
        if piv < 0:
            return False
        inv = pow(row[piv], -1, p)
        if inv != 1:
            for i in range(self.ncols):
                row[i] = row[i] * inv % p
        if self.rref:
            for idx in range(len(self.rows)):
                r = self.rows[idx]
                a = r[piv]
                if a:
                    for i in range(self.ncols):
                        r[i] = (r[i] - a * row[i]) % p
        pos = 0
        while pos < len(self.pivots) and self.pivots[pos] < piv:
            pos += 1
        self.pivots.insert(pos, piv)
        self.rows.insert(pos, row)
        return True

    def residual(self, row):
        return self._reduce([x % self.p for x in row])

    def contains(self, row):
        return not any(self.residual(row))
