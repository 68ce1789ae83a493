# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled row-reduction kernels.

Same observable behaviour as ``_pure``; rows whose entries fit in int64
are combined in C (the common case by far), with exact pre-checked
bounds and a transparent hand-off to Python big-int arithmetic when a
combination could overflow.
"""

import array as _array
from math import gcd as _pygcd

from cpython.array cimport array, clone

BACKEND_NAME = "compiled"

cdef array _LL = _array.array("q", [])

# |b|*max(row) + |a|*max(other) below this bound cannot overflow int64.
_LIMIT = 1 << 62
cdef long long LIMIT_LL = (<long long> 1) << 62


cdef inline long long ll_abs(long long x):
    return -x if x < 0 else x


cdef long long ll_gcd(long long a, long long b):
    cdef long long t
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef long long content_ll(long long[::1] v, Py_ssize_t n):
    cdef long long g = 0
    cdef Py_ssize_t i
    for i in range(n):
        if v[i] != 0:
            g = ll_gcd(g, v[i])
            if g == 1:
                return 1
    return g


def _content_py(row):
    g = 0
    for x in row:
        if x:
            g = _pygcd(g, x)
            if g == 1:
                return 1
    return g


def _primitive_py(row, piv):
    g = _content_py(row)
    if row[piv] < 0:
        g = -g
    if g != 1:
        row = [x // g for x in row]
    return row


cdef class QSpan:
    """See _pure.QSpan.  Rows are array('q') when small, list[int] when big."""

    cdef public Py_ssize_t ncols
    cdef public bint rref
    cdef public list pivots
    cdef public list rows
    cdef list _max

    def __init__(self, ncols, rref=False):
        self.ncols = ncols
        self.rref = bool(rref)
        self.pivots = []
        self.rows = []
        self._max = []

    @property
    def rank(self):
        return len(self.pivots)

    def insert(self, row):
        cdef Py_ssize_t n = self.ncols, i, idx, p, piv
        cdef array w = None
        cdef long long[::1] wv = None
        cdef long long[::1] rv
        cdef long long maxw = 0, a_ll, b_ll, x, g_ll
        big = None

        mx = 0
        for v in row:
            av = -v if v < 0 else v
            if av > mx:
                mx = av
        if mx < _LIMIT:
            w = clone(_LL, n, False)
            wv = w
            for i in range(n):
                wv[i] = row[i]
            maxw = mx
        else:
            big = list(row)

        pivots = self.pivots
        rows = self.rows
        maxs = self._max
        for idx in range(len(pivots)):
            p = <Py_ssize_t> pivots[idx]
            if big is None:
                if wv[p] == 0:
                    continue
            elif big[p] == 0:
                continue
            r = rows[idx]
            if big is None and type(r) is array:
                rv = r
                a_ll = wv[p]
                b_ll = rv[p]
                bound = abs(<object> b_ll) * (<object> maxw) + abs(<object> a_ll) * maxs[idx]
                if bound >= _LIMIT:
                    g_ll = content_ll(wv, n)
                    if g_ll > 1:
                        maxw = 0
                        for i in range(n):
                            wv[i] //= g_ll
                            x = ll_abs(wv[i])
                            if x > maxw:
                                maxw = x
                        a_ll = wv[p]
                        bound = abs(<object> b_ll) * (<object> maxw) + abs(<object> a_ll) * maxs[idx]
                if bound < _LIMIT:
                    maxw = 0
                    for i in range(n):
                        x = b_ll * wv[i] - a_ll * rv[i]
                        wv[i] = x
                        x = ll_abs(x)
                        if x > maxw:
                            maxw = x
                    continue
            # big-int path
            if big is None:
                big = [wv[i] for i in range(n)]
                w = None
                wv = None
            rl = r if type(r) is list else list(r)
            aa = big[p]
            bb = rl[p]
            big = [bb * u - aa * v for u, v in zip(big, rl)]
            g = _content_py(big)
            if g > 1:
                big = [u // g for u in big]

        # locate pivot, normalize, store
        if big is None:
            piv = -1
            for i in range(n):
                if wv[i] != 0:
                    piv = i
                    break
            if piv < 0:
                return False
            g_ll = content_ll(wv, n)
            if wv[piv] < 0:
                g_ll = -g_ll
            maxw = 0
            for i in range(n):
                if g_ll != 1:
                    wv[i] //= g_ll
                x = ll_abs(wv[i])
                if x > maxw:
                    maxw = x
            new_row = w
            new_max = <object> maxw
        else:
            piv = -1
            for i in range(n):
                if big[i] != 0:
                    piv = i
                    break
            if piv < 0:
                return False
            big = _primitive_py(big, piv)
            new_max = max(abs(u) for u in big)
            if new_max < _LIMIT:
                new_row = _array.array("q", big)
            else:
                new_row = big

        if self.rref:
            self._back_eliminate(new_row, piv)

        pos = 0
        while pos < len(self.pivots) and self.pivots[pos] < piv:
            pos += 1
        self.pivots.insert(pos, piv)
        self.rows.insert(pos, new_row)
        self._max.insert(pos, new_max)
        return True

    def _back_eliminate(self, new_row, Py_ssize_t piv):
        # Echelon maintenance path: plain Python big-int arithmetic is fine
        # here; the hot rank loops run with rref=False and never enter.
        nl = new_row if type(new_row) is list else list(new_row)
        b = nl[piv]
        for idx in range(len(self.rows)):
            r = self.rows[idx]
            rl = r if type(r) is list else list(r)
            a = rl[piv]
            if a:
                rl = [b * u - a * v for u, v in zip(rl, nl)]
                rl = _primitive_py(rl, self.pivots[idx])
                m = max(abs(u) for u in rl)
                if m < _LIMIT:
                    self.rows[idx] = _array.array("q", rl)
                else:
                    self.rows[idx] = rl
                self._max[idx] = m

    def residual(self, row):
        row = list(row)
        n = self.ncols
        for idx in range(len(self.pivots)):
            p = self.pivots[idx]
            a = row[p]
            if a:
                r = self.rows[idx]
                rl = r if type(r) is list else list(r)
                b = rl[p]
                row = [b * u - a * v for u, v in zip(row, rl)]
                g = _content_py(row)
                if g > 1:
                    row = [u // g for u in row]
        for i in range(n):
            if row[i]:
                return _primitive_py(row, i)
        return row

    def contains(self, row):
        return not any(self.residual(row))


cdef class FpSpan:
    """See _pure.FpSpan.  Rows are array('q'); requires p < 2**31."""

    cdef public long long p
    cdef public Py_ssize_t ncols
    cdef public bint rref
    cdef public list pivots
    cdef public list rows

    def __init__(self, p, ncols, rref=False):
        if p >= (1 << 31):
            raise ValueError("compiled FpSpan supports p < 2**31")
        self.p = p
        self.ncols = ncols
        self.rref = bool(rref)
        self.pivots = []
        self.rows = []

    @property
    def rank(self):
        return len(self.pivots)

    cdef void _reduce_c(self, long long[::1] wv):
        cdef Py_ssize_t n = self.ncols, idx, i, c
        cdef long long a, x, p = self.p
        cdef long long[::1] rv
        for idx in range(len(self.pivots)):
            c = <Py_ssize_t> self.pivots[idx]
            a = wv[c]
            if a:
                rv = <array> self.rows[idx]
                for i in range(n):
                    x = (wv[i] - a * rv[i]) % p
                    if x < 0:
                        x += p
                    wv[i] = x

    def insert(self, row):
        cdef Py_ssize_t n = self.ncols, i, piv
        cdef long long p = self.p, inv, a, x
        cdef array w = clone(_LL, n, False)
        cdef long long[::1] wv = w
        cdef long long[::1] rv
        for i in range(n):
            wv[i] = row[i] % self.p
        self._reduce_c(wv)
        piv = -1
        for i in range(n):
            if wv[i]:
                piv = i
                break
        if piv < 0:
            return False
        inv = pow(<object> wv[piv], -1, <object> p)
        if inv != 1:
            for i in range(n):
                x = wv[i] * inv % p
                wv[i] = x
        if self.rref:
            for idx in range(len(self.rows)):
                rv = <array> self.rows[idx]
                a = rv[piv]
                if a:
                    for i in range(n):
                        x = (rv[i] - a * wv[i]) % p
                        if x < 0:
                            x += p
                        rv[i] = x
        pos = 0
        while pos < len(self.pivots) and self.pivots[pos] < piv:
            pos += 1
        self.pivots.insert(pos, piv)
        self.rows.insert(pos, w)
        return True

    def residual(self, row):
        cdef Py_ssize_t n = self.ncols, i
        cdef array w = clone(_LL, n, False)
        cdef long long[::1] wv = w
        for i in range(n):
            wv[i] = row[i] % self.p
        self._reduce_c(wv)
        return list(w)

    def contains(self, row):
        return not any(self.residual(row))
