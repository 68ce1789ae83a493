"""Exact linear algebra kernel: oracle-checked examples and properties."""

from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from osphom.errors import InvalidInput
from osphom.linalg import (
    Echelon,
    ExactMatrix,
    FieldSpec,
    kernel_basis,
    rank,
    solve,
)
from osphom.linalg import _pure

Q = FieldSpec.Q()
F5 = FieldSpec.Fp(5)


def test_field_spec_rejects_char_2_and_nonprimes():
    with pytest.raises(InvalidInput):
        FieldSpec.Fp(2)
    with pytest.raises(InvalidInput):
        FieldSpec.Fp(9)
    assert FieldSpec.parse_token("F7").p == 7
    with pytest.raises(InvalidInput):
        FieldSpec.parse_token("C")


def test_rank_identity_and_zero():
    assert rank(ExactMatrix(Q, [[1, 0], [0, 1]])) == 2
    assert rank(ExactMatrix(Q, [[0] * 5 for _ in range(3)])) == 0


def test_rank_hand_row_reduction():
    # [[1,2],[2,4]]: second row is twice the first
    assert rank(ExactMatrix(Q, [[1, 2], [2, 4]])) == 1


def test_kernel_identity_empty_and_zero_full():
    assert kernel_basis(ExactMatrix(Q, [[1, 0], [0, 1]])) == []
    assert len(kernel_basis(ExactMatrix(Q, [[0, 0, 0], [0, 0, 0]]))) == 3


def test_kernel_f5_against_enumeration():
    # oracle: enumerate all of F5^3 and keep the annihilated vectors
    M = ExactMatrix(F5, [[1, 1, 0]])
    brute = [v for v in product(range(5), repeat=3) if (v[0] + v[1]) % 5 == 0]
    kb = kernel_basis(M)
    assert len(kb) == 2
    for v in kb:
        assert M.mat_vec(v) == [0]
    # the computed basis spans exactly the brute-force solution set
    span = Echelon(F5, 3)
    for v in kb:
        span.add(v)
    assert all(span.contains(list(v)) for v in brute)
    assert len(brute) == 5 ** len(kb)


def test_solve_cases():
    assert solve(ExactMatrix(Q, [[1, 0], [0, 1]]), [3, 4]) == [3, 4]
    assert solve(ExactMatrix(Q, [[2]]), [1]) == [Fraction(1, 2)]
    assert solve(ExactMatrix(Q, [[0]]), [1]) is None
    with pytest.raises(InvalidInput):
        solve(ExactMatrix(Q, [[1, 2]]), [1, 2])


def test_solve_is_exact():
    M = ExactMatrix(Q, [[2, 3, 1], [0, 5, 7]])
    b = [1, 2]
    x = solve(M, b)
    assert M.mat_vec(x) == [Fraction(1), Fraction(2)]


def test_mixed_field_entries_rejected():
    with pytest.raises(InvalidInput):
        ExactMatrix(F5, [[Fraction(1, 2)]])
    with pytest.raises(InvalidInput):
        ExactMatrix(Q, [[1, 2], [3]])


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.integers(-9, 9), min_size=4, max_size=4),
                min_size=1, max_size=5),
       st.randoms(use_true_random=False))
def test_rank_plus_nullity_and_permutation_invariance(rows, rnd):
    M = ExactMatrix(Q, rows)
    r = rank(M)
    assert r + len(kernel_basis(M)) == M.ncols
    shuffled = list(rows)
    rnd.shuffle(shuffled)
    assert rank(ExactMatrix(Q, shuffled)) == r


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(st.integers(0, 4), min_size=3, max_size=3),
                min_size=1, max_size=4))
def test_fp_kernel_annihilates(rows):
    M = ExactMatrix(F5, rows)
    for v in kernel_basis(M):
        assert all(c == 0 for c in M.mat_vec(v))
    assert rank(M) + len(kernel_basis(M)) == 3


def test_echelon_coords_and_membership():
    E = Echelon(Q, 3)
    assert E.add([1, 2, 3])
    assert not E.add([2, 4, 6])
    assert E.add([0, 1, 1])
    assert E.rank == 2
    assert E.contains([1, 3, 4])
    assert not E.contains([0, 0, 1])
    coords = E.coords([1, 3, 4])
    basis = E.basis()
    rebuilt = [sum((c * b[i] for c, b in zip(coords, basis)), Fraction(0)) for i in range(3)]
    assert rebuilt == [1, 3, 4]
    assert E.coords([0, 0, 1]) is None


def test_echelon_over_fp():
    E = Echelon(F5, 4)
    E.add([2, 0, 1, 0])
    E.add([0, 3, 0, 1])
    assert E.rank == 2
    assert E.contains([4, 3, 2, 1])  # 2*(2,0,1,0) + (0,3,0,1)
    assert not E.contains([0, 0, 0, 1])


def _spans_agree(impl_a, impl_b, rows, ncols):
    sa = impl_a.QSpan(ncols)
    sb = impl_b.QSpan(ncols)
    for r in rows:
        assert sa.insert(list(r)) == sb.insert(list(r))
    assert sa.rank == sb.rank
    assert list(sa.pivots) == list(sb.pivots)


def test_backend_parity_q_and_fp():
    try:
        from osphom.linalg import _speedups
    except ImportError:
        pytest.skip("compiled backend not built")
    import random

    rng = random.Random(7)
    for _ in range(25):
        ncols = rng.randint(1, 8)
        rows = [[rng.randint(-50, 50) for _ in range(ncols)] for _ in range(rng.randint(1, 10))]
        _spans_agree(_pure, _speedups, rows, ncols)
        p = 5
        sa = _pure.FpSpan(p, ncols)
        sb = _speedups.FpSpan(p, ncols)
        for r in rows:
            assert sa.insert([x % p for x in r]) == sb.insert([x % p for x in r])
        assert [list(x) for x in sa.rows] == [list(x) for x in sb.rows]


def test_compiled_backend_bigint_fallback():
    try:
        from osphom.linalg import _speedups
    except ImportError:
        pytest.skip("compiled backend not built")
    big = 1 << 80
    s = _speedups.QSpan(3)
    assert s.insert([big, 1, 0])
    assert s.insert([0, big, 1])
    assert not s.insert([big, big + 1, 1])
    p = _pure.QSpan(3)
    for r in ([big, 1, 0], [0, big, 1], [big, big + 1, 1]):
        p.insert(list(r))
    assert s.rank == p.rank == 2
