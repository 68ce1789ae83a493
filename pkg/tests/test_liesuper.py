"""Concrete Lie superalgebras: spans, verification, subalgebras, maps."""

import pytest

from conftest import algebra, osp_algebra
from osphom.errors import NotClosed
from osphom.linalg import FieldSpec
from osphom.liesuper import (
    LieSuperAlgebra,
    LinearMap,
    center,
    check_homomorphism,
    derived_subalgebra,
    from_matrix_span,
    is_perfect,
    verify_lie,
)
from osphom.supermatrix import MatrixShape, matrix_unit
from osphom.osp import generator

Q = FieldSpec.Q()


def sl2():
    # e, h, f: [h,e] = 2e, [h,f] = -2f, [e,f] = h
    return LieSuperAlgebra("sl2", Q, [0, 0, 0],
                           {(1, 0): ((0, 2),), (1, 2): ((2, -2),), (0, 2): ((1, 1),)})


def test_hand_built_sl2_verifies():
    assert verify_lie(sl2()).ok()


def test_corrupted_table_fails_jacobi():
    bad = LieSuperAlgebra("bad", Q, [0, 0, 0],
                          {(1, 0): ((0, 2),), (1, 2): ((2, 2),), (0, 2): ((1, 1),)})
    rep = verify_lie(bad)
    names = {c.name: c for c in rep.checks}
    assert not names["super-jacobi"].passed
    assert names["super-jacobi"].witness is not None


def test_from_matrix_span_abelian_singleton():
    R = algebra("ground_field_id")
    sh = MatrixShape(2, 1)
    X = matrix_unit(sh, R, 1, 2, R.element([1])) - matrix_unit(sh, R, 2, 1, R.element([1]))
    L = from_matrix_span([X], "span1")
    assert L.dim == 1 and verify_lie(L).ok()
    assert L.bracket_basis(0, 0) == ()


def test_from_matrix_span_not_closed():
    # an odd element x with [x,x] = 2x^2 outside its own line
    A = osp_algebra(1, 1, "ground_field_id")
    f11 = generator(A, "f", (1, 1), [1])
    with pytest.raises(NotClosed):
        from_matrix_span([f11], "bad")


def test_osp_tilde_span_dimension():
    A = osp_algebra(1, 1, "ground_field_id")
    assert A.tilde.dim == 5
    assert verify_lie(A.tilde).ok()


def test_derived_and_center():
    L = sl2()
    D = derived_subalgebra(L)
    assert D.dim == 3 and is_perfect(L)
    assert center(L) == []
    abelian = LieSuperAlgebra("ab", Q, [0, 0], {})
    assert derived_subalgebra(abelian).dim == 0
    assert len(center(abelian)) == 2
    assert not is_perfect(abelian)


def test_gl2_center_is_scalars():
    R = algebra("ground_field_id")
    sh = MatrixShape(2, 0)
    units = [matrix_unit(sh, R, i, j, R.element([1])) for i in (1, 2) for j in (1, 2)]
    gl2 = from_matrix_span(units, "gl2")
    zc = center(gl2)
    assert len(zc) == 1
    X = gl2.from_coords(zc[0])
    assert X.entries[(0, 0)] == X.entries[(1, 1)] and (0, 1) not in X.entries


def test_derived_idempotent_on_perfect():
    A = osp_algebra(2, 1, "dual_numbers_id")
    D = derived_subalgebra(A.osp)
    assert D.dim == A.osp.dim


def test_center_bracket_vanishes_literally():
    L = LieSuperAlgebra("heis", Q, [0, 0, 0], {(0, 1): ((2, 1),)})
    for z in center(L):
        for i in range(L.dim):
            assert all(c == 0 for c in L.bracket_vec(z, L.basis_vec(i)))


def test_homomorphism_checks():
    L = sl2()
    ident = LinearMap(L, L, [L.basis_vec(i) for i in range(3)])
    rep = check_homomorphism(ident)
    assert rep.ok() and ident.kernel_dim() == 0 and ident.is_bijective()
    zero = LinearMap(L, L, [[0, 0, 0]] * 3)
    assert check_homomorphism(zero).ok()
    assert zero.kernel_dim() == 3
    # scaling by 2 is not a homomorphism of sl2
    twice = LinearMap(L, L, [[2 * c for c in L.basis_vec(i)] for i in range(3)])
    assert not check_homomorphism(twice).ok()


def test_even_before_odd_basis_order():
    A = osp_algebra(1, 1, "grassmann_id")
    par = A.osp.parity
    assert list(par) == sorted(par)
