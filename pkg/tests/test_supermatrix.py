"""Matrix superalgebra: grading, the osp involution, brackets, flattening."""

import random

import pytest

from conftest import algebra
from osphom.errors import InvalidInput, MixedShapes
from osphom.linalg import FieldSpec
from osphom.supermatrix import (
    MatrixShape,
    SuperMatrix,
    matrix_unit,
    osp_involution,
    supercommutator,
    unflatten,
)

Q = FieldSpec.Q()


def m12(R=None):
    return MatrixShape(1, 1), R or algebra("ground_field_id")


def test_shape_validation():
    with pytest.raises(InvalidInput):
        MatrixShape(0, 0)
    with pytest.raises(InvalidInput):
        MatrixShape(-1, 1)
    assert MatrixShape(2, 0).size == 2


def test_matrix_unit_degrees():
    sh, R = m12()
    one = R.element([1])
    assert matrix_unit(sh, R, 1, 1, one).degree() == 0
    assert matrix_unit(sh, R, 1, 2, one).degree() == 1  # |1|=0, |2|=1
    G = algebra("grassmann_id")
    xi = G.element(G.basis_vec(1))
    assert matrix_unit(sh, G, 2, 3, xi).degree() == (1 + 1 + 1) % 2
    with pytest.raises(InvalidInput):
        matrix_unit(sh, R, 0, 1, one)
    with pytest.raises(InvalidInput):
        matrix_unit(sh, R, 1, 4, one)


def test_osp_involution_examples():
    sh, R = m12()
    one = R.element([1])
    e23 = matrix_unit(sh, R, 2, 3, one)
    assert osp_involution(e23) == -e23
    e11 = matrix_unit(sh, R, 1, 1, one)
    assert osp_involution(e11) == e11
    # with a nontrivial involution the (1,1) entry picks up a bar
    M = algebra("matrix_prp", "Q", (1,))
    sh2 = MatrixShape(1, 1)
    a = M.element(M.basis_vec(1))
    img = osp_involution(matrix_unit(sh2, M, 1, 1, a))
    assert img.entries == {(0, 0): M.bar_vec(M.basis_vec(1))}


def _random_matrix(rng, sh, R):
    entries = {}
    for i in range(sh.size):
        for j in range(sh.size):
            coords = [Q.coerce(rng.randint(-3, 3)) for _ in range(R.dim)]
            entries[(i, j)] = coords
    return SuperMatrix(sh, R, entries)


def test_involution_squares_to_identity():
    rng = random.Random(0)
    for name, params, mn in [("ground_field_id", (), (1, 1)),
                             ("matrix_prp", (1,), (2, 1)),
                             ("s_plus_sop", (), (1, 2))]:
        R = algebra(name, "Q", params)
        sh = MatrixShape(*mn)
        for _ in range(20):
            X = _random_matrix(rng, sh, R)
            assert osp_involution(osp_involution(X)) == X


def test_involution_is_super_antiautomorphism():
    rng = random.Random(1)
    R = algebra("matrix_prp", "Q", (1,))
    sh = MatrixShape(1, 1)
    for _ in range(25):
        X = _random_matrix(rng, sh, R)
        Y = _random_matrix(rng, sh, R)
        for dx in (0, 1):
            for dy in (0, 1):
                Xd, Yd = X.component(dx), Y.component(dy)
                lhs = osp_involution(Xd.matmul(Yd))
                rhs = osp_involution(Yd).matmul(osp_involution(Xd))
                if dx * dy:
                    rhs = -rhs
                assert lhs == rhs


def test_supercommutator_examples():
    sh, R = m12()
    one = R.element([1])
    e12 = matrix_unit(sh, R, 1, 2, one)
    e21 = matrix_unit(sh, R, 2, 1, one)
    e11 = matrix_unit(sh, R, 1, 1, one)
    e22 = matrix_unit(sh, R, 2, 2, one)
    # both odd: anticommutator
    assert supercommutator(e12, e21) == e11 + e22
    assert supercommutator(e11, e22).is_zero()
    X = e11 + e22  # even
    assert supercommutator(X, X).is_zero()


def test_supercommutator_shape_mismatch():
    sh, R = m12()
    other = MatrixShape(2, 1)
    with pytest.raises(MixedShapes):
        supercommutator(matrix_unit(sh, R, 1, 1, R.element([1])),
                        matrix_unit(other, R, 1, 1, R.element([1])))


def test_degree_bookkeeping_brackets():
    rng = random.Random(2)
    R = algebra("grassmann_id")
    sh = MatrixShape(1, 1)
    for _ in range(10):
        X = _random_matrix(rng, sh, R).component(0)
        Y = _random_matrix(rng, sh, R).component(1)
        br = supercommutator(X, Y)
        assert br.degree() in (1, 0) and (br.is_zero() or br.degree() == 1)


def test_flatten_round_trip_and_linearity():
    rng = random.Random(3)
    R = algebra("dual_numbers_id")
    sh = MatrixShape(2, 1)
    zero = SuperMatrix(sh, R)
    assert all(c == 0 for c in zero.flatten())
    for _ in range(10):
        X = _random_matrix(rng, sh, R)
        Y = _random_matrix(rng, sh, R)
        assert unflatten(sh, R, X.flatten()) == X
        lhs = [a + b for a, b in zip(X.flatten(), Y.flatten())]
        assert lhs == (X + Y).flatten()
    with pytest.raises(InvalidInput):
        unflatten(sh, R, [0] * 5)


def test_rho_entrywise_is_involutive():
    R = algebra("grassmann_id")
    sh = MatrixShape(1, 1)
    rng = random.Random(4)
    for _ in range(10):
        X = _random_matrix(rng, sh, R)
        twice = SuperMatrix(sh, R, {k: R.rho_vec(R.rho_vec(v)) for k, v in X.entries.items()})
        assert twice == X
