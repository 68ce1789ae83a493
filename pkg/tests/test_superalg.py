"""Superalgebra presets, axioms, subspaces, and the central skew unit."""

from fractions import Fraction

import pytest

from conftest import algebra
from osphom.errors import InvalidInput
from osphom.linalg import FieldSpec
from osphom.superalg import (
    SuperAlgebra,
    algebra_from_config,
    algebra_to_config,
    assumption_checker,
    commutators_intersect_minus,
    parse_preset,
    preset_algebra,
    subspace,
    sum_with_opposite,
    verify_superalgebra,
)

Q = FieldSpec.Q()

ALL_PRESETS = [
    ("ground_field_id", "Q", ()),
    ("ground_field_id", "F3", ()),
    ("ground_field_id", "F5", ()),
    ("dual_numbers_id", "Q", ()),
    ("grassmann_id", "Q", ()),
    ("group_c2_id", "Q", ()),
    ("matrix_prp", "Q", (1,)),
    ("matrix_osp", "Q", (1, 2)),
    ("s_plus_sop", "Q", ()),
    ("s_plus_sop", "Q", ("dual_numbers_id",)),
    ("s_plus_sop", "Q", ("m2",)),
    ("sqrtminus1", "Q", ()),
]


@pytest.mark.parametrize("name,ft,params", ALL_PRESETS)
def test_presets_satisfy_axioms(name, ft, params):
    A = algebra(name, ft, params)
    rep = verify_superalgebra(A)
    assert rep.ok(), [c.name for c in rep.failures()]


def test_dual_numbers_axioms_against_direct_evaluation():
    # independent oracle: evaluate the axioms naively on the 2-dim table
    A = algebra("dual_numbers_id")
    one, eps = A.basis_vec(0), A.basis_vec(1)
    assert A.mul_vec(eps, eps) == A.zero_vec()
    assert A.mul_vec(one, eps) == eps
    for x in (one, eps):
        for y in (one, eps):
            lhs = A.bar_vec(A.mul_vec(x, y))
            rhs = A.mul_vec(A.bar_vec(y), A.bar_vec(x))  # both even: no sign
            assert lhs == rhs


def test_identity_fails_on_matrix_superalgebra():
    # the identity map is not a superinvolution on M_{1|1}: bar(ab) rule
    # breaks on the odd units
    M, _, _ = __import__("osphom.superalg", fromlist=["x"])._matrix_superalgebra("m11", Q, 1, 1)
    cand = SuperAlgebra("m11-id", Q, M.parity, M.mul, M.unit,
                        [[Q.one() if i == j else Q.zero() for j in range(4)] for i in range(4)])
    rep = verify_superalgebra(cand)
    names = {c.name: c.passed for c in rep.checks}
    assert not names["involution-antiautomorphism"]


def test_preset_unknown_name():
    with pytest.raises(InvalidInput):
        preset_algebra("does_not_exist", Q)


def test_matrix_presets_dims():
    assert algebra("matrix_prp", "Q", (1,)).dim == 4
    assert algebra("matrix_osp", "Q", (1, 2)).dim == 9


def test_sum_with_opposite_structure():
    S = algebra("m2")
    R = sum_with_opposite(S)
    assert R.dim == 2 * S.dim
    assert verify_superalgebra(R).ok()
    # orthogonal idempotents: (1+0)(0+1) = 0
    f = R.field
    left = [*S.unit, *([f.zero()] * S.dim)]
    right = [*([f.zero()] * S.dim), *S.unit]
    assert R.mul_vec(left, right) == R.zero_vec()
    # exchange involution swaps the summands
    assert R.bar_vec(left) == right


def test_opposite_product_reverses():
    S = algebra("m2")
    R = sum_with_opposite(S)
    f = R.field
    d = S.dim

    def emb2(v):
        return [f.zero()] * d + list(v)

    for i in range(d):
        for j in range(d):
            lhs = R.mul_vec(emb2(S.basis_vec(i)), emb2(S.basis_vec(j)))
            rhs = emb2(S.mul_vec(S.basis_vec(j), S.basis_vec(i)))  # all even: no sign
            assert lhs == rhs


def test_adjoin_sqrt_minus_one():
    R = algebra("sqrtminus1")
    assert R.dim == 2
    assert verify_superalgebra(R).ok()
    f = R.field
    i_vec = [f.zero(), f.one()]
    assert R.mul_vec(i_vec, i_vec) == [f.neg(f.one()), f.zero()]
    assert R.bar_vec(i_vec) == [f.zero(), f.neg(f.one())]


def test_subspace_dims():
    ground = algebra("ground_field_id")
    assert subspace(ground, "minus").dim == 0
    assert subspace(ground, "plus").dim == 1
    ss = algebra("s_plus_sop")
    minus = subspace(ss, "minus")
    assert minus.dim == 1
    # spanned by 1 + (-1)
    assert minus.contains([1, -1])
    m2 = algebra("s_plus_sop", "Q", ("m2",))
    assert subspace(m2, "commutators_times_R").dim == 8
    with pytest.raises(InvalidInput):
        subspace(ground, "bogus")


def test_plus_minus_split():
    for name, ft, params in ALL_PRESETS:
        A = algebra(name, ft, params)
        assert subspace(A, "plus").dim + subspace(A, "minus").dim == A.dim


def test_commutators_intersect_minus_m11():
    # M_{1|1}^prp: R_- = span{e11 - e22, e12}; [R,R] = span{e12, e21, e11 + e22}
    # (supercommutators: [e12, e21] = e11 + e22); they meet in span{e12}
    A = algebra("matrix_prp", "Q", (1,))
    assert subspace(A, "commutators").dim == 3
    assert subspace(A, "minus").dim == 2
    inter = commutators_intersect_minus(A)
    assert inter.dim == 1
    assert inter.contains([0, 1, 0, 0])  # the e12 coordinate


def test_element_helpers_and_rho():
    A = algebra("grassmann_id")
    xi = A.element(A.basis_vec(1))
    assert xi.rho().coords == [0, -1]
    assert xi.rho().rho() == xi
    a = A.element([Fraction(1), Fraction(2)])
    ap, am = a.plus(), a.minus()
    assert ap.bar() == ap
    assert am.bar() == -am
    half = Fraction(1, 2)
    assert (ap.scale(half) + am.scale(half)) == a


def test_assumption_checker_results():
    assert not assumption_checker(algebra("ground_field_id"))["holds"]
    got = assumption_checker(algebra("s_plus_sop"))
    assert got["holds"] and got["witness"] == [1, -1]
    got = assumption_checker(algebra("sqrtminus1"))
    assert got["holds"] and got["witness"] == [0, 1]
    # witness must be a genuine two-sided unit
    A = algebra("s_plus_sop", "Q", ("m2",))
    got = assumption_checker(A)
    assert got["holds"]
    e = got["witness"]
    from osphom.superalg import _solve_inverse

    x = _solve_inverse(A, e)
    assert A.mul_vec(e, x) == A.unit and A.mul_vec(x, e) == A.unit


def test_center_modes_reported():
    got = assumption_checker(algebra("matrix_prp", "Q", (1,)))
    assert set(got["center_dims"]) == {"super", "plain"}


def test_config_round_trip():
    A = algebra("matrix_prp", "Q", (1,))
    cfg = algebra_to_config(A)
    B = algebra_from_config(cfg)
    assert B.dim == A.dim and B.parity == A.parity
    assert verify_superalgebra(B).ok()
    assert B.mul == A.mul and B.invol == A.invol


def test_config_rejects_garbage():
    with pytest.raises(InvalidInput):
        algebra_from_config({"field": {"kind": "Q"}})
    with pytest.raises(InvalidInput):
        algebra_from_config({"field": {"kind": "Fp", "p": 2}, "parity": [0],
                             "unit": ["1/1"], "mul": [], "involution": None})


def test_parse_preset_tokens():
    A = parse_preset("matrix_osp:Q:1,2")
    assert A.dim == 9
    assert parse_preset("ground_field_id:F5").field.p == 5
    with pytest.raises(InvalidInput):
        parse_preset("ground_field_id")
