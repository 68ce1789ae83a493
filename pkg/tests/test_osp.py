"""osp builders, canonical generators, the trace criterion, structure checks."""

import pytest

from conftest import algebra, osp_algebra
from osphom.errors import InvalidInput, InvalidShape
from osphom.linalg import FieldSpec
from osphom.osp import (
    build_osp,
    check_section2,
    classical_dimension,
    epsilon,
    example_isomorphisms,
    generator,
    orthosymplectic_dimension_check,
    periplectic_dimension_check,
)
from osphom.superalg import commutators_intersect_minus
from osphom.supermatrix import osp_involution

Q = FieldSpec.Q()


def test_dimensions_ground_field():
    # classical count m(m-1)/2 + n(2n+1) + 2mn; R_- = 0 forces tilde = osp
    for m, n in [(1, 1), (2, 1), (1, 2), (2, 2), (3, 1)]:
        A = osp_algebra(m, n, "ground_field_id")
        assert A.osp.dim == classical_dimension(m, n)
        assert A.tilde.dim == A.osp.dim


def test_dimension_s_plus_sop_is_sl():
    # osp(1|2, S+S^op) has the dimension of sl_{1|2}(S): (1+2)^2 - 1 = 8
    A = osp_algebra(1, 1, "s_plus_sop")
    assert A.osp.dim == 8


def test_bad_shape_rejected():
    with pytest.raises(InvalidShape):
        build_osp(0, 0, algebra("ground_field_id"))
    with pytest.raises(InvalidInput):
        build_osp(1, 1, algebra("m2"))  # no involution


def test_generators_are_skew():
    A = osp_algebra(2, 1, "matrix_prp", "Q", (1,))
    R = A.R
    for q in range(R.dim):
        a = R.basis_vec(q)
        for kind, idx in [("t", (1, 2)), ("u", (1, 1)), ("v", (1, 1)),
                          ("w", (1, 1)), ("f", (2, 1)), ("g", (1, 2))]:
            G = generator(A, kind, idx, a)
            assert osp_involution(G) == -G


def test_generator_symmetry_and_degree():
    A = osp_algebra(1, 2, "dual_numbers_id")
    R = A.R
    for q in range(R.dim):
        a = R.basis_vec(q)
        assert generator(A, "v", (1, 2), a) == generator(A, "v", (2, 1), R.bar_vec(a))
        assert generator(A, "w", (1, 2), a) == generator(A, "w", (2, 1), R.bar_vec(a))
    A11 = osp_algebra(1, 1, "ground_field_id")
    assert generator(A11, "f", (1, 1), [1]).degree() == 1


def test_generator_index_validation():
    A = osp_algebra(2, 1, "ground_field_id")
    with pytest.raises(InvalidInput):
        generator(A, "t", (1, 3), [1])
    with pytest.raises(InvalidInput):
        generator(A, "u", (1, 2), [1])
    with pytest.raises(InvalidInput):
        generator(A, "q", (1, 1), [1])


def test_epsilon_values():
    A = osp_algebra(2, 1, "ground_field_id")
    assert epsilon(A, generator(A, "t", (1, 2), [1])).is_zero()
    # u_11(d) + e_11(rho(d) - rho(bar d)) has vanishing trace criterion
    R = algebra("matrix_prp", "Q", (1,))
    A2 = osp_algebra(2, 1, "matrix_prp", "Q", (1,))
    from osphom.supermatrix import matrix_unit

    for q in range(R.dim):
        d = R.basis_vec(q)
        rd = R.rho_vec(d)
        rdb = R.rho_vec(R.bar_vec(d))
        X = generator(A2, "u", (1, 1), d) + matrix_unit(
            A2.shape, R, 1, 1, R.element([x - y for x, y in zip(rd, rdb)]))
        assert A2.tilde.to_coords(X) is not None
        assert epsilon(A2, X).is_zero()
    # e_11 block with skew a returns a itself
    a = [0, 1, 0, 0]  # e12 in M_{1|1}, lies in R_- and in [R,R]
    X = matrix_unit(A2.shape, R, 1, 1, R.element(a))
    assert epsilon(A2, X).coords == [0, 1, 0, 0]


def test_epsilon_rejects_non_tilde():
    A = osp_algebra(1, 1, "ground_field_id")
    from osphom.supermatrix import matrix_unit

    X = matrix_unit(A.shape, A.R, 1, 2, A.R.element([1]))  # not skew
    with pytest.raises(InvalidInput):
        epsilon(A, X)


def test_epsilon_lands_in_commutators_on_derived():
    A = osp_algebra(2, 1, "s_plus_sop")
    cm = commutators_intersect_minus(A.R)
    for B in A.osp.basis_mats:
        assert cm.contains(epsilon(A, B).coords)


@pytest.mark.parametrize("m,n,name,params", [
    (1, 1, "ground_field_id", ()),
    (2, 1, "dual_numbers_id", ()),
    (1, 2, "grassmann_id", ()),
    (2, 1, "matrix_prp", (1,)),
    (2, 2, "s_plus_sop", ()),
])
def test_section2_structure(m, n, name, params):
    rep = check_section2(osp_algebra(m, n, name, "Q", params))
    assert rep.ok(), [c.name for c in rep.failures()]


def test_section2_needs_positive_shape():
    with pytest.raises(InvalidShape):
        check_section2(build_osp(2, 0, algebra("ground_field_id")))


def test_exactness_gap_m11():
    # dim osp~ - dim osp = dim R_-/([R,R] n R_-) = 2 - 1 = 1
    A = osp_algebra(1, 1, "matrix_prp", "Q", (1,))
    assert A.tilde.dim - A.osp.dim == 1


def test_example_supercommutative():
    for name, mn in [("dual_numbers_id", (1, 1)), ("grassmann_id", (1, 1)),
                     ("dual_numbers_id", (2, 1))]:
        rep = example_isomorphisms("supercommutative", *mn, algebra(name))
        assert rep.ok(), [c.name for c in rep.failures()]
    with pytest.raises(InvalidInput):
        example_isomorphisms("supercommutative", 1, 1, algebra("matrix_prp", "Q", (1,)))


def test_example_s_plus_sop():
    for sname, mn in [("ground_field_id", (1, 1)), ("ground_field_id", (2, 1)),
                      ("m2", (1, 1)), ("dual_numbers_id", (1, 1))]:
        rep = example_isomorphisms("s_plus_sop", *mn, algebra(sname))
        assert rep.ok(), [c.name for c in rep.failures()]
    # dimension count: sl_{2|2}(Q) = 15 = osp(2|2, Q+Q^op)
    assert osp_algebra(2, 1, "s_plus_sop").osp.dim == 15
    with pytest.raises(InvalidInput):
        example_isomorphisms("bogus", 1, 1, algebra("ground_field_id"))


def test_matrix_coefficient_dimension_checks():
    rep = periplectic_dimension_check(Q)
    assert rep.ok()
    assert rep.checks[0].dims["osp(1|2,M11prp)"] == 17
    rep = orthosymplectic_dimension_check(Q)
    assert rep.ok()
    assert rep.checks[0].dims["osp(5|4,k)"] == classical_dimension(5, 2)
