"""Tensor-square quotient functors: frozen dims and structural invariants."""

import random

import pytest

from conftest import algebra
from osphom.homology import (
    cyclic_quotient,
    hc1,
    hd1_minus,
    hd1_tilde,
    i3_and_z,
    j_tensor,
    modified_skew_dihedral_quotient,
    quotient_rrr,
    skew_dihedral_quotient,
    _tensor,
)
from osphom.linalg import FieldSpec, vec_is_zero
from osphom.superalg import subspace

Q = FieldSpec.Q()


# Frozen expected dimensions.  Hand oracles:
#  * (Q, id): graded antisymmetry gives 2(1*1) in the relation span, so the
#    whole quotient dies; every functor is 0 except R/([R,R]R) = Q.
#  * grassmann k[xi]: <S,S>_c = span{xi*xi} (J(1,1,xi) + antisymmetry kill
#    the rest); the commutator map vanishes, so HC1 = 1.
#  * m2 = M_2(Q): separable, HC1 = 0; [M2,M2]M2 = M2 so R/([R,R]R) = 0.
DIMS = {
    ("hd1", "ground_field_id", "Q", ()): 0,
    ("hd1", "dual_numbers_id", "Q", ()): 0,
    ("hd1", "grassmann_id", "Q", ()): 1,
    ("hd1", "s_plus_sop", "Q", ()): 0,
    ("hd1", "sqrtminus1", "Q", ()): 0,
    ("hd1tilde", "ground_field_id", "Q", ()): 0,
    ("hd1tilde", "ground_field_id", "F3", ()): 0,
    ("hd1tilde", "grassmann_id", "Q", ()): 1,
    ("hc1", "ground_field_id", "Q", ()): 0,
    ("hc1", "dual_numbers_id", "Q", ()): 0,
    ("hc1", "grassmann_id", "Q", ()): 1,
    ("hc1", "m2", "Q", ()): 0,
    ("rrr", "ground_field_id", "Q", ()): 1,
    ("rrr", "s_plus_sop", "Q", ()): 2,
    ("rrr", "s_plus_sop", "Q", ("m2",)): 0,
    ("z", "ground_field_id", "Q", ()): 0,
    ("z", "ground_field_id", "F3", ()): 2,
    ("z", "ground_field_id", "F5", ()): 0,
    ("z", "s_plus_sop", "F3", ()): 0,
}

FUNCTORS = {
    "hd1": lambda R: hd1_minus(R).dim,
    "hd1tilde": lambda R: hd1_tilde(R).dim,
    "hc1": lambda R: hc1(R).dim,
    "rrr": lambda R: quotient_rrr(R).dim,
    "z": lambda R: i3_and_z(R).dim,
}


@pytest.mark.parametrize("key,expected", sorted(DIMS.items()))
def test_frozen_dimensions(key, expected):
    functor, name, ft, params = key
    assert FUNCTORS[functor](algebra(name, ft, params)) == expected


def test_relations_die_in_quotient():
    R = algebra("matrix_prp", "Q", (1,))
    quot = skew_dihedral_quotient(R)
    f = R.field
    # spot: the antisymmetry relation on a pair of odd basis vectors
    b1, b2 = R.basis_vec(1), R.basis_vec(2)
    rel = [x + y for x, y in zip(_tensor(R, b1, b2), _tensor(R, b2, b1))]
    # |b1| = |b2| = 1: a*b + (-1)^{|a||b|} b*a = a*b - b*a
    rel = [x - 2 * y for x, y in zip(rel, _tensor(R, b2, b1))]
    assert vec_is_zero(f, quot.space.project(rel))
    # J on any basis triple
    assert vec_is_zero(f, quot.space.project(j_tensor(R, b1, 1, b2, 1, R.basis_vec(0), 0)))


def test_cyclic_family_on_random_homogeneous_triples():
    # relation families are generated over basis tuples; multilinearity must
    # make that exhaustive -- sample random homogeneous non-basis triples
    rng = random.Random(5)
    for name, params in [("matrix_prp", (1,)), ("s_plus_sop", ())]:
        R = algebra(name, "Q", params)
        quot = skew_dihedral_quotient(R)
        f = R.field
        for _ in range(10):
            trip = []
            for _ in range(3):
                par = rng.randint(0, 1)
                v = [f.coerce(rng.randint(-2, 2)) if R.parity[q] == par else f.zero()
                     for q in range(R.dim)]
                trip.append((v, par))
            (x, px), (y, py), (z, pz) = trip
            assert vec_is_zero(f, quot.space.project(j_tensor(R, x, px, y, py, z, pz)))


def test_unit_pair_dies_in_modified_quotient():
    R = algebra("ground_field_id")
    quot = modified_skew_dihedral_quotient(R)
    assert quot.dim == 0


def test_hd_tilde_equals_hd_when_3_invertible():
    for name, ft, params in [("ground_field_id", "Q", ()), ("dual_numbers_id", "Q", ()),
                             ("grassmann_id", "Q", ()), ("matrix_prp", "Q", (1,)),
                             ("s_plus_sop", "Q", ()), ("sqrtminus1", "Q", ()),
                             ("ground_field_id", "F5", ())]:
        R = algebra(name, ft, params)
        assert hd1_tilde(R).dim == hd1_minus(R).dim, name


def test_hd_tilde_of_s_plus_sop_is_hc1():
    for sname in ["ground_field_id", "dual_numbers_id", "m2", "grassmann_id"]:
        S = algebra(sname)
        R = algebra("s_plus_sop", "Q", (sname,))
        assert hd1_tilde(R).dim == hc1(S).dim, sname


def test_hd_of_supercommutative_id_is_hc1():
    for name in ["ground_field_id", "dual_numbers_id", "grassmann_id", "group_c2_id"]:
        R = algebra(name)
        assert hd1_minus(R).dim == hc1(R).dim, name


def test_minus_plus_minus_sq_spans_everything_for_s_plus_sop():
    for sname in ["ground_field_id", "m2"]:
        R = algebra("s_plus_sop", "Q", (sname,))
        assert subspace(R, "minus_plus_minus_sq").dim == R.dim
        assert i3_and_z(R).dim == 0


def test_z_pi_identities_literal():
    # the defining identities of the projections, re-checked on basis tuples
    for name, ft in [("ground_field_id", "F3"), ("grassmann_id", "F3"),
                     ("matrix_prp", "Q")]:
        params = (1,) if name == "matrix_prp" else ()
        R = algebra(name, ft, params)
        z = i3_and_z(R)
        f = R.field
        pi = z.half.pi
        three = f.coerce(3)
        for q in range(R.dim):
            a = R.basis_vec(q)
            assert all(f.is_zero(f.mul(three, c)) for c in pi(a))
            assert pi(a) == pi(R.bar_vec(a))
        for q in range(R.dim):
            a = R.basis_vec(q)
            ap = [f.add(x, y) for x, y in zip(a, R.bar_vec(a))]
            for r in range(R.dim):
                b = R.basis_vec(r)
                bp = [f.add(x, y) for x, y in zip(b, R.bar_vec(b))]
                comm = R.commutator_vec(a, b)
                for s in range(R.dim):
                    c = R.basis_vec(s)
                    assert pi(R.mul_vec(comm, c)) == pi(R.mul_vec(R.bar_vec(comm), c))
                    lhs = pi(R.mul_vec(R.mul_vec(ap, bp), c))
                    rhs = pi(R.mul_vec(R.mul_vec(bp, ap), c))
                    if R.parity[q] * R.parity[r]:
                        rhs = [f.neg(x) for x in rhs]
                    assert lhs == rhs


def test_quotient_projection_section():
    R = algebra("s_plus_sop", "Q")
    piq = quotient_rrr(R)
    for j in range(piq.dim):
        unit = [R.field.zero()] * piq.dim
        unit[j] = R.field.one()
        assert piq.space.project(piq.space.lift(unit)) == unit


def test_pair_class_bilinear():
    R = algebra("dual_numbers_id")
    quot = cyclic_quotient(R)
    f = R.field
    x = [f.coerce(2), f.coerce(3)]
    y = [f.coerce(1), f.coerce(-1)]
    direct = quot.pair_class(x, y)
    expanded = [f.zero()] * quot.dim
    for q, cq in enumerate(x):
        for r, cr in enumerate(y):
            cls = quot.pair_class(R.basis_vec(q), R.basis_vec(r))
            expanded = [f.add(a, f.mul(f.mul(cq, cr), b)) for a, b in zip(expanded, cls)]
    assert direct == expanded
