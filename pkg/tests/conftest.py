import functools

import pytest

from osphom.linalg import FieldSpec
from osphom.superalg import preset_algebra

QQ = FieldSpec.Q()
F3 = FieldSpec.Fp(3)
F5 = FieldSpec.Fp(5)


@functools.lru_cache(maxsize=None)
def algebra(name, field_token="Q", params=()):
    return preset_algebra(name, FieldSpec.parse_token(field_token), params)


@functools.lru_cache(maxsize=None)
def osp_algebra(m, n, name, field_token="Q", params=()):
    from osphom.osp import build_osp

    return build_osp(m, n, algebra(name, field_token, params))


@functools.lru_cache(maxsize=None)
def sto(m, n, name, field_token="Q", params=()):
    from osphom.extensions import sto_model

    return sto_model(m, n, algebra(name, field_token, params))


@pytest.fixture
def Q():
    return QQ


@functools.lru_cache(maxsize=None)
def hat12(name, field_token="Q", params=()):
    from osphom.extensions import hat_osp12

    return hat_osp12(algebra(name, field_token, params))
