from fractions import Fraction

import pytest

from canoninv.groups import ReflectionGroup, build_root_system
from canoninv.polys import Polynomial
from canoninv.scalars import QSQRT5, QuadExt


_GROUP_CACHE = {}


def get_group(type_label, rank=None, m=None, allow_large=False) -> ReflectionGroup:
    key = (type_label, rank, m)
    if key not in _GROUP_CACHE:
        rs = build_root_system(type_label, rank, m=m, allow_large=allow_large)
        _GROUP_CACHE[key] = ReflectionGroup(rs)
    return _GROUP_CACHE[key]


@pytest.fixture
def group_of():
    return get_group


def random_fraction(rng, bound=9):
    num = rng.randint(-bound, bound)
    den = rng.randint(1, bound)
    return Fraction(num, den)


def random_scalar(rng, field, bound=9):
    if field is QSQRT5:
        return QuadExt(random_fraction(rng, bound), random_fraction(rng, bound))
    return random_fraction(rng, bound)


def random_polynomial(rng, num_vars, field, degree, terms=4, homogeneous=True):
    """Random sparse polynomial; degree is exact when homogeneous."""
    chosen = {}
    for _ in range(terms):
        if homogeneous:
            d = degree
        else:
            d = rng.randint(0, degree)
        exp = [0] * num_vars
        for _ in range(d):
            exp[rng.randrange(num_vars)] += 1
        chosen[tuple(exp)] = random_scalar(rng, field)
    p = Polynomial(num_vars, field, chosen)
    if homogeneous and p.is_zero():
        exp = [0] * num_vars
        exp[0] = degree
        p = Polynomial(num_vars, field, {tuple(exp): 1})
    return p
