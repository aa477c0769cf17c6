import random

import pytest

from wittlab.dieudonne import EElement
from wittlab.ffield import field_create
from wittlab.witt import WittVector, witt_elements


@pytest.fixture(scope="module")
def setup():
    F4 = field_create(2, 2)
    N = 3
    return F4, N


def test_fv_equals_p(setup):
    F4, N = setup
    F, V = EElement.F(F4, N), EElement.V(F4, N)
    p_scalar = EElement.one(F4, N).int_mul(2)
    assert F * V == p_scalar
    assert V * F == p_scalar
    # F^a V^b = p^min(a,b) (F or V)^(a-b)
    assert (F ** 2) * (V ** 3) == V.int_mul(4)
    assert (V ** 3) * (F ** 2) == V.int_mul(4)
    assert (F ** 3) * (V ** 2) == F.int_mul(4)


def test_twist_relations(setup):
    F4, N = setup
    F, V = EElement.F(F4, N), EElement.V(F4, N)
    for coords in [(F4.generator(), F4.one, F4.generator()),
                   (F4.one, F4.generator(), F4.zero)]:
        c = WittVector(F4, coords)
        xi = EElement.witt(c)
        sxi = EElement.witt(c.sigma())
        assert F * xi == sxi * F
        assert V * sxi == xi * V
        # V^2 twists by sigma^(-2) = id over F_4
        assert (V ** 2) * xi == xi * (V ** 2)


def test_ring_axioms_random(setup):
    F4, N = setup
    rng = random.Random(5)
    els = list(witt_elements(F4, N))

    def rand_e():
        keys = rng.sample(range(-3, 4), 3)
        return EElement(F4, N, {k: rng.choice(els) for k in keys})

    one = EElement.one(F4, N)
    for _ in range(12):
        a, b, c = rand_e(), rand_e(), rand_e()
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert (a + b) * c == a * c + b * c
        assert a * one == one * a == a
        assert (a - a).is_zero()


def test_teichmuller_scalars():
    F9 = field_create(3, 2)
    N = 2
    F = EElement.F(F9, N)
    i = F9.generator()  # i^2 = -1
    ta = EElement.teich(F9, N, i)
    # F [a] = [a^p] F
    assert F * ta == EElement.teich(F9, N, i ** 3) * F


def test_monomial_coefficient_access(setup):
    F4, N = setup
    e = EElement.F(F4, N, 2) + EElement.V(F4, N, 1)
    assert e.support() == [-1, 2]
    assert e.coeff(2) == e.coeff(-1)
    assert e.coeff(0).is_zero()


def test_mixed_field_rejected(setup):
    F4, N = setup
    with pytest.raises(TypeError):
        EElement.F(F4, N) * EElement.F(field_create(3, 1), N)
