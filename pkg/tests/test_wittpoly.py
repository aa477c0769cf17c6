import json

import pytest

from wittlab.wittpoly import (
    ghost_poly,
    interleave,
    monomial,
    poly_add,
    poly_div_exact,
    poly_eval_int,
    poly_eval_ring,
    poly_mul,
    poly_pow,
    s1_poly,
    structure_polys_json_text,
    unpack,
    verify_ghost_identities,
    weighted_degrees,
    witt_structure_polys,
    xvar,
    yvar,
)


def test_poly_arithmetic_basics():
    f = {xvar(0): 1, 0: 2}            # X0 + 2
    g = {xvar(0): 1, 0: -2}           # X0 - 2
    assert poly_mul(f, g) == {xvar(0, 2): 1, 0: -4}
    assert poly_pow(f, 2) == {xvar(0, 2): 1, xvar(0): 4, 0: 4}
    assert poly_add(f, g) == {xvar(0): 2}
    assert poly_div_exact({0: 6, xvar(0): 9}, 3) == {0: 2, xvar(0): 3}
    with pytest.raises(ArithmeticError):
        poly_div_exact({0: 5}, 3)
    assert unpack(xvar(1, 3) + yvar(0, 2), 4) == (0, 2, 3, 0)


def test_ghost_poly():
    # w_2 = X0^(p^2) + p X1^p + p^2 X2 at p = 3
    assert ghost_poly(3, 2) == {xvar(0, 9): 1, xvar(1, 3): 3, xvar(2): 9}


@pytest.mark.parametrize("p", [2, 3, 5])
def test_ghost_identities(p):
    assert verify_ghost_identities(p, 4)


def test_known_small_polys():
    polys = witt_structure_polys(2, 2)
    assert polys["add"][0] == {xvar(0): 1, yvar(0): 1}
    # p = 2: A_1 = X1 + Y1 - X0 Y0
    assert polys["add"][1] == {xvar(1): 1, yvar(1): 1, xvar(0) + yvar(0): -1}
    # P_0 = X0 Y0, P_1 = X0^2 Y1 + X1 Y0^2 + 2 X1 Y1
    assert polys["mul"][0] == {xvar(0) + yvar(0): 1}
    assert polys["mul"][1] == {
        xvar(0, 2) + yvar(1): 1,
        xvar(1) + yvar(0, 2): 1,
        xvar(1) + yvar(1): 2,
    }
    # p = 2 negation: N_0 = X0 (since -1 = 1 only mod 2, N_0 = -X0 over Z)
    neg = witt_structure_polys(3, 2)["neg"]
    assert neg[0] == {xvar(0): -1}


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_s1_is_degree_one_addition_carry(p):
    polys = witt_structure_polys(p, 2)
    expect = dict(s1_poly(p))
    expect[xvar(1)] = 1
    expect[yvar(1)] = 1
    assert polys["add"][1] == expect


@pytest.mark.parametrize("p,n", [(2, 4), (3, 3), (5, 3)])
def test_isobaric_grading(p, n):
    polys = witt_structure_polys(p, n)
    w = [p ** j for j in range(n)]
    for i in range(n):
        assert weighted_degrees(polys["add"][i], w) == {p ** i}
        assert weighted_degrees(polys["neg"][i], w) == {p ** i}
        # multiplication is isobaric of weight p^i in X and in Y separately
        zero_w = [0] * n
        assert weighted_degrees(polys["mul"][i], w, zero_w) == {p ** i}
        assert weighted_degrees(polys["mul"][i], zero_w, w) == {p ** i}


def test_eval_ring_matches_int():
    from wittlab.ffield import field_create

    F = field_create(5, 1)
    f = {xvar(0, 2) + yvar(1): 3, xvar(1): 7, 0: 11}
    ints = [2, 3, 4, 1]
    expect = poly_eval_int(f, ints) % 5
    got = poly_eval_ring(f, 5, F, [F.from_int(v) for v in ints])
    assert got == F.from_int(expect)


def test_interleave():
    assert interleave([1, 2], [3, 4]) == [1, 3, 2, 4]


def test_json_export_deterministic():
    t1 = structure_polys_json_text(2, 3)
    t2 = structure_polys_json_text(2, 3)
    assert t1 == t2
    data = json.loads(t1)
    assert data["p"] == 2 and data["n"] == 3
    assert len(data["add"]) == 3
    assert data["add"][0]["vars"] == ["X0", "X1", "X2", "Y0", "Y1", "Y2"]
    assert data["neg"][0]["vars"] == ["X0", "X1", "X2"]
    # every exponent vector is sorted ascending and unique
    for entry in data["add"] + data["mul"]:
        vecs = [tuple(t[0]) for t in entry["terms"]]
        assert vecs == sorted(vecs)
        assert len(set(vecs)) == len(vecs)


def test_monomial_overflow_guard():
    with pytest.raises(OverflowError):
        monomial(0, 1 << 16)
