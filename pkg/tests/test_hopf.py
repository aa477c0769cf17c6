import numpy as np
import pytest

from wittlab.ffield import field_create
from wittlab.hopf import (
    build_alpha_hopf,
    build_alpha_p_squared,
    build_h_subgroup,
    build_kernel_hopf_direct,
    build_kernel_hopf_presentation,
    build_noncommutative_example,
    build_selfdual_example,
    build_w2fv_square,
    build_witt_hopf,
    dual_hopf,
    frobenius_height,
    hopf_map_is_isomorphism,
    invariant_report,
    kernel_frobenius_power,
    lie_dim,
    match_presentation_direct,
    monogenic,
    points,
    primitive_dim,
    selfdual_assignment_map,
    selfdual_explicit_w2fv_map,
    verify_hopf_axioms,
    verschiebung_order,
    witt_pair_count,
)
from wittlab.witt import TestAlgebra


@pytest.fixture(scope="module")
def F2():
    return field_create(2, 1)


@pytest.fixture(scope="module")
def F3():
    return field_create(3, 1)


def test_witt_hopf_comul_p2(F2):
    A = build_witt_hopf(2, 2, F2, 2)
    alg = A.pres.alg
    bas = alg.basis()
    idx = {b: i for i, b in enumerate(bas)}
    T1 = A.vec(alg.gen(1))
    D = np.tensordot(T1, A.comul, axes=(0, 0)) % 2
    expect = np.zeros_like(D)
    one = idx[(0, 0)]
    expect[idx[(0, 1)], one] = 1
    expect[one, idx[(0, 1)]] = 1
    expect[idx[(1, 0)], idx[(1, 0)]] = 1
    assert np.array_equal(D, expect)


def test_witt_hopf_primitive_t0(F3):
    A = build_witt_hopf(3, 1, F3, 2)
    assert primitive_dim(A) >= 1
    rep = verify_hopf_axioms(A)
    assert rep["all_pass"] and rep["commutative"] and rep["cocommutative"]


def test_alpha_p_axioms_and_invariants(F2, F3):
    for base in (F2, F3):
        A = build_alpha_hopf(base.p, 1, base)
        rep = verify_hopf_axioms(A)
        assert rep["all_pass"] and rep["commutative"] and rep["cocommutative"]
        inv = invariant_report(A)
        assert inv.as_dict() == {
            "order_exponent": 1,
            "height": 1,
            "v_order": 1,
            "lie_dim": 1,
            "primitive_dim": 1,
            "monogenic": True,
        }


def test_alpha_pn_invariants(F2):
    for n in (2, 3):
        A = build_alpha_hopf(2, n, F2)
        inv = invariant_report(A)
        assert (inv.order_exponent, inv.height, inv.v_order, inv.lie_dim) == (
            n,
            n,
            1,
            1,
        )
        assert inv.monogenic


def test_alpha_p_squared_lie_dim(F2, F3):
    for base in (F2, F3):
        A = build_alpha_p_squared(base.p, base)
        assert lie_dim(A) == 2
        assert primitive_dim(A) == 2
        assert not monogenic(A)


@pytest.mark.parametrize("r,s,mult", [(1, 1, 2), (2, 1, 2), (1, 2, 2)])
def test_presentation_matches_direct(F2, r, s, mult):
    equal, A, Q = match_presentation_direct(2, r, s, mult, F2)
    assert equal
    assert verify_hopf_axioms(A)["all_pass"]


@pytest.mark.parametrize("r,s,mult,n,nprime", [(1, 1, 2, 2, 2), (2, 1, 2, 2, 4), (1, 2, 2, 4, 2)])
def test_kernel_dims(F2, r, s, mult, n, nprime):
    A = build_kernel_hopf_presentation(2, r, s, mult, F2)
    assert A.dim == 2 ** (s * nprime) == 2 ** (r * n)


def test_degenerate_kernel_is_alpha(F2):
    # V = F^n vanishes identically, leaving the single-generator algebra
    D = build_kernel_hopf_direct(2, 2, 1, 2, 2, F2)
    A = build_alpha_hopf(2, 2, F2)
    assert D.dim == A.dim == 4
    assert np.array_equal(D.mul % 2, A.mul % 2)
    assert np.array_equal(D.comul % 2, A.comul % 2)


def test_w2fv_invariants(F2, F3):
    for base in (F2, F3):
        W = build_kernel_hopf_presentation(base.p, 1, 1, 2, base)
        inv = invariant_report(W)
        assert (inv.order_exponent, inv.height, inv.v_order, inv.lie_dim) == (
            2,
            2,
            2,
            1,
        )
        assert inv.monogenic


def test_dual_double_is_identity(F2):
    A = build_kernel_hopf_presentation(2, 1, 1, 2, F2)
    B = dual_hopf(dual_hopf(A))
    assert np.array_equal(A.mul % 2, B.mul % 2)
    assert np.array_equal(A.comul % 2, B.comul % 2)
    assert np.array_equal(A.antipode % 2, B.antipode % 2)


def test_dual_invariants_swap_parameters(F2):
    for r, s in [(1, 1), (2, 1), (1, 2)]:
        A = build_kernel_hopf_presentation(2, r, s, 2, F2)
        Ad = dual_hopf(A)
        B = build_kernel_hopf_presentation(2, s, r, 2, F2)
        assert invariant_report(Ad).as_dict() == invariant_report(B).as_dict()


def test_worked_chain_ker_f3(F2):
    # ker(F^3) on the (r,s) = (2,1) kernel of order p^4 reproduces
    # k[T0,T1]/(T0^p, T1^{p^2} - T0) with its Witt coproduct
    from wittlab.hopf import (
        _tensor_rules,
        _witt_antipode_gens,
        _witt_comul_gens,
        build_presentation_hopf,
    )

    A = build_kernel_hopf_presentation(2, 2, 1, 2, F2)
    C = kernel_frobenius_power(A, 3)
    caps, repls, names = [2, 4], [None, (1, 0)], ["T0", "T1"]
    caps2, repls2 = _tensor_rules(caps, repls)
    alg = TestAlgebra(F2, caps, repls, names)
    alg2 = TestAlgebra(F2, caps2, repls2)
    T = build_presentation_hopf(
        F2, caps, repls, names, _witt_comul_gens(alg2, 2, 2), _witt_antipode_gens(alg, 2, 2)
    )
    assert C.dim == T.dim == 8
    assert np.array_equal(C.mul % 2, T.mul % 2)
    assert np.array_equal(C.comul % 2, T.comul % 2)


def test_ker_f1_of_w2fv_is_alpha_p(F2):
    W = build_kernel_hopf_presentation(2, 1, 1, 2, F2)
    K = kernel_frobenius_power(W, 1)
    A = build_alpha_hopf(2, 1, F2)
    assert K.dim == 2
    assert invariant_report(K).as_dict() == invariant_report(A).as_dict()


def test_ker_fn_is_whole_algebra(F2):
    A = build_alpha_hopf(2, 3, F2)
    assert kernel_frobenius_power(A, 3) is A


def test_h_subgroup_duality_profiles(F2, F3):
    # H = k[T0,T1]/(T0^p, T1^{p^2}): ker(F_H) has the profile of W_2^1
    # while ker(F_{H^dual}) has the profile of alpha_p x alpha_p
    for base in (F2, F3):
        H = build_h_subgroup(base.p, base)
        assert verify_hopf_axioms(H)["all_pass"]
        kH = invariant_report(kernel_frobenius_power(H, 1))
        kHd = invariant_report(kernel_frobenius_power(dual_hopf(H), 1))
        assert (kH.order_exponent, kH.height, kH.v_order, kH.lie_dim) == (2, 1, 2, 2)
        assert (kHd.order_exponent, kHd.height, kHd.v_order, kHd.lie_dim) == (2, 1, 1, 2)
        assert kHd.primitive_dim == 2


def test_selfdual_example(F2, F3):
    for base in (F2, F3):
        G = build_selfdual_example(base.p, base)
        assert verify_hopf_axioms(G)["all_pass"]
        assert G.dim == base.p ** 4
        f, Gd = selfdual_assignment_map(G)
        assert hopf_map_is_isomorphism(G, Gd, f)


def test_w2fv_explicit_map_defect(F2, F3):
    # the stated assignment is a bijective algebra map but fails the
    # coalgebra condition on Y1 over the prime field, at p = 2 and p = 3
    from wittlab import modp

    for base in (F2, F3):
        W, G, f = selfdual_explicit_w2fv_map(base.p, base)
        assert modp.rank(f % base.p, base.p) == (G.dim if base.p > 2 else G.dim // 4)
        assert not hopf_map_is_isomorphism(W, G, f)


def test_witt_pair_directions(F2, F3):
    # only the primitive direction T0 + U0 admits a second Witt coordinate,
    # so no Hopf isomorphism from k[ker(F-V)^2] exists over the prime field
    for base in (F2, F3):
        p = base.p
        G = build_selfdual_example(p, base)
        alg = G.pres.alg
        t0, u0 = G.vec(alg.gen(0)), G.vec(alg.gen(2))
        dirs = [(1, 0), (0, 1), (1, 1)] + ([(1, 2)] if p == 3 else [])
        counts = {d: witt_pair_count(G, (d[0] * t0 + d[1] * u0) % p) for d in dirs}
        assert counts[(1, 1)] > 0
        assert all(c == 0 for d, c in counts.items() if d != (1, 1))


@pytest.mark.parametrize("p,n", [(2, 2), (2, 3), (3, 2)])
def test_noncommutative_example(p, n):
    base = field_create(p, 1)
    A, Ad, rep = build_noncommutative_example(p, n, base)
    assert rep["axioms_A"]["all_pass"] and rep["axioms_dual"]["all_pass"]
    assert rep["A_commutative"] and not rep["A_cocommutative"]
    assert not verify_hopf_axioms(Ad)["commutative"]
    assert rep["dual_commutators"]
    assert rep["dual_p_powers_low"]
    # the top p-power is U_0^{p-1} U_{n-1}, not zero
    assert not rep["dual_top_p_power_zero"]
    assert rep["dual_top_p_power_is_corrected"]
    assert rep["dual_witt_comul"]
    assert rep["lie_dim_A"] == 1


def test_noncommutative_height(F2):
    A, _, _ = build_noncommutative_example(2, 2, F2)
    assert frobenius_height(A) == 3
    assert verschiebung_order(A) <= 3


def test_points_alpha_p(F2):
    R = TestAlgebra(F2, [2], [None], ["x"])
    A = build_alpha_hopf(2, 1, F2)
    pts, mul = points(A, R)
    assert len(pts) == 2
    zero = next(q for q in pts if q[0] == R.zero)
    other = next(q for q in pts if q[0] != R.zero)
    assert mul(zero, other) == other
    assert mul(other, other) == zero


def test_points_w2fv_and_group_law(F2):
    R = TestAlgebra(F2, [2], [None], ["x"])
    W = build_kernel_hopf_presentation(2, 1, 1, 2, F2)
    pts, mul = points(W, R)
    assert len(pts) == 2
    assert all(q[0] == R.zero for q in pts)
    # full table: associative with identity and inverses
    ident = tuple(R.zero for _ in pts[0])
    assert ident in pts
    for a in pts:
        assert any(mul(a, b) == ident for b in pts)
        for b in pts:
            assert mul(a, b) in pts
            for c in pts:
                assert mul(mul(a, b), c) == mul(a, mul(b, c))


def test_points_over_field_trivial(F2):
    R = TestAlgebra(F2, [1], [None], ["z"])
    for A in (build_alpha_hopf(2, 2, F2), build_selfdual_example(2, F2)):
        pts, _ = points(A, R)
        assert len(pts) == 1


def test_witt_redundancy_nprime_ge_2r(F2):
    # for n' >= 2r the conditions a_i^{p^{n'}} = 0 follow from the kernel
    # relations: every point of the kernel presentation already satisfies them
    R = TestAlgebra(F2, [4], [None], ["x"])
    W = build_kernel_hopf_presentation(2, 1, 1, 2, F2)  # n' = 2, r = 1
    pts, _ = points(W, R)
    for q in pts:
        for v in q:
            assert v ** 4 == R.zero


def test_invariant_inequalities_suite(F2, F3):
    algebras = [
        build_alpha_hopf(2, 1, F2),
        build_alpha_hopf(2, 3, F2),
        build_alpha_p_squared(3, F3),
        build_kernel_hopf_presentation(2, 1, 1, 2, F2),
        build_kernel_hopf_presentation(3, 1, 1, 2, F3),
        build_selfdual_example(2, F2),
        build_h_subgroup(3, F3),
        build_noncommutative_example(2, 3, F2)[0],
    ]
    for A in algebras:
        inv = invariant_report(A)  # raises if an inequality fails
        assert max(inv.lie_dim, inv.height) <= inv.order_exponent
        assert inv.order_exponent <= inv.lie_dim * inv.height
        assert inv.v_order <= inv.order_exponent
