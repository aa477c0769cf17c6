"""Desk-scale verification suite.

Thirteen numbered checks covering the whole stack: Witt structure
polynomials, Dieudonné-module classification, fast-path/oracle agreement,
Hopf constructions, duality and the worked examples.  Each runner returns
``(ok, detail)`` where ``detail`` is JSON-serializable; ``run_all`` collects
them in order.  The same runners back the CLI ``selfcheck`` subcommand and
the acceptance test file.
"""

from __future__ import annotations

import random

import numpy as np

from . import modp
from .dieudonne import EElement
from .emodule import (
    classify,
    exhaustive_iso_search,
    kernel_fv,
    quotient_by_F_power,
    thm_one,
)
from .ffield import field_create
from .hopf import (
    GuardError,
    build_alpha_hopf,
    build_alpha_p_squared,
    build_h_subgroup,
    build_kernel_hopf_presentation,
    build_noncommutative_example,
    build_selfdual_example,
    build_w2fv_square,
    build_witt_hopf,
    dual_hopf,
    hopf_map_is_isomorphism,
    invariant_report,
    kernel_frobenius_power,
    match_presentation_direct,
    selfdual_assignment_map,
    selfdual_explicit_w2fv_map,
    verify_hopf_axioms,
    witt_pair_count,
)
from .witt import WittVector, witt_elements, witt_zero
from .wittpoly import (
    poly_sub,
    s1_poly,
    verify_ghost_identities,
    witt_structure_polys,
    xvar,
    yvar,
)


def criterion_1_ghost_identities():
    """Ghost identities of A, P, N hold as exact polynomial identities."""
    checked = []
    for p in (2, 3, 5):
        for n in range(1, 5):
            verify_ghost_identities(p, n, samples=2)
            checked.append([p, n])
    return True, {"checked": checked}


def criterion_2_s1_match():
    """A_1 = X_1 + Y_1 + S_1 with the explicit binomial formula for S_1."""
    for p in (2, 3, 5):
        a1 = witt_structure_polys(p, 2)["add"][1]
        expect = {xvar(1): 1, yvar(1): 1}
        for key, c in s1_poly(p).items():
            expect[key] = expect.get(key, 0) + c
        if poly_sub(a1, expect):
            return False, {"p": p}
    return True, {"p": [2, 3, 5]}


def criterion_3_fv_exhaustive():
    """FV = VF = p and p(x_0, x_1, x_2) = (0, x_0^p, x_1^p) on W_3(F_4)."""
    field = field_create(2, 2)
    count = 0
    for x in witt_elements(field, 3):
        fx = x.frobenius()
        vx = x.verschiebung()
        px = x.int_mul(2)
        if fx.verschiebung() != px or vx.frobenius() != px:
            return False, {"x": [list(c.coeffs) for c in x.coords]}
        expect = WittVector(
            field, [field.zero, x.coords[0] ** 2, x.coords[1] ** 2]
        )
        if px != expect:
            return False, {"x": [list(c.coeffs) for c in x.coords]}
        count += 1
    return count == 64, {"vectors": count}


def criterion_4_classification():
    """classify() succeeds with exactly n classes on the desk-scale grid."""
    detail = []
    ok = True
    for p, n, m in [(2, 2, 2), (2, 3, 2), (2, 4, 2), (3, 2, 1), (3, 3, 1)]:
        rep = classify(p, n, m)
        good = (
            rep["status"] == "ok"
            and len(rep["classes"]) == n
            and all(d["iso"] for d in rep["deformations"])
            and all(
                e["separating_invariant"] is not None
                and not e.get("exhaustive_search_iso_found", False)
                for e in rep["nonisomorphism"]
            )
        )
        ok = ok and good
        detail.append({"p": p, "n": n, "m": m, "ok": good})
    return ok, {"grid": detail}


def _digit_key(fp, elt):
    digits, _, _ = fp.reduce(elt)
    return tuple(tuple(d.coeffs) for d in digits)


def criterion_5_fast_path_oracle(
    seed=0, partners=16, pair_exhaustive_limit=128, unary_exhaustive_limit=256,
    sample_size=48,
):
    """Digit normal form and the coordinate oracle agree on every module of
    order at most 2^12.  Per module: digit keys are computed for every
    element and checked injective (so the normal form is a bijection onto
    the oracle's canonical coordinates); the four unary operations and
    addition pairs are compared exhaustively on small modules and on
    deterministic samples on large ones."""
    rng = random.Random(seed)
    modules = 0
    for p in (2, 3, 5):
        for m in (1, 2):
            if p ** m > 32:
                continue
            field = field_create(p, m)
            avals = list(field.elements()) if m == 1 else [
                field.zero, field.generator()
            ]
            for n in range(1, 5):
                if p ** (m * n) > (1 << 12):
                    continue
                for i in range(1, n + 1):
                    for a in avals:
                        M = thm_one(field, n, i, a)
                        fp = M.fast_path
                        D = M.ambient.D
                        F1 = EElement.F(field, D, 1)
                        V1 = EElement.V(field, D, 1)
                        g = field.generator()
                        els = list(M.elements())
                        keys = set()
                        for x in els:
                            keys.add(_digit_key(fp, x.rep))
                        if len(keys) != len(els):
                            return False, {
                                "p": p, "m": m, "n": n, "i": i,
                                "a": list(a.coeffs), "reason": "digit collision",
                            }
                        if len(els) <= unary_exhaustive_limit:
                            unary_els = els
                        else:
                            unary_els = rng.sample(els, sample_size)
                        for x in unary_els:
                            # unary: F, V, p, Teichmüller scalar
                            for mod_res, raw in (
                                (x.act(F1), F1 * x.rep),
                                (x.act(V1), V1 * x.rep),
                                (x.act_p(), x.rep.int_mul(p)),
                                (x.act_scalar(g), EElement.teich(field, D, g) * x.rep),
                            ):
                                if _digit_key(fp, raw) != _digit_key(fp, mod_res.rep):
                                    return False, {
                                        "p": p, "m": m, "n": n, "i": i,
                                        "a": list(a.coeffs),
                                    }
                        if len(els) <= pair_exhaustive_limit:
                            pair_iter = ((x, y) for x in els for y in els)
                        else:
                            pair_iter = (
                                (rng.choice(els), rng.choice(els))
                                for _ in range(sample_size * partners)
                            )
                        for x, y in pair_iter:
                            if _digit_key(fp, x.rep + y.rep) != _digit_key(
                                fp, (x + y).rep
                            ):
                                return False, {
                                    "p": p, "m": m, "n": n, "i": i,
                                    "a": list(a.coeffs), "reason": "addition",
                                }
                        modules += 1
    return True, {"modules": modules}


def criterion_6_p_equals_F_power():
    """p acts as F^{i+1} on ThmOne(n, i, 0), as an identity of matrices on a
    spanning set.  Over prime fields, where E is commutative; over F_{p^m}
    with m > 1 the two maps differ by a sigma-twist on coefficients and are
    only semilinearly equal."""
    checked = 0
    for p, m in [(2, 1), (3, 1), (5, 1)]:
        field = field_create(p, m)
        for n in range(1, 5):
            for i in range(1, n + 1):
                M = thm_one(field, n, i, field.zero)
                D = M.ambient.D
                Fi1 = EElement.F(field, D, i + 1)
                for gen in M.ambient.lattice_generators():
                    x = M.reduce(gen)
                    if x.act_p() != x.act(Fi1):
                        return False, {"p": p, "m": m, "n": n, "i": i}
                checked += 1
    return True, {"modules": checked}


def criterion_7_presentation_vs_kernel():
    """Presentation-based and kernel-based Hopf constructions coincide, and
    the ker(F^3) chain reproduces k[T0,T1]/(T0^p, T1^{p^2} - T0)."""
    base = field_create(2, 1)
    for r, s, mult in [(1, 1, 2), (2, 1, 2), (1, 2, 2)]:
        equal, _, _ = match_presentation_direct(2, r, s, mult, base)
        if not equal:
            return False, {"r": r, "s": s, "m": mult}
    A = build_kernel_hopf_presentation(2, 2, 1, 2, base)
    C = kernel_frobenius_power(A, 3)
    alg = C.pres.alg if C.pres else None
    shape_ok = C.dim == 8
    # verify the defining relations T0^p = 0 and T1^{p^2} = T0 hold in C
    from .witt import TestAlgebra
    from .hopf import (
        _tensor_rules,
        _witt_antipode_gens,
        _witt_comul_gens,
        build_presentation_hopf,
    )

    caps, repls, names = [2, 4], [None, (1, 0)], ["T0", "T1"]
    caps2, repls2 = _tensor_rules(caps, repls)
    algT = TestAlgebra(base, caps, repls, names)
    alg2T = TestAlgebra(base, caps2, repls2)
    T = build_presentation_hopf(
        base, caps, repls, names,
        _witt_comul_gens(alg2T, 2, 2), _witt_antipode_gens(algT, 2, 2),
    )
    tensors_ok = (
        shape_ok
        and np.array_equal(C.mul % 2, T.mul % 2)
        and np.array_equal(C.comul % 2, T.comul % 2)
    )
    return tensors_ok, {"chain_dim": C.dim}


def criterion_8_duality_dimensions():
    """dim = p^{sn'} = p^{rn}; dual invariant reports match the
    swapped-parameter presentations."""
    base = field_create(2, 1)
    from .emodule import kernel_fv_params

    for r, s in [(1, 1), (2, 1), (1, 2)]:
        n, nprime = kernel_fv_params(r, s, 2)
        A = build_kernel_hopf_presentation(2, r, s, 2, base)
        if A.dim != 2 ** (s * nprime) or A.dim != 2 ** (r * n):
            return False, {"r": r, "s": s, "reason": "dimension"}
        swapped = build_kernel_hopf_presentation(2, s, r, 2, base)
        if invariant_report(dual_hopf(A)).as_dict() != invariant_report(swapped).as_dict():
            return False, {"r": r, "s": s, "reason": "invariants"}
    return True, {"pairs": [[1, 1], [2, 1], [1, 2]]}


def criterion_9_selfdual_example():
    """The dual-basis assignment is a Hopf isomorphism, and the stated
    four-generator map from k[ker(F-V)^2] is a Hopf isomorphism, at p = 2, 3.

    The second half fails: the stated map is a bijective algebra map (p = 3)
    whose coalgebra condition breaks on Y1, and the failure is intrinsic —
    over the prime field only the primitive direction T0 + U0 admits a
    second Witt coordinate, so no isomorphism exists by any map.  The detail
    records the per-direction counts."""
    detail = {}
    ok = True
    for p in (2, 3):
        base = field_create(p, 1)
        G = build_selfdual_example(p, base)
        f, Gd = selfdual_assignment_map(G)
        assign_ok = hopf_map_is_isomorphism(G, Gd, f)
        W, G2, fw = selfdual_explicit_w2fv_map(p, base)
        map_ok = hopf_map_is_isomorphism(W, G2, fw)
        alg = G.pres.alg
        t0, u0 = G.vec(alg.gen(0)), G.vec(alg.gen(2))
        dirs = [(1, 0), (0, 1), (1, 1)] + ([(1, 2)] if p > 2 else [])
        counts = {
            f"{d[0]},{d[1]}": witt_pair_count(G, (d[0] * t0 + d[1] * u0) % p)
            for d in dirs
        }
        detail[str(p)] = {
            "assignment_iso": assign_ok,
            "explicit_map_iso": map_ok,
            "witt_pair_counts_by_direction": counts,
        }
        ok = ok and assign_ok and map_ok
    return ok, detail


def criterion_10_noncommutative_example():
    """Noncommutative example at (2,2) and (2,3): axioms, flags, commutator
    relations and lie_dim."""
    for n in (2, 3):
        A, Ad, rep = build_noncommutative_example(2, n, field_create(2, 1))
        good = (
            rep["axioms_A"]["all_pass"]
            and rep["axioms_dual"]["all_pass"]
            and rep["A_commutative"]
            and not rep["A_cocommutative"]
            and not rep["axioms_dual"]["commutative"]
            and rep["dual_commutators"]
            and rep["lie_dim_A"] == 1
        )
        if not good:
            return False, {"n": n, "report": {k: v for k, v in rep.items() if not isinstance(v, dict)}}
    return True, {"n": [2, 3]}


def _suite_algebras():
    F2, F3, F5 = field_create(2, 1), field_create(3, 1), field_create(5, 1)
    out = []
    for base in (F2, F3):
        p = base.p
        out.append(build_alpha_hopf(p, 1, base))
        out.append(build_alpha_hopf(p, 2, base))
        out.append(build_alpha_hopf(p, 3, base))
        out.append(build_alpha_p_squared(p, base))
        out.append(build_kernel_hopf_presentation(p, 1, 1, 2, base))
        out.append(build_h_subgroup(p, base))
        out.append(dual_hopf(build_h_subgroup(p, base)))
    out.append(build_selfdual_example(2, F2))
    out.append(build_w2fv_square(2, F2))
    out.append(build_alpha_hopf(5, 1, F5))
    out.append(build_alpha_hopf(5, 2, F5))
    out.append(build_alpha_p_squared(5, F5))
    out.append(build_kernel_hopf_presentation(5, 1, 1, 2, F5))
    out.append(build_kernel_hopf_presentation(2, 2, 1, 2, F2))
    out.append(build_kernel_hopf_presentation(2, 1, 2, 2, F2))
    out.append(build_witt_hopf(2, 2, F2, 2))
    out.append(build_noncommutative_example(2, 2, F2)[0])
    out.append(build_noncommutative_example(2, 3, F2)[0])
    return out


def criterion_11_invariant_inequalities():
    """max(lie, height) <= n <= lie*height and v_order <= n on >= 20
    constructed Hopf algebras."""
    algebras = _suite_algebras()
    count = 0
    for A in algebras:
        inv = invariant_report(A)  # raises on violation
        if not (
            max(inv.lie_dim, inv.height) <= inv.order_exponent <= inv.lie_dim * inv.height
            and inv.v_order <= inv.order_exponent
        ):
            return False, {"dim": A.dim}
        count += 1
    return count >= 20, {"instances": count}


def criterion_12_extension_remark():
    """Among ThmOne(4, i, 0) at p = 2, exactly i in {3, 4} have
    ker(F^3)-quotient isomorphic to the alpha_{p^3} module."""
    field = field_create(2, 1)
    target = thm_one(field, 3, 3, field.zero)
    hits = []
    for i in range(1, 5):
        M = thm_one(field, 4, i, field.zero)
        Q = quotient_by_F_power(M, 3)
        if Q.log_size != target.log_size:
            continue
        if exhaustive_iso_search(Q, target) is not None:
            hits.append(i)
    return hits == [3, 4], {"isomorphic_i": hits}


def criterion_13_ellcurves_shadow():
    """W_2^2[V-F]: kernel profile matches the dual's swapped presentation and
    the invariant report is (order 2, height 2, v_order 2, lie 1), p = 2, 3."""
    for p in (2, 3):
        field = field_create(p, 1)
        M = kernel_fv(field, 1, 1, 2, 2)
        dualM = kernel_fv(field, 1, 1, 2, 2)  # swapped (s, r, n', n) = same
        if M.kernel_profile() != dualM.kernel_profile():
            return False, {"p": p, "reason": "profile"}
        inv = invariant_report(build_kernel_hopf_presentation(p, 1, 1, 2, field_create(p, 1)))
        if (inv.order_exponent, inv.height, inv.v_order, inv.lie_dim) != (2, 2, 2, 1):
            return False, {"p": p, "reason": "invariants", "report": inv.as_dict()}
    return True, {"p": [2, 3]}


CRITERIA = [
    (1, "ghost identities", criterion_1_ghost_identities),
    (2, "S_1 formula match", criterion_2_s1_match),
    (3, "FV = VF = p on W_3(F_4)", criterion_3_fv_exhaustive),
    (4, "classification grid", criterion_4_classification),
    (5, "fast path vs oracle", criterion_5_fast_path_oracle),
    (6, "p = F^{i+1} on representatives", criterion_6_p_equals_F_power),
    (7, "presentation vs kernel construction", criterion_7_presentation_vs_kernel),
    (8, "duality dimensions", criterion_8_duality_dimensions),
    (9, "self-dual example maps", criterion_9_selfdual_example),
    (10, "noncommutative example", criterion_10_noncommutative_example),
    (11, "invariant inequalities", criterion_11_invariant_inequalities),
    (12, "extension quotients", criterion_12_extension_remark),
    (13, "order-p^2 self-dual kernel", criterion_13_ellcurves_shadow),
]


def run_all(seed=0):
    """Run every criterion; returns a list of result dicts in order."""
    results = []
    for num, name, fn in CRITERIA:
        try:
            if fn is criterion_5_fast_path_oracle:
                ok, detail = fn(seed=seed)
            else:
                ok, detail = fn()
            status = "pass" if ok else "fail"
        except GuardError as exc:
            ok, detail, status = False, {"guard": str(exc)}, "budget-exceeded"
        results.append(
            {"criterion": num, "name": name, "status": status, "detail": detail}
        )
    return results
