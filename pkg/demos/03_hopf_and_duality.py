"""Hopf-algebra constructions, Cartier duality, and two instructive examples.

Walks through: kernel group schemes ker(F^r - V^s) on truncated Witt
groups, the dimension-preserving dual with swapped (r, s), a
noncommutative dual with its corrected top p-power relation, and the
self-dual example together with the obstruction to writing it as
ker(F - V: W_2 -> W_2)^2 over the prime field.
"""

import numpy as np

from wittlab.ffield import field_create
from wittlab.hopf import (
    build_kernel_hopf_presentation,
    build_noncommutative_example,
    build_selfdual_example,
    dual_hopf,
    hopf_map_is_isomorphism,
    invariant_report,
    primitive_space,
    selfdual_assignment_map,
    selfdual_explicit_w2fv_map,
    witt_pair_count,
)


def duality_demo(p=2, cases=((1, 1, 2), (2, 1, 2), (1, 2, 2))):
    print(f"-- Cartier duality for kernel subgroups of Witt groups (p = {p})")
    for r, s, mult in cases:
        A = build_kernel_hopf_presentation(p, r, s, mult, field_create(p, 1))
        Ad = dual_hopf(A)
        inv, dinv = invariant_report(A), invariant_report(Ad)
        print(f"   ker(F^{r} - V^{s}): dim {A.dim}; "
              f"(height, v_order) = ({inv.height}, {inv.v_order}); "
              f"dual has ({dinv.height}, {dinv.v_order})")


def noncommutative_demo(p=2, n=2):
    print(f"-- noncommutative dual of k[T0,T1]/(T0^{{p^n}}, T1^p - T0), "
          f"(p, n) = ({p}, {n})")
    A, Ad, rep = build_noncommutative_example(p, n, field_create(p, 1))
    print(f"   dim {A.dim}; axioms ok: "
          f"{rep['axioms_A']['all_pass'] and rep['axioms_dual']['all_pass']}; "
          f"dual noncommutative: {not Ad.is_commutative()}")
    print(f"   commutators [U_j, U_k] as expected: {rep['dual_commutators']}")
    print(f"   U_j^p = 0 for j < n: {rep['dual_p_powers_low']}")
    print(f"   U_n^p = 0: {rep['dual_top_p_power_zero']}  "
          f"(instead U_n^p = U_0^{{p-1}} U_{{n-1}}: "
          f"{rep['dual_top_p_power_is_corrected']})")


def selfdual_demo(p):
    print(f"-- self-dual example G at p = {p}")
    G = build_selfdual_example(p, field_create(p, 1))
    f, Gd = selfdual_assignment_map(G)
    print(f"   dim {G.dim}; dual-basis assignment is a Hopf isomorphism "
          f"G -> G^dual: {hopf_map_is_isomorphism(G, Gd, f)}")
    W, G2, g = selfdual_explicit_w2fv_map(p, field_create(p, 1))
    print(f"   explicit textbook map ker(F - V)^2 -> G is a Hopf iso: "
          f"{hopf_map_is_isomorphism(W, G2, g)}")
    # the obstruction: a Hopf iso from ker(F-V)^2 needs two independent
    # primitive directions x0 each extending to a Witt pair (x0, w) with
    # Delta(w) = w(x)1 + 1(x)w + S_1 and w^p = x0.  Count the pairs over
    # every primitive line of G.
    prim = primitive_space(G2)
    counts = {}
    for c0 in range(p):
        for c1 in range(p):
            if c0 == c1 == 0:
                continue
            x0 = (c0 * prim[0] + c1 * prim[1]) % p
            counts[(c0, c1)] = witt_pair_count(G2, x0)
    good = [d for d, c in counts.items() if c]
    print(f"   primitive directions admitting a Witt pair: {good} "
          f"out of {len(counts)} -- only one line, so no Hopf iso "
          f"from ker(F - V)^2 exists over F_{p}")


if __name__ == "__main__":
    duality_demo(2)
    duality_demo(3, cases=((1, 1, 2),))
    noncommutative_demo(2, 2)
    noncommutative_demo(2, 3)
    selfdual_demo(2)
    selfdual_demo(3)
