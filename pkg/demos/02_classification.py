"""Classification walkthrough at desk scale.

For fixed (p, n, m) there are exactly n isomorphism classes of cyclic
Dieudonné modules E/(E(V - [a]F^i) + EF^n) with one-dimensional Lie
algebra: the parameter a deforms the module but never changes the class,
while distinct i are separated by computable invariants.  This script runs
the verified classification for a small grid and prints the evidence.
"""

from wittlab.emodule import (
    classify,
    exhaustive_iso_search,
    quotient_by_F_power,
    thm_one,
)
from wittlab.ffield import field_create


def run(p, n, m):
    print(f"-- classify p = {p}, n = {n}, field F_{p ** m}")
    rep = classify(p, n, m)
    print(f"   status: {rep['status']}; classes found: {len(rep['classes'])}")
    for cls in rep["classes"]:
        row = {(r, s): v for r, s, v in cls["kernel_profile"]}
        line = [row[(r, 1)] for r in range(n + 1)]
        print(f"   i = {cls['i']}: length {cls['length']}, "
              f"log|ker(F^r) ∩ ker(V)| for r = 0..{n}: {line}")
    iso = sum(1 for d in rep["deformations"] if d["iso"])
    print(f"   deformations ThmOne(n, i, a) ~ ThmOne(n, i, 0): "
          f"{iso}/{len(rep['deformations'])} verified isomorphic")
    sep = sum(1 for d in rep["nonisomorphism"]
              if d["separating_invariant"] is not None)
    print(f"   distinct i separated by invariants: "
          f"{sep}/{len(rep['nonisomorphism'])} pairs")


def extension_filtration(p=2, n=4):
    print(f"-- ker(F^3)-quotients of the order-{p**n} classes (p = {p})")
    field = field_create(p, 1)
    target = thm_one(field, 3, 3, field.zero)
    for i in range(1, n + 1):
        M = thm_one(field, n, i, field.zero)
        Q = quotient_by_F_power(M, 3)
        if Q.log_size != target.log_size:
            print(f"   i = {i}: quotient has order p^{Q.log_size}")
            continue
        hit = exhaustive_iso_search(Q, target)
        tag = ("isomorphic to the i = 3 class" if hit is not None
               else "NOT isomorphic to the i = 3 class")
        print(f"   i = {i}: quotient of order p^3, {tag}")


if __name__ == "__main__":
    run(2, 3, 2)
    run(3, 2, 1)
    extension_filtration()
