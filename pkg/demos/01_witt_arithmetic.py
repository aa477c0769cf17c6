"""Tour of truncated Witt-vector arithmetic.

Generates the universal addition polynomials S_j, checks them against the
ghost components, and then runs concrete arithmetic in W_3 over F_4,
including the exhaustive FV = VF = p check.
"""

from wittlab.ffield import field_create
from wittlab.witt import WittVector, witt_elements
from wittlab.wittpoly import (
    s1_poly,
    unpack,
    verify_ghost_identities,
    witt_structure_polys,
)


def poly_str(f, names):
    terms = []
    for key in sorted(f):
        c = f[key]
        exps = unpack(key, len(names))
        mono = "".join(
            f"{names[v]}^{e}" if e > 1 else names[v]
            for v, e in enumerate(exps)
            if e
        )
        if mono:
            terms.append(mono if c == 1 else f"{c}*{mono}")
        else:
            terms.append(str(c))
    return " + ".join(terms).replace("+ -", "- ")


def show_structure_polys(p, n):
    print(f"-- addition polynomials S_0..S_{n - 1} at p = {p}")
    polys = witt_structure_polys(p, n)["add"]
    names = [v for j in range(n) for v in (f"X{j}", f"Y{j}")]
    for j, f in enumerate(polys):
        print(f"   S_{j} = {poly_str(f, names)}")
    ok = verify_ghost_identities(p, n, samples=3)
    print(f"   ghost-component identities: {'ok' if ok else 'FAIL'}")


def carry_demo(p):
    print(f"-- the carry S_1 at p = {p}")
    f = s1_poly(p)
    print(f"   S_1 has {len(f)} terms; it is the divided carry "
          f"(X0^p + Y0^p - (X0+Y0)^p)/p plus X1 + Y1")


def fv_demo():
    print("-- FV = VF = p on all 64 vectors of W_3(F_4)")
    field = field_create(2, 2)
    bad = 0
    for x in witt_elements(field, 3):
        fv = x.frobenius().verschiebung()
        vf = x.verschiebung().frobenius()
        px = x + x  # p = 2
        if fv != px or vf != px:
            bad += 1
    print(f"   violations: {bad}")
    g = field.generator()
    x = WittVector(field, [g, field.one, g * g])
    print(f"   sample: x = {x}")
    print(f"           F(x) = {x.frobenius()}")
    print(f"           V(x) = {x.verschiebung()}")
    print(f"           x + x = {x + x}")


if __name__ == "__main__":
    show_structure_polys(2, 3)
    show_structure_polys(3, 2)
    carry_demo(5)
    fv_demo()
