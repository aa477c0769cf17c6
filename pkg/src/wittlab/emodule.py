"""Finite-length cyclic left E-modules, morphisms, and the classification.

Every module in scope is a quotient of the ambient finite module

    E_n^{n'} = E / (E F^{n'} + E V^n),

which is free over the layered coefficient truncations: the coefficient of
V^a lives in W_{min(n-a, n')}(k) and that of F^b in W_{min(n'-b, n)}(k), so
|E_n^{n'}| = p^(m n n').  Writing W_L(k) as the free Z/p^L-module on the
Teichmueller basis [1], [g], ..., [g^{m-1}] (g the power-basis generator of
k) identifies the ambient, as an abelian group, with a product of cyclic
p-groups; in those coordinates grouped arithmetic is honestly linear over
Z/p^D (D = min(n, n')), every additive map is a matrix, and subgroups are
Howell normal forms.  All module elements nevertheless carry exact
Dieudonne-ring representatives, and every structural action (F, V, p,
Teichmueller scalars, ideal membership) is computed by exact e_mul
arithmetic before being coordinatized.

The ThmOne family additionally carries a Teichmueller-digit fast path that
rewrites any ring element to sum_j [c_j] F^j by the three rules
(V-elimination, p-carry, F^n-truncation) and emits an (e_1, e_2)
certificate with x - result = e_1 g + e_2 F^n, re-verified by e_mul.
"""

from __future__ import annotations

import itertools
import os

from .dieudonne import EElement
from .ffield import Field, FieldElement, FieldEmbedding, field_create, find_roots
from .witt import WittVector, teichmuller, witt_digits, witt_one, witt_zero

GUARD_DIM_DEFAULT = 1 << 14


def dimension_guard():
    return int(os.environ.get("WD_GUARD_DIM", GUARD_DIM_DEFAULT))


class GuardError(RuntimeError):
    """A configured resource guard would be exceeded."""


class VerificationError(RuntimeError):
    """An internal cross-check failed (implementation bug signal)."""


def _val(x, p, D):
    """p-adic valuation of x mod p^D (val of 0 is D)."""
    x %= p ** D
    if x == 0:
        return D
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


class HowellBasis:
    """Howell normal form of a subgroup of (Z/p^D)^ncols, rows as tuples.

    Supports insertion, complete membership testing, canonical coset
    reduction and size computation.  Rows are kept normalized: the pivot
    entry of each row is exactly p^v for its valuation v, pivot columns are
    strictly increasing, and entries of other rows at a pivot column are
    reduced mod p^v.
    """

    def __init__(self, p, D, ncols):
        self.p = p
        self.D = D
        self.q = p ** D
        self.ncols = ncols
        self.rows = {}  # pivot column -> (valuation, row list)

    def insert(self, vec):
        p, q, D = self.p, self.q, self.D
        stack = [[x % q for x in vec]]
        changed = False
        while stack:
            v = stack.pop()
            while True:
                c = next((i for i, x in enumerate(v) if x), None)
                if c is None:
                    break
                val = _val(v[c], p, D)
                if c in self.rows:
                    val0, r0 = self.rows[c]
                    if val >= val0:
                        t = v[c] // (p ** val0)
                        v = [(a - t * b) % q for a, b in zip(v, r0)]
                        continue
                    # the new row has a smaller valuation: swap it in
                    nv = self._normalize(v, c, val)
                    self.rows[c] = (val, nv)
                    changed = True
                    if val > 0:
                        stack.append([(p ** (D - val)) * x % q for x in nv])
                    v = list(r0)
                    continue
                nv = self._normalize(v, c, val)
                self.rows[c] = (val, nv)
                changed = True
                if val > 0:
                    stack.append([(p ** (D - val)) * x % q for x in nv])
                break
        if changed:
            self._full_reduce()
        return changed

    def _normalize(self, v, c, val):
        # scale so the pivot entry becomes exactly p^val
        u = v[c] // (self.p ** val)
        inv = pow(u, -1, self.q)
        return [(inv * x) % self.q for x in v]

    def _full_reduce(self):
        cols = sorted(self.rows)
        for c in reversed(cols):
            val_c, row_c = self.rows[c]
            for c2 in cols:
                if c2 <= c:
                    continue
                val2, row2 = self.rows[c2]
                a = row_c[c2]
                if a >= self.p ** val2:
                    t = a // (self.p ** val2)
                    row_c = [(x - t * y) % self.q for x, y in zip(row_c, row2)]
            self.rows[c] = (val_c, row_c)

    def reduce(self, vec):
        """Canonical coset representative of vec modulo the row span."""
        q, p = self.q, self.p
        v = [x % q for x in vec]
        for c in sorted(self.rows):
            val, row = self.rows[c]
            t = v[c] // (p ** val)
            if t:
                v = [(a - t * b) % q for a, b in zip(v, row)]
        return tuple(v)

    def contains(self, vec):
        return not any(self.reduce(vec))

    def log_size(self):
        """log_p of the subgroup order."""
        return sum(self.D - val for val, _ in self.rows.values())

    def pivot_bound(self, c):
        """Canonical residues at column c live in [0, p^bound)."""
        if c in self.rows:
            return self.rows[c][0]
        return self.D


class Ambient:
    """The module E_n^{n'} over F_{p^m}, with exact coordinates."""

    def __init__(self, field: Field, n, nprime):
        self.field = field
        self.p = field.p
        self.m = field.m
        self.n = n
        self.nprime = nprime
        dim = field.m * n * nprime
        if dim > dimension_guard():
            raise GuardError(
                f"ambient F_p-dimension {dim} exceeds guard {dimension_guard()}"
            )
        self.D = min(n, nprime)
        self.q = self.p ** self.D
        self.keys = list(range(-(n - 1), nprime))
        self.L = {}
        for k in self.keys:
            self.L[k] = min(n + k, nprime) if k < 0 else min(nprime - k, n)
        self.cols = [(k, j) for k in self.keys for j in range(self.m)]
        self.col_index = {cj: i for i, cj in enumerate(self.cols)}
        self.ncols = len(self.cols)
        self.log_total = sum(self.L[k] for k in self.keys) * self.m
        g = field.generator()
        self.gpows = [g ** j for j in range(self.m)]

    # -- normal form ---------------------------------------------------------

    def normalize(self, e: EElement):
        """Reduce an EElement mod (EF^{n'} + EV^n): keep in-range keys and
        truncate each coefficient to its layer length."""
        out = {}
        for k, c in e.terms.items():
            if k < -(self.n - 1) or k >= self.nprime:
                continue
            t = c.truncate(self.L[k]) if c.length > self.L[k] else c
            if not t.is_zero():
                out[k] = t
        return out

    def to_vec(self, e: EElement):
        """Z/p^D coordinates of the class of e, additive and bijective."""
        nf = self.normalize(e)
        vec = [0] * self.ncols
        for k, c in nf.items():
            scale = self.p ** (self.D - self.L[k])
            for j, a in enumerate(self._witt_coords(c)):
                vec[self.col_index[(k, j)]] = (a * scale) % self.q
        return tuple(vec)

    def _witt_coords(self, c: WittVector):
        """Coordinates of c in the Z/p^L basis [g^0], ..., [g^(m-1)]."""
        L = c.length
        coords = [0] * self.m
        cur = c
        for t in range(L):
            layer = cur.coords[0].coeffs  # power-basis expansion in k
            sub = witt_zero(self.field, cur.length)
            for j, a in enumerate(layer):
                coords[j] += a * self.p ** t
                if a:
                    sub = sub + teichmuller(
                        self.field, self.gpows[j], cur.length
                    ).int_mul(a)
            cur = (cur - sub).shift_down().sigma(-1)
        return coords

    def elt_from_vec(self, vec):
        """A lift of the coordinate vector back to an EElement (length D)."""
        terms = {}
        for k in self.keys:
            scale = self.p ** (self.D - self.L[k])
            c = witt_zero(self.field, self.L[k])
            for j in range(self.m):
                a = vec[self.col_index[(k, j)]] // scale
                if a:
                    c = c + teichmuller(
                        self.field, self.gpows[j], self.L[k]
                    ).int_mul(a)
            if not c.is_zero():
                terms[k] = c.extend(self.D)
        return EElement(self.field, self.D, terms)

    def lattice_generators(self):
        """Elements whose Z/p^D span is the whole ambient group."""
        out = []
        for k in self.keys:
            for j in range(self.m):
                coeff = teichmuller(self.field, self.gpows[j], self.D)
                out.append(EElement(self.field, self.D, {k: coeff}))
        return out

    def monomials(self, bound=None):
        """Operator monomials V^a, 1, F^b (as EElements) spanning enough of E
        to generate any left ideal's image here."""
        if bound is None:
            bound = self.n + self.nprime
        out = [EElement.one(self.field, self.D)]
        for a in range(1, bound + 1):
            out.append(EElement.V(self.field, self.D, a))
        for b in range(1, bound + 1):
            out.append(EElement.F(self.field, self.D, b))
        return out


class ModElt:
    """An element of an EModule: canonical coordinates plus an exact lift."""

    __slots__ = ("module", "vec", "_rep")

    def __init__(self, module, vec, rep=None):
        self.module = module
        self.vec = vec
        self._rep = rep

    @property
    def rep(self):
        if self._rep is None:
            self._rep = self.module.ambient.elt_from_vec(self.vec)
        return self._rep

    def is_zero(self):
        return not any(self.vec)

    def __add__(self, other):
        assert other.module is self.module
        return self.module.reduce(self.rep + other.rep)

    def __sub__(self, other):
        assert other.module is self.module
        return self.module.reduce(self.rep - other.rep)

    def __neg__(self):
        return self.module.reduce(-self.rep)

    def act(self, e: EElement):
        """Left action of a ring element."""
        return self.module.reduce(e * self.rep)

    def act_F(self):
        return self.act(EElement.F(self.module.field, self.module.ambient.D))

    def act_V(self):
        return self.act(EElement.V(self.module.field, self.module.ambient.D))

    def act_p(self):
        return self.module.reduce(self.rep.int_mul(self.module.field.p))

    def act_scalar(self, c: FieldElement):
        return self.act(EElement.teich(self.module.field, self.module.ambient.D, c))

    def __eq__(self, other):
        return (
            isinstance(other, ModElt)
            and self.module is other.module
            and self.vec == other.vec
        )

    def __hash__(self):
        return hash(self.vec)

    def __repr__(self):
        return f"[{self.rep!r}]"


class EModule:
    """E/(E g_1 + ... + E g_r + E F^{n'} + E V^n) over F_{p^m}."""

    def __init__(self, ambient: Ambient, rel_gens, family=None, fast_path=None):
        self.ambient = ambient
        self.field = ambient.field
        self.rel_gens = list(rel_gens)
        self.family = family
        self.fast_path = fast_path
        self.rel = HowellBasis(ambient.p, ambient.D, ambient.ncols)
        for g in self.rel_gens:
            g = retruncate(g, ambient.D)
            for mono in ambient.monomials():
                for j in range(ambient.m):
                    scalar = EElement.teich(self.field, ambient.D, ambient.gpows[j])
                    self.rel.insert(ambient.to_vec(scalar * mono * g))
        self.log_size = ambient.log_total - self.rel.log_size()
        self.zero = ModElt(self, (0,) * ambient.ncols)

    @property
    def length(self):
        """k-length: log_p |M| / m (integral for all families in scope)."""
        q, r = divmod(self.log_size, self.ambient.m)
        if r:
            raise VerificationError("module size is not a power of |k|")
        return q

    def reduce(self, e: EElement) -> ModElt:
        return ModElt(self, self.rel.reduce(self.ambient.to_vec(e)))

    @property
    def unit(self):
        return self.reduce(EElement.one(self.field, self.ambient.D))

    def elements(self):
        """All elements, by their canonical coordinate vectors."""
        amb = self.ambient
        ranges = []
        for c, (key, _) in enumerate(amb.cols):
            step = amb.p ** (amb.D - amb.L[key])
            bound = amb.p ** self.rel.pivot_bound(c)
            ranges.append(range(0, bound, step))
        for vec in itertools.product(*ranges):
            yield ModElt(self, vec)

    def is_zero_elt(self, e: EElement):
        return self.rel.contains(self.ambient.to_vec(e))

    def submodule_span(self, elements, extra_cols=0):
        """Howell span of E·x for the given exact elements, including the
        relation subgroup; returns the HowellBasis (over ambient coords)."""
        amb = self.ambient
        hb = HowellBasis(amb.p, amb.D, amb.ncols)
        for _, row in self.rel.rows.values():
            hb.insert(row)
        for x in elements:
            for mono in amb.monomials():
                for j in range(amb.m):
                    scalar = EElement.teich(self.field, amb.D, amb.gpows[j])
                    hb.insert(amb.to_vec(scalar * mono * x))
        return hb

    def kernel_profile(self, bound=None):
        """Table {(r, s): k-length of ker(F^r) cap ker(V^s)}, 0 <= r, s <= n.

        Computed as |M| / |image of x -> (F^r x, V^s x)|, with the image
        accumulated in the ambient square (relation rows adjoined on both
        sides), so only subgroup sizes are needed — no digit-linearity
        assumptions.
        """
        amb = self.ambient
        if bound is None:
            bound = amb.n
        gens = amb.lattice_generators()
        table = {}
        for r in range(bound + 1):
            for s in range(bound + 1):
                Fr = EElement.F(self.field, amb.D, r) if r else EElement.one(
                    self.field, amb.D
                )
                Vs = EElement.V(self.field, amb.D, s) if s else EElement.one(
                    self.field, amb.D
                )
                hb = HowellBasis(amb.p, amb.D, 2 * amb.ncols)
                zero = (0,) * amb.ncols
                for _, row in self.rel.rows.values():
                    hb.insert(tuple(row) + zero)
                    hb.insert(zero + tuple(row))
                for x in gens:
                    hb.insert(amb.to_vec(Fr * x) + amb.to_vec(Vs * x))
                log_im = hb.log_size() - 2 * self.rel.log_size()
                log_ker = self.log_size - log_im
                q, rem = divmod(log_ker, amb.m)
                if rem:
                    raise VerificationError("kernel length not integral over k")
                table[(r, s)] = q
        return table

    def __repr__(self):
        fam = f" {self.family}" if self.family else ""
        return (
            f"EModule{fam}(E_{self.ambient.n}^{self.ambient.nprime}"
            f" over {self.field}, length {self.length})"
        )


def retruncate(e: EElement, N):
    """The same ring element with coefficients truncated/padded to length N."""
    terms = {}
    for k, c in e.terms.items():
        terms[k] = c.truncate(N) if c.length >= N else c.extend(N)
    return EElement(e.field, N, terms)


# ---------------------------------------------------------------------------
# module families
# ---------------------------------------------------------------------------


def thm_one(field: Field, n, i, a=None):
    """M = E/(E(V - F^i - [a]F^{n-1}) + EF^n), the order-p^n family."""
    if not 1 <= i <= n:
        raise ValueError("need 1 <= i <= n")
    if a is None:
        a = field.zero
    amb = Ambient(field, n, n)
    g = (
        EElement.V(field, amb.D)
        - EElement.F(field, amb.D, i)
        - EElement.teich(field, amb.D, a) * EElement.F(field, amb.D, n - 1)
    )
    fp = FastPath(field, n, g)
    return EModule(amb, [g], family=("ThmOne", n, i, a), fast_path=fp)


def psi_source(field: Field, n, a):
    """M = E/(E(V - [a]F^{n-1}) + EF^n), the Prop-psi source presentation."""
    amb = Ambient(field, n, n)
    g = EElement.V(field, amb.D) - EElement.teich(field, amb.D, a) * EElement.F(
        field, amb.D, n - 1
    )
    fp = FastPath(field, n, g)
    return EModule(amb, [g], family=("PsiSource", n, a), fast_path=fp)


def full_witt(field: Field, n, nprime):
    """E_n^{n'} itself, the module of W_n^{n'}."""
    return EModule(Ambient(field, n, nprime), [], family=("FullWitt", n, nprime))


def kernel_fv_params(r, s, mult):
    """(n, n') for W_n^{n'}[F^r - V^s] at multiplicity ``mult``:
    n = min(s*mult*d/r, mult*d), n' = min(r*mult*d/s, mult*d), d = lcm(r,s)."""
    import math

    d = math.lcm(r, s)
    n = min(s * mult * d // r, mult * d)
    nprime = min(r * mult * d // s, mult * d)
    return n, nprime


def kernel_fv(field: Field, r, s, n, nprime):
    """M = E/(E(F^r - V^s) + EF^{n'}) inside the ambient E_n^{n'}."""
    amb = Ambient(field, n, nprime)
    g = EElement.F(field, amb.D, r) - EElement.V(field, amb.D, s)
    return EModule(amb, [g], family=("KernelFV", r, s, n, nprime))


def dual_presentation(r, s, n, nprime):
    """Cartier-dual parameters: roles of (r, s) and (n, n') swap."""
    return (s, r, nprime, n)


def quotient_by_F_power(M: EModule, j):
    """M / (M F^j), the module of ker(F^j) on the group scheme side."""
    if not 0 <= j:
        raise ValueError("j must be nonnegative")
    amb = M.ambient
    extra = EElement.F(M.field, amb.D, j) if j else EElement.one(M.field, amb.D)
    return EModule(
        amb,
        M.rel_gens + [extra],
        family=(M.family, "modF", j) if M.family else ("modF", j),
    )


# ---------------------------------------------------------------------------
# ThmOne fast path: Teichmueller-digit normal form with certificates
# ---------------------------------------------------------------------------


class FastPath:
    """Digit normal form for E/(E g + E F^n) with g = V - (F-polynomial).

    reduce(x) returns (digits, e1, e2) with

        x = sum_j [digits[j]] F^j + e1 * g + e2 * F^n

    verified exactly by e_mul at coefficient truncation n (sound because
    p^n E lies in the ideal).
    """

    def __init__(self, field: Field, n, g: EElement):
        self.field = field
        self.n = n
        self.g = retruncate(g, n)
        self.Fn = EElement.F(field, n, n)

    def reduce(self, x: EElement, check=True):
        n, field = self.n, self.field
        x0 = retruncate(x, n)
        x = x0
        e1 = EElement.zero(field, n)
        e2 = EElement.zero(field, n)

        def drop_high(x, e2):
            # R3: F^b with b >= n dies via e2
            for k in sorted(x.terms):
                if k >= n:
                    xi = EElement.monomial(field, n, k - n, x.terms[k])
                    e2 = e2 + xi
                    x = x - xi * self.Fn
            return x, e2

        x, e2 = drop_high(x, e2)
        # R1: eliminate V-monomials from the top down
        while any(k < 0 for k in x.terms):
            a = -min(x.terms)
            c = x.terms[-a]
            xi = EElement.monomial(field, n, -(a - 1), c)
            x = x - xi * self.g
            e1 = e1 + xi
            x, e2 = drop_high(x, e2)
        # R2: make each remaining coefficient a Teichmueller lift
        digits = [field.zero] * n
        b = 0
        while b < n:
            c = x.terms.get(b)
            if c is None:
                b += 1
                continue
            gamma = c.coords[0]
            digits[b] = gamma
            tail = c - teichmuller(field, gamma, n)
            if tail.is_zero():
                b += 1
                continue
            # tail = p*u: route the carry through F^{b+1} V = p F^b
            u = tail.shift_down().sigma(-1).extend(n)
            xi = EElement.monomial(field, n, b + 1, u)
            x = x - xi * self.g
            e1 = e1 + xi
            # the substitution leaves [gamma] at F^b and only moves mass up
            x, e2 = drop_high(x, e2)
            want = teichmuller(field, gamma, n)
            got = x.terms.get(b)
            if (got is None and not want.is_zero()) or (
                got is not None and got != want
            ):
                raise VerificationError("digit normalization did not stabilize")
            b += 1
        if check:
            recon = e1 * self.g + e2 * self.Fn
            for j, d in enumerate(digits):
                if not d.is_zero():
                    recon = recon + EElement.teich(field, n, d) * EElement.F(
                        field, n, j
                    )
            if recon != x0:
                raise VerificationError("reduction certificate failed")
        return digits, e1, e2

    def digits_elem(self, digits):
        """sum_j [digits[j]] F^j as an EElement."""
        out = EElement.zero(self.field, self.n)
        for j, d in enumerate(digits):
            if not d.is_zero():
                out = out + EElement.monomial(
                    self.field, self.n, j, teichmuller(self.field, d, self.n)
                )
        return out


# ---------------------------------------------------------------------------
# morphisms
# ---------------------------------------------------------------------------


class Morphism:
    """A left E-module map source -> target determined by the image of 1."""

    def __init__(self, source: EModule, target: EModule, e: ModElt):
        if source.field != target.field:
            raise TypeError("modules over different fields")
        self.source = source
        self.target = target
        self.e = e
        self.rejection = None
        self._check_well_defined()

    def _ideal_generators(self):
        src, D = self.source, self.target.ambient.D
        gens = [retruncate(g, D) for g in src.rel_gens]
        gens.append(EElement.F(src.field, D, src.ambient.nprime))
        gens.append(EElement.V(src.field, D, src.ambient.n))
        return gens

    def _check_well_defined(self):
        for g in self._ideal_generators():
            residue = self.e.act(g)
            if not residue.is_zero():
                self.rejection = (g, residue)
                return

    @property
    def well_defined(self):
        return self.rejection is None

    def apply(self, x: ModElt) -> ModElt:
        assert x.module is self.source
        return self.e.act(retruncate(x.rep, self.target.ambient.D))

    def image_log_size(self):
        hb = self.target.submodule_span([retruncate(self.e.rep, self.target.ambient.D)])
        return hb.log_size() - self.target.rel.log_size()

    def is_isomorphism(self):
        if not self.well_defined:
            return False
        if self.source.log_size != self.target.log_size:
            return False
        return self.image_log_size() == self.target.log_size


def hom_from_unit_image(source, target, e: ModElt):
    """The morphism 1 -> e, or None (with reasons on the object) if the
    required relations do not annihilate e."""
    phi = Morphism(source, target, e)
    return phi


# ---------------------------------------------------------------------------
# the explicit isomorphisms of the classification
# ---------------------------------------------------------------------------


def _rebase_scalar(a: FieldElement, field: Field):
    if a.field == field:
        return a
    return FieldEmbedding(a.field, field)(a)


def build_phi_iso(field: Field, n, i, a, extension_budget=None):
    """phi: ThmOne(n,i,a) -> ThmOne(n,i,0), 1 -> 1 + [c0] F^{n-1-i}, with c0
    a root of X - X^{p^{i+1}} = a^p (nonzero preferred, zero accepted when
    a = 0).  Both modules are rebased to the field of the root."""
    if not 1 <= i <= n - 2:
        raise ValueError("phi requires 1 <= i <= n-2")
    p = field.p
    # X - X^{p^{i+1}} - a^p = 0
    deg = p ** (i + 1)
    coeffs = [field.zero] * (deg + 1)
    coeffs[0] = -(a ** p)
    coeffs[1] = field.one
    coeffs[deg] = coeffs[deg] - field.one
    roots, K = find_roots(coeffs, extension_budget, prefer_nonzero=True)
    c0 = roots[0]
    aK = _rebase_scalar(a, K)
    source = thm_one(K, n, i, aK)
    target = thm_one(K, n, i, K.zero)
    # sigma-consistency: gamma = -a + sigma^{-1}(c) - sigma^i(c) vanishes
    # in its first Witt coordinate, which is the root equation itself
    gamma0 = -aK + c0.frobenius(-1) - c0.frobenius(i)
    if not gamma0.is_zero():
        raise VerificationError("root does not satisfy the sigma identity")
    D = target.ambient.D
    e_elem = EElement.one(K, D) + EElement.teich(K, D, c0) * EElement.F(
        K, D, n - 1 - i
    )
    phi = Morphism(source, target, target.reduce(e_elem))
    phi.witness = c0
    phi.extension_degree = K.m // field.m
    return phi


def build_psi_iso(field: Field, n, a, extension_budget=None):
    """psi: E/(E(V - [a]F^{n-1}) + EF^n) -> ThmOne(n, n-1, 0), 1 -> [b],
    with b a nonzero root of a^p X^{p^n} - X."""
    if a.is_zero():
        raise ValueError("psi requires a nonzero")
    p = field.p
    deg = p ** n
    coeffs = [field.zero] * (deg + 1)
    coeffs[1] = -field.one
    coeffs[deg] = a ** p
    roots, K = find_roots(coeffs, extension_budget, prefer_nonzero=True)
    b = roots[0]
    aK = _rebase_scalar(a, K)
    # delta_0 = (b - a^p b^{p^n})^{1/p} must vanish
    delta = b - (aK ** p) * (b ** deg)
    if not delta.frobenius(-1).is_zero():
        raise VerificationError("psi root identity failed")
    source = psi_source(K, n, aK)
    target = thm_one(K, n, n - 1, K.zero)
    D = target.ambient.D
    psi = Morphism(source, target, target.reduce(EElement.teich(K, D, b)))
    psi.witness = b
    psi.extension_degree = K.m // field.m
    return psi


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------


def exhaustive_iso_search(source: EModule, target: EModule, limit=1 << 16):
    """Search every unit image in the target for an isomorphism; returns the
    witnessing element or None.  Only run when |target| is within limit."""
    if source.log_size != target.log_size:
        return None
    if source.field.p ** target.log_size > limit:
        raise GuardError("exhaustive search space exceeds limit")
    for e in target.elements():
        phi = Morphism(source, target, e)
        if phi.well_defined and phi.is_isomorphism():
            return e
    return None


def classify(p, n, m, extension_budget=None, search_limit=1 << 16):
    """Verify the order-p^n, one-dimensional-Lie-algebra classification over
    F_{p^m}: n isomorphism classes, represented by ThmOne(n, i, 0)."""
    field = field_create(p, m)
    report = {
        "p": p,
        "n": n,
        "field": {"p": p, "m": m, "modulus": list(field.modulus)},
        "classes": [],
        "deformations": [],
        "nonisomorphism": [],
        "status": "ok",
    }
    reps = {}
    for i in range(1, n + 1):
        M = thm_one(field, n, i, field.zero)
        if M.length != n:
            raise VerificationError(f"length of representative i={i} is not n")
        reps[i] = M
        profile = M.kernel_profile()
        report["classes"].append(
            {
                "i": i,
                "length": M.length,
                "kernel_profile": sorted(
                    [[r, s, v] for (r, s), v in profile.items()]
                ),
            }
        )
    # every deformation collapses onto a representative
    for i in range(1, n - 1):
        for a in field.elements():
            phi = build_phi_iso(field, n, i, a, extension_budget)
            if not (phi.well_defined and phi.is_isomorphism()):
                report["status"] = "failed"
                report["deformations"].append(
                    {"i": i, "a": list(a.coeffs), "iso": False}
                )
                continue
            report["deformations"].append(
                {
                    "i": i,
                    "a": list(a.coeffs),
                    "witness_c_or_b": list(phi.witness.coeffs),
                    "extension_degree": phi.extension_degree,
                    "iso": True,
                }
            )
    if n >= 2:
        for a in field.elements():
            if a.is_zero():
                continue
            psi = build_psi_iso(field, n, a, extension_budget)
            if not (psi.well_defined and psi.is_isomorphism()):
                report["status"] = "failed"
                report["deformations"].append(
                    {"i": n - 1, "a": list(a.coeffs), "iso": False}
                )
                continue
            report["deformations"].append(
                {
                    "i": n - 1,
                    "a": list(a.coeffs),
                    "witness_c_or_b": list(psi.witness.coeffs),
                    "extension_degree": psi.extension_degree,
                    "iso": True,
                }
            )
    # representatives are pairwise non-isomorphic: kernel profiles differ and
    # are stable under a quadratic base extension
    ext = field_create(p, 2 * m)
    profiles = {}
    for i, M in reps.items():
        prof = M.kernel_profile()
        Mext = thm_one(ext, n, i, ext.zero)
        if Mext.kernel_profile() != prof:
            raise VerificationError("kernel profile not base-change stable")
        profiles[i] = prof
    for i in reps:
        for j in reps:
            if i < j:
                sep = next(
                    (rs for rs in profiles[i] if profiles[i][rs] != profiles[j][rs]),
                    None,
                )
                if sep is None:
                    report["status"] = "failed"
                entry = {"i": i, "j": j, "separating_invariant": list(sep) if sep else None}
                if p ** reps[j].log_size <= search_limit:
                    witness = exhaustive_iso_search(reps[i], reps[j], search_limit)
                    entry["exhaustive_search_iso_found"] = witness is not None
                    if witness is not None:
                        report["status"] = "failed"
                report["nonisomorphism"].append(entry)
    # cross-family sanity: ThmOne(n, n, 0) has V = 0 (it is alpha_{p^n})
    M = reps[n]
    if not M.unit.act_V().is_zero():
        report["status"] = "failed"
    return report
