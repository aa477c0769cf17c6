"""Truncated Witt vectors over finite fields and finite test algebras.

A ``WittVector`` is a coordinate tuple over a base ring; the ring operations
evaluate the integer structure polynomials mod p, so the same code works over
F_{p^m} and over non-reduced test algebras such as k[t]/(t^e).

Over a perfect field, Frobenius is coordinatewise p-th power and every vector
has a Teichmueller digit expansion u = sum_t p^t [c_t]; both are provided
here, the former as a consequence of the general Frobenius polynomials.
"""

from __future__ import annotations

import itertools

from . import wittpoly
from .ffield import Field, FieldElement


class WittVector:
    """An element of W_n(R) for a base ring R (a Field or a TestAlgebra)."""

    __slots__ = ("ring", "coords")

    def __init__(self, ring, coords):
        self.ring = ring
        self.coords = tuple(coords)

    @property
    def length(self):
        return len(self.coords)

    @property
    def p(self):
        return self.ring.p

    def _binop(self, other, kind):
        if not isinstance(other, WittVector) or other.ring != self.ring:
            raise TypeError("Witt vectors over different rings")
        if other.length != self.length:
            raise ValueError("Witt vectors of different lengths")
        polys = wittpoly.witt_structure_polys(self.p, self.length)[kind]
        vals = wittpoly.interleave(self.coords, other.coords)
        return WittVector(
            self.ring,
            [wittpoly.poly_eval_ring(f, self.p, self.ring, vals) for f in polys],
        )

    def __add__(self, other):
        return self._binop(other, "add")

    def __mul__(self, other):
        if isinstance(other, int):
            return self.int_mul(other)
        return self._binop(other, "mul")

    __rmul__ = __mul__

    def __neg__(self):
        polys = wittpoly.witt_structure_polys(self.p, self.length)["neg"]
        vals = wittpoly.interleave(self.coords, self.coords)
        return WittVector(
            self.ring,
            [wittpoly.poly_eval_ring(f, self.p, self.ring, vals) for f in polys],
        )

    def __sub__(self, other):
        return self + (-other)

    def int_mul(self, c):
        """c * self for an integer c, by double-and-add."""
        if c < 0:
            return (-self).int_mul(-c)
        acc = witt_zero(self.ring, self.length)
        base = self
        while c:
            if c & 1:
                acc = acc + base
            c >>= 1
            if c:
                base = base + base
        return acc

    def frobenius(self):
        """F: W_n -> W_n, via the Frobenius polynomials with x_n = 0.

        Over a perfect field this is the coordinatewise p-th power.
        """
        polys = wittpoly.witt_structure_polys(self.p, self.length)["frob"]
        padded = tuple(self.coords) + (self.ring.zero,)
        vals = wittpoly.interleave(padded, padded)
        return WittVector(
            self.ring,
            [wittpoly.poly_eval_ring(f, self.p, self.ring, vals) for f in polys],
        )

    def verschiebung(self):
        """V: W_n -> W_n, the shift (x_0, ..., x_{n-2}) -> (0, x_0, ...)."""
        return WittVector(self.ring, (self.ring.zero,) + self.coords[:-1])

    def pmul(self):
        """p * self, as V(F(self)); equals self.int_mul(p)."""
        return self.frobenius().verschiebung()

    def truncate(self, n):
        if n > self.length:
            raise ValueError("cannot truncate upward")
        return WittVector(self.ring, self.coords[:n])

    def extend(self, n):
        """Pad with zero coordinates up to length n (a set-section, not a
        ring map; used when lifting coefficients to a longer truncation)."""
        if n < self.length:
            raise ValueError("use truncate to shorten")
        return WittVector(
            self.ring, self.coords + (self.ring.zero,) * (n - self.length)
        )

    def shift_down(self):
        """The unique preimage under V of a vector with leading zero."""
        if not self.coords[0].is_zero():
            raise ValueError("leading coordinate is nonzero")
        return WittVector(self.ring, self.coords[1:])

    def is_zero(self):
        return all(c.is_zero() for c in self.coords)

    def map_coords(self, fn, ring=None):
        return WittVector(ring if ring is not None else self.ring,
                          [fn(c) for c in self.coords])

    def sigma(self, e=1):
        """Coordinatewise Frobenius power sigma^e (perfect base field only)."""
        return self.map_coords(lambda c: c.frobenius(e))

    def __eq__(self, other):
        return (
            isinstance(other, WittVector)
            and self.ring == other.ring
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash(self.coords)

    def sort_key(self):
        return tuple(c.sort_key() for c in self.coords)

    def __repr__(self):
        return "W(" + ", ".join(repr(c) for c in self.coords) + ")"


def witt_zero(ring, n):
    return WittVector(ring, (ring.zero,) * n)


def witt_one(ring, n):
    return WittVector(ring, (ring.one,) + (ring.zero,) * (n - 1))


def teichmuller(ring, a, n):
    """The multiplicative lift [a] = (a, 0, ..., 0) in W_n."""
    return WittVector(ring, (a,) + (ring.zero,) * (n - 1))


def witt_digits(x: WittVector):
    """Teichmueller digits of x over a perfect field: x = sum_t p^t [c_t].

    Peels x = [b_0] + V(y) repeatedly, then converts the shift digits b_t to
    p-adic digits c_t = b_t^(1/p^t) using p^t [c] = V^t [c^(p^t)].
    """
    if not isinstance(x.ring, Field):
        raise TypeError("digit expansion needs a perfect base field")
    digits = []
    y = x
    for t in range(x.length):
        b = y.coords[0]
        digits.append(b.frobenius(-t))
        y = (y - teichmuller(y.ring, b, y.length)).shift_down()
    return digits


def from_digits(ring, cs, n):
    """sum_t p^t [c_t] in W_n; inverse of witt_digits."""
    acc = witt_zero(ring, n)
    for t, c in enumerate(cs[:n]):
        v = teichmuller(ring, c ** (ring.p ** t), n)
        for _ in range(t):
            v = v.verschiebung()
        acc = acc + v
    return acc


def witt_elements(ring, n):
    """All of W_n(ring), for a base with finite element enumeration."""
    for coords in itertools.product(list(ring.elements()), repeat=n):
        yield WittVector(ring, coords)


class TestAlgebra:
    """A finite local algebra k[x_1..x_g] with triangular monomial rewriting.

    Each generator x_i carries a cap e_i; the relation is x_i^(e_i) = r_i
    where r_i is either zero or a monomial (given as an exponent tuple) in
    which every exponent is strictly smaller in the grading that makes the
    rewriting terminate.  Elements are dicts: exponent tuple -> field element.
    """

    __test__ = False  # keep pytest from collecting this as a test class

    def __init__(self, field: Field, caps, repls=None, names=None):
        self.field = field
        self.p = field.p
        self.caps = tuple(caps)
        self.g = len(caps)
        if repls is None:
            repls = [None] * self.g
        self.repls = tuple(tuple(r) if r is not None else None for r in repls)
        self.names = tuple(names) if names else tuple(
            f"x{i}" for i in range(self.g)
        )
        self.dim = 1
        for e in self.caps:
            self.dim *= e
        self.zero = AlgElement(self, {})
        self.one = AlgElement(self, {(0,) * self.g: field.one})

    def from_int(self, c):
        fc = self.field.from_int(c)
        return AlgElement(self, {(0,) * self.g: fc} if not fc.is_zero() else {})

    def from_field(self, a):
        return AlgElement(self, {(0,) * self.g: a} if not a.is_zero() else {})

    def gen(self, i):
        exps = [0] * self.g
        exps[i] = 1
        return AlgElement(self, {tuple(exps): self.field.one})

    def _reduce_monomial(self, exps):
        """Rewrite an exponent tuple to normal form; None means it is zero."""
        exps = list(exps)
        while True:
            for i in range(self.g):
                if exps[i] >= self.caps[i]:
                    r = self.repls[i]
                    if r is None:
                        return None
                    exps[i] -= self.caps[i]
                    for j in range(self.g):
                        exps[j] += r[j]
                    break
            else:
                return tuple(exps)

    def basis(self):
        ranges = [range(e) for e in self.caps]
        return [tuple(v) for v in itertools.product(*ranges)]

    def elements(self):
        """All elements; only sensible for small dim * field size."""
        mons = self.basis()
        for coefvec in itertools.product(list(self.field.elements()),
                                         repeat=len(mons)):
            yield AlgElement(
                self,
                {m: c for m, c in zip(mons, coefvec) if not c.is_zero()},
            )

    def __eq__(self, other):
        return self is other or (
            isinstance(other, TestAlgebra)
            and (self.field, self.caps, self.repls)
            == (other.field, other.caps, other.repls)
        )

    def __hash__(self):
        return hash((self.field, self.caps, self.repls))

    def __repr__(self):
        rels = []
        for i in range(self.g):
            r = self.repls[i]
            rhs = "0" if r is None else _mono_str(self.names, r)
            rels.append(f"{self.names[i]}^{self.caps[i]}={rhs}")
        return f"{self.field}[{','.join(self.names)}]/({', '.join(rels)})"


def _mono_str(names, exps):
    parts = [
        names[i] if e == 1 else f"{names[i]}^{e}"
        for i, e in enumerate(exps)
        if e
    ]
    return "*".join(parts) if parts else "1"


class AlgElement:
    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms):
        self.algebra = algebra
        self.terms = terms

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            nc = out.get(m, self.algebra.field.zero) + c
            if nc.is_zero():
                out.pop(m, None)
            else:
                out[m] = nc
        return AlgElement(self.algebra, out)

    def __neg__(self):
        return AlgElement(self.algebra, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        A = self.algebra
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = A._reduce_monomial([a + b for a, b in zip(m1, m2)])
                if m is None:
                    continue
                nc = out.get(m, A.field.zero) + c1 * c2
                if nc.is_zero():
                    out.pop(m, None)
                else:
                    out[m] = nc
        return AlgElement(A, out)

    def scale(self, a: FieldElement):
        if a.is_zero():
            return self.algebra.zero
        return AlgElement(self.algebra, {m: a * c for m, c in self.terms.items()})

    def __pow__(self, e):
        acc = self.algebra.one
        base = self
        while e:
            if e & 1:
                acc = acc * base
            e >>= 1
            if e:
                base = base * base
        return acc

    def is_zero(self):
        return not self.terms

    def _check(self, other):
        if not isinstance(other, AlgElement) or other.algebra != self.algebra:
            raise TypeError("elements of different algebras")

    def __eq__(self, other):
        return (
            isinstance(other, AlgElement)
            and self.algebra == other.algebra
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash(frozenset((m, c) for m, c in self.terms.items()))

    def sort_key(self):
        return tuple(sorted((m, c.sort_key()) for m, c in self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "0"
        names = self.algebra.names
        parts = []
        for m in sorted(self.terms):
            c = self.terms[m]
            mono = _mono_str(names, m)
            if mono == "1":
                parts.append(repr(c))
            elif c == self.algebra.field.one:
                parts.append(mono)
            else:
                parts.append(f"{c!r}*{mono}")
        return " + ".join(parts)
