"""The Dieudonne ring E = W(k)_sigma[F, V] over a perfect field k = F_{p^m}.

E is the noncommutative polynomial ring over the Witt ring W(k) generated by
F and V subject to

    F xi = sigma(xi) F,    V sigma(xi) = xi V,    F V = V F = p,

where sigma is the Witt-vector Frobenius.  As a left W(k)-module, E is free
on ..., V^2, V, 1, F, F^2, ...; an element is stored as a dict mapping a
signed integer key to its Witt coefficient: key -k (k > 0) indexes V^k,
key k >= 0 indexes F^k.  Coefficients are truncated Witt vectors of a fixed
length N; all identities used downstream are stable under this truncation
because p^N annihilates every coefficient that the truncation discards.
"""

from __future__ import annotations

from .ffield import Field
from .witt import WittVector, teichmuller, witt_one, witt_zero


class EElement:
    """An element of E with coefficients in W_N(field)."""

    __slots__ = ("field", "N", "terms")

    def __init__(self, field: Field, N: int, terms=None):
        self.field = field
        self.N = N
        self.terms = {}
        if terms:
            for k, c in terms.items():
                if not c.is_zero():
                    self.terms[k] = c

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def zero(field, N):
        return EElement(field, N)

    @staticmethod
    def one(field, N):
        return EElement(field, N, {0: witt_one(field, N)})

    @staticmethod
    def monomial(field, N, key, coeff=None):
        """coeff * V^(-key) (key < 0) or coeff * F^key (key >= 0)."""
        if coeff is None:
            coeff = witt_one(field, N)
        return EElement(field, N, {key: coeff})

    @staticmethod
    def F(field, N, k=1):
        return EElement.monomial(field, N, k)

    @staticmethod
    def V(field, N, k=1):
        return EElement.monomial(field, N, -k)

    @staticmethod
    def witt(c: WittVector):
        return EElement(c.ring, c.length, {0: c})

    @staticmethod
    def teich(field, N, a):
        """The Teichmueller scalar [a]."""
        return EElement.witt(teichmuller(field, a, N))

    # -- ring operations ------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, EElement):
            raise TypeError("not an EElement")
        if other.field != self.field or other.N != self.N:
            raise TypeError("EElements over different coefficient rings")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            nc = out[k] + c if k in out else c
            if nc.is_zero():
                out.pop(k, None)
            else:
                out[k] = nc
        return EElement(self.field, self.N, out)

    def __neg__(self):
        return EElement(self.field, self.N, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        out = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                # move the operator part of the left factor past c2:
                # F^k c = sigma^k(c) F^k, V^a c = sigma^(-a)(c) V^a
                c = c1 * c2.sigma(k1)
                # F^a V^b = V^b F^a = p^min(a,b) * (leftover operator)
                if k1 * k2 < 0:
                    for _ in range(min(abs(k1), abs(k2))):
                        c = c.pmul()
                if c.is_zero():
                    continue
                k = k1 + k2
                nc = out[k] + c if k in out else c
                if nc.is_zero():
                    out.pop(k, None)
                else:
                    out[k] = nc
        return EElement(self.field, self.N, out)

    def scale(self, c: WittVector):
        """Left multiplication by a Witt scalar."""
        return EElement.witt(c) * self

    def int_mul(self, c):
        return EElement(
            self.field, self.N, {k: v.int_mul(c) for k, v in self.terms.items()}
        )

    def __pow__(self, e):
        acc = EElement.one(self.field, self.N)
        base = self
        while e:
            if e & 1:
                acc = acc * base
            e >>= 1
            if e:
                base = base * base
        return acc

    # -- inspection -----------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def coeff(self, key):
        return self.terms.get(key, witt_zero(self.field, self.N))

    def support(self):
        return sorted(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, EElement)
            and (self.field, self.N) == (other.field, other.N)
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms):
            c = self.terms[k]
            if k == 0:
                op = "1"
            elif k > 0:
                op = "F" if k == 1 else f"F^{k}"
            else:
                op = "V" if k == -1 else f"V^{-k}"
            parts.append(f"({c!r})*{op}" if op != "1" else f"({c!r})")
        return " + ".join(parts)
