"""Exact arithmetic in F_{p^m}, Frobenius powers, root search and field extension.

Elements of F_{p^m} are coordinate vectors in the power basis of a monic
irreducible modulus of degree m over F_p.  The modulus is chosen
deterministically (the least monic irreducible in the counting order of its
coefficient vector (a_0, ..., a_{m-1})), so identical parameters always yield
identical fields across runs.

For fields of size up to 2^16, multiplication goes through discrete log/exp
tables built once per field; beyond that, schoolbook polynomial arithmetic
modulo (p, modulus) is used.
"""

from __future__ import annotations

import functools
import itertools

import sympy

DEGREE_BOUND = 16
EXHAUSTION_GUARD = 1 << 20
_TABLE_LIMIT = 1 << 16


class FieldError(ValueError):
    pass


class NoRootError(FieldError):
    """No root found within the allotted extension budget."""


def _polydiv_mod_p(num, den, p):
    # remainder of num / den over F_p; polynomials as lists, low degree first
    num = list(num)
    dd = len(den) - 1
    inv_lead = pow(den[-1], p - 2, p)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i] % p
        if c:
            f = (c * inv_lead) % p
            for j, dc in enumerate(den):
                num[i - dd + j] = (num[i - dd + j] - f * dc) % p
    while num and num[-1] % p == 0:
        num.pop()
    return [c % p for c in num]


def _is_irreducible(coeffs, p):
    """Trial division of a monic polynomial (list, low first) over F_p."""
    m = len(coeffs) - 1
    if m == 1:
        return True
    if coeffs[0] % p == 0:  # divisible by x
        return False
    for d in range(1, m // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            den = list(tail) + [1]
            if len(_polydiv_mod_p(coeffs, den, p)) == 0:
                return False
    return True


def _least_irreducible(p, m):
    """Least monic irreducible of degree m over F_p in the counting order of
    the coefficient vector (a_0, ..., a_{m-1})."""
    if m == 1:
        return (0, 1)  # the polynomial x
    for idx in range(p ** m):
        vec = []
        r = idx
        for _ in range(m):
            vec.append(r % p)
            r //= p
        coeffs = vec + [1]
        if _is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise FieldError(f"no irreducible polynomial of degree {m} over F_{p}")


class Field:
    """The finite field F_{p^m} with a fixed monic irreducible modulus."""

    def __init__(self, p, m, modulus=None):
        if not sympy.isprime(p):
            raise FieldError(f"{p} is not prime")
        if not 1 <= m <= DEGREE_BOUND:
            raise FieldError(f"extension degree {m} out of bounds [1, {DEGREE_BOUND}]")
        self.p = p
        self.m = m
        self.q = p ** m
        if modulus is None:
            modulus = _least_irreducible(p, m)
        modulus = tuple(c % p for c in modulus)
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise FieldError("modulus must be monic of degree m")
        if not _is_irreducible(list(modulus), p):
            raise FieldError("modulus is reducible")
        self.modulus = modulus
        # _xpow[j] = coordinates of x^(m+j) mod modulus, j = 0..m-1
        self._xpow = []
        cur = [0] * m + [1]  # x^m
        for _ in range(m):
            red = _poly_mod(cur, list(modulus), p)
            self._xpow.append(tuple(red + [0] * (m - len(red))))
            cur = [0] + cur
        self._log = None
        self._exp = None
        if self.q <= _TABLE_LIMIT:
            self._build_tables()
        self.zero = FieldElement(self, (0,) * m)
        self.one = FieldElement(self, (1,) + (0,) * (m - 1))

    # -- construction helpers -------------------------------------------------

    def element(self, coeffs):
        coeffs = tuple(c % self.p for c in coeffs)
        if len(coeffs) != self.m:
            raise FieldError("wrong coordinate length")
        return FieldElement(self, coeffs)

    def from_int(self, c):
        return FieldElement(self, (c % self.p,) + (0,) * (self.m - 1))

    def from_index(self, idx):
        p, m = self.p, self.m
        coeffs = []
        for _ in range(m):
            coeffs.append(idx % p)
            idx //= p
        return FieldElement(self, tuple(coeffs))

    def generator(self):
        """The power-basis generator (the class of x); for m = 1 this is 1."""
        if self.m == 1:
            return self.one
        return FieldElement(self, (0, 1) + (0,) * (self.m - 2))

    def elements(self):
        for idx in range(self.q):
            yield self.from_index(idx)

    # -- raw arithmetic on coefficient tuples ---------------------------------

    def _add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def _neg(self, a):
        p = self.p
        return tuple((-x) % p for x in a)

    def _mul(self, a, b):
        if self._log is not None:
            ia = _tuple_index(a, self.p)
            if ia == 0:
                return (0,) * self.m
            ib = _tuple_index(b, self.p)
            if ib == 0:
                return (0,) * self.m
            return self._exp[(self._log[ia] + self._log[ib]) % (self.q - 1)]
        return self._mul_schoolbook(a, b)

    def _mul_schoolbook(self, a, b):
        p, m = self.p, self.m
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] = (prod[i + j] + x * y) % p
        out = list(prod[:m])
        for j in range(m, 2 * m - 1):
            c = prod[j]
            if c:
                red = self._xpow[j - m]
                for i in range(m):
                    out[i] = (out[i] + c * red[i]) % p
        return tuple(out)

    def _pow(self, a, e):
        if all(c == 0 for c in a):
            if e < 0:
                raise FieldError("inversion of zero")
            return a if e else self.one.coeffs
        if self._log is not None:
            ia = _tuple_index(a, self.p)
            return self._exp[(self._log[ia] * e) % (self.q - 1)]
        if e < 0:
            a = self._pow(a, self.q - 2)
            e = -e
        result = self.one.coeffs
        base = a
        while e:
            if e & 1:
                result = self._mul_schoolbook(result, base)
            base = self._mul_schoolbook(base, base)
            e >>= 1
        return result

    def _build_tables(self):
        q, p = self.q, self.p
        order_facs = list(sympy.factorint(q - 1))
        g = None
        for idx in range(1, q):
            cand = self.from_index(idx).coeffs
            if all(
                self._pow_schoolbook(cand, (q - 1) // f) != self.one_coeffs()
                for f in order_facs
            ):
                g = cand
                break
        assert g is not None
        exp = [None] * (q - 1)
        log = [None] * q
        cur = self.one_coeffs()
        for k in range(q - 1):
            exp[k] = cur
            log[_tuple_index(cur, p)] = k
            cur = self._mul_schoolbook(cur, g)
        self._exp = exp
        self._log = log

    def one_coeffs(self):
        return (1,) + (0,) * (self.m - 1)

    def _pow_schoolbook(self, a, e):
        result = self.one_coeffs()
        base = a
        while e:
            if e & 1:
                result = self._mul_schoolbook(result, base)
            base = self._mul_schoolbook(base, base)
            e >>= 1
        return result

    # -- misc -----------------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Field)
            and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __repr__(self):
        return f"F_{self.p}^{self.m}" if self.m > 1 else f"F_{self.p}"


def _poly_mod(num, den, p):
    return _polydiv_mod_p([c % p for c in num], list(den), p)


def _tuple_index(coeffs, p):
    idx = 0
    for c in reversed(coeffs):
        idx = idx * p + c
    return idx


class FieldElement:
    """An element of a Field; immutable, canonical, hashable."""

    __slots__ = ("field", "coeffs", "_idx")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = coeffs
        self._idx = _tuple_index(coeffs, field.p)

    @property
    def index(self):
        return self._idx

    def is_zero(self):
        return self._idx == 0

    def __add__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field._add(self.coeffs, other.coeffs))

    def __sub__(self, other):
        self._check(other)
        return FieldElement(
            self.field, self.field._add(self.coeffs, self.field._neg(other.coeffs))
        )

    def __neg__(self):
        return FieldElement(self.field, self.field._neg(self.coeffs))

    def __mul__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field._mul(self.coeffs, other.coeffs))

    def __pow__(self, e):
        return FieldElement(self.field, self.field._pow(self.coeffs, e))

    def inverse(self):
        if self.is_zero():
            raise FieldError("inversion of zero")
        return self ** (-1)

    def frobenius(self, e=1):
        """sigma^e(x) = x^(p^e); e may be negative (sigma has order m)."""
        m = self.field.m
        e %= m
        return self ** (self.field.p ** e)

    def pth_root(self):
        return self.frobenius(-1)

    def _check(self, other):
        if not isinstance(other, FieldElement) or other.field is not self.field:
            if isinstance(other, FieldElement) and other.field == self.field:
                return
            raise FieldError("operands from different fields")

    def __eq__(self, other):
        return (
            isinstance(other, FieldElement)
            and self._idx == other._idx
            and self.field == other.field
        )

    def __hash__(self):
        return hash((self._idx, self.field.p, self.field.m))

    def sort_key(self):
        return self.coeffs

    def __repr__(self):
        if self.field.m == 1:
            return str(self.coeffs[0])
        return "(" + ",".join(str(c) for c in self.coeffs) + ")"


@functools.lru_cache(maxsize=None)
def field_create(p, m):
    """The canonical F_{p^m} (deterministic modulus), cached."""
    return Field(p, m)


class FieldEmbedding:
    """An F_p-algebra embedding F_{p^m} -> F_{p^(m*t)}.

    The generator of the source is sent to the least root of the source
    modulus in the target, which makes the embedding deterministic.
    """

    def __init__(self, source: Field, target: Field):
        if target.m % source.m != 0 or target.p != source.p:
            raise FieldError("no embedding: target degree not a multiple")
        self.source = source
        self.target = target
        if source.m == 1:
            self.gen_image = target.one
            return
        mod_poly = [target.from_int(c) for c in source.modulus]
        roots = [x for x in target.elements() if _horner(mod_poly, x).is_zero()]
        if not roots:
            raise FieldError("modulus has no root in target (bug)")
        self.gen_image = min(roots, key=FieldElement.sort_key)

    def __call__(self, x: FieldElement) -> FieldElement:
        if x.field != self.source:
            raise FieldError("element not in the embedding source")
        acc = self.target.zero
        power = self.target.one
        for c in x.coeffs:
            if c:
                acc = acc + self.target.from_int(c) * power
            power = power * self.gen_image
        return acc


def _horner(coeffs, x):
    """Evaluate a polynomial given as a list of FieldElements, low degree first."""
    acc = x.field.zero
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def evaluate_poly(coeffs, x):
    """Independent Horner evaluation (used to re-check every reported root)."""
    return _horner(coeffs, x)


def find_roots(coeffs, extension_budget=None, prefer_nonzero=False):
    """All roots of a nonzero polynomial over its base field, extending if needed.

    ``coeffs`` is a list of FieldElements of one field, low degree first.
    Exhaustively tests every element of the base field; when no root exists
    and the budget allows, retries over F_{p^(m*t)} for t = 2, 3, ...,
    re-expressing the polynomial through the canonical embedding.  Returns
    ``(roots, field)`` for the first degree where a root exists, roots sorted
    canonically.  With ``prefer_nonzero``, zero roots are dropped unless they
    are the only ones at every admissible degree.
    """
    coeffs = list(coeffs)
    while coeffs and coeffs[-1].is_zero():
        coeffs.pop()
    if not coeffs:
        raise FieldError("root search on the zero polynomial")
    base = coeffs[0].field
    if extension_budget is None:
        # largest degree the exhaustion guard permits
        extension_budget = base.m
        while base.p ** (extension_budget + base.m) <= EXHAUSTION_GUARD:
            extension_budget += base.m
        extension_budget = min(extension_budget, DEGREE_BOUND)
        extension_budget = max(extension_budget, base.m)
    if extension_budget < base.m:
        raise FieldError("extension budget below current degree")
    t = 1
    zero_only_fallback = None
    while base.m * t <= extension_budget:
        deg = base.m * t
        if base.p ** deg > EXHAUSTION_GUARD:
            raise FieldError(
                f"field of size {base.p ** deg} exceeds the exhaustion guard"
            )
        field = field_create(base.p, deg)
        if t == 1 and field == base:
            local = coeffs
        else:
            emb = FieldEmbedding(base, field)
            local = [emb(c) for c in coeffs]
        roots = [x for x in field.elements() if _horner(local, x).is_zero()]
        for r in roots:
            assert evaluate_poly(local, r).is_zero()
        if prefer_nonzero:
            nz = [r for r in roots if not r.is_zero()]
            if nz:
                return sorted(nz, key=FieldElement.sort_key), field
            if roots and zero_only_fallback is None:
                zero_only_fallback = (sorted(roots, key=FieldElement.sort_key), field)
        elif roots:
            return sorted(roots, key=FieldElement.sort_key), field
        t += 1
    if zero_only_fallback is not None:
        return zero_only_fallback
    raise NoRootError(
        f"no root within extension budget {extension_budget} over {base}"
    )
