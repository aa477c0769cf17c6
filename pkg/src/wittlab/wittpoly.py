"""Integer Witt structure polynomials via the ghost-component recursion.

p-typical Witt vectors of length n have ghost components

    w_i(X) = sum_{j <= i} p^j X_j^(p^(i-j)),        i = 0, ..., n-1,

and the addition, multiplication and negation structure polynomials are the
unique integer polynomials A_i, P_i, N_i with

    w_i(A) = w_i(X) + w_i(Y),   w_i(P) = w_i(X) w_i(Y),   w_i(N) = -w_i(X).

Each is computed by peeling the recursion and dividing by p^i exactly; the
division succeeding over the integers is itself a correctness check, and
``verify_ghost_identities`` re-checks the defining identities both
symbolically and at sampled integer points.

Polynomials are dicts mapping a packed monomial key to a Python integer
coefficient, with exponents packed 16 bits per variable.  Variables are
interleaved, X_j at index 2j and Y_j at index 2j+1, so the polynomials for
length n are literally the first n of any longer length and can be cached
per (p, i).  The p-th-power chains A_j^(p^t) needed by the recursion are
cached as well and shared with the symbolic verification.
"""

from __future__ import annotations

import json
import math
import random

_SHIFT = 16
_MASK = (1 << _SHIFT) - 1
_EXP_LIMIT = 1 << _SHIFT


def monomial(var, exp=1):
    if exp >= _EXP_LIMIT:
        raise OverflowError("exponent too large for packed monomials")
    return exp << (_SHIFT * var)


def xvar(j, exp=1):
    return monomial(2 * j, exp)


def yvar(j, exp=1):
    return monomial(2 * j + 1, exp)


def unpack(key, nvars):
    return tuple((key >> (_SHIFT * v)) & _MASK for v in range(nvars))


def poly_add(f, g):
    out = dict(f)
    for k, c in g.items():
        nc = out.get(k, 0) + c
        if nc:
            out[k] = nc
        else:
            out.pop(k, None)
    return out


def poly_scale(f, c):
    if c == 0:
        return {}
    return {k: c * v for k, v in f.items()}


def poly_sub(f, g):
    return poly_add(f, poly_scale(g, -1))


def poly_mul(f, g):
    if len(f) > len(g):
        f, g = g, f
    out = {}
    for k1, c1 in f.items():
        for k2, c2 in g.items():
            k = k1 + k2
            nc = out.get(k, 0) + c1 * c2
            if nc:
                out[k] = nc
            else:
                del out[k]
    return out


def poly_pow(f, e):
    result = {0: 1}
    base = f
    while e:
        if e & 1:
            result = poly_mul(result, base)
        e >>= 1
        if e:
            base = poly_mul(base, base)
    return result


def poly_div_exact(f, d):
    out = {}
    for k, c in f.items():
        q, r = divmod(c, d)
        if r:
            raise ArithmeticError(f"inexact division by {d}")
        out[k] = q
    return out


def poly_eval_int(f, values):
    """Evaluate over the integers; ``values`` indexed by variable number."""
    total = 0
    for k, c in f.items():
        term = c
        v = 0
        while k:
            e = k & _MASK
            if e:
                term *= values[v] ** e
            k >>= _SHIFT
            v += 1
        total += term
    return total


def poly_eval_ring(f, p, ring, values):
    """Evaluate the mod-p reduction of ``f`` in a commutative ring.

    ``ring`` supplies ``zero`` and ``from_int``; ``values`` are ring elements.
    Powers of each value are cached across monomials.
    """
    pow_cache = [{} for _ in values]
    total = ring.zero
    for k, c in f.items():
        c %= p
        if c == 0:
            continue
        term = ring.from_int(c)
        v = 0
        while k:
            e = k & _MASK
            if e:
                cache = pow_cache[v]
                pw = cache.get(e)
                if pw is None:
                    pw = values[v] ** e
                    cache[e] = pw
                term = term * pw
            k >>= _SHIFT
            v += 1
        total = total + term
    return total


def ghost_poly(p, i, side=0):
    """w_i in the X variables (side 0) or the Y variables (side 1)."""
    return {monomial(2 * j + side, p ** (i - j)): p ** j for j in range(i + 1)}


# per-prime cache: lists of structure polys and their p-th-power chains
_cache = {}


def _state(p):
    st = _cache.get(p)
    if st is None:
        st = {"add": [], "mul": [], "neg": [], "frob": [], "pow": {}}
        _cache[p] = st
    return st


def _chain_power(p, kind, j, t):
    """A_j^(p^t) (or P_j, N_j), computed by chaining p-th powers and cached."""
    st = _state(p)
    if t == 0:
        return st[kind][j]
    key = (kind, j, t)
    pw = st["pow"].get(key)
    if pw is None:
        pw = poly_pow(_chain_power(p, kind, j, t - 1), p)
        st["pow"][key] = pw
    return pw


def _extend(p, n):
    st = _state(p)
    for i in range(len(st["add"]), n):
        wx = ghost_poly(p, i, 0)
        wy = ghost_poly(p, i, 1)
        targets = {
            "add": poly_add(wx, wy),
            "mul": poly_mul(wx, wy),
            "neg": poly_scale(wx, -1),
            # Frobenius: w_i(F(X)) = w_{i+1}(X); F_i involves X_0..X_{i+1}
            "frob": ghost_poly(p, i + 1, 0),
        }
        for kind, target in targets.items():
            for j in range(i):
                target = poly_sub(
                    target, poly_scale(_chain_power(p, kind, j, i - j), p ** j)
                )
            st[kind].append(poly_div_exact(target, p ** i))
    return st


def witt_structure_polys(p, n):
    """Addition, multiplication and negation polynomials for W_n.

    Returns a dict with keys ``"add"``, ``"mul"`` (lists of polynomials in
    the interleaved variables X_j = 2j, Y_j = 2j+1) and ``"neg"``
    (polynomials in the X variables only).
    """
    st = _extend(p, n)
    return {kind: st[kind][:n] for kind in ("add", "mul", "neg", "frob")}


def s1_poly(p):
    """The first carry polynomial S_1(x, y) = -(1/p) sum_{0<k<p} C(p,k) x^k y^(p-k).

    Variables: x = X_0 (index 0), y = Y_0 (index 1).
    """
    out = {}
    for k in range(1, p):
        out[xvar(0, k) + yvar(0, p - k)] = -(math.comb(p, k) // p)
    return out


def weighted_degrees(f, xweights, yweights=None):
    """The set of weights of the monomials of f under per-variable weights."""
    if yweights is None:
        yweights = xweights
    nvars = 2 * len(xweights)
    degs = set()
    for k in f:
        exps = unpack(k, nvars)
        degs.add(
            sum(w * e for w, e in zip(xweights, exps[0::2]))
            + sum(w * e for w, e in zip(yweights, exps[1::2]))
        )
    return degs


def interleave(xs, ys):
    out = []
    for a, b in zip(xs, ys):
        out.extend((a, b))
    return out


def verify_ghost_identities(p, n, samples=5, seed=0):
    """Check the defining ghost identities of the structure polynomials.

    Symbolically: substituting the computed polynomials back into the ghost
    maps must reproduce w_i(X) + w_i(Y), w_i(X) w_i(Y) and -w_i(X) exactly.
    Numerically: the same identities are re-checked at ``samples`` random
    integer points as an independent probe.  Returns True or raises.
    """
    witt_structure_polys(p, n)
    for i in range(n):
        wx = ghost_poly(p, i, 0)
        wy = ghost_poly(p, i, 1)
        for kind, target in (
            ("add", poly_add(wx, wy)),
            ("mul", poly_mul(wx, wy)),
            ("neg", poly_scale(wx, -1)),
            ("frob", ghost_poly(p, i + 1, 0)),
        ):
            acc = {}
            for j in range(i + 1):
                acc = poly_add(
                    acc, poly_scale(_chain_power(p, kind, j, i - j), p ** j)
                )
            if acc != target:
                raise AssertionError(f"{kind} ghost identity fails at i={i}")
    rng = random.Random(seed)
    polys = witt_structure_polys(p, n)
    for _ in range(samples):
        x = [rng.randrange(-50, 50) for _ in range(n)]
        y = [rng.randrange(-50, 50) for _ in range(n)]
        vals = interleave(x, y) + [rng.randrange(-50, 50), 0]
        a = [poly_eval_int(f, vals) for f in polys["add"]]
        m = [poly_eval_int(f, vals) for f in polys["mul"]]
        ng = [poly_eval_int(f, vals) for f in polys["neg"]]
        fr = [poly_eval_int(f, vals) for f in polys["frob"]]
        for i in range(n):
            gx = poly_eval_int(ghost_poly(p, i, 0), vals)
            gy = poly_eval_int(ghost_poly(p, i, 1), vals)
            assert poly_eval_int(ghost_poly(p, i, 0), interleave(a, a)) == gx + gy
            assert poly_eval_int(ghost_poly(p, i, 0), interleave(m, m)) == gx * gy
            assert poly_eval_int(ghost_poly(p, i, 0), interleave(ng, ng)) == -gx
            # w_i(F(x)) = w_{i+1}(x), with the sampled extra coordinate x_n
            assert poly_eval_int(ghost_poly(p, i, 0), interleave(fr, fr)) == (
                poly_eval_int(ghost_poly(p, i + 1, 0), vals)
            )
    return True


def poly_to_json(f, n, xy=True):
    """Deterministic JSON-ready form: sorted [[exponents], coefficient] pairs.

    Exponent vectors are reported in the order X_0..X_{n-1}, Y_0..Y_{n-1}
    (X variables only when ``xy`` is false).
    """
    names = [f"X{j}" for j in range(n)]
    terms = []
    for k, c in f.items():
        exps = unpack(k, 2 * n)
        vec = list(exps[0::2])
        if xy:
            vec += list(exps[1::2])
        terms.append((vec, c))
    if xy:
        names += [f"Y{j}" for j in range(n)]
    terms.sort()
    return {"vars": names, "terms": [[e, c] for e, c in terms]}


def structure_polys_json(p, n):
    polys = witt_structure_polys(p, n)
    return {
        "p": p,
        "n": n,
        "add": [poly_to_json(f, n) for f in polys["add"]],
        "mul": [poly_to_json(f, n) for f in polys["mul"]],
        "neg": [poly_to_json(f, n, xy=False) for f in polys["neg"]],
    }


def structure_polys_json_text(p, n):
    return json.dumps(structure_polys_json(p, n), sort_keys=True, separators=(",", ":"))
