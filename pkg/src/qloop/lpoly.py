"""Sparse Laurent polynomials with exact integer coefficients.

A monomial is a tuple of (key, exponent) pairs, sorted by key, with all
exponents nonzero; keys can be anything hashable and mutually comparable
(plain ints, (node, shift) pairs, string-tagged tuples).  The empty tuple
is the unit monomial.  `LPoly` stores a monomial -> coefficient dict and
is treated as immutable after construction.
"""

from __future__ import annotations

from typing import Callable

Mono = tuple

ONE_MONO: Mono = ()


def mono(pairs) -> Mono:
    """Canonical monomial from (key, exp) pairs; drops zero exponents."""
    acc = {}
    for key, exp in pairs:
        acc[key] = acc.get(key, 0) + exp
    return tuple(sorted((k, e) for k, e in acc.items() if e != 0))


def mono_mul(a: Mono, b: Mono) -> Mono:
    if not a:
        return b
    if not b:
        return a
    return mono(list(a) + list(b))


def mono_pow(a: Mono, n: int) -> Mono:
    if n == 0:
        return ONE_MONO
    return tuple((k, e * n) for k, e in a)


def mono_inv(a: Mono) -> Mono:
    return mono_pow(a, -1)


def mono_div(a: Mono, b: Mono) -> Mono:
    return mono_mul(a, mono_inv(b))


class LPoly:
    """Integer-coefficient Laurent polynomial, keyed by monomials."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        data = {}
        if terms:
            for m, c in (terms.items() if hasattr(terms, "items") else terms):
                if c:
                    nc = data.get(m, 0) + c
                    if nc:
                        data[m] = nc
                    else:
                        del data[m]
        self.terms = data

    @classmethod
    def zero(cls) -> "LPoly":
        return cls()

    @classmethod
    def const(cls, c: int) -> "LPoly":
        return cls({ONE_MONO: c})

    @classmethod
    def one(cls) -> "LPoly":
        return cls.const(1)

    @classmethod
    def var(cls, key, exp: int = 1) -> "LPoly":
        return cls({mono([(key, exp)]): 1})

    @classmethod
    def monomial(cls, m: Mono, c: int = 1) -> "LPoly":
        return cls({m: c})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.terms == ({} if other == 0 else {ONE_MONO: other})
        return isinstance(other, LPoly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.canonical())

    def canonical(self) -> tuple:
        """Deterministic serialization: terms sorted by monomial."""
        return tuple(sorted(self.terms.items()))

    def items(self):
        return sorted(self.terms.items())

    def coeff(self, m: Mono) -> int:
        return self.terms.get(m, 0)

    def const_term(self) -> int:
        return self.terms.get(ONE_MONO, 0)

    def __neg__(self) -> "LPoly":
        return LPoly({m: -c for m, c in self.terms.items()})

    def __add__(self, other) -> "LPoly":
        if isinstance(other, int):
            other = LPoly.const(other)
        data = dict(self.terms)
        for m, c in other.terms.items():
            nc = data.get(m, 0) + c
            if nc:
                data[m] = nc
            else:
                data.pop(m, None)
        out = LPoly.__new__(LPoly)
        out.terms = data
        return out

    __radd__ = __add__

    def __sub__(self, other) -> "LPoly":
        if isinstance(other, int):
            other = LPoly.const(other)
        return self + (-other)

    def __rsub__(self, other) -> "LPoly":
        return (-self) + other

    def __mul__(self, other) -> "LPoly":
        if isinstance(other, int):
            if other == 0:
                return LPoly.zero()
            return LPoly({m: c * other for m, c in self.terms.items()})
        data = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                nc = data.get(m, 0) + c1 * c2
                if nc:
                    data[m] = nc
                else:
                    del data[m]
        out = LPoly.__new__(LPoly)
        out.terms = data
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = LPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def map_keys(self, fn: Callable) -> "LPoly":
        """Relabel variable keys through fn (must stay injective)."""
        return LPoly(
            {mono((fn(k), e) for k, e in m): c for m, c in self.terms.items()}
        )

    def subs_one(self, drop: Callable) -> "LPoly":
        """Set every variable with drop(key) true to 1."""
        data = {}
        for m, c in self.terms.items():
            mm = tuple((k, e) for k, e in m if not drop(k))
            nc = data.get(mm, 0) + c
            if nc:
                data[mm] = nc
            else:
                del data[mm]
        return LPoly(data)

    def support_keys(self) -> set:
        keys = set()
        for m in self.terms:
            for k, _ in m:
                keys.add(k)
        return keys

    def min_exponent(self, key) -> int:
        """Minimum exponent of key over the terms (missing key counts 0)."""
        best = None
        for m in self.terms:
            e = dict(m).get(key, 0)
            if best is None or e < best:
                best = e
        return best or 0

    def exact_div(self, other: "LPoly") -> "LPoly":
        """Exact division; raises ValueError when the division is not exact."""
        if not other:
            raise ZeroDivisionError("division by zero polynomial")
        if not self:
            return LPoly.zero()
        if len(other.terms) == 1:
            ((m, c),) = other.terms.items()
            if any(x % c for x in self.terms.values()):
                raise ValueError("inexact coefficient division")
            inv = mono_inv(m)
            return LPoly({mono_mul(t, inv): x // c for t, x in self.terms.items()})
        return _long_division(self, other)


def _long_division(f: LPoly, g: LPoly) -> LPoly:
    keys = sorted(f.support_keys() | g.support_keys())
    index = {k: i for i, k in enumerate(keys)}
    nk = len(keys)

    def dense(m: Mono, shift) -> tuple:
        row = list(shift)
        for k, e in m:
            row[index[k]] += e
        return tuple(row)

    # shift both operands into plain polynomials with no common monomial factor
    shift_f = [-f.min_exponent(k) for k in keys]
    shift_g = [-g.min_exponent(k) for k in keys]
    r = {dense(m, shift_f): c for m, c in f.terms.items()}
    gd = {dense(m, shift_g): c for m, c in g.terms.items()}
    lg = max(gd)
    cg = gd[lg]
    quotient = {}
    while r:
        lr = max(r)
        if any(a < b for a, b in zip(lr, lg)):
            raise ValueError("inexact polynomial division (monomial)")
        if r[lr] % cg:
            raise ValueError("inexact polynomial division (coefficient)")
        t = tuple(a - b for a, b in zip(lr, lg))
        ct = r[lr] // cg
        quotient[t] = quotient.get(t, 0) + ct
        for m, c in gd.items():
            mm = tuple(a + b for a, b in zip(t, m))
            nc = r.get(mm, 0) - ct * c
            if nc:
                r[mm] = nc
            else:
                r.pop(mm, None)
    # undo the normalization shifts
    back = [sg - sf for sf, sg in zip(shift_f, shift_g)]
    out = {}
    for t, c in quotient.items():
        m = mono((keys[i], t[i] + back[i]) for i in range(nk))
        out[m] = c
    return LPoly(out)
