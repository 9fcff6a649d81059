"""Hecke algebra in the standard basis, R-polynomials and the R-tilde recursion.

Conventions: ``H_s^2 = 1 + (t^-1 - t) H_s`` and ``H_s^-1 = H_s + (t - t^-1)``.
The R-polynomials are the coefficients of ``(H_{v^-1})^-1`` in the standard
basis, and ``R_{u,v}(t) = Rtilde_{u,v}(t - t^-1)``.
"""

from __future__ import annotations

from typing import Callable, Mapping

from rtilde.coxeter import CoxeterGroup, Element
from rtilde.poly import ONE, T, ZERO, IntPolynomial, LaurentPolynomial, express_in_t_minus_tinv

T_INV_MINUS_T = LaurentPolynomial({-1: 1, 1: -1})
T_MINUS_T_INV = LaurentPolynomial({1: 1, -1: -1})


class SupportOverflowError(RuntimeError):
    """A Hecke expansion grew past the caller's support cap."""


class HeckeElement:
    """Finite sum ``sum_u c_u H_u`` with Laurent coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Element, LaurentPolynomial] | None = None):
        self.terms: dict[Element, LaurentPolynomial] = {
            u: c for u, c in (terms or {}).items() if not c.is_zero()
        }

    def coefficient(self, u: Element) -> LaurentPolynomial:
        return self.terms.get(u, LaurentPolynomial())

    def __add__(self, other: HeckeElement) -> HeckeElement:
        out = dict(self.terms)
        for u, c in other.terms.items():
            out[u] = out[u] + c if u in out else c
        return HeckeElement(out)

    def __sub__(self, other: HeckeElement) -> HeckeElement:
        return self + other.scale(LaurentPolynomial({0: -1}))

    def scale(self, c: LaurentPolynomial) -> HeckeElement:
        return HeckeElement({u: c * x for u, x in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.terms == other.terms

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        body = " + ".join(f"({c})H[{u}]" for u, c in sorted(self.terms.items(), key=lambda kv: kv[0].word))
        return f"HeckeElement({body or '0'})"


class HeckeAlgebra:
    """Standard-basis arithmetic over one Coxeter group."""

    def __init__(self, group: CoxeterGroup, max_support: int | None = None):
        self.group = group
        self.max_support = max_support
        self._inverses: dict[Element, HeckeElement] = {}

    def standard(self, u: Element) -> HeckeElement:
        return HeckeElement({u: LaurentPolynomial({0: 1})})

    @property
    def one(self) -> HeckeElement:
        return self.standard(self.group.identity)

    def _check(self, h: HeckeElement) -> HeckeElement:
        if self.max_support is not None and len(h) > self.max_support:
            raise SupportOverflowError(f"support {len(h)} exceeds cap {self.max_support}")
        return h

    def mul_by_generator(self, h: HeckeElement, s: int) -> HeckeElement:
        """Right multiplication by ``H_s``."""
        out: dict[Element, LaurentPolynomial] = {}

        def put(x, c):
            out[x] = out[x] + c if x in out else c

        for u, c in h.terms.items():
            us = self.group.multiply(u, s)
            put(us, c)
            if us.length < u.length:
                put(u, c * T_INV_MINUS_T)
        return self._check(HeckeElement(out))

    def mul_by_generator_inverse(self, h: HeckeElement, s: int) -> HeckeElement:
        """Right multiplication by ``H_s^-1 = H_s + (t - t^-1)``."""
        return self._check(self.mul_by_generator(h, s) + h.scale(T_MINUS_T_INV))

    def multiply(self, a: HeckeElement, b: HeckeElement) -> HeckeElement:
        out = HeckeElement()
        for v, c in b.terms.items():
            part = a
            for s in v.word:
                part = self.mul_by_generator(part, s)
            out = out + part.scale(c)
        return self._check(out)

    def inverse_of_standard_inverse(self, v: Element) -> HeckeElement:
        """``(H_{v^-1})^-1``, i.e. ``H_{a1}^-1 ... H_{ak}^-1`` for ``v = a1 ... ak``."""
        hit = self._inverses.get(v)
        if hit is None:
            hit = self.one
            for s in v.word:
                hit = self.mul_by_generator_inverse(hit, s)
            self._inverses[v] = hit
        return hit

    def r_polynomial(self, u: Element, v: Element) -> LaurentPolynomial:
        return self.inverse_of_standard_inverse(v).coefficient(u)

    def rtilde(self, u: Element, v: Element) -> IntPolynomial:
        return express_in_t_minus_tinv(self.r_polynomial(u, v))


def hecke_algebra(group: CoxeterGroup) -> HeckeAlgebra:
    """The per-group shared algebra instance (keeps the inversion cache warm)."""
    alg = group.cache.get("hecke")
    if alg is None:
        alg = group.cache["hecke"] = HeckeAlgebra(group)
    return alg


def r_polynomial(group: CoxeterGroup, u: Element, v: Element, max_support: int | None = None) -> LaurentPolynomial:
    if max_support is not None:
        return HeckeAlgebra(group, max_support).r_polynomial(u, v)
    return hecke_algebra(group).r_polynomial(u, v)


DescentPolicy = Callable[[CoxeterGroup, Element], int]


def rightmost_descent(group: CoxeterGroup, v: Element) -> int:
    return v.word[-1]


def rtilde_recursive(
    group: CoxeterGroup,
    u: Element,
    v: Element,
    choose_descent: DescentPolicy | None = None,
) -> IntPolynomial:
    """R-tilde by the descent recursion, memoized on canonical forms.

    ``choose_descent`` picks the right descent of ``v`` to recurse on; the
    default (rightmost letter of the canonical word) shares a cache across
    calls on the same group.
    """
    if choose_descent is None:
        memo = group.cache.setdefault("rtilde", {})
        choose_descent = rightmost_descent
    else:
        memo = {}

    def rec(u: Element, v: Element) -> IntPolynomial:
        key = (u.word, v.word)
        hit = memo.get(key)
        if hit is not None:
            return hit
        if u == v:
            res = ONE
        elif u.length >= v.length or not group.bruhat_leq(u, v):
            res = ZERO
        else:
            s = choose_descent(group, v)
            if not group.is_descent(v, s):
                raise ValueError(f"descent policy returned non-descent {s} for {v}")
            us, vs = group.multiply(u, s), group.multiply(v, s)
            res = rec(us, vs)
            if us.length > u.length:
                res = res + T * rec(u, vs)
        memo[key] = res
        return res

    return rec(u, v)
