"""Empirical scan: is every R-tilde below a 321-avoiding, 2-repeating ``w``
of the form ``t^a * prod_i F_(c_i)`` with modified Fibonacci factors?

A pair that cannot be factored is reported as a *candidate* only; failing to
find a factorization proves nothing.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from rtilde.closedforms.heaps import _require_fc2
from rtilde.coxeter import Element, SymmetricGroup, format_word
from rtilde.hecke import rtilde_recursive
from rtilde.poly import IntPolynomial, modified_fibonacci


@lru_cache(maxsize=None)
def _stripped(c: int) -> tuple[IntPolynomial, int]:
    """Modified Fibonacci polynomial with its t-power removed, and that power."""
    f = modified_fibonacci(c)
    val = f.valuation
    return f.shift(-val), val


def factor_modified_fibonacci(p: IntPolynomial) -> tuple[int, tuple[int, ...]] | None:
    """Find ``a, (c_1 >= c_2 >= ...)`` with ``p = t^a prod modified_fibonacci(c_i)``.

    Depth-first over non-increasing ``c``, trying the largest factor first.
    """
    if p.is_zero():
        return None
    a0 = p.valuation
    core = p.shift(-a0)

    def search(q: IntPolynomial, cmax: int) -> list[int] | None:
        if q.degree == 0:
            return [] if q.coeffs == (1,) else None
        # the stripped factor for c has degree c or c + 1
        for c in range(min(cmax, q.degree), 0, -1):
            g, _ = _stripped(c)
            if g.degree > q.degree:
                continue
            quot, rem = q.divmod(g)
            if rem.is_zero():
                rest = search(quot, c)
                if rest is not None:
                    return [c] + rest
        return None

    cs = search(core, core.degree or 0)
    if cs is None:
        return None
    return a0 - sum(_stripped(c)[1] for c in cs), tuple(cs)


@dataclass(frozen=True)
class ScanRecord:
    u: Element
    v: Element
    poly: IntPolynomial
    a: int | None
    cs: tuple[int, ...] | None

    @property
    def status(self) -> str:
        return "factored" if self.cs is not None else "candidate"

    def line(self) -> str:
        a = "-" if self.a is None else str(self.a)
        cs = "-" if self.cs is None else "[" + ",".join(map(str, self.cs)) + "]"
        return f"u={format_word(self.u.word)} v={format_word(self.v.word)} poly={self.poly.machine()} status={self.status} a={a} cs={cs}"


def scan_pairs(group: SymmetricGroup, pairs) -> list[ScanRecord]:
    out = []
    for u, v in pairs:
        p = rtilde_recursive(group, u, v)
        found = factor_modified_fibonacci(p)
        a, cs = found if found is not None else (None, None)
        out.append(ScanRecord(u, v, p, a, cs))
    return out


def conjecture_scan(group: SymmetricGroup, w: Element) -> list[ScanRecord]:
    """Every pair ``u <= v <= w``, sorted by (length, word) of v then u."""
    _require_fc2(group, w)
    below = group.bruhat_interval(group.identity, w)
    pairs = [(u, v) for v in below for u in below if group.bruhat_leq(u, v)]
    return scan_pairs(group, pairs)
