"""Exact integer polynomials and Laurent polynomials in one variable ``t``.

Two value types live here:

* :class:`IntPolynomial` -- an element of Z[t], stored as an ascending tuple of
  coefficients with no trailing zeros.
* :class:`LaurentPolynomial` -- an element of Z[t, t^-1], stored as a sparse
  ``{exponent: coefficient}`` mapping with no zero entries.

Both are immutable and hashable. Coefficients are Python ints, so nothing
overflows however large Hecke-algebra products get.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Iterable, Mapping


class NotInSpanError(ValueError):
    """A Laurent polynomial is not a Z-combination of powers of (t - t^-1)."""


def _render(terms: Iterable[tuple[int, int]], var: str = "t") -> str:
    # terms are (exponent, coefficient) in descending exponent order
    out = []
    for k, c in terms:
        if k == 0:
            mono = str(abs(c))
        else:
            power = var if k == 1 else f"{var}^{k}"
            mono = power if abs(c) == 1 else f"{abs(c)}{power}"
        if not out:
            out.append(mono if c > 0 else f"-{mono}")
        else:
            out.append(f" + {mono}" if c > 0 else f" - {mono}")
    return "".join(out) if out else "0"


class IntPolynomial:
    """A polynomial with integer coefficients; ``coeffs[k]`` multiplies ``t**k``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[int, ...] = tuple(cs)

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPolynomial:
        if k < 0:
            raise ValueError("negative exponent in an ordinary polynomial")
        return cls([0] * k + [c])

    @classmethod
    def from_terms(cls, terms: Mapping[int, int]) -> IntPolynomial:
        if not terms:
            return cls()
        cs = [0] * (max(terms) + 1)
        for k, c in terms.items():
            if k < 0:
                raise ValueError("negative exponent in an ordinary polynomial")
            cs[k] += c
        return cls(cs)

    # -- inspection -------------------------------------------------------

    @property
    def degree(self) -> int | None:
        """Degree, or ``None`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def valuation(self) -> int | None:
        """Lowest exponent with a nonzero coefficient, ``None`` for zero."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return None

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def terms(self) -> dict[int, int]:
        return {k: c for k, c in enumerate(self.coeffs) if c}

    def exponents(self) -> list[int]:
        """Exponents with nonzero coefficient, each listed with multiplicity 1."""
        return [k for k, c in enumerate(self.coeffs) if c]

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = _as_int_poly(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPolynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        other = _as_int_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_int_poly(other)
        if other is None:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result, base = IntPolynomial([1]), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> IntPolynomial:
        """Multiply by ``t**k``; a negative ``k`` must divide exactly."""
        if k >= 0:
            return IntPolynomial([0] * k + list(self.coeffs)) if self.coeffs else self
        if any(self.coeffs[: -k]):
            raise ValueError(f"t^{-k} does not divide {self}")
        return IntPolynomial(self.coeffs[-k:])

    def divmod(self, divisor: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
        """Long division by a monic (or unit-leading) divisor, staying in Z[t]."""
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        lead = divisor.coeffs[-1]
        if lead not in (1, -1):
            raise ValueError("divisor must have leading coefficient +-1")
        rem = list(self.coeffs)
        dd = len(divisor.coeffs) - 1
        quot = [0] * max(len(rem) - dd, 0)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k] * lead
            if c:
                quot[k - dd] = c
                for i, d in enumerate(divisor.coeffs):
                    rem[k - dd + i] -= c * d
        return IntPolynomial(quot), IntPolynomial(rem)

    # -- protocol ---------------------------------------------------------

    def __eq__(self, other):
        other = _as_int_poly(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("IntPolynomial", self.coeffs))

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        return _render((k, self.coeffs[k]) for k in range(len(self.coeffs) - 1, -1, -1) if self.coeffs[k])

    def machine(self) -> str:
        """Ascending coefficient list in brackets, e.g. ``[0, 0, 1, 0, 3, 0, 1]``."""
        return "[" + ", ".join(str(c) for c in self.coeffs) + "]"

    def to_laurent(self) -> LaurentPolynomial:
        return LaurentPolynomial(self.terms())


class LaurentPolynomial:
    """An element of Z[t, t^-1] stored sparsely."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        self._terms: dict[int, int] = {int(k): int(c) for k, c in (terms or {}).items() if c}

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> LaurentPolynomial:
        return cls({k: c})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    @property
    def max_exponent(self) -> int | None:
        return max(self._terms) if self._terms else None

    @property
    def min_exponent(self) -> int | None:
        return min(self._terms) if self._terms else None

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, k: int) -> int:
        return self._terms.get(k, 0)

    def __add__(self, other):
        other = _as_laurent(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return LaurentPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = _as_laurent(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_laurent(other)
        if other is None:
            return NotImplemented
        out: dict[int, int] = {}
        for i, x in self._terms.items():
            for j, y in other._terms.items():
                out[i + j] = out.get(i + j, 0) + x * y
        return LaurentPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (k, c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("only unit monomials have Laurent inverses")
            m = -n
            return LaurentPolynomial({-k * m: c**m})
        result, base = LaurentPolynomial({0: 1}), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> LaurentPolynomial:
        return LaurentPolynomial({e + k: c for e, c in self._terms.items()})

    def __call__(self, x):
        return sum(c * x**k for k, c in self._terms.items())

    def __eq__(self, other):
        other = _as_laurent(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(("LaurentPolynomial", frozenset(self._terms.items())))

    def __repr__(self):
        return f"LaurentPolynomial({dict(sorted(self._terms.items()))})"

    def __str__(self):
        return _render(sorted(self._terms.items(), reverse=True))

    def to_int_polynomial(self) -> IntPolynomial:
        return IntPolynomial.from_terms(self._terms)


def _as_int_poly(x) -> IntPolynomial | None:
    if isinstance(x, IntPolynomial):
        return x
    if isinstance(x, int):
        return IntPolynomial([x])
    return None


def _as_laurent(x) -> LaurentPolynomial | None:
    if isinstance(x, LaurentPolynomial):
        return x
    if isinstance(x, IntPolynomial):
        return x.to_laurent()
    if isinstance(x, int):
        return LaurentPolynomial({0: x})
    return None


ZERO = IntPolynomial()
ONE = IntPolynomial([1])
T = IntPolynomial([0, 1])


def add(p, q):
    return p + q


def mul(p, q):
    return p * q


def scale_by_t_power(p, k: int):
    return p.shift(k)


@lru_cache(maxsize=None)
def _t_minus_tinv_power(k: int) -> LaurentPolynomial:
    # (t - t^-1)^k = sum_j C(k, j) (-1)^j t^(k - 2j)
    return LaurentPolynomial({k - 2 * j: (-1) ** j * comb(k, j) for j in range(k + 1)})


def substitute_t_minus_tinv(p: IntPolynomial) -> LaurentPolynomial:
    """Return ``p(t - t^-1)`` expanded in Z[t, t^-1]."""
    out = LaurentPolynomial()
    for k, c in p.terms().items():
        out = out + _t_minus_tinv_power(k) * c
    return out


def express_in_t_minus_tinv(L: LaurentPolynomial) -> IntPolynomial:
    """Inverse of :func:`substitute_t_minus_tinv`.

    Peels off the top-degree term against ``(t - t^-1)^d`` until nothing is
    left. Raises :class:`NotInSpanError` if a residual with negative top
    exponent remains.
    """
    residual = L
    found: dict[int, int] = {}
    while not residual.is_zero():
        d = residual.max_exponent
        if d < 0:
            raise NotInSpanError(f"{L} is not a polynomial in (t - t^-1)")
        c = residual.coefficient(d)
        found[d] = c
        residual = residual - _t_minus_tinv_power(d) * c
    return IntPolynomial.from_terms(found)


def to_classical_normalization(R: LaurentPolynomial, lu: int, lv: int) -> IntPolynomial:
    """Return ``R'`` with ``R(t) = t^(lu - lv) * R'(t^2)``."""
    shifted = R.shift(lv - lu)
    terms = {}
    for k, c in shifted.terms.items():
        if k < 0 or k % 2:
            raise ValueError(f"{R} is not of the form t^{lu - lv} R'(t^2)")
        terms[k // 2] = c
    return IntPolynomial.from_terms(terms)


def from_classical_normalization(Rp: IntPolynomial, lu: int, lv: int) -> LaurentPolynomial:
    return LaurentPolynomial({2 * k + lu - lv: c for k, c in Rp.terms().items()})


@lru_cache(maxsize=None)
def fibonacci(n: int) -> IntPolynomial:
    """Fibonacci polynomial: F_0 = 1, F_1 = t, F_n = t F_{n-1} + F_{n-2}."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    a, b = ONE, T
    if n == 0:
        return a
    for _ in range(n - 1):
        a, b = b, T * b + a
    return b


def modified_fibonacci(n: int) -> IntPolynomial:
    """``t^(n-1) * F_(n+1)(t)`` for n >= 1."""
    if n < 1:
        raise ValueError("modified Fibonacci polynomials start at n = 1")
    return fibonacci(n + 1).shift(n - 1)


def parse_polynomial(text: str) -> IntPolynomial:
    """Parse the caret rendering produced by ``str(IntPolynomial)``."""
    s = text.replace(" ", "")
    if s in ("", "0"):
        return ZERO
    if s[0] not in "+-":
        s = "+" + s
    terms: dict[int, int] = {}
    i = 0
    while i < len(s):
        sign = -1 if s[i] == "-" else 1
        j = i + 1
        while j < len(s) and s[j] not in "+-":
            j += 1
        body = s[i + 1 : j]
        if "t" in body:
            coef_txt, _, pow_txt = body.partition("t")
            coef = int(coef_txt) if coef_txt else 1
            k = int(pow_txt[1:]) if pow_txt.startswith("^") else 1
        else:
            coef, k = int(body), 0
        terms[k] = terms.get(k, 0) + sign * coef
        i = j
    return IntPolynomial.from_terms(terms)
