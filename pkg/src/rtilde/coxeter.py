"""Coxeter systems: presentations, the word problem, Bruhat order, braid moves.

Generators are indexed ``0 .. rank-1``. For the symmetric group S_n the
generator ``i`` is the simple transposition ``(i+1, i+2)``, acting on the
left, so the word ``a1 a2 ... ak`` is the permutation
``s_a1 o s_a2 o ... o s_ak``.

Two backends share one interface:

* :class:`CoxeterGroup` solves the word problem for any Coxeter matrix by
  Tits' method: an element is the braid-move orbit of one of its reduced
  words, and a word is reduced iff no word in its orbit has two equal
  adjacent letters.
* :class:`SymmetricGroup` keeps a one-line permutation alongside the word and
  does all arithmetic on the permutation.

Every element carries its canonical form, the lexicographically least
reduced word, so equal elements compare and hash equal across backends.
"""

from __future__ import annotations

import heapq
import math
import re
from collections import deque
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, NamedTuple, Sequence

INF = math.inf

Word = tuple[int, ...]


class CoxeterError(ValueError):
    pass


class NotADescentError(CoxeterError):
    pass


class NotFullyCommutativeError(CoxeterError):
    """Raised where a 321-avoiding (fully commutative) element is required."""


@dataclass(frozen=True)
class CoxeterMatrix:
    """Symmetric matrix of orders ``m_st``; ``math.inf`` marks a free pair."""

    entries: tuple[tuple[float, ...], ...]

    def __post_init__(self):
        n = len(self.entries)
        if n == 0:
            raise CoxeterError("rank must be positive")
        for i, row in enumerate(self.entries):
            if len(row) != n:
                raise CoxeterError("Coxeter matrix must be square")
            if row[i] != 1:
                raise CoxeterError(f"diagonal entry m[{i}][{i}] must be 1")
            for j, m in enumerate(row):
                if i == j:
                    continue
                if m != self.entries[j][i]:
                    raise CoxeterError("Coxeter matrix must be symmetric")
                if not (m == INF or (isinstance(m, int) and m >= 2)):
                    raise CoxeterError(f"off-diagonal entry m[{i}][{j}] = {m!r} must be >= 2 or inf")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int | float]]) -> CoxeterMatrix:
        return cls(tuple(tuple(INF if m in (0, INF) else int(m) for m in row) for row in rows))

    @classmethod
    def type_A(cls, n: int) -> CoxeterMatrix:
        """The matrix of S_{n+1}."""
        return cls.from_rows([[1 if i == j else 3 if abs(i - j) == 1 else 2 for j in range(n)] for i in range(n)])

    @classmethod
    def dihedral(cls, m: int | float) -> CoxeterMatrix:
        return cls.from_rows([[1, m], [m, 1]])

    @property
    def rank(self) -> int:
        return len(self.entries)

    def m(self, s: int, t: int) -> float:
        return self.entries[s][t]

    def is_finite_type(self) -> bool:
        """Positive definiteness of the cosine form ``-cos(pi / m_st)``."""
        n = self.rank
        a = [[(-math.cos(math.pi / m) if m != INF else -1.0) for m in row] for row in self.entries]
        for k in range(n):
            pivot = a[k][k]
            if pivot <= 1e-12:
                return False
            for i in range(k + 1, n):
                f = a[i][k] / pivot
                for j in range(k, n):
                    a[i][j] -= f * a[k][j]
        return True

    def to_text(self) -> str:
        lines = [f"rank {self.rank}"]
        for row in self.entries:
            lines.append(" ".join("0" if m == INF else str(m) for m in row))
        return "\n".join(lines) + "\n"


def parse_matrix_text(text: str) -> CoxeterMatrix:
    """Parse the plain-text matrix format: ``rank N`` then N rows, ``0`` for inf."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines or not lines[0].startswith("rank"):
        raise CoxeterError("matrix file must start with 'rank N'")
    try:
        n = int(lines[0].split()[1])
        rows = [[int(x) for x in ln.split()] for ln in lines[1 : 1 + n]]
    except (IndexError, ValueError) as exc:
        raise CoxeterError(f"malformed matrix file: {exc}") from None
    if len(rows) != n:
        raise CoxeterError(f"expected {n} matrix rows, found {len(rows)}")
    return CoxeterMatrix.from_rows(rows)


class BraidMove(NamedTuple):
    """Replace ``first second first ...`` (length m) at ``position`` by ``second first ...``."""

    position: int
    first: int
    second: int
    m: int


def _alternating(a: int, b: int, m: int) -> Word:
    return tuple(a if k % 2 == 0 else b for k in range(m))


def apply_braid_move(word: Sequence[int], move: BraidMove) -> Word:
    p, a, b, m = move
    if tuple(word[p : p + m]) != _alternating(a, b, m):
        raise CoxeterError(f"braid move {move} does not apply to {tuple(word)}")
    return tuple(word[:p]) + _alternating(b, a, m) + tuple(word[p + m :])


@dataclass(frozen=True)
class Element:
    """A group element, identified by its canonical (lex-least reduced) word."""

    word: Word
    perm: tuple[int, ...] | None = field(default=None, compare=False, repr=False)

    @property
    def length(self) -> int:
        return len(self.word)

    def is_identity(self) -> bool:
        return not self.word

    def __str__(self):
        return format_word(self.word)


def format_word(word: Sequence[int]) -> str:
    """1-based, dash separated; ``e`` for the empty word."""
    return "-".join(str(a + 1) for a in word) if word else "e"


class CoxeterGroup:
    """A Coxeter group given by its matrix, with Tits' word-problem solution."""

    backend = "generic"

    def __init__(self, matrix: CoxeterMatrix):
        self.matrix = matrix
        self.rank = matrix.rank
        self._canon: dict[Word, Word] = {}
        self._orbits: dict[Word, frozenset[Word]] = {}
        self._right_desc: dict[Word, frozenset[int]] = {}
        self._bruhat: dict[tuple[Word, Word], bool] = {}
        self._plans: dict[tuple[Word, int], tuple[BraidMove, ...]] = {}
        self.cache: dict = {}  # shared memo space for the hecke / lightleaves layers

    def __repr__(self):
        return f"{type(self).__name__}(rank={self.rank})"

    def __getstate__(self):
        state = self.__dict__.copy()
        for k in ("_canon", "_orbits", "_right_desc", "_bruhat", "_plans", "cache"):
            state[k] = {}
        return state

    # -- words ------------------------------------------------------------

    def check_word(self, word: Iterable[int]) -> Word:
        w = tuple(word)
        for a in w:
            if not (isinstance(a, int) and 0 <= a < self.rank):
                raise CoxeterError(f"letter {a!r} out of range for rank {self.rank}")
        return w

    def braid_moves(self, word: Sequence[int]) -> Iterator[BraidMove]:
        """All braid moves applicable to ``word``, ordered by position."""
        n = len(word)
        for p in range(n - 1):
            a, b = word[p], word[p + 1]
            if a == b:
                continue
            m = self.matrix.m(a, b)
            if m == INF or p + m > n:
                continue
            m = int(m)
            if tuple(word[p : p + m]) == _alternating(a, b, m):
                yield BraidMove(p, a, b, m)

    def braid_orbit(self, word: Sequence[int]) -> frozenset[Word]:
        """All words reachable from ``word`` by braid moves."""
        start = tuple(word)
        seen = {start}
        queue = deque([start])
        while queue:
            w = queue.popleft()
            for mv in self.braid_moves(w):
                x = apply_braid_move(w, mv)
                if x not in seen:
                    seen.add(x)
                    queue.append(x)
        return frozenset(seen)

    def _canonical_of_reduced(self, word: Word) -> Word:
        c = self._canon.get(word)
        if c is None:
            orbit = self.braid_orbit(word)
            c = min(orbit)
            self._orbits[c] = orbit
            for w in orbit:
                self._canon[w] = c
        return c

    def _orbit_of(self, u: Element) -> frozenset[Word]:
        orbit = self._orbits.get(u.word)
        if orbit is None:
            self._canonical_of_reduced(u.word)
            orbit = self._orbits[u.word]
        return orbit

    def _make(self, canonical: Word) -> Element:
        return Element(canonical)

    # -- construction -----------------------------------------------------

    @property
    def identity(self) -> Element:
        return self._make(())

    def generator(self, s: int) -> Element:
        return self.element((s,))

    def generators(self) -> range:
        return range(self.rank)

    def element(self, word: Iterable[int]) -> Element:
        """Canonicalize a (possibly non-reduced) word."""
        u = self.identity
        for a in self.check_word(word):
            u = self.multiply(u, a)
        return u

    canonicalize = element

    def is_reduced(self, word: Iterable[int]) -> bool:
        w = tuple(word)
        return self.element(w).length == len(w)

    # -- arithmetic -------------------------------------------------------

    def right_descents(self, u: Element) -> frozenset[int]:
        d = self._right_desc.get(u.word)
        if d is None:
            d = frozenset(w[-1] for w in self._orbit_of(u) if w)
            self._right_desc[u.word] = d
        return d

    def left_descents(self, u: Element) -> frozenset[int]:
        return frozenset(w[0] for w in self._orbit_of(u) if w)

    def is_descent(self, u: Element, s: int) -> bool:
        """True iff l(us) < l(u)."""
        return s in self.right_descents(u)

    def is_left_descent(self, u: Element, s: int) -> bool:
        return s in self.left_descents(u)

    def multiply(self, u: Element, s: int) -> Element:
        """Right multiplication ``u * s``."""
        if self.is_descent(u, s):
            w = min(w for w in self._orbit_of(u) if w and w[-1] == s)
            return self._make(self._canonical_of_reduced(w[:-1]))
        return self._make(self._canonical_of_reduced(u.word + (s,)))

    def left_multiply(self, s: int, u: Element) -> Element:
        if self.is_left_descent(u, s):
            w = min(w for w in self._orbit_of(u) if w and w[0] == s)
            return self._make(self._canonical_of_reduced(w[1:]))
        return self._make(self._canonical_of_reduced((s,) + u.word))

    def product(self, u: Element, v: Element) -> Element:
        for a in v.word:
            u = self.multiply(u, a)
        return u

    def inverse(self, u: Element) -> Element:
        return self.element(reversed(u.word))

    def length(self, u: Element) -> int:
        return len(u.word)

    # -- order and expressions -------------------------------------------

    def bruhat_leq(self, u: Element, v: Element) -> bool:
        """Bruhat order by the lifting recursion on a right descent of ``v``."""
        key = (u.word, v.word)
        hit = self._bruhat.get(key)
        if hit is not None:
            return hit
        if u.length > v.length:
            res = False
        elif u.length == v.length:
            res = u == v
        elif u.is_identity():
            res = True
        else:
            s = v.word[-1]
            vs = self.multiply(v, s)
            if self.is_descent(u, s):
                res = self.bruhat_leq(self.multiply(u, s), vs)
            else:
                res = self.bruhat_leq(u, vs)
        self._bruhat[key] = res
        return res

    def reduced_expressions(self, v: Element) -> frozenset[Word]:
        return self._orbit_of(v)

    def braid_plan(self, word: Sequence[int], s: int) -> tuple[BraidMove, ...]:
        """Braid moves taking reduced ``word`` to a word ending in ``s``.

        Plans are ranked by (number of moves with m >= 3, number of moves,
        then the sequence of (m, position) keys), so commuting moves are used
        whenever they suffice.
        """
        w0 = tuple(word)
        key = (w0, s)
        hit = self._plans.get(key)
        if hit is not None:
            return hit
        if not self.is_reduced(w0) or not self.is_descent(self.element(w0), s):
            raise NotADescentError(f"generator {s} is not a right descent of {format_word(w0)}")
        heap: list = [(0, 0, (), w0, ())]
        done: set[Word] = set()
        plan: tuple[BraidMove, ...] | None = None
        while heap:
            hv, n, keys, w, moves = heapq.heappop(heap)
            if w in done:
                continue
            done.add(w)
            if w and w[-1] == s:
                plan = moves
                break
            for mv in self.braid_moves(w):
                x = apply_braid_move(w, mv)
                if x not in done:
                    heapq.heappush(
                        heap,
                        (hv + (mv.m >= 3), n + 1, keys + ((mv.m, mv.position),), x, moves + (mv,)),
                    )
        assert plan is not None
        self._plans[key] = plan
        return plan

    # -- enumeration ------------------------------------------------------

    def elements(self, max_length: int | None = None) -> list[Element]:
        """All elements of length <= max_length (all elements if finite)."""
        if max_length is None and not self.matrix.is_finite_type():
            raise CoxeterError("infinite group: pass max_length")
        seen = {self.identity}
        layer = [self.identity]
        out = [self.identity]
        k = 0
        while layer and (max_length is None or k < max_length):
            nxt = []
            for u in layer:
                for s in self.generators():
                    if not self.is_descent(u, s):
                        x = self.multiply(u, s)
                        if x not in seen:
                            seen.add(x)
                            nxt.append(x)
            nxt.sort(key=lambda e: e.word)
            out.extend(nxt)
            layer = nxt
            k += 1
        return out

    def bruhat_interval(self, u: Element, v: Element) -> list[Element]:
        """Elements x with u <= x <= v, by length then canonical word."""
        found = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            for w in self.reduced_expressions(x):
                for i in range(len(w)):
                    y = self.element(w[:i] + w[i + 1 :])
                    if y.length == x.length - 1 and y not in found and self.bruhat_leq(u, y):
                        found.add(y)
                        stack.append(y)
        return sorted((x for x in found if self.bruhat_leq(u, x)), key=lambda e: (e.length, e.word))


class SymmetricGroup(CoxeterGroup):
    """S_n with a permutation backend; generator i swaps i+1 and i+2."""

    backend = "symmetric"

    def __init__(self, n: int):
        if n < 2:
            raise CoxeterError("S_n needs n >= 2")
        super().__init__(CoxeterMatrix.type_A(n - 1))
        self.n = n
        self._by_perm: dict[tuple[int, ...], Element] = {}

    def __repr__(self):
        return f"SymmetricGroup({self.n})"

    def __getstate__(self):
        state = super().__getstate__()
        state["_by_perm"] = {}
        return state

    def from_perm(self, p: Sequence[int]) -> Element:
        p = tuple(p)
        hit = self._by_perm.get(p)
        if hit is not None:
            return hit
        if sorted(p) != list(range(1, self.n + 1)):
            raise CoxeterError(f"{p} is not a permutation of 1..{self.n}")
        # lex-least reduced word: repeatedly strip the smallest left descent
        q = list(p)
        pos = [0] * (self.n + 2)
        for i, x in enumerate(q):
            pos[x] = i
        word = []
        while True:
            for i in range(self.n - 1):
                if pos[i + 2] < pos[i + 1]:
                    word.append(i)
                    pos[i + 1], pos[i + 2] = pos[i + 2], pos[i + 1]
                    break
            else:
                break
        e = Element(tuple(word), p)
        self._by_perm[p] = e
        return e

    perm_to_element = from_perm

    def to_perm(self, u: Element) -> tuple[int, ...]:
        if u.perm is not None:
            return u.perm
        p = list(range(1, self.n + 1))
        for a in u.word:
            p[a], p[a + 1] = p[a + 1], p[a]
        return tuple(p)

    element_to_perm = to_perm

    def _make(self, canonical: Word) -> Element:
        return self.element(canonical)

    @property
    def identity(self) -> Element:
        return self.from_perm(range(1, self.n + 1))

    def element(self, word: Iterable[int]) -> Element:
        p = list(range(1, self.n + 1))
        for a in self.check_word(word):
            p[a], p[a + 1] = p[a + 1], p[a]
        return self.from_perm(p)

    canonicalize = element

    def multiply(self, u: Element, s: int) -> Element:
        p = list(self.to_perm(u))
        p[s], p[s + 1] = p[s + 1], p[s]
        return self.from_perm(p)

    def left_multiply(self, s: int, u: Element) -> Element:
        p = self.to_perm(u)
        swap = {s + 1: s + 2, s + 2: s + 1}
        return self.from_perm(swap.get(x, x) for x in p)

    def inverse(self, u: Element) -> Element:
        p = self.to_perm(u)
        q = [0] * self.n
        for i, x in enumerate(p):
            q[x - 1] = i + 1
        return self.from_perm(q)

    def is_descent(self, u: Element, s: int) -> bool:
        p = self.to_perm(u)
        return p[s] > p[s + 1]

    def right_descents(self, u: Element) -> frozenset[int]:
        p = self.to_perm(u)
        return frozenset(i for i in range(self.n - 1) if p[i] > p[i + 1])

    def is_left_descent(self, u: Element, s: int) -> bool:
        p = self.to_perm(u)
        return p.index(s + 2) < p.index(s + 1)

    def left_descents(self, u: Element) -> frozenset[int]:
        return frozenset(s for s in range(self.n - 1) if self.is_left_descent(u, s))

    def reduced_expressions(self, v: Element) -> frozenset[Word]:
        hit = self._orbits.get(v.word)
        if hit is None:
            hit = self.braid_orbit(v.word)
            self._orbits[v.word] = hit
        return hit

    def is_reduced(self, word: Iterable[int]) -> bool:
        w = tuple(word)
        return self.element(w).length == len(w)

    # -- fully commutative elements --------------------------------------

    def is_321_avoiding(self, u: Element) -> bool:
        return is_321_avoiding(self.to_perm(u))

    def letter_multiplicities(self, v: Element) -> dict[int, int]:
        """Occurrences of each generator in any reduced word of a 321-avoiding ``v``."""
        if not self.is_321_avoiding(v):
            raise NotFullyCommutativeError(f"{self.to_perm(v)} is not 321-avoiding")
        counts = dict.fromkeys(range(self.n - 1), 0)
        for a in v.word:
            counts[a] += 1
        return counts

    def is_2_repeating(self, v: Element) -> bool:
        return all(c <= 2 for c in self.letter_multiplicities(v).values())


def is_321_avoiding(p: Sequence[int]) -> bool:
    """No i < j < k with p(i) > p(j) > p(k).

    Equivalent to no reduced word containing a factor ``s_i s_(i+-1) s_i``.
    """
    n = len(p)
    for j in range(1, n - 1):
        if any(p[i] > p[j] for i in range(j)) and any(p[k] < p[j] for k in range(j + 1, n)):
            return False
    return True


def pagliacci_perm(n: int) -> tuple[int, ...]:
    """One-line ``3 4 ... n 1 2``."""
    if n < 3:
        raise CoxeterError("need n >= 3")
    return tuple(range(3, n + 1)) + (1, 2)


_NAMED = re.compile(r"^(?:A(\d+)|Sym(\d+)|I2\((\d+|inf)\))$")


def group_from_name(name: str, generic: bool = False) -> CoxeterGroup:
    """Resolve ``A<n>`` (S_{n+1}), ``Sym<n>`` (S_n) or ``I2(<m>)``."""
    m = _NAMED.match(name.strip())
    if not m:
        raise CoxeterError(f"unknown group name {name!r}")
    a, sym, dih = m.groups()
    if dih is not None:
        return CoxeterGroup(CoxeterMatrix.dihedral(INF if dih == "inf" else int(dih)))
    n = int(a) + 1 if a is not None else int(sym)
    if n < 2:
        raise CoxeterError(f"group {name!r} has rank 0")
    return CoxeterGroup(CoxeterMatrix.type_A(n - 1)) if generic else SymmetricGroup(n)


def load_group(source: str, generic: bool = False) -> CoxeterGroup:
    """A named group, or a matrix file path."""
    if _NAMED.match(source.strip()):
        return group_from_name(source, generic=generic)
    path = Path(source)
    if not path.exists():
        raise CoxeterError(f"{source!r} is neither a known group name nor a file")
    return CoxeterGroup(parse_matrix_text(path.read_text()))
