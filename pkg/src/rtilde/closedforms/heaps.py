"""Point configurations (heaps) of 321-avoiding, 2-repeating permutations.

A configuration is a finite set of lattice points ``(i, j)`` with ``j <= 0``,
``|i| <= |j|`` and ``i = j (mod 2)``. The point ``(i, j)`` stands for the
letter ``s_(1-j)``, i.e. the 0-based generator ``-j``. Reading the points
column by column (ascending ``i``, top to bottom inside a column) gives a
reduced word.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import prod
from typing import Iterable

from rtilde.coxeter import CoxeterError, Element, NotFullyCommutativeError, SymmetricGroup, Word
from rtilde.poly import IntPolynomial, modified_fibonacci


class ConfigurationError(ValueError):
    pass


Point = tuple[int, int]


def in_cone(p: Point) -> bool:
    i, j = p
    return j <= 0 and abs(i) <= abs(j) and (i - j) % 2 == 0


@dataclass(frozen=True)
class PointConfiguration:
    points: frozenset[Point]

    def __init__(self, points: Iterable[Point]):
        pts = frozenset((int(i), int(j)) for i, j in points)
        bad = sorted(p for p in pts if not in_cone(p))
        if bad:
            raise ConfigurationError(f"points outside the cone: {bad}")
        object.__setattr__(self, "points", pts)

    def __len__(self):
        return len(self.points)

    def rows(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for i, j in sorted(self.points):
            out.setdefault(j, []).append(i)
        return out

    def to_text(self) -> str:
        return "".join(f"{i} {j}\n" for i, j in sorted(self.points, key=lambda p: (p[0], -p[1])))


def parse_configuration(text: str) -> PointConfiguration:
    """One ``i j`` pair per line; ``#`` starts a comment."""
    pts = []
    for n, line in enumerate(text.splitlines(), 1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        try:
            i, j = (int(x) for x in body.split())
        except ValueError:
            raise ConfigurationError(f"line {n}: expected two integers, got {line!r}") from None
        pts.append((i, j))
    return PointConfiguration(pts)


def config_is_admissible(conf: PointConfiguration) -> bool:
    for j, xs in conf.rows().items():
        if len(xs) > 2:
            return False
        if len(xs) == 2:
            a, b = xs
            if b - a != 2:
                return False
            if (a + 1, j + 1) not in conf.points or (a + 1, j - 1) not in conf.points:
                return False
    return True


def config_to_word(conf: PointConfiguration, check: bool = True) -> Word:
    """Read left to right, top to bottom; letters are 0-based generators ``-j``."""
    if check and not config_is_admissible(conf):
        raise ConfigurationError("configuration is not admissible")
    return tuple(-j for i, j in sorted(conf.points, key=lambda p: (p[0], -p[1])))


def heap_order_pairs(conf: PointConfiguration) -> list[tuple[Point, Point]]:
    """Pairs ``(P, Q)`` of non-commuting points with P read before Q."""
    pts = sorted(conf.points)
    return [(p, q) for p in pts for q in pts if abs(p[1] - q[1]) <= 1 and p[0] < q[0]]


def heap_of(group: SymmetricGroup, v: Element) -> PointConfiguration:
    """An admissible configuration whose reading word is a reduced word of ``v``.

    Each occurrence of a letter in a reduced word becomes a point; covering
    pairs in adjacent rows sit one column apart, and each connected piece
    is slid horizontally into the cone.
    """
    _require_fc2(group, v)
    word = v.word
    n = len(word)
    edges: dict[int, list[tuple[int, int]]] = {k: [] for k in range(n)}
    for k, a in enumerate(word):
        for b in (a - 1, a + 1):
            for k2 in range(k + 1, n):
                if word[k2] == a:
                    break
                if word[k2] == b:
                    edges[k].append((k2, 1))
                    edges[k2].append((k, -1))
                    break
    x: dict[int, int] = {}
    points: list[Point] = []
    for start in range(n):
        if start in x:
            continue
        x[start] = word[start]
        comp = [start]
        queue = deque([start])
        while queue:
            k = queue.popleft()
            for k2, dx in edges[k]:
                if k2 not in x:
                    x[k2] = x[k] + dx
                    comp.append(k2)
                    queue.append(k2)
                elif x[k2] != x[k] + dx:
                    raise ConfigurationError("heap does not embed in the lattice")
        lo = max(-word[k] - x[k] for k in comp)
        hi = min(word[k] - x[k] for k in comp)
        if lo > hi:
            raise ConfigurationError("heap piece does not fit in the cone")
        # lo and hi are even; take the shift nearest to zero
        shift = min(max(0, lo), hi)
        points += [(x[k] + shift, -word[k]) for k in comp]
    conf = PointConfiguration(points)
    if not config_is_admissible(conf) or group.element(config_to_word(conf)) != v:
        raise ConfigurationError(f"heap construction failed for {v}")
    return conf


@dataclass(frozen=True)
class ChainDecomposition:
    """Letters used once, and maximal runs of letters used twice (0-based)."""

    singles: tuple[int, ...]
    chains: tuple[tuple[int, ...], ...]

    @property
    def n1(self) -> int:
        return len(self.singles)

    @property
    def kappa(self) -> int:
        return len(self.chains)

    @property
    def lambdas(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.chains)


def _require_fc2(group: SymmetricGroup, v: Element) -> dict[int, int]:
    if not group.is_321_avoiding(v):
        raise NotFullyCommutativeError(f"{group.to_perm(v)} is not 321-avoiding")
    counts = group.letter_multiplicities(v)
    if any(c > 2 for c in counts.values()):
        raise CoxeterError(f"{group.to_perm(v)} is not 2-repeating")
    return counts


def chain_stats(group: SymmetricGroup, v: Element) -> ChainDecomposition:
    counts = _require_fc2(group, v)
    singles = tuple(i for i in sorted(counts) if counts[i] == 1)
    chains: list[tuple[int, ...]] = []
    run: list[int] = []
    for i in range(group.rank + 1):
        if counts.get(i, 0) == 2:
            run.append(i)
        elif run:
            chains.append(tuple(run))
            run = []
    return ChainDecomposition(singles, tuple(chains))


def general_rtilde_e(group: SymmetricGroup, v: Element) -> IntPolynomial:
    """``t^(n1) * prod of modified Fibonacci polynomials over the 2-chains``."""
    st = chain_stats(group, v)
    return prod((modified_fibonacci(lam) for lam in st.lambdas), start=IntPolynomial([1])).shift(st.n1)
