"""Up-and-down words in S_n and their product formula ``t^c (t^2 + 1)^d``.

A UD-word climbs strictly to a unique peak letter and then descends strictly.
Over such a word no braid move of order 3 is ever needed, so each letter of
the word contributes independently to the light leaves with a given top:

====  ================================================  ==========
case  letter s_i                                         factor
====  ================================================  ==========
A1    once in the word, absent from u                    t
A2    once in the word, present in u                     1
B1    twice in the word, twice in u                      1
C1    twice; s_(i+1) in u; s_i once in u, left of it     t
C2    twice; s_(i+1) in u; s_i once in u, right of it    t
C3    twice; s_(i+1) not in u; s_i once in u             t
D1    twice; s_(i+1) in u; s_i not in u                  t^2
D2    twice; neither s_i nor s_(i+1) in u                t^2 + 1
====  ================================================  ==========
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from rtilde.coxeter import CoxeterError, Element, SymmetricGroup, Word
from rtilde.poly import ZERO, IntPolynomial

EXPONENT = {"A1": 1, "A2": 0, "B1": 0, "C1": 1, "C2": 1, "C3": 1, "D1": 2}
T2_PLUS_1 = IntPolynomial([1, 0, 1])


class NotUDWordError(CoxeterError):
    pass


@dataclass(frozen=True)
class UDWord:
    ascending: Word
    peak: int | None
    descending: Word

    @property
    def word(self) -> Word:
        mid = () if self.peak is None else (self.peak,)
        return self.ascending + mid + self.descending


def is_ud_word(word: Sequence[int]) -> UDWord | None:
    """Split ``word`` at its unique maximal letter, or return None."""
    w = tuple(word)
    if not w:
        return UDWord((), None, ())
    peak = max(w)
    if w.count(peak) != 1:
        return None
    k = w.index(peak)
    up, down = w[:k], w[k + 1 :]
    if any(a >= b for a, b in zip(up, up[1:])) or any(a <= b for a, b in zip(down, down[1:])):
        return None
    return UDWord(up, peak, down)


@dataclass
class CaseTable:
    """Per-letter case labels (0-based generator -> case) and the totals."""

    cases: dict[int, str] = field(default_factory=dict)
    c: int = 0
    d2_count: int = 0

    def __bool__(self):
        return bool(self.cases)

    def rows(self) -> list[tuple[str, str, str]]:
        """(letter, case, exponent) rows in decreasing letter order, 1-based."""
        return [
            (f"s{i + 1}", case, "" if case == "D2" else str(EXPONENT[case]))
            for i, case in sorted(self.cases.items(), reverse=True)
        ]


def top_subword(group: SymmetricGroup, u: Element, word: Sequence[int]) -> tuple[int, ...] | None:
    """Positions of a reduced subword of ``word`` equal to ``u``, chosen greedily from the right."""
    x = u
    chosen = []
    for p in range(len(word) - 1, -1, -1):
        if group.is_descent(x, word[p]):
            chosen.append(p)
            x = group.multiply(x, word[p])
    if not x.is_identity():
        return None
    return tuple(reversed(chosen))


def ud_rtilde(group: SymmetricGroup, u: Element, word: Sequence[int]) -> tuple[IntPolynomial, CaseTable]:
    """Closed-form R-tilde of ``u`` against a UD-word, with its case table.

    Returns the zero polynomial and an empty table when no light leaf of the
    word has top ``u``.
    """
    w = group.check_word(word)
    if is_ud_word(w) is None:
        raise NotUDWordError(f"{w} is not an up-and-down word")
    chosen = top_subword(group, u, w)
    if chosen is None:
        return ZERO, CaseTable()
    occ: dict[int, list[int]] = {}
    for p, a in enumerate(w):
        occ.setdefault(a, []).append(p)
    in_top: dict[int, list[int]] = {}
    for p in chosen:
        in_top.setdefault(w[p], []).append(p)

    table = CaseTable()
    for i in sorted(occ, reverse=True):
        mine = in_top.get(i, [])
        above = in_top.get(i + 1, [])
        if len(occ[i]) == 1:
            case = "A2" if mine else "A1"
        elif len(mine) == 2:
            case = "B1"
        elif len(mine) == 1:
            if not above:
                case = "C3"
            else:
                case = "C1" if mine[0] < min(above) else "C2"
        else:
            case = "D1" if above else "D2"
        table.cases[i] = case
        if case == "D2":
            table.d2_count += 1
        else:
            table.c += EXPONENT[case]
    return T2_PLUS_1 ** table.d2_count * IntPolynomial.monomial(table.c), table


def transposition_word(a: int, b: int) -> Word:
    """Reduced UD-word ``s_a ... s_(b-2) s_(b-1) s_(b-2) ... s_a`` of ``(a, b)`` (1-based a < b)."""
    if not 1 <= a < b:
        raise ValueError("need 1 <= a < b")
    up = tuple(range(a - 1, b - 2))
    return up + (b - 2,) + tuple(reversed(up))

