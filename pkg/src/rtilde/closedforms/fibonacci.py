"""Fibonacci trees, power words ``s^n`` and the family ``v_n = 3 4 ... n 1 2``."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from rtilde.coxeter import CoxeterError, CoxeterGroup, Element, Word
from rtilde.lightleaves import DOT, MERGE, LightLeaf
from rtilde.poly import ZERO, IntPolynomial, fibonacci

LEFT, RIGHT, CENTRAL = "L", "R", "C"


def power_word_rtilde(group: CoxeterGroup, u: Element, n: int, s: int) -> IntPolynomial:
    """R-tilde of ``u`` against the word ``s s ... s`` (n letters)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if u.is_identity():
        return fibonacci(n)
    if u == group.generator(s):
        return fibonacci(n - 1) if n >= 1 else ZERO
    return ZERO


@dataclass(frozen=True)
class FibPath:
    steps: str

    @property
    def rho(self) -> int:
        """Number of right steps."""
        return self.steps.count(RIGHT)

    @property
    def lam(self) -> int:
        """Number of left steps."""
        return self.steps.count(LEFT)

    def __len__(self):
        return len(self.steps)


@dataclass
class FibTree:
    """``children[prefix]`` lists the step labels below the node reached by ``prefix``."""

    n: int
    children: dict[str, list[str]] = field(default_factory=dict)

    def leaves(self) -> list[str]:
        return sorted(p for p, ch in self.children.items() if not ch)

    def paths(self) -> list[FibPath]:
        return [FibPath(p) for p in self.leaves()]


def build_fib_tree(n: int) -> FibTree:
    """Grow FT_n: left-brother leaves get one child, every other leaf two."""
    if n < 1:
        raise ValueError("Fibonacci trees start at n = 1")
    tree = FibTree(n, {"": [LEFT, RIGHT], LEFT: [], RIGHT: []})
    frontier = [LEFT, RIGHT]
    for _ in range(n - 1):
        nxt = []
        for leaf in frontier:
            # a left child of a two-child parent is a left brother
            kids = [CENTRAL] if leaf.endswith(LEFT) else [LEFT, RIGHT]
            tree.children[leaf] = kids
            for k in kids:
                tree.children[leaf + k] = []
                nxt.append(leaf + k)
        frontier = nxt
    tree.n = n
    return tree


def fib_paths(n: int) -> list[FibPath]:
    return build_fib_tree(n).paths()


def restricted_fib_paths(n: int) -> list[FibPath]:
    """Paths whose last step is not a left step."""
    return [p for p in fib_paths(n) if not p.steps.endswith(LEFT)]


def pagliacci_word(n: int) -> Word:
    """Reduced word ``s2 s1 s3 s2 ... s_(n-1) s_(n-2)`` of ``3 4 ... n 1 2`` (0-based letters)."""
    if n < 3:
        raise CoxeterError("v_n needs n >= 3")
    out: list[int] = []
    for k in range(2, n):
        out += [k - 1, k - 2]
    return tuple(out)


def pagliacci_rtilde(n: int) -> IntPolynomial:
    """Closed form ``t^(n-2) F_(n-2)(t)`` for ``R-tilde_{e, v_n}``."""
    if n < 3:
        raise CoxeterError("v_n needs n >= 3")
    return fibonacci(n - 2).shift(n - 2)


def is_clr_word(w: str) -> bool:
    if any(c not in "CLR" for c in w):
        return False
    if w and w[0] not in "RL":
        return False
    for i, c in enumerate(w):
        if c == "L" and i + 1 < len(w) and w[i + 1] != "C":
            return False
        if c == "C" and (i == 0 or w[i - 1] != "L"):
            return False
    return True


def clr_words(n: int) -> list[str]:
    """All admissible words over {C, L, R} of length n - 3, sorted.

    A trailing ``L`` is admissible: the letter it would trap is the last
    generator, which is always dotted.
    """
    if n < 3:
        raise CoxeterError("need n >= 3")
    return sorted("".join(w) for w in product("CLR", repeat=n - 3) if is_clr_word("".join(w)))


def clr_to_path(w: str) -> FibPath:
    # L -> left, R -> right, C -> the forced single-child step
    if not is_clr_word(w):
        raise ValueError(f"{w!r} is not a CLR word")
    return FibPath(w)


def clr_degree(w: str) -> int:
    return 2 + 2 * (w.count("R") + w.count("C"))


def leaf_to_clr(leaf: LightLeaf, n: int) -> str:
    """Read the CLR word of a light leaf of ``v_n`` with empty top.

    Letter ``s_k`` (2 <= k <= n-2) occupies positions ``2k-4`` and ``2k-1``
    of the word; a merge on its second copy is ``L``, two dots are ``R``
    unless the previous letter was looped (``C``).
    """
    out = []
    for k in range(2, n - 1):
        first, second = leaf.steps[2 * k - 4], leaf.steps[2 * k - 1]
        if second.kind == MERGE:
            out.append("L")
        elif first.kind == DOT and second.kind == DOT:
            out.append("C" if out and out[-1] == "L" else "R")
        else:
            raise ValueError("leaf does not have empty top sequence")
    return "".join(out)
