"""Light leaves of a word and the diagrammatic R-tilde polynomial.

The tree over a word ``v = s_1 ... s_n`` is grown one letter at a time from
the empty diagram. A node carries its top sequence, a reduced word of some
element ``x``. For the next letter ``s``:

* if ``l(xs) > l(x)`` the node has two children: a dotted strand (``D``,
  degree + 1, top unchanged) and a through strand (``T``, top gains ``s``);
* otherwise the node has one child (``M``): braid moves bring an ``s`` to the
  right end of the top sequence, and that strand is capped off against the
  new one.

Only the step sequence matters for the polynomial; :mod:`rtilde.diagrams`
turns a leaf into an explicit picture.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Callable, Iterator, NamedTuple, Sequence

from rtilde.coxeter import BraidMove, CoxeterGroup, Element, Word, apply_braid_move, format_word
from rtilde.poly import ONE, T, ZERO, IntPolynomial

DOT, THROUGH, MERGE = "D", "T", "M"

PlanPolicy = Callable[[CoxeterGroup, Word, int], Sequence[BraidMove]]


def default_plan(group: CoxeterGroup, top: Word, s: int) -> tuple[BraidMove, ...]:
    return group.braid_plan(top, s)


class LeafStep(NamedTuple):
    kind: str
    plan: tuple[BraidMove, ...] = ()


@dataclass(frozen=True)
class LightLeaf:
    word: Word
    steps: tuple[LeafStep, ...]
    top_word: Word
    top: Element = field(compare=False)

    @property
    def degree(self) -> int:
        return sum(st.kind == DOT for st in self.steps)

    @property
    def high_valent_count(self) -> int:
        return high_valent_count(self)

    @property
    def step_string(self) -> str:
        return "".join(st.kind for st in self.steps)

    def serialize(self) -> str:
        return f"steps={self.step_string} top={format_word(self.top_word)} deg={self.degree}"


def high_valent_count(leaf: LightLeaf) -> int:
    """Braid moves with ``m_st >= 3`` used across all merges of the leaf."""
    return sum(mv.m >= 3 for st in leaf.steps for mv in st.plan)


@dataclass
class LeafNode:
    steps: tuple[LeafStep, ...]
    top_word: Word
    top: Element
    children: list[LeafNode] = field(default_factory=list)

    @property
    def degree(self) -> int:
        return sum(st.kind == DOT for st in self.steps)


@dataclass
class LeafTree:
    word: Word
    root: LeafNode

    def nodes(self) -> Iterator[LeafNode]:
        stack = [self.root]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))

    def leaves(self) -> list[LightLeaf]:
        out = [
            LightLeaf(self.word, n.steps, n.top_word, n.top)
            for n in self.nodes()
            if len(n.steps) == len(self.word)
        ]
        out.sort(key=lambda lf: lf.step_string)
        return out


def _children(group: CoxeterGroup, word: Word, steps, top_word, top, policy: PlanPolicy):
    s = word[len(steps)]
    if group.is_descent(top, s):
        plan = tuple(policy(group, top_word, s))
        w = top_word
        for mv in plan:
            w = apply_braid_move(w, mv)
        if not w or w[-1] != s:
            raise ValueError(f"plan {plan} does not bring {s} to the right of {top_word}")
        yield steps + (LeafStep(MERGE, plan),), w[:-1], group.multiply(top, s)
    else:
        yield steps + (LeafStep(DOT),), top_word, top
        yield steps + (LeafStep(THROUGH),), top_word + (s,), group.multiply(top, s)


def build_tree(group: CoxeterGroup, word: Sequence[int], plan_policy: PlanPolicy | None = None) -> LeafTree:
    word = group.check_word(word)
    policy = plan_policy or default_plan
    root = LeafNode((), (), group.identity)
    stack = [root]
    while stack:
        node = stack.pop()
        if len(node.steps) == len(word):
            continue
        for steps, tw, top in _children(group, word, node.steps, node.top_word, node.top, policy):
            child = LeafNode(steps, tw, top)
            node.children.append(child)
            stack.append(child)
    return LeafTree(word, root)


def all_leaves(group: CoxeterGroup, word: Sequence[int], plan_policy: PlanPolicy | None = None) -> list[LightLeaf]:
    """Every leaf of the tree, sorted by step string."""
    word = group.check_word(word)
    policy = plan_policy or default_plan
    out = []
    stack = [((), (), group.identity)]
    while stack:
        steps, tw, top = stack.pop()
        if len(steps) == len(word):
            out.append(LightLeaf(word, steps, tw, top))
            continue
        stack.extend(_children(group, word, steps, tw, top, policy))
    out.sort(key=lambda lf: lf.step_string)
    return out


def leaves(group: CoxeterGroup, word: Sequence[int], u: Element, plan_policy: PlanPolicy | None = None) -> list[LightLeaf]:
    return [lf for lf in all_leaves(group, word, plan_policy) if lf.top == u]


def diagrammatic_table(
    group: CoxeterGroup, word: Sequence[int], plan_policy: PlanPolicy | None = None
) -> dict[Element, IntPolynomial]:
    """``{u: sum over leaves with top u of t^deg}`` for every u that occurs."""
    word = group.check_word(word)
    cache = group.cache.setdefault("diagrammatic", {}) if plan_policy is None else {}
    hit = cache.get(word)
    if hit is not None:
        return hit
    # count (top, degree) pairs without materializing leaves
    policy = plan_policy or default_plan
    counts: dict[Element, dict[int, int]] = defaultdict(lambda: defaultdict(int))
    stack = [((), (), group.identity)]
    while stack:
        steps, tw, top = stack.pop()
        if len(steps) == len(word):
            counts[top][sum(st.kind == DOT for st in steps)] += 1
            continue
        stack.extend(_children(group, word, steps, tw, top, policy))
    table = {u: IntPolynomial.from_terms(dict(d)) for u, d in counts.items()}
    cache[word] = table
    return table


def diagrammatic_rtilde(
    group: CoxeterGroup, u: Element, word: Sequence[int], plan_policy: PlanPolicy | None = None
) -> IntPolynomial:
    """Sum of ``t^deg`` over the light leaves of ``word`` with top ``u``."""
    if not word:
        return ONE if u.is_identity() else ZERO
    return diagrammatic_table(group, word, plan_policy).get(u, ZERO)


def word_rtilde_recursive(group: CoxeterGroup, u: Element, word: Sequence[int]) -> IntPolynomial:
    """Diagrammatic R-tilde by peeling the rightmost letter of the word."""
    word = group.check_word(word)
    memo: dict[tuple[Word, int], IntPolynomial] = {}

    def rec(x: Element, k: int) -> IntPolynomial:
        if k == 0:
            return ONE if x.is_identity() else ZERO
        key = (x.word, k)
        hit = memo.get(key)
        if hit is None:
            s = word[k - 1]
            xs = group.multiply(x, s)
            hit = rec(xs, k - 1)
            if xs.length > x.length:
                hit = hit + T * rec(x, k - 1)
            memo[key] = hit
        return hit

    return rec(u, len(word))
