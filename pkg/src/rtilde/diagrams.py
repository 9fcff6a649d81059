"""Planar pictures of light leaves: S-graph geometry, SVG and ASCII output.

Layout: letter ``k`` of the bottom word sits at ``x = k`` on ``y = 0`` and
its strand rises to band ``[k, k+1]``, where its step happens. Active strands
keep integer x positions (braid vertices hand the same slots to their outgoing
strands), so every merge caps the rightmost active strand against the new
one with nothing in between.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from rtilde.lightleaves import DOT, MERGE, THROUGH, LightLeaf

PALETTE = (
    "#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
)  # fmt: skip

SCALE = 40.0
MARGIN = 20.0


def color_of(s: int) -> str:
    return PALETTE[s % len(PALETTE)]


@dataclass
class Strand:
    color: int
    points: list[tuple[float, float]]


@dataclass(frozen=True)
class Vertex:
    first: int
    second: int
    m: int
    x: float
    y: float
    incoming: tuple[int, ...]  # strand indices, left to right
    outgoing: tuple[int, ...]


@dataclass(frozen=True)
class Arc:
    color: int
    x1: float
    x2: float
    y: float
    left: int  # strand ending at (x1, y)
    right: int  # strand ending at (x2, y)


@dataclass
class SGraph:
    bottom: tuple[int, ...]
    top: tuple[int, ...]
    height: float
    strands: list[Strand] = field(default_factory=list)
    dots: list[tuple[float, float]] = field(default_factory=list)
    vertices: list[Vertex] = field(default_factory=list)
    arcs: list[Arc] = field(default_factory=list)

    @property
    def width(self) -> int:
        return len(self.bottom)

    def boundary_word(self, y: float) -> tuple[int, ...]:
        """Colors of strand endpoints on the line ``y``, left to right."""
        ends = []
        for st in self.strands:
            for x, yy in (st.points[0], st.points[-1]):
                if abs(yy - y) < 1e-9:
                    ends.append((x, st.color))
        return tuple(c for _, c in sorted(ends))

    def high_valent_vertices(self) -> list[Vertex]:
        return [v for v in self.vertices if v.m >= 3]


def leaf_to_sgraph(leaf: LightLeaf) -> SGraph:
    n = len(leaf.word)
    height = n + 1.0
    g = SGraph(tuple(leaf.word), tuple(leaf.top_word), height)
    active: list[int] = []  # strand indices, sorted by x

    for k, (s, step) in enumerate(zip(leaf.word, leaf.steps)):
        if step.kind == DOT:
            g.strands.append(Strand(s, [(k, 0.0), (k, k + 0.5)]))
            g.dots.append((k, k + 0.5))
        elif step.kind == THROUGH:
            g.strands.append(Strand(s, [(k, 0.0)]))
            active.append(len(g.strands) - 1)
        elif step.kind == MERGE:
            r = len(step.plan)
            band = 1.0 / (r + 2)
            delta = 0.3 * band
            for q, mv in enumerate(step.plan):
                yv = k + (q + 1) * band
                slots = active[mv.position : mv.position + mv.m]
                xs = [g.strands[i].points[-1][0] for i in slots]
                xc = sum(xs) / len(xs)
                for i, x in zip(slots, xs):
                    g.strands[i].points += [(x, yv - delta), (xc, yv)]
                new = []
                for j, x in enumerate(xs):
                    color = mv.second if j % 2 == 0 else mv.first
                    g.strands.append(Strand(color, [(xc, yv), (x, yv + delta)]))
                    new.append(len(g.strands) - 1)
                g.vertices.append(Vertex(mv.first, mv.second, mv.m, xc, yv, tuple(slots), tuple(new)))
                active[mv.position : mv.position + mv.m] = new
            ya = k + (r + 1) * band
            left = active.pop()
            xr = g.strands[left].points[-1][0]
            g.strands[left].points.append((xr, ya))
            g.strands.append(Strand(s, [(k, 0.0), (k, ya)]))
            g.arcs.append(Arc(s, xr, k, ya, left, len(g.strands) - 1))
        else:
            raise ValueError(f"unknown step kind {step.kind!r}")

    for i in active:
        x = g.strands[i].points[-1][0]
        g.strands[i].points.append((x, height))
    return g


def _fmt(v: float) -> str:
    return f"{v:.2f}".rstrip("0").rstrip(".")


def sgraph_to_svg(g: SGraph) -> bytes:
    w = max(g.width, 1)
    width = (w - 1) * SCALE + 2 * MARGIN
    height = g.height * SCALE + 2 * MARGIN

    def X(x):
        return _fmt(MARGIN + x * SCALE)

    def Y(y):
        return _fmt(MARGIN + (g.height - y) * SCALE)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_fmt(width)}" height="{_fmt(height)}" '
        f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        f'<rect x="0" y="0" width="{_fmt(width)}" height="{_fmt(height)}" fill="white"/>',
    ]
    for st in g.strands:
        pts = " ".join(f"{X(x)},{Y(y)}" for x, y in st.points)
        out.append(f'<polyline points="{pts}" fill="none" stroke="{color_of(st.color)}" stroke-width="3"/>')
    for a in g.arcs:
        rx = _fmt((a.x2 - a.x1) * SCALE / 2)
        ry = _fmt(min((a.x2 - a.x1) / 2, 0.4) * SCALE)
        out.append(
            f'<path d="M {X(a.x1)} {Y(a.y)} A {rx} {ry} 0 0 1 {X(a.x2)} {Y(a.y)}" '
            f'fill="none" stroke="{color_of(a.color)}" stroke-width="3"/>'
        )
    for x, y in g.dots:
        out.append(f'<circle cx="{X(x)}" cy="{Y(y)}" r="5" fill="black"/>')
    for v in g.vertices:
        out.append(f'<circle cx="{X(v.x)}" cy="{Y(v.y)}" r="4" fill="black" data-m="{v.m}"/>')
    out.append("</svg>")
    return ("\n".join(out) + "\n").encode()


def sgraph_to_text(g: SGraph, leaf: LightLeaf) -> str:
    """ASCII sketch, top row first: ``.`` dot, ``|`` strand, ``(``/``)`` cap, ``X``/``+`` vertex."""
    n = g.width
    rows = []
    alive: set[int] = set()  # columns of active strands entering the current band
    history = []
    for k, step in enumerate(leaf.steps):
        row = [" "] * n
        for c in alive:
            row[c] = "|"
        for c in range(k + 1, n):
            row[c] = "|"
        if step.kind == DOT:
            row[k] = "."
        elif step.kind == THROUGH:
            row[k] = "|"
            alive.add(k)
        else:
            cols = sorted(alive)
            for mv in step.plan:
                span = cols[mv.position : mv.position + mv.m]
                row[span[len(span) // 2]] = "X" if mv.m >= 3 else "+"
            right = cols[-1]
            row[right] = "("
            row[k] = ")"
            alive.discard(right)
        history.append("".join(row))
    from rtilde.coxeter import format_word

    rows.append("top: " + format_word(g.top))
    rows.append("".join("|" if c in alive else " " for c in range(n)))
    rows.extend(reversed(history))
    rows.append("".join(str((a + 1) % 10) for a in g.bottom))
    return "\n".join(r.rstrip() for r in rows) + "\n"
