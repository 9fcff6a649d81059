"""Command-line front end: ``rtilde compute|leaves|verify|closed|render|scan``.

Words are whitespace-separated 1-based generator indices (``"1 2 1"``), ``e``
for the empty word, or a one-line permutation ``p:4321`` (comma-separated
when n > 9, e.g. ``p:10,1,2,...``). Exit codes: 0 ok, 1 mismatch, 2 bad input.
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Sequence

from rtilde.closedforms import conjecture, fibonacci, heaps, ud
from rtilde.coxeter import CoxeterError, CoxeterGroup, Element, SymmetricGroup, Word, load_group
from rtilde.diagrams import leaf_to_sgraph, sgraph_to_svg, sgraph_to_text
from rtilde.hecke import hecke_algebra, rtilde_recursive
from rtilde.lightleaves import all_leaves, diagrammatic_rtilde, word_rtilde_recursive
from rtilde.poly import IntPolynomial

WORKERS_ENV = "RTILDE_WORKERS"
METHODS = ("diagrammatic", "recursive", "hecke", "closed")


class UsageError(Exception):
    """Bad input: reported on stderr with exit status 2."""


@dataclass
class Input:
    word: Word
    element: Element
    reduced: bool


def workers() -> int:
    raw = os.environ.get(WORKERS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise UsageError(f"{WORKERS_ENV} must be an integer, got {raw!r}") from None


def parse_input(group: CoxeterGroup, text: str) -> Input:
    text = text.strip()
    if text.startswith("p:"):
        if not isinstance(group, SymmetricGroup):
            raise UsageError("permutation input needs a symmetric group (--group A<n> or Sym<n>)")
        body = text[2:]
        digits = body.split(",") if "," in body else list(body)
        try:
            perm = tuple(int(d) for d in digits)
        except ValueError:
            raise UsageError(f"bad permutation {text!r}") from None
        el = group.from_perm(perm)
        return Input(el.word, el, True)
    if text in ("", "e"):
        return Input((), group.identity, True)
    try:
        word = tuple(int(x) - 1 for x in text.split())
    except ValueError:
        raise UsageError(f"bad word {text!r}") from None
    word = group.check_word(word)
    return Input(word, group.element(word), group.is_reduced(word))


def fmt_word(word: Sequence[int]) -> str:
    return " ".join(str(a + 1) for a in word) if word else "e"


# -- compute -------------------------------------------------------------


def closed_form(group: CoxeterGroup, u: Element, v: Input) -> IntPolynomial | None:
    """The first closed formula that applies to ``(u, v)``, if any."""
    w = v.word
    if w and len(set(w)) == 1:
        return fibonacci.power_word_rtilde(group, u, len(w), w[0])
    if not isinstance(group, SymmetricGroup):
        return None
    if ud.is_ud_word(w) is not None:
        return ud.ud_rtilde(group, u, w)[0]
    if v.reduced and u.is_identity() and group.is_321_avoiding(v.element):
        if all(c <= 2 for c in group.letter_multiplicities(v.element).values()):
            return heaps.general_rtilde_e(group, v.element)
    return None


def compute_methods(group: CoxeterGroup, u: Element, v: Input, method: str) -> dict[str, IntPolynomial]:
    wanted = METHODS if method == "all" else (method,)
    out: dict[str, IntPolynomial] = {}
    for m in wanted:
        if m == "diagrammatic":
            out[m] = diagrammatic_rtilde(group, u, v.word)
        elif m == "recursive":
            if v.reduced:
                out[m] = rtilde_recursive(group, u, v.element)
            else:
                out[m] = word_rtilde_recursive(group, u, v.word)
        elif m == "hecke":
            if v.reduced:
                out[m] = hecke_algebra(group).rtilde(u, v.element)
            elif method != "all":
                raise UsageError("the hecke method needs a reduced word")
        elif m == "closed":
            p = closed_form(group, u, v)
            if p is not None:
                out[m] = p
            elif method != "all":
                raise UsageError("no closed formula applies to this input")
    return out


def cmd_compute(args, group: CoxeterGroup) -> int:
    u = parse_input(group, args.u).element
    v = parse_input(group, args.v)
    results = compute_methods(group, u, v, args.method)
    if len(set(results.values())) > 1:
        print("methods disagree:")
        for name, p in results.items():
            print(f"  {name}: {p}")
        return 1
    print(next(iter(results.values())))
    return 0


# -- leaves / render -------------------------------------------------------


def _selected_leaves(args, group: CoxeterGroup):
    v = parse_input(group, args.v)
    lvs = all_leaves(group, v.word)
    if args.u is not None:
        u = parse_input(group, args.u).element
        lvs = [lf for lf in lvs if lf.top == u]
    return lvs


def cmd_leaves(args, group: CoxeterGroup) -> int:
    for lf in _selected_leaves(args, group):
        print(lf.serialize())
    return 0


def cmd_render(args, group: CoxeterGroup) -> int:
    lvs = _selected_leaves(args, group)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for k, lf in enumerate(lvs):
        g = leaf_to_sgraph(lf)
        path = out / f"leaf_{k:03d}_{lf.step_string}.svg"
        path.write_bytes(sgraph_to_svg(g))
        print(path)
        if args.text:
            print(sgraph_to_text(g, lf), end="")
    return 0


# -- verify ------------------------------------------------------------------


def _verify_chunk(group: CoxeterGroup, vs: list[Element], us: list[Element]) -> tuple[int, list[str]]:
    alg = hecke_algebra(group)
    count, bad = 0, []
    for v in vs:
        for u in us:
            rec = rtilde_recursive(group, u, v)
            dia = diagrammatic_rtilde(group, u, v.word)
            hec = alg.rtilde(u, v)
            leq = group.bruhat_leq(u, v)
            count += 1
            if not (rec == dia == hec) or leq == rec.is_zero():
                bad.append(
                    f"u={fmt_word(u.word)} v={fmt_word(v.word)} recursive={rec} "
                    f"diagrammatic={dia} hecke={hec} bruhat={leq}"
                )
    return count, bad


def _run_chunks(fn: Callable, group: CoxeterGroup, chunks: list, *extra) -> list:
    n = workers()
    if n == 1 or len(chunks) <= 1:
        return [fn(group, c, *extra) for c in chunks]
    with ProcessPoolExecutor(max_workers=n) as pool:
        futures = [pool.submit(fn, group, c, *extra) for c in chunks]
        return [f.result() for f in futures]


def _split(items: list, parts: int) -> list[list]:
    parts = max(1, min(parts, len(items)))
    return [items[i::parts] for i in range(parts)]


def cmd_verify(args, group: CoxeterGroup) -> int:
    if args.max_length is None and not group.matrix.is_finite_type():
        raise UsageError("infinite group: pass --max-length")
    els = group.elements(args.max_length)
    us = els if args.all_pairs else [group.identity]
    results = _run_chunks(_verify_chunk, group, _split(els, workers() * 4), us)
    total = sum(c for c, _ in results)
    bad = sorted(line for _, lines in results for line in lines)
    for line in bad:
        print(line)
    print(f"checked {total} pairs, {len(bad)} mismatches")
    return 1 if bad else 0


# -- closed --------------------------------------------------------------------


def cmd_closed(args, group: CoxeterGroup | None) -> int:
    kind = args.kind
    if kind == "pagliacci":
        print(fibonacci.pagliacci_rtilde(args.n))
    elif kind == "clr":
        for w in fibonacci.clr_words(args.n):
            print(f"{w or '-'} deg={fibonacci.clr_degree(w)}")
    elif kind == "power":
        g = group or load_group("I2(inf)")
        s = args.s - 1
        if not 0 <= s < g.rank:
            raise UsageError(f"generator {args.s} out of range")
        u = parse_input(g, args.u).element
        print(fibonacci.power_word_rtilde(g, u, args.n, s))
    elif kind == "ud":
        g = _need_group(group)
        u = parse_input(g, args.u).element
        v = parse_input(g, args.v)
        try:
            p, table = ud.ud_rtilde(g, u, v.word)
        except ud.NotUDWordError as exc:
            raise UsageError(f"unsupported: {exc}") from None
        print(p)
        for letter, case, exp in table.rows():
            print(f"{letter} {case} {exp or 't^2+1'}")
        if table:
            print(f"c={table.c} d2={table.d2_count}")
    elif kind in ("general", "heap"):
        g, v = _general_input(args, group)
        try:
            if kind == "heap":
                print(heaps.heap_of(g, v).to_text(), end="")
                return 0
            st = heaps.chain_stats(g, v)
            print(heaps.general_rtilde_e(g, v))
        except CoxeterError as exc:
            raise UsageError(f"unsupported: {exc}") from None
        print(f"n1={st.n1} kappa={st.kappa} lambdas={list(st.lambdas)}")
    return 0


def _need_group(group):
    if group is None:
        raise UsageError("this command needs --group or --matrix")
    if not isinstance(group, SymmetricGroup):
        raise UsageError("this formula is only available for symmetric groups")
    return group


def _general_input(args, group):
    if args.config is not None:
        conf = heaps.parse_configuration(Path(args.config).read_text())
        word = heaps.config_to_word(conf)
        if group is None:
            group = SymmetricGroup(max(word, default=0) + 2)
        return _need_group(group), group.element(group.check_word(word))
    if args.v is None:
        raise UsageError("pass --v or --config")
    g = _need_group(group)
    return g, parse_input(g, args.v).element


# -- scan ----------------------------------------------------------------------


def _scan_chunk(group: SymmetricGroup, vs: list[Element], below: list[Element]) -> list[tuple]:
    pairs = [(u, v) for v in vs for u in below if group.bruhat_leq(u, v)]
    return [(v.length, v.word, u.length, u.word, r.line()) for (u, v), r in zip(pairs, conjecture.scan_pairs(group, pairs))]


def cmd_scan(args, group: CoxeterGroup) -> int:
    g = _need_group(group)
    w = parse_input(g, args.w).element
    try:
        heaps._require_fc2(g, w)
    except CoxeterError as exc:
        raise UsageError(f"unsupported: {exc}") from None
    below = g.bruhat_interval(g.identity, w)
    rows = sorted(r for part in _run_chunks(_scan_chunk, g, _split(below, workers() * 4), below) for r in part)
    candidates = 0
    for *_, line in rows:
        is_cand = "status=candidate" in line
        candidates += is_cand
        if is_cand or not args.candidates_only:
            print(line)
    print(f"pairs={len(rows)} candidates={candidates}")
    return 0


# -- argument parsing ----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rtilde", description="Kazhdan-Lusztig R-tilde polynomials.")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_group(p, required=True):
        src = p.add_mutually_exclusive_group(required=required)
        src.add_argument("--group", help="A<n>, Sym<n> or I2(<m>|inf)")
        src.add_argument("--matrix", help="Coxeter matrix file")
        p.add_argument("--generic", action="store_true", help="use the generic word-based backend for type A")

    p = sub.add_parser("compute", help="R-tilde of a pair")
    with_group(p)
    p.add_argument("--u", default="e")
    p.add_argument("--v", required=True)
    p.add_argument("--method", choices=METHODS + ("all",), default="all")

    for name, hlp in (("leaves", "list light leaves"), ("render", "draw light leaves as SVG")):
        p = sub.add_parser(name, help=hlp)
        with_group(p)
        p.add_argument("--v", required=True)
        p.add_argument("--u", default=None, help="keep only leaves with this top")
        if name == "render":
            p.add_argument("--out", required=True, help="output directory")
            p.add_argument("--text", action="store_true", help="also print ASCII sketches")

    p = sub.add_parser("verify", help="cross-check every method over a group")
    with_group(p)
    p.add_argument("--all-pairs", action="store_true", help="all u, not just the identity")
    p.add_argument("--max-length", type=int, default=None)

    p = sub.add_parser("closed", help="closed formulas")
    p.add_argument("kind", choices=("pagliacci", "clr", "power", "ud", "general", "heap"))
    with_group(p, required=False)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--s", type=int, default=1, help="generator for the power word")
    p.add_argument("--u", default="e")
    p.add_argument("--v", default=None)
    p.add_argument("--config", default=None, help="point configuration file")

    p = sub.add_parser("scan", help="factor every R-tilde below w into modified Fibonacci polynomials")
    with_group(p)
    p.add_argument("--w", required=True)
    p.add_argument("--candidates-only", action="store_true")
    return parser


COMMANDS = {
    "compute": cmd_compute,
    "leaves": cmd_leaves,
    "render": cmd_render,
    "verify": cmd_verify,
    "closed": cmd_closed,
    "scan": cmd_scan,
}


def run(args: argparse.Namespace) -> int:
    source = args.group or args.matrix
    group = load_group(source, generic=args.generic) if source else None
    if args.command == "closed":
        if args.kind in ("pagliacci", "clr", "power") and args.n is None:
            raise UsageError(f"closed {args.kind} needs --n")
        return cmd_closed(args, group)
    return COMMANDS[args.command](args, group)


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return run(args)
    except (UsageError, CoxeterError, ValueError, OSError) as exc:
        print(f"rtilde: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
