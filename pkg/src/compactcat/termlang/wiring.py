"""Wiring normal form of compact closed terms.

A term is drawn as a port graph.  Every wire segment is an edge; identities,
symmetries, units and counits only add edges, so after gluing composites every
connected component is either a path between two *real* ports (boundary ports
or generator box ports) or a closed circle.  The normal form records the
perfect matching on real ports, the multiset of circles (by base object), the
generator boxes and the product of scalar literals.

Boxes are labelled by ``(generator, conjugated)``.  Transposition does not get
a label of its own: ``f*`` is the box ``f`` with its ports read from the other
side, which is exactly what bending its wires with units and counits gives.
A dagger is therefore the conjugated box read from the other side.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from ..semiring import CRat
from .semantics import Env, elaborate, typecheck
from .syntax import (
    Compose,
    Conj,
    Dagger,
    Epsilon,
    Eta,
    Gen,
    Id,
    Obj,
    ScalarMul,
    Sym,
    Tensor,
    Term,
    Transp,
)

# port labels: ("dom", k) / ("cod", k) on the boundary, ("box", b, "in"|"out", k)


@dataclass(frozen=True)
class Wiring:
    dom: tuple[str, ...]
    cod: tuple[str, ...]
    boxes: tuple[tuple[str, bool], ...]
    pairing: frozenset
    loops: tuple[str, ...]
    scalar: CRat = CRat(1)

    @property
    def is_structural(self) -> bool:
        return not self.boxes

    def partner(self, port):
        for p, q in self.pairing:
            if p == port:
                return q
            if q == port:
                return p
        raise KeyError(port)

    def paths(self) -> list[tuple[tuple, list[str], tuple]]:
        """Follow each wire from a boundary port through single-wire boxes.

        Returns ``(start, labels, end)``; labels are the traversed generator
        boxes in order of travel (``f_*`` for a conjugated box, with a ``^T``
        suffix when travelled backwards).
        """
        out = []
        seen = set()
        ends = [p for pair in self.pairing for p in pair if p[0] in ("dom", "cod")]
        for start in sorted(ends, key=lambda p: (p[0] != "dom", p)):
            if start in seen:
                continue
            seen.add(start)
            labels = []
            port = self.partner(start)
            while port[0] == "box":
                _, b, side, k = port
                name, conj = self.boxes[b]
                arity_in = sum(1 for pair in self.pairing for p in pair
                               if p[:3] == ("box", b, "in"))
                arity_out = sum(1 for pair in self.pairing for p in pair
                                if p[:3] == ("box", b, "out"))
                if arity_in != 1 or arity_out != 1:
                    break
                labels.append(name + ("_*" if conj else "") + ("" if side == "in" else "^T"))
                port = self.partner(("box", b, "out" if side == "in" else "in", 0))
            seen.add(port)
            out.append((start, labels, port))
        return out

    def __str__(self):
        pairs = sorted(tuple(sorted(p)) for p in self.pairing)
        return (f"Wiring(dom={list(self.dom)}, cod={list(self.cod)}, boxes={list(self.boxes)}, "
                f"pairs={pairs}, loops={list(self.loops)}, scalar={self.scalar})")


class _Graph:
    def __init__(self):
        self.adj: list[list[int]] = []
        self.wire: list[str] = []
        self.real: dict[int, tuple] = {}
        self.boxes: list[tuple[str, bool]] = []
        self.scalar = CRat(1)

    def vertex(self, wire: str) -> int:
        self.adj.append([])
        self.wire.append(wire)
        return len(self.adj) - 1

    def edge(self, u: int, v: int):
        self.adj[u].append(v)
        self.adj[v].append(u)

    def strand(self, wire: str) -> tuple[int, int]:
        u, v = self.vertex(wire), self.vertex(wire)
        self.edge(u, v)
        return u, v


def _names(o: Obj) -> list[str]:
    return [n for n, _ in o.factors]


def _labels(o: Obj) -> tuple[str, ...]:
    return tuple(n + ("*" if d else "") for n, d in o.factors)


def _build(t: Term, env: Env, G: _Graph, c: bool, tr: bool) -> tuple[list[int], list[int]]:
    if isinstance(t, Gen):
        dom, cod = env.signature(t.name)
        b = len(G.boxes)
        G.boxes.append((t.name, c))
        ins = []
        for k, n in enumerate(_names(env.resolve(dom))):
            v = G.vertex(n)
            G.real[v] = ("box", b, "in", k)
            ins.append(v)
        outs = []
        for k, n in enumerate(_names(env.resolve(cod))):
            v = G.vertex(n)
            G.real[v] = ("box", b, "out", k)
            outs.append(v)
        return (outs, ins) if tr else (ins, outs)
    if isinstance(t, Id):
        us, vs = [], []
        for n in _names(env.resolve(t.obj)):
            u, v = G.strand(n)
            us.append(u)
            vs.append(v)
        return (vs, us) if tr else (us, vs)
    if isinstance(t, Sym):
        a, b = _names(env.resolve(t.a)), _names(env.resolve(t.b))
        sa = [G.strand(n) for n in a]
        sb = [G.strand(n) for n in b]
        dom = [u for u, _ in sa] + [u for u, _ in sb]
        cod = [v for _, v in sb] + [v for _, v in sa]
        return (cod, dom) if tr else (dom, cod)
    if isinstance(t, (Eta, Epsilon)):
        # eta_A: cod = A* ports then A ports, paired factorwise; eps_A mirrored
        ss = [G.strand(n) for n in _names(env.resolve(t.obj))]
        ports = [u for u, _ in ss] + [v for _, v in ss]
        dom, cod = ([], ports) if isinstance(t, Eta) else (ports, [])
        return (cod, dom) if tr else (dom, cod)
    if isinstance(t, Compose):
        gd, gc = _build(t.left, env, G, c, tr)
        fd, fc = _build(t.right, env, G, c, tr)
        if tr:
            # (g o f)* = f* o g*
            for u, v in zip(gc, fd):
                G.edge(u, v)
            return gd, fc
        for u, v in zip(fc, gd):
            G.edge(u, v)
        return fd, gc
    if isinstance(t, Tensor):
        ld, lc = _build(t.left, env, G, c, tr)
        rd, rc = _build(t.right, env, G, c, tr)
        return ld + rd, lc + rc
    if isinstance(t, Dagger):
        return _build(t.body, env, G, not c, not tr)
    if isinstance(t, Conj):
        return _build(t.body, env, G, not c, tr)
    if isinstance(t, Transp):
        return _build(t.body, env, G, c, not tr)
    if isinstance(t, ScalarMul):
        s = CRat(t.scalar.re, t.scalar.im)
        G.scalar = G.scalar * (s.conj() if c else s)
        return _build(t.body, env, G, c, tr)
    raise TypeError(f"cannot wire {t!r}; elaborate it first")


def wiring_normal_form(t: Term, env: Env) -> Wiring:
    """Contract every cup/cap composite of ``t`` and count closed circles."""
    dom_t, cod_t = typecheck(t, env)
    t = elaborate(t, env)
    G = _Graph()
    dom, cod = _build(t, env, G, False, False)
    for k, (v, n) in enumerate(zip(dom, _names(dom_t))):
        w = G.vertex(n)
        G.real[w] = ("dom", k)
        G.edge(w, v)
    for k, (v, n) in enumerate(zip(cod, _names(cod_t))):
        w = G.vertex(n)
        G.real[w] = ("cod", k)
        G.edge(w, v)

    seen = [False] * len(G.adj)
    pairs = []
    for v, label in G.real.items():
        if seen[v]:
            continue
        end, _ = _walk(G, v, seen)
        pairs.append((label, G.real[end]))
    loops = []
    for v in range(len(G.adj)):
        if not seen[v]:
            # an unvisited vertex lies on a circle of internal vertices
            loops.append(G.wire[v])
            _walk(G, v, seen)
    return _canonical(_labels(dom_t), _labels(cod_t), G.boxes, pairs,
                      tuple(sorted(loops)), G.scalar)


def _walk(G: _Graph, start: int, seen: list[bool]) -> tuple[int, int]:
    """Follow a path from a real port, or once around a circle."""
    seen[start] = True
    prev, cur, steps = None, start, 0
    while True:
        nxt = list(G.adj[cur])
        if prev is not None:
            nxt.remove(prev)
        if not nxt or (steps and (cur in G.real or cur == start)):
            return cur, steps
        if len(nxt) != 1 and cur in G.real:
            raise AssertionError(f"real port {cur} has degree {len(G.adj[cur])}")
        prev, cur = cur, nxt[0]
        seen[cur] = True
        steps += 1


def _canonical(dom, cod, boxes, pairs, loops, scalar) -> Wiring:
    """Relabel boxes to the lexicographically least encoding."""
    order = sorted(range(len(boxes)), key=lambda b: boxes[b])
    groups = [list(g) for _, g in itertools.groupby(order, key=lambda b: boxes[b])]
    best = None
    for choice in itertools.product(*(itertools.permutations(g) for g in groups)):
        relabel = {}
        for perm in choice:
            for b in perm:
                relabel[b] = len(relabel)
        enc = sorted(tuple(sorted((_relabel(p, relabel), _relabel(q, relabel))))
                     for p, q in pairs)
        if best is None or enc < best[0]:
            best = (enc, relabel)
    enc, relabel = best
    new_boxes = [None] * len(boxes)
    for old, new in relabel.items():
        new_boxes[new] = boxes[old]
    return Wiring(dom, cod, tuple(new_boxes), frozenset(tuple(p) for p in enc), loops, scalar)


def _relabel(port, relabel):
    if port[0] == "box":
        return ("box", relabel[port[1]], port[2], port[3])
    return port
