"""Feedback on finite relations.

Two traces live on relations.  With the cartesian product as tensor the trace
over ``Z`` keeps ``(x, y)`` when a single ``z`` is fed back unchanged; this is
the compact closed trace of Boolean matrices.  With disjoint union as tensor a
relation ``R : X + Z -> Y + Z`` splits into four blocks and the trace keeps
``(x, y)`` when ``x`` reaches ``y`` directly or by a walk through ``Z``.

Boolean matrices here are :class:`~compactcat.matcat.Morphism` values over
:class:`~compactcat.semiring.Bool` with rows indexed by the codomain.
"""
from __future__ import annotations

import math
import random
import re
from dataclasses import dataclass

from . import compact as cc
from .matcat import Morphism, TensorObject, compose, identity
from .semiring import Bool


def bool_matrix(pairs, n_dom: int, n_cod: int) -> Morphism:
    """Relation from ``(source, target)`` pairs as a ``n_cod x n_dom`` matrix."""
    rows = [[Bool.zero] * n_dom for _ in range(n_cod)]
    for a, b in pairs:
        rows[b][a] = Bool.one
    return Morphism._raw(tuple(map(tuple, rows)), TensorObject.of(n_dom),
                         TensorObject.of(n_cod), Bool)


def union(f: Morphism, g: Morphism) -> Morphism:
    return Morphism._raw(tuple(tuple(a + b for a, b in zip(ra, rb))
                               for ra, rb in zip(f.rows, g.rows)), f.dom, f.cod, Bool)


@dataclass(frozen=True)
class BlockRelation:
    """``R`` from ``X + Z`` to ``Y + Z`` as four blocks of ``(source, target)`` pairs.

    ``X`` and ``Y`` are nonempty; ``Z`` may be empty.
    """

    nx: int
    ny: int
    nz: int
    xy: frozenset = frozenset()
    xz: frozenset = frozenset()
    zy: frozenset = frozenset()
    zz: frozenset = frozenset()
    x_names: tuple[str, ...] = ()
    y_names: tuple[str, ...] = ()
    z_names: tuple[str, ...] = ()

    def __post_init__(self):
        if self.nx < 1 or self.ny < 1 or self.nz < 0:
            raise ValueError(f"bad sizes |X|={self.nx}, |Y|={self.ny}, |Z|={self.nz}")
        n = {"x": self.nx, "y": self.ny, "z": self.nz}
        for key in ("xy", "xz", "zy", "zz"):
            for i, j in getattr(self, key):
                if not (0 <= i < n[key[0]] and 0 <= j < n[key[1]]):
                    raise ValueError(f"edge {key[0]}{i} -> {key[1]}{j} out of range")

    @property
    def sizes(self) -> tuple[int, int, int]:
        return self.nx, self.ny, self.nz

    @classmethod
    def from_edges(cls, nx: int, ny: int, nz: int, edges, **names) -> "BlockRelation":
        """Edges are ``(("x"|"z", i), ("y"|"z", j))`` pairs."""
        blocks = {k: set() for k in ("xy", "xz", "zy", "zz")}
        for (s, i), (t, j) in edges:
            if s not in ("x", "z") or t not in ("y", "z"):
                raise ValueError(f"edge {s}{i} -> {t}{j} does not go from X+Z to Y+Z")
            blocks[s + t].add((i, j))
        return cls(nx, ny, nz, **{k: frozenset(v) for k, v in blocks.items()}, **names)

    def block(self, key: str) -> Morphism:
        n = {"x": self.nx, "y": self.ny, "z": self.nz}
        return bool_matrix(getattr(self, key), n[key[0]], n[key[1]])

    def edges(self):
        for key in ("xy", "xz", "zy", "zz"):
            for i, j in sorted(getattr(self, key)):
                yield (key[0], i), (key[1], j)

    def name(self, side: str, i: int) -> str:
        names = {"x": self.x_names, "y": self.y_names, "z": self.z_names}[side]
        return names[i] if i < len(names) else f"{side}{i}"


def reflexive_transitive_closure(r: Morphism) -> Morphism:
    """``(1 + r)`` squared ``ceil(log2 n)`` times; walks longer than ``n - 1`` repeat a state."""
    n = r.dom.total_dim
    c = union(identity(r.dom, Bool), r)
    for _ in range(math.ceil(math.log2(n)) if n > 1 else 0):
        c = compose(c, c)
    return c


def additive_trace(R: BlockRelation) -> Morphism:
    """``R_XY + R_ZY . R_ZZ^* . R_XZ`` as a Boolean ``X -> Y`` matrix."""
    if R.nz == 0:
        return R.block("xy")
    through = compose(R.block("zy"), compose(reflexive_transitive_closure(R.block("zz")),
                                             R.block("xz")))
    return union(R.block("xy"), through)


def additive_trace_by_chains(R: BlockRelation) -> Morphism:
    """Reference implementation by chain search, independent of matrix closure.

    Looks for ``x R z_1 R ... R z_n R y`` with ``n >= 0``.  Only chains with
    distinct ``z_k`` are tried: a shortest chain never revisits a state, so
    ``n <= |Z|``.
    """
    nx, ny, _ = R.sizes
    xz = {i: [j for a, j in R.xz if a == i] for i in range(nx)}
    zz = {}
    for a, b in R.zz:
        zz.setdefault(a, []).append(b)

    def reaches(z, y, visited):
        if (z, y) in R.zy:
            return True
        for w in zz.get(z, ()):
            if w not in visited and reaches(w, y, visited | {w}):
                return True
        return False

    hits = [(x, y) for x in range(nx) for y in range(ny)
            if (x, y) in R.xy or any(reaches(z, y, frozenset((z,))) for z in xz[x])]
    return bool_matrix(hits, nx, ny)


def multiplicative_trace_rel(R: Morphism, X, Y, Z) -> Morphism:
    """Trace of ``R : X x Z -> Y x Z`` in the cartesian (compact closed) structure."""
    return cc.trace(R, X, Y, Z)


def multiplicative_trace_direct(R: Morphism, nx: int, ny: int, nz: int) -> Morphism:
    """``x Tr y`` iff some ``z`` has ``(x, z) R (y, z)``; indices flatten as ``x * |Z| + z``."""
    hits = [(x, y) for x in range(nx) for y in range(ny)
            if any(R.rows[y * nz + z][x * nz + z] for z in range(nz))]
    return bool_matrix(hits, nx, ny)


def random_block_relation(rng: random.Random, nx: int, ny: int, nz: int,
                          density: float = 0.3) -> BlockRelation:
    edges = [((s, i), (t, j))
             for s, ns in (("x", nx), ("z", nz)) for i in range(ns)
             for t, nt in (("y", ny), ("z", nz)) for j in range(nt)
             if rng.random() < density]
    return BlockRelation.from_edges(nx, ny, nz, edges)


def all_block_relations(nx: int, ny: int, nz: int):
    """Every relation ``X + Z -> Y + Z``; there are ``2 ** ((nx + nz) * (ny + nz))``."""
    slots = [((s, i), (t, j))
             for s, ns in (("x", nx), ("z", nz)) for i in range(ns)
             for t, nt in (("y", ny), ("z", nz)) for j in range(nt)]
    for mask in range(1 << len(slots)):
        yield BlockRelation.from_edges(nx, ny, nz,
                                       [e for k, e in enumerate(slots) if mask >> k & 1])


# -- relation files ------------------------------------------------------------

class RelationSyntaxError(ValueError):
    pass


_EDGE = re.compile(r"^\s*(\S+)\s*->\s*(\S+)\s*$")


def parse_relation(text: str) -> BlockRelation:
    """Read ``[X]``, ``[Y]``, ``[Z]`` sections of names and ``a -> b`` edge lines.

    Names may be listed one per line or separated by commas or spaces.  Edges
    may appear anywhere after their endpoints are declared; ``#`` starts a comment.
    """
    sections: dict[str, list[str]] = {"X": [], "Y": [], "Z": []}
    edges = []
    current = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head = re.fullmatch(r"\[\s*([XYZ])\s*\]", line)
        if head:
            current = head.group(1)
            continue
        m = _EDGE.match(line)
        if m:
            edges.append((lineno, m.group(1), m.group(2)))
            continue
        if current is None:
            raise RelationSyntaxError(f"line {lineno}: expected a [X], [Y] or [Z] header")
        sections[current].extend(n for n in re.split(r"[,\s]+", line) if n)
    where = {}
    for side, key in (("x", "X"), ("y", "Y"), ("z", "Z")):
        for i, n in enumerate(sections[key]):
            if n in where:
                raise RelationSyntaxError(f"name {n!r} declared twice")
            where[n] = (side, i)
    pairs = []
    for lineno, a, b in edges:
        for n in (a, b):
            if n not in where:
                raise RelationSyntaxError(f"line {lineno}: undeclared name {n!r}")
        pairs.append((where[a], where[b]))
    if not sections["X"] or not sections["Y"]:
        raise RelationSyntaxError("[X] and [Y] must each name at least one element")
    return BlockRelation.from_edges(
        len(sections["X"]), len(sections["Y"]), len(sections["Z"]), pairs,
        x_names=tuple(sections["X"]), y_names=tuple(sections["Y"]), z_names=tuple(sections["Z"]))


# -- demo ----------------------------------------------------------------------

def sample_trajectories(R: BlockRelation, rng: random.Random, walks: int = 3,
                        max_steps: int = 12) -> list[list[str]]:
    """Random walks from inputs that follow ``R`` until they leave through ``Y``."""
    nx, _, _ = R.sizes
    succ: dict[tuple, list[tuple]] = {}
    for a, b in R.edges():
        succ.setdefault(a, []).append(b)
    out = []
    for k in range(walks):
        if not nx:
            break
        node = ("x", k % nx)
        path = [R.name(*node)]
        for _ in range(max_steps):
            nxt = succ.get(node)
            if not nxt:
                path.append("(stuck)")
                break
            node = rng.choice(sorted(nxt))
            path.append(R.name(*node))
            if node[0] == "y":
                break
        else:
            path.append("...")
        out.append(path)
    return out


__all__ = [
    "BlockRelation", "RelationSyntaxError", "additive_trace", "additive_trace_by_chains",
    "all_block_relations", "bool_matrix", "multiplicative_trace_direct",
    "multiplicative_trace_rel", "parse_relation", "random_block_relation",
    "reflexive_transitive_closure", "sample_trajectories", "union",
]
