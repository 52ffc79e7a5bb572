"""The strict symmetric monoidal category of semiring-valued matrices.

Objects are tensor words of base factors ``(dim, dualized)``; the monoidal
unit is the empty word.  A morphism ``f : A -> B`` is a dense
``total_dim(B) x total_dim(A)`` matrix stored row-major.  Tensor words are
flattened left-factor-major, so index ``(i, k)`` of ``A (x) B`` is
``i * total_dim(B) + k``.

Associators and unitors are literal identities here; ``rho``, ``lambda`` and
``u_I`` never appear as separate matrices.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from math import prod
from typing import Iterable, Sequence

from .semiring import Semiring, SemiringMismatch


class ObjectMismatch(TypeError):
    pass


class NotAScalar(ValueError):
    pass


@dataclass(frozen=True)
class TensorObject:
    factors: tuple[tuple[int, bool], ...] = ()

    def __post_init__(self):
        for d, _ in self.factors:
            if not isinstance(d, int) or d < 1:
                raise ValueError(f"factor dimension must be a positive int, got {d!r}")

    @classmethod
    def of(cls, *factors) -> "TensorObject":
        """``TensorObject.of(2, (3, True))`` is ``2 (x) 3*``."""
        out = []
        for f in factors:
            if isinstance(f, tuple):
                out.append((int(f[0]), bool(f[1])))
            else:
                out.append((int(f), False))
        return cls(tuple(out))

    @classmethod
    def parse(cls, text: str) -> "TensorObject":
        """Parse ``I``, ``2``, ``2*``, ``2x3*`` (``⊗`` also separates)."""
        text = text.strip()
        if text in ("I", ""):
            return UNIT
        out = []
        for tok in re.split(r"\s*(?:x|⊗|\s)\s*", text):
            m = re.fullmatch(r"(\d+)(\*?)", tok)
            if m is None:
                raise ValueError(f"bad object literal {text!r}")
            out.append((int(m[1]), bool(m[2])))
        return cls(tuple(out))

    @property
    def total_dim(self) -> int:
        return prod(d for d, _ in self.factors)

    @property
    def dual(self) -> "TensorObject":
        return TensorObject(tuple((d, not s) for d, s in self.factors))

    def __matmul__(self, other: "TensorObject") -> "TensorObject":
        return TensorObject(self.factors + other.factors)

    def __len__(self):
        return len(self.factors)

    def __str__(self):
        if not self.factors:
            return "I"
        return "x".join(f"{d}{'*' if s else ''}" for d, s in self.factors)


UNIT = TensorObject()


def _obj(x) -> TensorObject:
    if isinstance(x, TensorObject):
        return x
    if isinstance(x, int):
        return TensorObject.of(x)
    if isinstance(x, str):
        return TensorObject.parse(x)
    return TensorObject.of(*x)


class Morphism:
    """A matrix ``cod x dom`` over one semiring instance."""

    __slots__ = ("dom", "cod", "semiring", "rows")

    def __init__(self, rows: Iterable[Iterable], dom, cod, semiring: type[Semiring]):
        dom, cod = _obj(dom), _obj(cod)
        conv = []
        for r in rows:
            row = []
            for x in r:
                if isinstance(x, Semiring):
                    if type(x) is not semiring:
                        raise SemiringMismatch(
                            f"entry {x!r} is not in {semiring.__name__}")
                elif isinstance(x, str):
                    x = semiring.parse(x)
                else:
                    x = semiring.from_int(x)
                row.append(x)
            conv.append(tuple(row))
        rows = tuple(conv)
        if len(rows) != cod.total_dim or any(len(r) != dom.total_dim for r in rows):
            raise ObjectMismatch(
                f"matrix shape {len(rows)}x{len(rows[0]) if rows else 0} does not "
                f"match {dom} -> {cod}")
        object.__setattr__(self, "dom", dom)
        object.__setattr__(self, "cod", cod)
        object.__setattr__(self, "semiring", semiring)
        object.__setattr__(self, "rows", rows)

    @classmethod
    def _raw(cls, rows, dom, cod, semiring):
        m = object.__new__(cls)
        object.__setattr__(m, "dom", dom)
        object.__setattr__(m, "cod", cod)
        object.__setattr__(m, "semiring", semiring)
        object.__setattr__(m, "rows", rows)
        return m

    def __setattr__(self, name, value):
        raise AttributeError("Morphism is immutable")

    def __eq__(self, other):
        return (isinstance(other, Morphism) and self.semiring is other.semiring
                and self.dom == other.dom and self.cod == other.cod
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.dom, self.cod, self.rows))

    def __getitem__(self, idx):
        j, i = idx
        return self.rows[j][i]

    @property
    def shape(self) -> tuple[int, int]:
        return (self.cod.total_dim, self.dom.total_dim)

    @property
    def is_scalar(self) -> bool:
        return self.dom == UNIT and self.cod == UNIT

    @property
    def value(self) -> Semiring:
        """The entry of a scalar."""
        if not self.is_scalar:
            raise NotAScalar(f"{self.dom} -> {self.cod} is not a scalar")
        return self.rows[0][0]

    def is_zero(self) -> bool:
        return not any(x for r in self.rows for x in r)

    def entries(self):
        """Yield ``(row, col, value)`` for every nonzero entry."""
        for j, r in enumerate(self.rows):
            for i, x in enumerate(r):
                if x:
                    yield j, i, x

    def map(self, fn, semiring=None) -> "Morphism":
        S = semiring or self.semiring
        return Morphism._raw(tuple(tuple(fn(x) for x in r) for r in self.rows),
                             self.dom, self.cod, S)

    def __matmul__(self, other):
        return tensor(self, other)

    def __rshift__(self, other):
        # f >> g is "f then g"
        return compose(other, self)

    def __repr__(self):
        return f"Morphism({self.matrix_str()}, {self.dom} -> {self.cod}, {self.semiring.__name__})"

    def matrix_str(self) -> str:
        return "[" + ",".join("[" + ",".join(str(x) for x in r) + "]" for r in self.rows) + "]"

    def literal(self) -> str:
        """Render in the term-file literal syntax."""
        return f"{self.matrix_str()} : {self.dom} -> {self.cod}"

    def pretty(self) -> str:
        cells = [[str(x) for x in r] for r in self.rows]
        if not cells or not cells[0]:
            return f"(empty {self.shape[0]}x{self.shape[1]} matrix)"
        w = max(len(c) for r in cells for c in r)
        return "\n".join("[ " + "  ".join(c.rjust(w) for c in r) + " ]" for r in cells)


def _check_same_semiring(*fs: Morphism):
    S = fs[0].semiring
    for f in fs[1:]:
        if f.semiring is not S:
            raise SemiringMismatch(
                f"cannot combine {S.__name__} and {f.semiring.__name__} morphisms")
    return S


def zero(dom, cod, semiring) -> Morphism:
    dom, cod = _obj(dom), _obj(cod)
    z = semiring.zero
    row = (z,) * dom.total_dim
    return Morphism._raw((row,) * cod.total_dim, dom, cod, semiring)


def from_entries(entries: Iterable[tuple[int, int, Semiring]], dom, cod, semiring) -> Morphism:
    """Build a matrix from sparse ``(row, col, value)`` triples (summing repeats)."""
    dom, cod = _obj(dom), _obj(cod)
    z = semiring.zero
    rows = [[z] * dom.total_dim for _ in range(cod.total_dim)]
    for j, i, x in entries:
        rows[j][i] = rows[j][i] + x
    return Morphism._raw(tuple(map(tuple, rows)), dom, cod, semiring)


def identity(A, semiring) -> Morphism:
    A = _obj(A)
    n = A.total_dim
    return from_entries(((i, i, semiring.one) for i in range(n)), A, A, semiring)


def scalar(x, semiring=None) -> Morphism:
    if not isinstance(x, Semiring):
        x = semiring.parse(x) if isinstance(x, str) else semiring.from_int(x)
    return Morphism._raw(((x,),), UNIT, UNIT, type(x))


def compose(g: Morphism, f: Morphism) -> Morphism:
    """``g o f``; ``f`` is applied first."""
    S = _check_same_semiring(g, f)
    if g.dom != f.cod:
        raise ObjectMismatch(f"cannot compose: dom(g) = {g.dom} but cod(f) = {f.cod}")
    zero_ = S.zero
    n = f.dom.total_dim
    # sparse rows of f: structural maps are mostly zeros
    frows = [[(i, x) for i, x in enumerate(r) if x] for r in f.rows]
    out = []
    for grow in g.rows:
        acc = [zero_] * n
        touched = False
        for k, gv in enumerate(grow):
            if not gv:
                continue
            for i, fv in frows[k]:
                acc[i] = acc[i] + gv * fv
                touched = True
        out.append(tuple(acc) if touched else (zero_,) * n)
    return Morphism._raw(tuple(out), f.dom, g.cod, S)


def compose_all(*fs: Morphism) -> Morphism:
    """``compose_all(h, g, f) == h o g o f``, evaluated right to left."""
    out = fs[-1]
    for g in reversed(fs[:-1]):
        out = compose(g, out)
    return out


def tensor(f: Morphism, g: Morphism) -> Morphism:
    """Kronecker product with the left factor major."""
    S = _check_same_semiring(f, g)
    zero_ = S.zero
    gc = g.dom.total_dim
    out = []
    for frow in f.rows:
        for grow in g.rows:
            row = []
            for a in frow:
                if a:
                    row.extend(a * b if b else zero_ for b in grow)
                else:
                    row.extend((zero_,) * gc)
            out.append(tuple(row))
    return Morphism._raw(tuple(out), f.dom @ g.dom, f.cod @ g.cod, S)


def tensor_all(*fs: Morphism) -> Morphism:
    out = fs[0]
    for g in fs[1:]:
        out = tensor(out, g)
    return out


def permutation(A: TensorObject, order: Sequence[int], semiring) -> Morphism:
    """Wire permutation sending factor ``order[p]`` of ``A`` to position ``p``.

    The codomain is ``A`` with its factors listed in ``order``.
    """
    A = _obj(A)
    if sorted(order) != list(range(len(A))):
        raise ValueError(f"{order} is not a permutation of {len(A)} factors")
    dims = [d for d, _ in A.factors]
    B = TensorObject(tuple(A.factors[k] for k in order))
    bdims = [dims[k] for k in order]
    entries = []
    for i in range(A.total_dim):
        digits = []
        r = i
        for d in reversed(dims):
            digits.append(r % d)
            r //= d
        digits.reverse()
        j = 0
        for p, k in enumerate(order):
            j = j * bdims[p] + digits[k]
        entries.append((j, i, semiring.one))
    return from_entries(entries, A, B, semiring)


def symmetry(A, B, semiring) -> Morphism:
    """``sigma_{A,B} : A (x) B -> B (x) A``."""
    A, B = _obj(A), _obj(B)
    m, n = A.total_dim, B.total_dim
    one = semiring.one
    return from_entries(((k * m + i, i * n + k, one) for i in range(m) for k in range(n)),
                        A @ B, B @ A, semiring)


def scalar_mul(s: Morphism, f: Morphism) -> Morphism:
    """``s . f``: every entry of ``f`` multiplied by the scalar ``s``."""
    if not s.is_scalar:
        raise NotAScalar(f"{s.dom} -> {s.cod} is not a scalar")
    _check_same_semiring(s, f)
    x = s.value
    return f.map(lambda y: x * y)


def scalar_action(s: Morphism, A) -> Morphism:
    """The component ``s_A : A -> A`` of the natural transformation induced by ``s``.

    Strictly ``I (x) A = A``, so this is ``s (x) 1_A``.
    """
    return tensor(s, identity(A, s.semiring))


def transpose_matrix(f: Morphism, dom, cod) -> Morphism:
    # total dims are >= 1, so zip never drops a row
    return Morphism._raw(tuple(zip(*f.rows)), _obj(dom), _obj(cod), f.semiring)
