"""Exhaustive enumeration of small well-typed terms over one base object."""
from __future__ import annotations

from collections.abc import Iterator

from .semantics import Env, typecheck
from .syntax import Compose, Conj, Dagger, Epsilon, Eta, Id, Obj, Sym, Tensor, Term, Trace, Transp, base


def structural_atoms(name: str = "A") -> list[Term]:
    A = base(name)
    return [Id(A), Sym(A, A), Eta(A), Epsilon(A)]


def enumerate_terms(max_size: int, env: Env, atoms: list[Term] | None = None
                    ) -> Iterator[tuple[Term, tuple[Obj, Obj]]]:
    """Yield every term of at most ``max_size`` nodes with its type.

    Nodes are the atoms, ``dg``, ``conj``, ``tp``, a trace over the last
    factor when dom and cod share it, ``*`` and ``.`` (only when typed).
    """
    atoms = atoms if atoms is not None else structural_atoms()
    by_size: dict[int, list[tuple[Term, tuple[Obj, Obj]]]] = {
        1: [(a, typecheck(a, env)) for a in atoms]}
    yield from by_size[1]
    for n in range(2, max_size + 1):
        out = []
        for t, (d, c) in by_size[n - 1]:
            out.append((Dagger(t), (c, d)))
            out.append((Conj(t), (d.dual, c.dual)))
            out.append((Transp(t), (c.dual, d.dual)))
            if d.factors and c.factors and d.factors[-1] == c.factors[-1]:
                C = Obj((d.factors[-1],))
                out.append((Trace(t, C), (Obj(d.factors[:-1]), Obj(c.factors[:-1]))))
        for k in range(1, n - 1):
            for left, (ld, lc) in by_size[k]:
                for right, (rd, rc) in by_size[n - 1 - k]:
                    out.append((Tensor(left, right), (ld @ rd, lc @ rc)))
                    if ld == rc:
                        out.append((Compose(left, right), (rd, lc)))
        by_size[n] = out
        yield from out
