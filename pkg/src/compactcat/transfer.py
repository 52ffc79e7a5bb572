"""Functors between matrix categories induced by semiring homomorphisms.

A homomorphism ``h : S -> T`` acts on a matrix entrywise and leaves objects
alone.  Units, counits, symmetries and tensors only multiply entries, so every
multiplicative map preserves them; composition and trace add entries, so they
are preserved exactly only when ``h`` is additive.  For the support map
``C -> Bool`` addition is preserved only up to the order ``0 <= 1`` and the
induced functor is lax.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass

from . import compact as cc
from .laws import InstanceGenerator
from .matcat import Morphism, TensorObject, compose, identity, symmetry, tensor
from .semiring import Bool, CRat, SemiringHom, SemiringMismatch, get_hom


@dataclass(frozen=True)
class LiftedFunctor:
    hom: SemiringHom

    @property
    def source(self):
        return self.hom.source

    @property
    def target(self):
        return self.hom.target

    @property
    def lax(self) -> bool:
        return self.hom.lax

    def __call__(self, f: Morphism) -> Morphism:
        return apply_functor(self, f)


def lift(hom: SemiringHom | str) -> LiftedFunctor:
    return LiftedFunctor(get_hom(hom) if isinstance(hom, str) else hom)


def apply_functor(F: LiftedFunctor, f: Morphism) -> Morphism:
    if f.semiring is not F.source:
        raise SemiringMismatch(
            f"{F.hom.name} acts on {F.source.__name__} matrices, got {f.semiring.__name__}")
    return f.map(F.hom.fn, F.target)


def leq(f: Morphism, g: Morphism) -> bool:
    """Entrywise Boolean order on parallel matrices."""
    if (f.dom, f.cod) != (g.dom, g.cod):
        raise ValueError(f"cannot compare {f.dom} -> {f.cod} with {g.dom} -> {g.cod}")
    return all(a <= b for ra, rb in zip(f.rows, g.rows) for a, b in zip(ra, rb))


def strict_entries(f: Morphism, g: Morphism) -> list[tuple[int, int]]:
    if (f.dom, f.cod) != (g.dom, g.cod):
        raise ValueError(f"cannot compare {f.dom} -> {f.cod} with {g.dom} -> {g.cod}")
    return [(j, i) for j, (ra, rb) in enumerate(zip(f.rows, g.rows))
            for i, (a, b) in enumerate(zip(ra, rb)) if a != b and a <= b]


@dataclass
class LaxReport:
    holds: bool
    strict: list[tuple[int, int]]
    lhs: Morphism
    rhs: Morphism

    @property
    def is_strict(self) -> bool:
        return bool(self.strict)


def check_lax(F: LiftedFunctor, f: Morphism, g: Morphism) -> LaxReport:
    """Compare ``F(g o f)`` with ``F(g) o F(f)`` in the entrywise order."""
    if not F.target.ordered:
        raise ValueError(f"{F.target.__name__} is not ordered")
    lhs = F(compose(g, f))
    rhs = compose(F(g), F(f))
    bad = [(j, i) for j, (ra, rb) in enumerate(zip(lhs.rows, rhs.rows))
           for i, (a, b) in enumerate(zip(ra, rb)) if not a <= b]
    return LaxReport(not bad, strict_entries(lhs, rhs), lhs, rhs)


# -- instance-based preservation checks ---------------------------------------

@dataclass
class PropertyReport:
    name: str
    trials: int
    passed: bool
    witness: dict | None = None
    strict: int | None = None

    def to_json(self) -> str:
        d = {"law": self.name, "passed": self.passed, "trials": self.trials}
        if self.witness is not None:
            d["witness"] = self.witness
        if self.strict is not None:
            d["strict"] = self.strict
        return json.dumps(d, sort_keys=True)

    def to_text(self) -> str:
        line = f"{'PASS' if self.passed else 'FAIL'} {self.name:<22} trials={self.trials}"
        if self.strict is not None:
            line += f" strict={self.strict}"
        if self.witness is not None:
            line += f"\n    witness: {json.dumps(self.witness, sort_keys=True)}"
        return line


CANCELLING = (CRat(1), CRat(-1), CRat(0, 1), CRat(0, -1), CRat(0))


def cancelling_morphism(rng: random.Random, dom: TensorObject, cod: TensorObject) -> Morphism:
    """Entries drawn from ``{0, 1, -1, i, -i}`` so that sums often cancel."""
    rows = tuple(tuple(rng.choice(CANCELLING) for _ in range(dom.total_dim))
                 for _ in range(cod.total_dim))
    return Morphism._raw(rows, dom, cod, CRat)


LAX_WITNESS = (
    Morphism([[1], [1]], TensorObject.of(1), TensorObject.of(2), CRat),
    Morphism([[1, -1]], TensorObject.of(2), TensorObject.of(1), CRat),
)


def _pair(F, g: InstanceGenerator, k: int):
    A, B, C = g.obj(), g.obj(), g.obj()
    if F.source is CRat and k % 2:
        return cancelling_morphism(g.rng, A, B), cancelling_morphism(g.rng, B, C)
    return g.morphism(A, B), g.morphism(B, C)


def _exact(name, trials, make):
    for k in range(trials):
        lhs, rhs, inputs = make(k)
        if lhs != rhs:
            return PropertyReport(name, k + 1, False, witness={
                "trial": k, "inputs": {n: m.literal() for n, m in inputs.items()},
                "lhs": lhs.literal(), "rhs": rhs.literal()})
    return PropertyReport(name, trials, True)


def check_preservation(F: LiftedFunctor, trials: int = 100, dim_bound: int = 3,
                       seed: int = 0) -> list[PropertyReport]:
    """Test the functor on random instances, one report per structural property.

    Additive properties (composition, identity-free trace) are checked as
    equalities for exact homomorphisms and as inequalities for lax ones.
    """
    S = F.source

    def gen(name):
        return InstanceGenerator(S, dim_bound, random.Random(f"{seed}:{F.hom.name}:{name}"))

    out = []

    g = gen("compose")
    if F.lax:
        strict = 0
        for k in range(trials):
            f, h = LAX_WITNESS if k == 0 else _pair(F, g, k)
            r = check_lax(F, f, h)
            if not r.holds:
                out.append(PropertyReport("compose-lax", k + 1, False, witness={
                    "trial": k, "f": f.literal(), "g": h.literal(),
                    "lhs": r.lhs.literal(), "rhs": r.rhs.literal()}))
                break
            strict += r.is_strict
        else:
            out.append(PropertyReport("compose-lax", trials, True, strict=strict))
    else:
        def make(k):
            f, h = _pair(F, g, k)
            return F(compose(h, f)), compose(F(h), F(f)), {"f": f, "g": h}
        out.append(_exact("compose", trials, make))

    g = gen("tensor")

    def make_tensor(k):
        f = g.morphism(g.obj(), g.obj())
        h = g.morphism(g.obj(), g.obj())
        return F(tensor(f, h)), tensor(F(f), F(h)), {"f": f, "g": h}
    out.append(_exact("tensor", trials, make_tensor))

    for name, build in (("identity", identity), ("unit", cc.unit), ("counit", cc.counit)):
        g = gen(name)

        def make_struct(k, build=build, g=g):
            A = g.obj(max_factors=2)
            return F(build(A, S)), build(A, F.target), {}
        out.append(_exact(name, trials, make_struct))

    g = gen("symmetry")

    def make_sym(k):
        A, B = g.obj(), g.obj()
        return F(symmetry(A, B, S)), symmetry(A, B, F.target), {}
    out.append(_exact("symmetry", trials, make_sym))

    g = gen("trace")
    if F.lax:
        strict = 0
        for k in range(trials):
            A, B, C = g.obj(), g.obj(), g.obj()
            f = (cancelling_morphism(g.rng, A @ C, B @ C) if k % 2
                 else g.morphism(A @ C, B @ C))
            lhs, rhs = F(cc.trace(f, A, B, C)), cc.trace(F(f), A, B, C)
            if not leq(lhs, rhs):
                out.append(PropertyReport("trace-lax", k + 1, False, witness={
                    "trial": k, "f": f.literal(), "lhs": lhs.literal(), "rhs": rhs.literal()}))
                break
            strict += bool(strict_entries(lhs, rhs))
        else:
            out.append(PropertyReport("trace-lax", trials, True, strict=strict))
    else:
        def make_trace(k):
            A, B, C = g.obj(), g.obj(), g.obj()
            f = g.morphism(A @ C, B @ C)
            return F(cc.trace(f, A, B, C)), cc.trace(F(f), A, B, C), {"f": f}
        out.append(_exact("trace", trials, make_trace))

    if F.hom.preserves_involution:
        g = gen("adjoint")

        def make_dagger(k):
            f = g.morphism(g.obj(), g.obj())
            return F(cc.adjoint(f)), cc.adjoint(F(f)), {"f": f}
        out.append(_exact("adjoint", trials, make_dagger))
    return out


def bool_to_crat_obstruction() -> dict:
    """Why no semiring homomorphism ``Bool -> C`` exists.

    Any such ``h`` has ``h(1) = 1``.  In Bool ``1 + 1 = 1``, so additivity
    forces ``h(1) = h(1 + 1) = h(1) + h(1) = 2``.
    """
    one_b = Bool.one
    forced = CRat.one                         # h(1 + 1) = h(1) = 1
    additive = CRat.one + CRat.one            # h(1) + h(1) = 2
    return {"bool_sum": one_b + one_b, "h(1+1)": forced, "h(1)+h(1)": additive,
            "contradiction": forced != additive}


__all__ = [
    "CANCELLING", "LAX_WITNESS", "LaxReport", "LiftedFunctor", "PropertyReport",
    "apply_functor", "bool_to_crat_obstruction", "cancelling_morphism", "check_lax",
    "check_preservation", "leq", "lift", "strict_entries",
]
