"""Typing, elaboration and evaluation of terms."""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .. import compact as cc
from ..matcat import Morphism, TensorObject, compose, identity, scalar, scalar_mul, symmetry, tensor
from ..semiring import CRat, Semiring
from .syntax import (
    Compose,
    Coname,
    Conj,
    Dagger,
    Epsilon,
    Eta,
    Gen,
    Id,
    Name,
    Obj,
    Program,
    ScalarMul,
    Sym,
    Tensor,
    Term,
    Trace,
    Transp,
    base,
    parse_program,
)


class TermTypeError(TypeError):
    pass


class UnboundGenerator(KeyError):
    def __str__(self):
        return f"generator {self.args[0]!r} has no matrix in the model"


@dataclass
class Env:
    """Object dimensions and generator signatures.

    ``objects`` maps a base name to its dimension or an alias to an object
    expression.  Numerals are base objects of that dimension.
    """

    objects: dict[str, int | Obj] = field(default_factory=dict)
    gens: dict[str, tuple[Obj, Obj]] = field(default_factory=dict)

    def resolve(self, o: Obj, _seen=()) -> Obj:
        out = []
        for n, d in o.factors:
            v = self.objects.get(n)
            if isinstance(v, Obj):
                if n in _seen:
                    raise TermTypeError(f"object alias {n!r} is recursive")
                r = self.resolve(v, _seen + (n,))
                out.extend((r.dual if d else r).factors)
            elif v is None and not n.isdigit():
                raise TermTypeError(f"unknown object {n!r}")
            else:
                out.append((n, d))
        return Obj(tuple(out))

    def dim(self, n: str) -> int:
        v = self.objects.get(n)
        if isinstance(v, int):
            return v
        if n.isdigit():
            return int(n)
        raise TermTypeError(f"unknown object {n!r}")

    def tensor_object(self, o: Obj) -> TensorObject:
        o = self.resolve(o)
        return TensorObject(tuple((self.dim(n), d) for n, d in o.factors))

    def signature(self, g: str) -> tuple[Obj, Obj]:
        try:
            return self.gens[g]
        except KeyError:
            raise TermTypeError(f"undeclared generator {g!r}") from None


# -- typing --------------------------------------------------------------------

def typecheck(t: Term, env: Env) -> tuple[Obj, Obj]:
    """Return ``(dom, cod)`` with aliases expanded; raise :class:`TermTypeError`."""
    r = env.resolve
    if isinstance(t, Gen):
        dom, cod = env.signature(t.name)
        return r(dom), r(cod)
    if isinstance(t, Id):
        return r(t.obj), r(t.obj)
    if isinstance(t, Sym):
        a, b = r(t.a), r(t.b)
        return a @ b, b @ a
    if isinstance(t, Eta):
        a = r(t.obj)
        return Obj(), a.dual @ a
    if isinstance(t, Epsilon):
        a = r(t.obj)
        return a @ a.dual, Obj()
    if isinstance(t, Compose):
        d1, c1 = typecheck(t.left, env)
        d2, c2 = typecheck(t.right, env)
        if c2 != d1:
            raise TermTypeError(
                f"cannot compose {t.left} : {d1} -> {c1} after {t.right} : {d2} -> {c2}: "
                f"{c2} != {d1}")
        return d2, c1
    if isinstance(t, Tensor):
        d1, c1 = typecheck(t.left, env)
        d2, c2 = typecheck(t.right, env)
        return d1 @ d2, c1 @ c2
    if isinstance(t, Dagger):
        d, c = typecheck(t.body, env)
        return c, d
    if isinstance(t, Conj):
        d, c = typecheck(t.body, env)
        return d.dual, c.dual
    if isinstance(t, Transp):
        d, c = typecheck(t.body, env)
        return c.dual, d.dual
    if isinstance(t, Name):
        d, c = typecheck(t.body, env)
        return Obj(), d.dual @ c
    if isinstance(t, Coname):
        d, c = typecheck(t.body, env)
        return d @ c.dual, Obj()
    if isinstance(t, Trace):
        d, c = typecheck(t.body, env)
        C = r(t.obj)
        return _strip(d, C, t), _strip(c, C, t)
    if isinstance(t, ScalarMul):
        return typecheck(t.body, env)
    raise TypeError(f"not a term: {t!r}")


def _strip(X: Obj, C: Obj, t) -> Obj:
    n = len(C)
    if n > len(X) or X.factors[len(X) - n:] != C.factors:
        raise TermTypeError(f"cannot trace {C} out of {X} in {t}")
    return Obj(X.factors[:len(X) - n])


# -- elaboration ---------------------------------------------------------------

def elaborate(t: Term, env: Env) -> Term:
    """Rewrite ``name``, ``coname`` and ``tr`` into ``id``, ``sym``, ``eta``, ``eps``."""
    if isinstance(t, (Compose, Tensor)):
        return type(t)(elaborate(t.left, env), elaborate(t.right, env))
    if isinstance(t, (Dagger, Conj, Transp)):
        return type(t)(elaborate(t.body, env))
    if isinstance(t, ScalarMul):
        return ScalarMul(t.scalar, elaborate(t.body, env))
    if isinstance(t, Name):
        A, _ = typecheck(t.body, env)
        return Compose(Tensor(Id(A.dual), elaborate(t.body, env)), Eta(A))
    if isinstance(t, Coname):
        _, B = typecheck(t.body, env)
        return Compose(Epsilon(B), Tensor(elaborate(t.body, env), Id(B.dual)))
    if isinstance(t, Trace):
        d, c = typecheck(t.body, env)
        C = env.resolve(t.obj)
        A, B = _strip(d, C, t), _strip(c, C, t)
        loop = Compose(Sym(C.dual, C), Eta(C))
        return Compose(Compose(Tensor(Id(B), Epsilon(C)),
                               Tensor(elaborate(t.body, env), Id(C.dual))),
                       Tensor(Id(A), loop))
    return t


def push_daggers(t: Term, env: Env, conj: bool = False, transp: bool = False) -> Term:
    """Push ``dg``, ``conj`` and ``tp`` down to generator leaves.

    Uses ``(g o f)* = f* o g*``, ``(f (x) g)* = f* (x) g*`` and the images of
    the structural maps: ``eta_A^dagger = eps_{A*}``, ``eta_A* = eps_A``,
    ``(eta_A)_* = eta_{A*}``.  Traces, names and conames are elaborated first.
    """
    t = elaborate(t, env)
    return _push(t, env, conj, transp)


def _push(t, env, c, tr):
    dualize = c != tr
    D = (lambda o: o.dual) if dualize else (lambda o: o)
    Dc = (lambda o: o.dual) if c else (lambda o: o)
    if isinstance(t, Gen):
        if c and tr:
            return Dagger(t)
        if c:
            return Conj(t)
        if tr:
            return Transp(t)
        return t
    if isinstance(t, Id):
        return Id(D(env.resolve(t.obj)))
    if isinstance(t, Sym):
        a, b = env.resolve(t.a), env.resolve(t.b)
        return Sym(D(b), D(a)) if tr else Sym(D(a), D(b))
    if isinstance(t, Eta):
        a = Dc(env.resolve(t.obj))
        return Epsilon(a) if tr else Eta(a)
    if isinstance(t, Epsilon):
        a = Dc(env.resolve(t.obj))
        return Eta(a) if tr else Epsilon(a)
    if isinstance(t, Compose):
        l, r = _push(t.left, env, c, tr), _push(t.right, env, c, tr)
        return Compose(r, l) if tr else Compose(l, r)
    if isinstance(t, Tensor):
        return Tensor(_push(t.left, env, c, tr), _push(t.right, env, c, tr))
    if isinstance(t, Dagger):
        return _push(t.body, env, not c, not tr)
    if isinstance(t, Conj):
        return _push(t.body, env, not c, tr)
    if isinstance(t, Transp):
        return _push(t.body, env, c, not tr)
    if isinstance(t, ScalarMul):
        s = t.scalar
        if c:
            s = type(s)(s.re, -s.im)
        return ScalarMul(s, _push(t.body, env, c, tr))
    raise TypeError(f"cannot push daggers through {t!r}")


# -- evaluation ----------------------------------------------------------------

def eval_term(t: Term, env: Env, model: dict[str, Morphism], semiring: type[Semiring]) -> Morphism:
    """Evaluate ``t`` in the matrix category over ``semiring``.

    ``model`` binds generator names to matrices whose objects must match the
    declared signatures.
    """
    typecheck(t, env)
    for g in set(_gens(t)):
        if g not in model:
            raise UnboundGenerator(g)
        m = model[g]
        dom, cod = env.signature(g)
        if m.dom != env.tensor_object(dom) or m.cod != env.tensor_object(cod):
            raise TermTypeError(
                f"model for {g} has type {m.dom} -> {m.cod}, expected "
                f"{env.tensor_object(dom)} -> {env.tensor_object(cod)}")
        if m.semiring is not semiring:
            raise TermTypeError(f"model for {g} is over {m.semiring.__name__}, "
                                f"not {semiring.__name__}")
    return _eval(t, env, model, semiring)


def _gens(t):
    if isinstance(t, Gen):
        yield t.name
    elif isinstance(t, (Compose, Tensor)):
        yield from _gens(t.left)
        yield from _gens(t.right)
    elif hasattr(t, "body"):
        yield from _gens(t.body)


def _eval(t, env, model, S):
    T = env.tensor_object
    if isinstance(t, Gen):
        return model[t.name]
    if isinstance(t, Id):
        return identity(T(t.obj), S)
    if isinstance(t, Sym):
        return symmetry(T(t.a), T(t.b), S)
    if isinstance(t, Eta):
        return cc.unit(T(t.obj), S)
    if isinstance(t, Epsilon):
        return cc.counit(T(t.obj), S)
    if isinstance(t, Compose):
        return compose(_eval(t.left, env, model, S), _eval(t.right, env, model, S))
    if isinstance(t, Tensor):
        return tensor(_eval(t.left, env, model, S), _eval(t.right, env, model, S))
    if isinstance(t, Dagger):
        return cc.adjoint(_eval(t.body, env, model, S))
    if isinstance(t, Conj):
        return cc.conjugate(_eval(t.body, env, model, S))
    if isinstance(t, Transp):
        return cc.transpose(_eval(t.body, env, model, S))
    if isinstance(t, Name):
        return cc.name(_eval(t.body, env, model, S))
    if isinstance(t, Coname):
        return cc.coname(_eval(t.body, env, model, S))
    if isinstance(t, Trace):
        f = _eval(t.body, env, model, S)
        return cc.trace_over(f, T(t.obj))
    if isinstance(t, ScalarMul):
        return scalar_mul(scalar(S.from_literal(t.scalar)), _eval(t.body, env, model, S))
    raise TypeError(f"not a term: {t!r}")


# -- programs ------------------------------------------------------------------

def load_program(text: str, semiring: type[Semiring] = CRat,
                 into: tuple[Env, dict] | None = None) -> tuple[Env, dict[str, Morphism], Term | None]:
    """Parse a term or model file into ``(env, model, term)``.

    With ``into``, declarations extend (and override) an existing environment
    and model, which is how a model file is layered over a term file.
    """
    prog: Program = parse_program(text)
    env, model = into if into is not None else (Env(), {})
    env = Env(dict(env.objects), dict(env.gens))
    model = dict(model)
    env.objects.update(prog.objects)
    for name, decl in prog.gens.items():
        if decl.dom is not None:
            env.gens[name] = (decl.dom, decl.cod)
        elif name not in env.gens:
            raise TermTypeError(f"generator {name!r} has a matrix but no type")
        if decl.matrix is not None:
            dom, cod = env.gens[name]
            rows = [[semiring.from_literal(x) for x in r] for r in decl.matrix]
            try:
                model[name] = Morphism(rows, env.tensor_object(dom), env.tensor_object(cod),
                                       semiring)
            except TypeError as exc:
                raise TermTypeError(f"matrix for {name}: {exc}") from None
    return env, model, prog.term


def random_model(env: Env, names, semiring: type[Semiring], rng: random.Random,
                 density: float = 0.8) -> dict[str, Morphism]:
    model = {}
    for g in sorted(names):
        dom, cod = env.signature(g)
        D, C = env.tensor_object(dom), env.tensor_object(cod)
        rows = tuple(tuple(semiring.random(rng, density) for _ in range(D.total_dim))
                     for _ in range(C.total_dim))
        model[g] = Morphism._raw(rows, D, C, semiring)
    return model


def env_with(objects: dict | None = None, gens: dict | None = None) -> Env:
    """Convenience constructor: ``env_with({"A": 2}, {"f": ("A", "B")})``."""
    from .syntax import parse_object
    e = Env(dict(objects or {}), {})
    for g, (d, c) in (gens or {}).items():
        e.gens[g] = (parse_object(d) if isinstance(d, str) else d,
                     parse_object(c) if isinstance(c, str) else c)
    return e


__all__ = [
    "Env", "TermTypeError", "UnboundGenerator", "elaborate", "env_with", "eval_term",
    "load_program", "push_daggers", "random_model", "typecheck", "base",
]
