"""Deciding equality of terms.

Two strategies:

``"wiring"``
    Compare wiring normal forms.  Equal normal forms mean the terms are equal
    in every strongly compact closed category.  Different normal forms only
    refute equality for purely structural terms (no generators, no scalars);
    with generators the verdict is ``None`` (unknown).

:class:`RandomEval`
    Evaluate both sides under random Gaussian-rational models.  A differing
    sample is a refutation; agreement on every sample is evidence, reported as
    ``True`` with the number of trials in the certificate.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from ..semiring import CRat
from .semantics import Env, TermTypeError, eval_term, random_model, typecheck
from .syntax import Term, generators, has_scalars
from .wiring import wiring_normal_form


@dataclass(frozen=True)
class RandomEval:
    trials: int = 20
    seed: int = 0
    density: float = 0.8


@dataclass
class Verdict:
    equal: bool | None
    strategy: str
    certificate: dict = field(default_factory=dict)

    def __bool__(self):
        return self.equal is True

    def to_text(self) -> str:
        word = {True: "equal", False: "not equal", None: "unknown"}[self.equal]
        lines = [f"{word} ({self.strategy})"]
        for k in sorted(self.certificate):
            lines.append(f"  {k}: {self.certificate[k]}")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {"equal": self.equal, "strategy": self.strategy,
                "certificate": {k: str(v) if not isinstance(v, (int, bool)) else v
                                for k, v in self.certificate.items()}}


def terms_equal(t1: Term, t2: Term, env: Env, strategy="wiring") -> Verdict:
    d1, c1 = typecheck(t1, env)
    d2, c2 = typecheck(t2, env)
    if (d1, c1) != (d2, c2):
        raise TermTypeError(f"terms have different types: {d1} -> {c1} and {d2} -> {c2}")
    if strategy == "wiring":
        return _by_wiring(t1, t2, env)
    if isinstance(strategy, RandomEval):
        return _by_sampling(t1, t2, env, strategy)
    raise ValueError(f"unknown strategy {strategy!r}")


def _by_wiring(t1, t2, env) -> Verdict:
    w1, w2 = wiring_normal_form(t1, env), wiring_normal_form(t2, env)
    if w1 == w2:
        return Verdict(True, "wiring", {"normal_form": str(w1)})
    cert = {"left": str(w1), "right": str(w2)}
    structural = not (generators(t1) or generators(t2) or has_scalars(t1) or has_scalars(t2))
    return Verdict(False if structural else None, "wiring", cert)


def _by_sampling(t1, t2, env, strat: RandomEval) -> Verdict:
    names = generators(t1) | generators(t2)
    for k in range(strat.trials):
        rng = random.Random(f"{strat.seed}:{k}")
        model = random_model(env, names, CRat, rng, strat.density)
        a, b = eval_term(t1, env, model, CRat), eval_term(t2, env, model, CRat)
        if a != b:
            cert = {"trial": k, "model": {g: m.matrix_str() for g, m in model.items()},
                    "left": a.matrix_str(), "right": b.matrix_str()}
            return Verdict(False, "random-eval", cert)
    return Verdict(True, "random-eval", {"trials": strat.trials, "seed": strat.seed})


__all__ = ["RandomEval", "Verdict", "terms_equal"]
